#pragma once

#include "cyclebound/theorems/checks.hpp"

namespace cyclebound::detail {

std::string field_text(const VectorField &f);
std::string forms_text(const std::vector<KForm> &forms);

Hypothesis nontrivial(const std::string &what, bool is_zero);

/// Every component a polynomial whose terms all have total degree 1.
bool is_linear_field(const VectorField &f);

inline std::string where(const CheckContext &ctx) { return ctx.domain.describe(); }

void echo_domain(CheckReport &r, const CheckContext &ctx);

/// Advisory check that the rows are not linearly bound at a generic point.
Hypothesis independence_advisory(const std::vector<VectorField> &rows, const CheckContext &ctx);

/// Divergence test on one ordinary system; planar selects the T0.1 wording.
CheckReport dulac_report(const OdeSystem &s, const ScaledFraction &phi, const CheckContext &ctx, bool planar);

} // namespace cyclebound::detail
