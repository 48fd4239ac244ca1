#pragma once

#include "cyclebound/manifest/block_parser.hpp"
#include "cyclebound/manifest/expr.hpp"
#include "cyclebound/sign.hpp"
#include "cyclebound/systems.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cyclebound {

enum class SystemKind { Ode, Total, Partial, Pfaff, Exterior, LinearTotal };

std::string to_string(SystemKind k);

struct ProbeSpec {
    std::string candidate;
    std::vector<double> start;
    double horizon = 5;
    double step = 1e-3;
    std::size_t column = 0; // induced column for total/partial systems, 0-based
    bool backward = false;
    int line = 0;
};

struct Manifest {
    VarTablePtr vars;
    ExprContext ctx;
    Domain domain;
    SystemKind kind = SystemKind::Ode;
    OdeSystem ode;
    TotalSystem total;
    PartialSystem partial;
    PfaffSystem pfaff;
    ExteriorSystem exterior;
    LinearTotalSystem linear;
    std::vector<std::pair<std::string, Polynomial>> candidates;
    std::vector<ProbeSpec> probes;
    std::vector<BlockItem> checks;

    /// 1-form or p-form equations of a Pfaff or exterior system.
    const std::vector<KForm> &forms() const;
    /// Operators whose common invariants are partial integrals: f, the columns, or the operators.
    std::vector<VectorField> operators() const;
    const Polynomial &candidate(std::string_view name) const;
};

/// Parses and validates a manifest. Errors carry manifest line and column.
Manifest load_manifest(std::string_view text);
Manifest load_manifest_file(const std::string &path);

// Helpers shared with the runner; `v` is a scalar block value holding an expression.
KForm manifest_form(const Manifest &m, const BlockValue &v);
KForm manifest_form(const Manifest &m, const BlockValue &v, int degree);
ScaledFraction manifest_scalar(const Manifest &m, const BlockValue &v);
Polynomial manifest_polynomial(const Manifest &m, const BlockValue &v);
Domain parse_domain(const Manifest &m, const BlockValue &block, const Domain &base);

/// Throws a ParseError located at the value.
[[noreturn]] void manifest_error(const BlockValue &v, const std::string &what);

} // namespace cyclebound
