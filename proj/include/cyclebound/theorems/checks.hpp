#pragma once

#include "cyclebound/systems.hpp"
#include "cyclebound/theorems/report.hpp"

#include <map>
#include <optional>

namespace cyclebound {

// ---- ordinary systems ----

/// Derivative of N along f definite => no closed trajectories (T0.2).
CheckReport check_tkachev_absence(const OdeSystem &s, const ScaledFraction &N, const CheckContext &ctx);

/// div(phi f) of constant sign. Planar systems use T0.1 (limit cycles, zero divergence allowed),
/// n >= 3 uses T2.9.
CheckReport check_dulac_bound(const OdeSystem &s, const ScaledFraction &phi, const CheckContext &ctx);

/// Multipliers keyed by sample (0-based, increasing).
using SampleMultipliers = std::map<std::vector<int>, ScaledFraction>;

/// T1.1 with the nonisolated-manifold rider. Throws UsageError when a sample is missing.
CheckReport check_partial_div_bound(const OdeSystem &s, int nu, const SampleMultipliers &mus,
                                    const CheckContext &ctx);

/// T2.10; branch 1 uses (P/Q) d_x alpha, branch 2 uses (Q/P) d_y alpha.
CheckReport check_planar_alpha_beta(const OdeSystem &s, const ScaledFraction &alpha, const ScaledFraction &beta,
                                    int branch, const CheckContext &ctx);

/// T2.11: g definite and g f solenoidal.
CheckReport check_isolated_regular_bound(const OdeSystem &s, const ScaledFraction &g, const CheckContext &ctx);

// ---- exterior and Pfaff systems ----

/// dx_var solved from the 1-form forms[form] (both 0-based).
struct Elimination {
    std::size_t var;
    std::size_t form;
};

struct EliminationResult {
    Substitution subst;
    std::vector<Hypothesis> hypotheses;
};

/// Builds dx_i = -(1/w_i) sum_{k != i} w_k dx_k and verifies it reproduces the chosen equation.
EliminationResult build_elimination(const std::vector<KForm> &forms, const std::vector<Elimination> &plan,
                                    const CheckContext &ctx);

struct FormBoundInput {
    KForm alpha;                    // degree n-2
    std::vector<KForm> aux;         // gamma_j / ell_j, aligned with the system's forms; empty entries mean 0
    std::vector<Elimination> plan;
    std::optional<KForm> theta;     // invariant (n-2)-form: switches to the T2.2 / T2.4 conclusions
    std::vector<KForm> etas;        // d theta = sum zeta_j ^ eta_j
};

/// Intermediates exposed for fixtures and tests.
struct FormBoundTrace {
    KForm restricted;               // d alpha restricted along the plan
    std::vector<KForm> wedges;      // zeta_j ^ aux_j
    KForm theta_sum;                // the form whose differential is B dx1^..^dxn
    ScaledFraction B;
};

/// T2.1 / T2.2.
CheckReport check_ed_bound(const ExteriorSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                           FormBoundTrace *trace = nullptr);

/// T2.3 / T2.4.
CheckReport check_pfaff_bound(const PfaffSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                              FormBoundTrace *trace = nullptr);

/// T2.3D / T2.4D on the psi_qh system; aux is aligned with pfaff_from_ode's pairs.
CheckReport check_ode_pfaff_bound(const OdeSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                                  FormBoundTrace *trace = nullptr);

/// d theta = sum_j forms_j ^ etas_j, structurally.
CheckReport check_form_invariance(const std::vector<KForm> &forms, const KForm &theta,
                                  const std::vector<KForm> &etas);

/// T2.5 with both linear-Pfaff corollaries. Throws UsageError on nonlinear coefficients.
CheckReport classify_linear_pfaff(const PfaffSystem &s);

/// T2.6 (compact leaves phrasing for a single integrable equation).
CheckReport check_orthogonal_field_bound(const PfaffSystem &s, const VectorField &V, const CheckContext &ctx);

/// T2.7: V = sum g_tau Phi_tau for a single equation.
CheckReport check_orthogonal_combination(const PfaffSystem &s, const std::vector<ScaledFraction> &g,
                                         const CheckContext &ctx);

/// T2.8, or C2.4 when mu is absent.
CheckReport check_solenoidal_absence(const KForm &w, const std::optional<ScaledFraction> &mu,
                                     const CheckContext &ctx);

// ---- total and partial systems ----

/// Columns of a total system or operators of a partial system.
struct InducedSource {
    enum class Kind { Total, Partial } kind;
    VarTablePtr vars;
    std::vector<VectorField> columns;

    static InducedSource of(const TotalSystem &s);
    static InducedSource of(const PartialSystem &s);
    std::size_t m() const { return columns.size(); }
    OdeSystem induced(std::size_t j) const;
};

/// T1.2 (with the nonisolated rider), j 0-based.
CheckReport check_td_partial_div(const TotalSystem &s, std::size_t j, int nu, const SampleMultipliers &mus,
                                 const CheckContext &ctx);

/// T1.3.
CheckReport check_orbit_absence_fn(const TotalSystem &s, const ScaledFraction &N, const CheckContext &ctx);

/// T1.4.
CheckReport check_orbit_absence_form(const TotalSystem &s, const KForm &w, const CheckContext &ctx);

/// T1.5.
CheckReport check_linear_td_eigen(const LinearTotalSystem &s);

/// T2.12 / T2.13 (total) and T2.16 / T2.17 (partial): the 2.3D / 2.4D pipeline on column j.
CheckReport check_induced_pfaff_bound(const InducedSource &s, std::size_t j, const FormBoundInput &in,
                                      const CheckContext &ctx, FormBoundTrace *trace = nullptr);

/// T2.14 (total) and T2.18 (partial).
CheckReport check_induced_dulac(const InducedSource &s, std::size_t j, const ScaledFraction &phi,
                                const CheckContext &ctx);

/// T2.15 with the linear rider; needs one g_j per column.
CheckReport check_td_solenoidal(const TotalSystem &s, const std::vector<ScaledFraction> &g,
                                const CheckContext &ctx);

// ---- certificates ----

struct InvariantCertificate {
    Polynomial w;
    std::vector<Polynomial> cofactors;
};

struct PartialIntegralResult {
    std::optional<InvariantCertificate> certificate;
    std::size_t failing = 0;        // operator index when certificate is absent
    ScaledFraction residual;        // X_failing w
};

/// X_j w = Phi_j w with polynomial Phi_j for every operator.
PartialIntegralResult verify_partial_integral(const std::vector<VectorField> &ops, const Polynomial &w);

CheckReport check_partial_integral(const std::vector<VectorField> &ops, const Polynomial &w);

/// dw - sum c_j omega_j vanishes on w = 0: every coefficient numerator is divisible by w.
CheckReport check_invariant_combination(const Polynomial &w, const std::vector<KForm> &forms,
                                        const std::vector<ScaledFraction> &multipliers);

/// dF = q omega with a polynomial q found by exact division of the coefficients.
CheckReport check_integrating_factor(const KForm &w, const Polynomial &F);

/// Frobenius: brackets of operators, or d omega ^ omega for a single 1-form.
CheckReport check_frobenius_operators(const std::vector<DiffOperator> &ops);
CheckReport check_frobenius_form(const KForm &w);

} // namespace cyclebound
