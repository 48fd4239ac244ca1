#include "common.hpp"

namespace cyclebound {

using namespace detail;

namespace {

bool degree_at_most_one(const ScaledFraction &c) {
    auto p = c.as_polynomial();
    return p && !p->has_radicals() && p->total_degree() <= 1;
}

Hypothesis frobenius_hypothesis(const KForm &w) {
    FrobeniusPfaffReport f = frobenius_pfaffian(w);
    return {"Frobenius condition d omega ^ omega = 0", f.integrable ? Verdict::Pass : Verdict::Fail,
            f.integrable ? "" : "residual " + f.residual.to_string()};
}

bool all_zero(const std::vector<KForm> &forms) {
    for (const auto &f : forms)
        if (!f.is_zero())
            return false;
    return true;
}

} // namespace

CheckReport classify_linear_pfaff(const PfaffSystem &s) {
    s.validate();
    for (const auto &w : s.forms)
        for (const auto &[idx, c] : w.coeffs())
            if (!degree_at_most_one(c))
                throw UsageError("linear Pfaff classification needs coefficients of degree <= 1");
    CheckReport r;
    r.theorem_id = "T2.5";
    r.object_kind = "compact integral hypersurfaces";
    r.echo("forms", forms_text(s.forms));
    std::string where = "R^" + std::to_string(s.vars->n());
    r.add("coefficients are linear", Verdict::Pass);
    r.hypotheses.push_back(nontrivial("Pfaff system", all_zero(s.forms)));
    for (std::size_t k = 0; k < s.forms.size(); ++k) {
        KForm dw = exterior_derivative(s.forms[k]);
        if (!dw.is_zero()) {
            r.add("d omega_" + std::to_string(k + 1) + " != 0", Verdict::Pass, dw.to_string());
            conclude(r, absence_conclusion(r.object_kind, where));
            return r;
        }
    }
    std::string text = "no isolated compact integral hypersurfaces; any compact integral hypersurface is a "
                       "second-order algebraic hypersurface;";
    for (std::size_t k = 0; k < s.forms.size(); ++k)
        text += " F" + std::to_string(k + 1) + " = " + potential(s.forms[k]).to_string() +
                (k + 1 < s.forms.size() ? "," : "");
    r.add("every omega_j is closed", Verdict::Pass, "potentials listed in the conclusion");
    conclude(r, {ConclusionType::Classification, std::nullopt, text});
    return r;
}

CheckReport check_orthogonal_field_bound(const PfaffSystem &s, const VectorField &V, const CheckContext &ctx) {
    s.validate();
    int n = static_cast<int>(s.vars->n());
    if (V.size() != s.vars->n())
        throw UsageError("V must have n components");
    bool single = s.forms.size() == 1;
    bool integrable = single && frobenius_pfaffian(s.forms[0]).integrable;
    CheckReport r;
    r.theorem_id = "T2.6";
    r.object_kind = integrable ? "compact leaves" : "compact integral hypersurfaces";
    r.echo("forms", forms_text(s.forms));
    r.echo("V", field_text(V));
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("Pfaff system", all_zero(s.forms)));
    r.hypotheses.push_back(smoothness_hypothesis("V is continuously differentiable on the domain",
                                                 V.components, ctx));
    for (std::size_t j = 0; j < s.forms.size(); ++j) {
        ScaledFraction res = dot(V, coefficients_of(s.forms[j]));
        r.add("V is orthogonal to W_" + std::to_string(j + 1), res.is_zero() ? Verdict::Pass : Verdict::Fail,
              res.is_zero() ? "" : "V . W = " + res.to_string());
    }
    if (single)
        r.hypotheses.push_back(frobenius_hypothesis(s.forms[0]));
    if (single && !integrable)
        r.hypotheses.back().verdict = Verdict::Advisory; // only selects the leaf phrasing
    r.hypotheses.push_back(
        sign_hypothesis("div V is constant sign", divergence(V), SignRequirement::ConstSign, ctx));
    std::vector<VectorField> rows;
    for (const auto &w : s.forms)
        rows.push_back(coefficients_of(w));
    r.hypotheses.push_back(independence_advisory(rows, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

CheckReport check_orthogonal_combination(const PfaffSystem &s, const std::vector<ScaledFraction> &g,
                                         const CheckContext &ctx) {
    s.validate();
    int n = static_cast<int>(s.vars->n());
    if (s.forms.size() != 1)
        throw UsageError("the combination test takes a single Pfaffian equation");
    if (g.size() != s.vars->n() - 1)
        throw UsageError("need n-1 functions g_tau");
    const KForm &w = s.forms[0];
    CheckReport r;
    r.theorem_id = "T2.7";
    r.object_kind = "compact leaves";
    r.echo("form", w.to_string());
    std::string gs;
    for (std::size_t t = 0; t < g.size(); ++t)
        gs += (t ? ", " : "") + g[t].to_string();
    r.echo("g", "(" + gs + ")");
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("omega", w.is_zero()));
    r.hypotheses.push_back(frobenius_hypothesis(w));
    ScaledFraction an = w.coefficient({n - 1});
    r.add("fields Phi_tau are linearly independent (a_n not identically zero)",
          an.is_zero() ? Verdict::Fail : Verdict::Pass, "a_n = " + an.to_string());
    r.hypotheses.push_back(smoothness_hypothesis("g_tau are continuously differentiable on the domain", g, ctx));
    auto phis = orthogonal_basis_fields(w);
    VectorField V = zero_field(s.vars);
    for (std::size_t t = 0; t < phis.size(); ++t)
        for (int i = 0; i < n; ++i)
            V.components[i] += g[t] * phis[t][i];
    r.echo("V", field_text(V));
    r.hypotheses.push_back(
        sign_hypothesis("div V is constant sign", divergence(V), SignRequirement::ConstSign, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

CheckReport check_solenoidal_absence(const KForm &w, const std::optional<ScaledFraction> &mu,
                                     const CheckContext &ctx) {
    if (w.degree() != 1)
        throw UsageError("the solenoidal test takes a 1-form");
    int n = static_cast<int>(w.n());
    ScaledFraction m = mu ? *mu : ScaledFraction::constant(w.vars(), 1);
    CheckReport r;
    r.theorem_id = mu ? "T2.8" : "C2.4";
    r.object_kind = "compact leaves";
    r.echo("form", w.to_string());
    r.echo("mu", m.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("omega", w.is_zero()));
    r.hypotheses.push_back(frobenius_hypothesis(w));
    r.hypotheses.push_back(smoothness_hypothesis("mu is continuously differentiable on the domain", {m}, ctx));
    VectorField muA = scale(m, coefficients_of(w));
    r.hypotheses.push_back(sign_hypothesis("mu A is solenoidal", divergence(muA), SignRequirement::Zero, ctx));

    // zeros of mu A: common zeros of the numerators (bases are positive, denominators nonzero)
    Polynomial sq(w.vars());
    bool radical = false;
    for (const auto &c : muA.components) {
        const Polynomial &num = c.frac().num();
        radical = radical || num.has_radicals();
        sq += num * num;
    }
    std::optional<int> dim = radical ? std::nullopt : zero_set_dimension(sq);
    std::string desc = "mu A vanishes at most on a set of dimension n-2";
    if (!dim)
        r.add(desc, Verdict::Unknown, "zero set of " + sq.to_string() + " not certified");
    else
        r.add(desc, *dim <= n - 2 ? Verdict::Pass : Verdict::Fail,
              "zero set of sum of squared components has dimension " + std::to_string(*dim));

    std::optional<int> rank;
    Hypothesis h = rank_hypothesis(ctx, n, rank);
    h.desc = "pi_" + std::to_string(n - 1) + " of " + ctx.domain.describe() + " is trivial";
    if (rank && *rank != 0)
        h.verdict = Verdict::Fail;
    r.hypotheses.push_back(h);
    conclude(r, absence_conclusion(r.object_kind, where(ctx)));
    return r;
}

} // namespace cyclebound
