#include "common.hpp"

namespace cyclebound {

namespace detail {

std::string field_text(const VectorField &f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (i ? ", " : "") + f[i].to_string();
    return s + ")";
}

std::string forms_text(const std::vector<KForm> &forms) {
    std::string s = "[";
    for (std::size_t i = 0; i < forms.size(); ++i)
        s += (i ? "; " : "") + forms[i].to_string();
    return s + "]";
}

Hypothesis nontrivial(const std::string &what, bool is_zero) {
    return {what + " is not identically zero", is_zero ? Verdict::Fail : Verdict::Pass,
            is_zero ? "degenerate input" : ""};
}

bool is_linear_field(const VectorField &f) {
    for (const auto &c : f.components) {
        auto p = c.as_polynomial();
        if (!p)
            return false;
        for (const auto &[e, coef] : p->terms()) {
            int deg = 0;
            for (int k : e)
                deg += k;
            if (deg != 1)
                return false;
        }
    }
    return true;
}

void echo_domain(CheckReport &r, const CheckContext &ctx) { r.echo("domain", ctx.domain.describe()); }

Hypothesis independence_advisory(const std::vector<VectorField> &rows, const CheckContext &ctx) {
    bool ok = generic_independent(rows, ctx.sign.seed);
    return {"the equations are not linearly bound (generic-point rank)", Verdict::Advisory,
            ok ? "full rank at a random rational point" : "rank deficient at every sampled point"};
}

} // namespace detail

using namespace detail;

CheckReport check_tkachev_absence(const OdeSystem &s, const ScaledFraction &N, const CheckContext &ctx) {
    s.validate();
    CheckReport r;
    r.theorem_id = "T0.2";
    r.object_kind = "closed trajectories";
    r.echo("f", field_text(s.f));
    r.echo("N", N.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("f", s.f.is_zero()));
    r.hypotheses.push_back(smoothness_hypothesis("N is continuously differentiable on the domain", {N}, ctx));
    ScaledFraction H = apply_operator(s.f, N);
    r.hypotheses.push_back(sign_hypothesis("H = sum_i d_i N f_i is definite", H, SignRequirement::Definite, ctx));
    conclude(r, absence_conclusion(r.object_kind, where(ctx)));
    return r;
}

CheckReport check_dulac_bound(const OdeSystem &s, const ScaledFraction &phi, const CheckContext &ctx) {
    return dulac_report(s, phi, ctx, s.vars && s.vars->n() == 2);
}

CheckReport detail::dulac_report(const OdeSystem &s, const ScaledFraction &phi, const CheckContext &ctx,
                                 bool planar) {
    s.validate();
    int n = static_cast<int>(s.vars->n());
    CheckReport r;
    r.theorem_id = planar ? "T0.1" : "T2.9";
    r.object_kind = planar ? "limit cycles" : "compact integral hypersurfaces";
    r.echo("f", field_text(s.f));
    r.echo("phi", phi.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("f", s.f.is_zero()));
    r.hypotheses.push_back(smoothness_hypothesis("phi is continuously differentiable on the domain", {phi}, ctx));
    if (planar)
        r.hypotheses.push_back(
            sign_hypothesis("multiplier phi is constant sign", phi, SignRequirement::ConstSign, ctx));
    ScaledFraction div = divergence(scale(phi, s.f));
    r.hypotheses.push_back(planar ? sign_hypothesis("div(phi f) is constant sign or identically zero", div,
                                                    SignRequirement::ConstSignOrZero, ctx)
                                  : sign_hypothesis("div(phi f) is constant sign", div,
                                                    SignRequirement::ConstSign, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

CheckReport check_partial_div_bound(const OdeSystem &s, int nu, const SampleMultipliers &mus,
                                    const CheckContext &ctx) {
    s.validate();
    int n = static_cast<int>(s.vars->n());
    if (nu < 3 || nu > n)
        throw UsageError("partial divergence test needs 3 <= nu <= n");
    CheckReport r;
    r.theorem_id = "T1.1";
    std::string dim = std::to_string(nu - 1);
    r.object_kind = "compact regular integral manifolds of dimension " + dim;
    r.echo("f", field_text(s.f));
    r.echo("nu", std::to_string(nu));
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("f", s.f.is_zero()));
    std::vector<ScaledFraction> used;
    for (const auto &xi : all_samples(static_cast<std::size_t>(n), static_cast<std::size_t>(nu))) {
        auto it = mus.find(xi.xi);
        if (it == mus.end())
            throw UsageError("no multiplier for sample " + xi.label());
        const ScaledFraction &mu = it->second;
        used.push_back(mu);
        r.echo("mu_" + xi.label(), mu.to_string());
        VectorField g = zero_field(s.vars);
        for (int i : xi.xi)
            g.components[i] = mu * s.f[i];
        ScaledFraction pd = partial_divergence(g, xi);
        r.hypotheses.push_back(sign_hypothesis("div^" + std::to_string(nu) + "_" + xi.label() +
                                                   "(mu f) is " + std::to_string(nu) + "-constant sign",
                                               pd, SignRequirement::ConstSign, ctx));
    }
    r.hypotheses.push_back(smoothness_hypothesis("multipliers are continuously differentiable on the domain",
                                                 used, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, nu, rank));
    if (!rank) {
        conclude(r, not_applicable("declare rank"));
        return r;
    }
    Conclusion c = bound_conclusion(*rank, r.object_kind, where(ctx));
    c.text += "; no nonisolated " + dim + "-dimensional compact regular integral manifolds";
    conclude(r, c);
    return r;
}

CheckReport check_planar_alpha_beta(const OdeSystem &s, const ScaledFraction &alpha, const ScaledFraction &beta,
                                    int branch, const CheckContext &ctx) {
    s.validate();
    if (s.vars->n() != 2)
        throw UsageError("the alpha/beta test is planar");
    if (branch != 1 && branch != 2)
        throw UsageError("branch must be 1 or 2");
    CheckReport r;
    r.theorem_id = "T2.10";
    r.object_kind = "simple closed curves made from trajectories";
    const ScaledFraction &P = s.f[0];
    const ScaledFraction &Q = s.f[1];
    r.echo("f", field_text(s.f));
    r.echo("alpha", alpha.to_string());
    r.echo("beta", beta.to_string());
    r.echo("branch", std::to_string(branch));
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("f", s.f.is_zero()));
    r.hypotheses.push_back(smoothness_hypothesis("alpha and beta are smooth on the domain", {alpha, beta}, ctx));

    ScaledFraction ax = partial_derivative(alpha, 0);
    ScaledFraction ay = partial_derivative(alpha, 1);
    ScaledFraction divA = divergence(scale(beta, s.f));
    const ScaledFraction &top = branch == 1 ? ax : ay;
    const ScaledFraction &ratio_den = branch == 1 ? Q : P;
    const ScaledFraction &ratio_num = branch == 1 ? P : Q;
    ScaledFraction p = ScaledFraction::constant(s.vars, 0);
    if (!top.is_zero()) {
        if (ratio_den.is_zero()) {
            r.add(std::string(branch == 1 ? "Q" : "P") + " is not identically zero", Verdict::Fail,
                  "the ratio is undefined");
            conclude(r, not_applicable("ratio undefined"));
            return r;
        }
        p = ratio_num / ratio_den * top;
    }
    std::string pname = branch == 1 ? "p1" : "p2";
    r.hypotheses.push_back(smoothness_hypothesis(pname + " = " + p.to_string() +
                                                     " is continuously differentiable on the domain",
                                                 {p}, ctx));
    ScaledFraction q = branch == 1 ? partial_derivative(p + ay, 0) + divA : -partial_derivative(ax + p, 1) + divA;
    r.hypotheses.push_back(sign_hypothesis(std::string(branch == 1 ? "q1" : "q2") + " is constant sign", q,
                                           SignRequirement::ConstSign, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, 2, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

CheckReport check_isolated_regular_bound(const OdeSystem &s, const ScaledFraction &g, const CheckContext &ctx) {
    s.validate();
    int n = static_cast<int>(s.vars->n());
    CheckReport r;
    r.theorem_id = "T2.11";
    r.object_kind = "isolated compact regular integral hypersurfaces";
    r.echo("f", field_text(s.f));
    r.echo("g", g.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("f", s.f.is_zero()));
    r.hypotheses.push_back(smoothness_hypothesis("g is smooth on the domain", {g}, ctx));
    r.hypotheses.push_back(sign_hypothesis("g is definite", g, SignRequirement::Definite, ctx));
    r.hypotheses.push_back(
        sign_hypothesis("g f is solenoidal", divergence(scale(g, s.f)), SignRequirement::Zero, ctx));
    auto one = g.constant_value();
    if (is_linear_field(s.f) && one && *one == 1) {
        // linear systems have none at all; the rank is irrelevant
        Conclusion c = absence_conclusion(r.object_kind, where(ctx));
        c.text += " (linear system)";
        conclude(r, c);
        return r;
    }
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

} // namespace cyclebound
