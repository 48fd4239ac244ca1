#include "common.hpp"

#include <set>

namespace cyclebound {

using namespace detail;

EliminationResult build_elimination(const std::vector<KForm> &forms, const std::vector<Elimination> &plan,
                                    const CheckContext &ctx) {
    EliminationResult out;
    std::set<std::size_t> seen;
    for (const auto &e : plan) {
        if (e.form >= forms.size())
            throw UsageError("elimination refers to a missing equation");
        const KForm &z = forms[e.form];
        if (z.degree() != 1)
            throw UsageError("elimination needs a 1-form equation");
        if (e.var >= z.n())
            throw UsageError("elimination variable out of range");
        if (!seen.insert(e.var).second)
            throw UsageError("variable eliminated twice");
        const VarTablePtr &vars = z.vars();
        std::string label = "d" + vars->base_vars()[e.var] + " from equation " + std::to_string(e.form + 1);
        ScaledFraction pivot = z.coefficient({static_cast<int>(e.var)});
        if (pivot.is_zero()) {
            out.hypotheses.push_back({"elimination of " + label + ": pivot is nonzero", Verdict::Fail,
                                      "coefficient of d" + vars->base_vars()[e.var] + " is 0"});
            continue;
        }
        ScaledFraction inv = pivot.inverse();
        KForm sub(vars, 1);
        for (const auto &[idx, c] : z.coeffs())
            if (idx[0] != static_cast<int>(e.var))
                sub.add(idx, -(c * inv));
        KForm back = pivot * (KForm::differential(vars, e.var) - sub);
        bool same = back == z;
        out.hypotheses.push_back({"elimination of " + label + " reproduces the equation",
                                  same ? Verdict::Pass : Verdict::Fail,
                                  "d" + vars->base_vars()[e.var] + " = " + sub.to_string()});
        out.hypotheses.push_back(sign_hypothesis("elimination pivot for " + label + " does not vanish", pivot,
                                                 SignRequirement::Definite, ctx));
        out.subst.emplace(e.var, std::move(sub));
    }
    return out;
}

namespace {

struct Flavor {
    std::string id_plain, id_theta;
    std::string system_what;
};

CheckReport form_bound(const Flavor &fl, const VarTablePtr &vars, const std::vector<KForm> &forms,
                       const FormBoundInput &in, const CheckContext &ctx, FormBoundTrace *trace, bool degenerate) {
    int n = static_cast<int>(vars->n());
    if (in.alpha.degree() != n - 2)
        throw UsageError("alpha must have degree n-2");
    if (in.aux.size() > forms.size())
        throw UsageError("more auxiliary forms than equations");
    for (std::size_t j = 0; j < in.aux.size(); ++j)
        if (!in.aux[j].is_zero() && in.aux[j].degree() != n - forms[j].degree() - 1)
            throw UsageError("auxiliary form " + std::to_string(j + 1) + " has the wrong degree");
    if (in.theta && in.theta->degree() != n - 2)
        throw UsageError("theta must have degree n-2");

    CheckReport r;
    r.theorem_id = in.theta ? fl.id_theta : fl.id_plain;
    r.object_kind = "compact integral hypersurfaces";
    r.echo("forms", forms_text(forms));
    r.echo("alpha", in.alpha.to_string());
    r.echo("aux", forms_text(in.aux));
    if (in.theta)
        r.echo("theta", in.theta->to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial(fl.system_what, degenerate));

    std::vector<ScaledFraction> coeffs;
    for (const auto &[idx, c] : in.alpha.coeffs())
        coeffs.push_back(c);
    for (const auto &a : in.aux)
        for (const auto &[idx, c] : a.coeffs())
            coeffs.push_back(c);
    r.hypotheses.push_back(smoothness_hypothesis("alpha and the auxiliary forms are smooth on the domain",
                                                 coeffs, ctx));

    EliminationResult elim = build_elimination(forms, in.plan, ctx);
    for (auto &h : elim.hypotheses)
        r.hypotheses.push_back(std::move(h));

    KForm restricted = restrict(exterior_derivative(in.alpha), elim.subst);
    KForm theta_sum = restricted;
    std::vector<KForm> wedges;
    for (std::size_t j = 0; j < in.aux.size(); ++j) {
        if (in.aux[j].is_zero()) {
            wedges.emplace_back(vars, n - 1);
            continue;
        }
        wedges.push_back(wedge(forms[j], in.aux[j]));
        theta_sum += wedges.back();
    }
    if (in.theta) {
        KForm dtheta = exterior_derivative(*in.theta);
        theta_sum += dtheta;
        KForm rhs(vars, n - 1);
        for (std::size_t j = 0; j < in.etas.size() && j < forms.size(); ++j)
            if (!in.etas[j].is_zero())
                rhs += wedge(forms[j], in.etas[j]);
        KForm residual = dtheta - rhs;
        r.add("theta is invariant: d theta = sum_j zeta_j ^ eta_j",
              residual.is_zero() ? Verdict::Pass : Verdict::Fail,
              residual.is_zero() ? "" : "residual " + residual.to_string());
    }
    ScaledFraction B = volume_coefficient(exterior_derivative(theta_sum));
    r.hypotheses.push_back(sign_hypothesis("B is constant sign", B, SignRequirement::ConstSign, ctx));
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    if (trace)
        *trace = FormBoundTrace{restricted, wedges, theta_sum, B};
    if (!rank) {
        conclude(r, not_applicable("declare rank"));
        return r;
    }
    Conclusion c = bound_conclusion(*rank, r.object_kind, where(ctx));
    if (in.theta)
        c.text += "; any set of gaps surrounded by a compact integral hypersurface has zero total index "
                  "with respect to the (n-1)-form d theta";
    conclude(r, c);
    return r;
}

bool all_zero(const std::vector<KForm> &forms) {
    for (const auto &f : forms)
        if (!f.is_zero())
            return false;
    return true;
}

} // namespace

CheckReport check_ed_bound(const ExteriorSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                           FormBoundTrace *trace) {
    s.validate();
    return form_bound({"T2.1", "T2.2", "exterior system"}, s.vars, s.zetas, in, ctx, trace, all_zero(s.zetas));
}

CheckReport check_pfaff_bound(const PfaffSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                              FormBoundTrace *trace) {
    s.validate();
    CheckReport r =
        form_bound({"T2.3", "T2.4", "Pfaff system"}, s.vars, s.forms, in, ctx, trace, all_zero(s.forms));
    std::vector<VectorField> rows;
    for (const auto &w : s.forms)
        rows.push_back(coefficients_of(w));
    r.hypotheses.push_back(independence_advisory(rows, ctx));
    return r;
}

CheckReport check_ode_pfaff_bound(const OdeSystem &s, const FormBoundInput &in, const CheckContext &ctx,
                                  FormBoundTrace *trace) {
    s.validate();
    InducedPfaff p = pfaff_from_ode(s);
    CheckReport r = form_bound({"T2.3D", "T2.4D", "f"}, s.vars, p.system.forms, in, ctx, trace, s.f.is_zero());
    r.inputs_echo.insert(r.inputs_echo.begin(), {"f", field_text(s.f)});
    return r;
}

CheckReport check_form_invariance(const std::vector<KForm> &forms, const KForm &theta,
                                  const std::vector<KForm> &etas) {
    CheckReport r;
    r.theorem_id = "INVF";
    r.object_kind = "invariant (n-2)-form";
    r.echo("forms", forms_text(forms));
    r.echo("theta", theta.to_string());
    r.echo("etas", forms_text(etas));
    KForm dtheta = exterior_derivative(theta);
    KForm rhs(theta.vars(), theta.degree() + 1);
    for (std::size_t j = 0; j < etas.size() && j < forms.size(); ++j)
        if (!etas[j].is_zero())
            rhs += wedge(forms[j], etas[j]);
    KForm residual = dtheta - rhs;
    bool ok = residual.is_zero();
    r.add("d theta = sum_j zeta_j ^ eta_j", ok ? Verdict::Pass : Verdict::Fail,
          ok ? "" : "residual " + residual.to_string());
    conclude(r, ok ? Conclusion{ConclusionType::Classification, std::nullopt, "theta is invariant"}
                   : not_applicable("theta is not invariant"));
    return r;
}

} // namespace cyclebound
