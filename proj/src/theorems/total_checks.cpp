#include "common.hpp"

namespace cyclebound {

using namespace detail;

InducedSource InducedSource::of(const TotalSystem &s) {
    s.validate();
    return {Kind::Total, s.vars, s.columns};
}

InducedSource InducedSource::of(const PartialSystem &s) {
    s.validate();
    return {Kind::Partial, s.vars, s.operators};
}

OdeSystem InducedSource::induced(std::size_t j) const {
    if (j >= columns.size())
        throw UsageError("induced system index out of range");
    return OdeSystem{vars, columns[j]};
}

namespace {

std::string upoly_text(const UPoly &p) {
    std::string s;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0)
            continue;
        Rational c = p[k];
        bool neg = c < 0;
        if (neg)
            c = -c;
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = c == 1 && k > 0;
        if (!unit)
            s += to_string(c);
        if (k > 0)
            s += std::string(unit ? "" : "*") + "L" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s.empty() ? "0" : s;
}

Hypothesis solvability(const std::vector<VectorField> &cols) {
    FrobeniusTotalReport f = frobenius_total(cols);
    std::string w;
    if (!f.solvable)
        w = "[X" + std::to_string(f.failing_pair->first + 1) + ", X" + std::to_string(f.failing_pair->second + 1) +
            "] = " + field_text(f.bracket);
    return {"complete solvability: pairwise brackets vanish", f.solvable ? Verdict::Pass : Verdict::Fail, w};
}

bool all_zero(const std::vector<VectorField> &cols) {
    for (const auto &c : cols)
        if (!c.is_zero())
            return false;
    return true;
}

void echo_columns(CheckReport &r, const std::vector<VectorField> &cols) {
    for (std::size_t j = 0; j < cols.size(); ++j)
        r.echo("X" + std::to_string(j + 1), field_text(cols[j]));
}

// First definite entry among the candidates, as one hypothesis.
Hypothesis some_definite(const std::string &desc, const std::vector<ScaledFraction> &values,
                         const std::string &name, const CheckContext &ctx) {
    std::string w;
    for (std::size_t j = 0; j < values.size(); ++j) {
        SignVerdict v = sign_of(values[j], ctx.domain, ctx.sign);
        std::string item = name + std::to_string(j + 1) + " = " + values[j].to_string() + " : " + describe(v);
        if (v.definite())
            return {desc, Verdict::Pass, item};
        w += (w.empty() ? "" : "; ") + item;
    }
    return {desc, Verdict::Fail, w};
}

} // namespace

CheckReport check_td_partial_div(const TotalSystem &s, std::size_t j, int nu, const SampleMultipliers &mus,
                                 const CheckContext &ctx) {
    OdeSystem d = InducedSource::of(s).induced(j);
    CheckReport r = check_partial_div_bound(d, nu, mus, ctx);
    r.theorem_id = "T1.2";
    r.inputs_echo.insert(r.inputs_echo.begin(), {"column", std::to_string(j + 1)});
    r.add("hypotheses are checked on the induced system (D" + std::to_string(j + 1) + ") only",
          Verdict::Advisory, "per-column evidence");
    return r;
}

CheckReport check_orbit_absence_fn(const TotalSystem &s, const ScaledFraction &N, const CheckContext &ctx) {
    s.validate();
    CheckReport r;
    r.theorem_id = "T1.3";
    r.object_kind = "compact regular orbits";
    echo_columns(r, s.columns);
    r.echo("N", N.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("X", all_zero(s.columns)));
    r.hypotheses.push_back(solvability(s.columns));
    r.add("solutions continue to the whole time space", Verdict::Assumed, "not verified beyond the brackets");
    r.hypotheses.push_back(smoothness_hypothesis("N is continuously differentiable on the domain", {N}, ctx));
    std::vector<ScaledFraction> H;
    for (const auto &c : s.columns)
        H.push_back(apply_operator(c, N));
    r.hypotheses.push_back(some_definite("H_k = X_k N is definite for some k", H, "H", ctx));
    conclude(r, absence_conclusion(r.object_kind, where(ctx)));
    return r;
}

CheckReport check_orbit_absence_form(const TotalSystem &s, const KForm &w, const CheckContext &ctx) {
    s.validate();
    if (w.degree() != 1)
        throw UsageError("expected a 1-form");
    CheckReport r;
    r.theorem_id = "T1.4";
    r.object_kind = "compact regular orbits";
    echo_columns(r, s.columns);
    r.echo("omega", w.to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("X", all_zero(s.columns)));
    r.hypotheses.push_back(nontrivial("omega", w.is_zero()));
    r.hypotheses.push_back(solvability(s.columns));
    KForm dw = exterior_derivative(w);
    r.add("omega is closed", dw.is_zero() ? Verdict::Pass : Verdict::Fail,
          dw.is_zero() ? "" : "d omega = " + dw.to_string());
    r.add("omega is exact on the domain", Verdict::Assumed, "user assertion");
    VectorField coeffs = coefficients_of(w);
    std::vector<ScaledFraction> sums;
    for (const auto &c : s.columns)
        sums.push_back(dot(coeffs, c));
    r.hypotheses.push_back(some_definite("sum_i w_i X_ij is definite for some j", sums, "S", ctx));
    conclude(r, absence_conclusion(r.object_kind, where(ctx)));
    return r;
}

CheckReport check_linear_td_eigen(const LinearTotalSystem &s) {
    s.validate();
    CheckReport r;
    r.theorem_id = "T1.5";
    r.object_kind = "compact regular orbits";
    for (std::size_t j = 0; j < s.matrices.size(); ++j) {
        std::string t = "[";
        for (std::size_t a = 0; a < s.matrices[j].size(); ++a) {
            t += a ? "; " : "";
            for (std::size_t b = 0; b < s.matrices[j][a].size(); ++b)
                t += (b ? " " : "") + to_string(s.matrices[j][a][b]);
        }
        r.echo("A" + std::to_string(j + 1), t + "]");
    }
    LinearCommutingReport lc = linear_commuting(s);
    r.add("complete solvability: the matrices commute", lc.commuting ? Verdict::Pass : Verdict::Fail,
          lc.commuting ? "" : "A" + std::to_string(lc.failing_pair->first + 1) + " A" +
                                  std::to_string(lc.failing_pair->second + 1) + " != A" +
                                  std::to_string(lc.failing_pair->second + 1) + " A" +
                                  std::to_string(lc.failing_pair->first + 1));
    std::string w;
    bool found = false;
    for (std::size_t j = 0; j < s.matrices.size() && !found; ++j) {
        UPoly p = characteristic_polynomial(s.matrices[j]);
        Rational res = resultant(p, reflect(p));
        std::string item = "p" + std::to_string(j + 1) + "(L) = " + upoly_text(p) + ", Res = " + to_string(res);
        if (res != 0) {
            found = true;
            w = item;
        } else {
            w += (w.empty() ? "" : "; ") + item;
        }
    }
    r.add("no two eigenvalues of some A_j sum to zero (Res(p(L), p(-L)) != 0)",
          found ? Verdict::Pass : Verdict::Fail, w);
    conclude(r, absence_conclusion(r.object_kind, "R^" + std::to_string(s.n())));
    return r;
}

CheckReport check_induced_pfaff_bound(const InducedSource &s, std::size_t j, const FormBoundInput &in,
                                      const CheckContext &ctx, FormBoundTrace *trace) {
    OdeSystem d = s.induced(j);
    CheckReport r = check_ode_pfaff_bound(d, in, ctx, trace);
    bool total = s.kind == InducedSource::Kind::Total;
    r.theorem_id = total ? (in.theta ? "T2.13" : "T2.12") : (in.theta ? "T2.17" : "T2.16");
    r.inputs_echo.insert(r.inputs_echo.begin(), {"column", std::to_string(j + 1)});
    r.hypotheses.push_back(independence_advisory(s.columns, ctx));
    return r;
}

CheckReport check_induced_dulac(const InducedSource &s, std::size_t j, const ScaledFraction &phi,
                                const CheckContext &ctx) {
    OdeSystem d = s.induced(j);
    CheckReport r = dulac_report(d, phi, ctx, false);
    r.theorem_id = s.kind == InducedSource::Kind::Total ? "T2.14" : "T2.18";
    r.inputs_echo.insert(r.inputs_echo.begin(), {"column", std::to_string(j + 1)});
    r.hypotheses.push_back(independence_advisory(s.columns, ctx));
    return r;
}

CheckReport check_td_solenoidal(const TotalSystem &s, const std::vector<ScaledFraction> &g,
                                const CheckContext &ctx) {
    s.validate();
    if (g.size() != s.m())
        throw UsageError("need one g_j per column");
    int n = static_cast<int>(s.vars->n());
    CheckReport r;
    r.theorem_id = "T2.15";
    r.object_kind = "isolated compact regular integral hypersurfaces";
    echo_columns(r, s.columns);
    for (std::size_t j = 0; j < g.size(); ++j)
        r.echo("g" + std::to_string(j + 1), g[j].to_string());
    echo_domain(r, ctx);
    r.hypotheses.push_back(nontrivial("X", all_zero(s.columns)));
    r.hypotheses.push_back(solvability(s.columns));
    r.hypotheses.push_back(smoothness_hypothesis("g_j are smooth on the domain", g, ctx));
    bool linear_unit = true;
    for (std::size_t j = 0; j < g.size(); ++j) {
        std::string k = std::to_string(j + 1);
        r.hypotheses.push_back(sign_hypothesis("g_" + k + " is definite", g[j], SignRequirement::Definite, ctx));
        r.hypotheses.push_back(sign_hypothesis("g_" + k + " X^" + k + " is solenoidal",
                                               divergence(scale(g[j], s.columns[j])), SignRequirement::Zero, ctx));
        auto c = g[j].constant_value();
        linear_unit = linear_unit && c && *c == 1 && is_linear_field(s.columns[j]);
    }
    if (linear_unit) {
        Conclusion c = absence_conclusion(r.object_kind, where(ctx));
        c.text += " (linear completely solvable system)";
        conclude(r, c);
        return r;
    }
    std::optional<int> rank;
    r.hypotheses.push_back(rank_hypothesis(ctx, n, rank));
    conclude(r, rank ? bound_conclusion(*rank, r.object_kind, where(ctx)) : not_applicable("declare rank"));
    return r;
}

} // namespace cyclebound
