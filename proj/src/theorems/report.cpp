#include "cyclebound/theorems/report.hpp"
#include "cyclebound/sign/sampler.hpp"

#include <cstdio>

namespace cyclebound {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Unknown:
        return "unknown";
    case Verdict::Assumed:
        return "assumed";
    case Verdict::Advisory:
        return "advisory";
    }
    return "unknown";
}

std::string to_string(ConclusionType t) {
    switch (t) {
    case ConclusionType::Bound:
        return "Bound";
    case ConclusionType::Absence:
        return "Absence";
    case ConclusionType::NotApplicable:
        return "NotApplicable";
    case ConclusionType::Classification:
        return "Classification";
    }
    return "NotApplicable";
}

Hypothesis &CheckReport::add(std::string desc, Verdict v, std::string witness) {
    hypotheses.push_back({std::move(desc), v, std::move(witness)});
    return hypotheses.back();
}

void CheckReport::echo(std::string key, std::string value) {
    inputs_echo.emplace_back(std::move(key), std::move(value));
}

const Hypothesis *CheckReport::blocking() const {
    for (const auto &h : hypotheses)
        if (h.verdict == Verdict::Fail || h.verdict == Verdict::Unknown)
            return &h;
    return nullptr;
}

void conclude(CheckReport &r, Conclusion c) {
    bool claims = c.type == ConclusionType::Bound || c.type == ConclusionType::Absence;
    if (claims) {
        if (const auto *h = r.blocking()) {
            std::string why = h->verdict == Verdict::Fail ? "hypothesis failed: " : "hypothesis not established: ";
            r.conclusion = not_applicable(why + h->desc);
            return;
        }
    }
    r.conclusion = std::move(c);
}

Conclusion bound_conclusion(int r, const std::string &object_kind, const std::string &where) {
    return {ConclusionType::Bound, r, "at most " + std::to_string(r) + " " + object_kind + " in " + where};
}

Conclusion absence_conclusion(const std::string &object_kind, const std::string &where) {
    return {ConclusionType::Absence, std::nullopt, "no " + object_kind + " in " + where};
}

Conclusion not_applicable(std::string reason) {
    return {ConclusionType::NotApplicable, std::nullopt, std::move(reason)};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string point_text(const std::vector<Rational> &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + to_string(p[i]);
    return s + ")";
}

} // namespace

std::string describe(const SignVerdict &v) {
    std::string s = to_string(v.kind);
    if (v.kind == SignKind::Indefinite && v.witnesses.size() == 2) {
        s += ": " + format_double(v.witnesses[0].value) + " at " + point_text(v.witnesses[0].point);
        s += ", " + format_double(v.witnesses[1].value) + " at " + point_text(v.witnesses[1].point);
    }
    return s;
}

Hypothesis sign_hypothesis(std::string desc, const ScaledFraction &e, SignRequirement req,
                           const CheckContext &ctx) {
    SignVerdict v = sign_of(e, ctx.domain, ctx.sign);
    Verdict out = Verdict::Unknown;
    switch (req) {
    case SignRequirement::Definite:
        if (v.definite())
            out = Verdict::Pass;
        else if (v.kind == SignKind::Unknown)
            out = Verdict::Unknown;
        else if (v.const_sign() && !ctx.domain.region.empty())
            out = Verdict::Unknown; // the zeros may lie outside the region
        else
            out = Verdict::Fail;
        break;
    case SignRequirement::ConstSign:
        out = v.const_sign() ? Verdict::Pass : v.kind == SignKind::Unknown ? Verdict::Unknown : Verdict::Fail;
        break;
    case SignRequirement::ConstSignOrZero:
        out = v.const_sign() || v.kind == SignKind::IdenticallyZero ? Verdict::Pass
              : v.kind == SignKind::Unknown                         ? Verdict::Unknown
                                                                    : Verdict::Fail;
        break;
    case SignRequirement::Zero:
        out = v.kind == SignKind::IdenticallyZero ? Verdict::Pass : Verdict::Fail;
        break;
    }
    return {std::move(desc), out, e.to_string() + " : " + describe(v)};
}

Hypothesis rank_hypothesis(const CheckContext &ctx, int nu, std::optional<int> &rank_out) {
    rank_out = homotopy_rank(ctx.domain, nu);
    std::string desc = "rank of pi_" + std::to_string(nu - 1) + " of " + ctx.domain.describe() + " is known";
    if (!rank_out)
        return {desc, Verdict::Unknown, "declare rank"};
    bool declared = ctx.domain.declared_ranks.count(nu) > 0;
    return {desc, Verdict::Pass, "r = " + std::to_string(*rank_out) + (declared ? " (declared)" : " (computed)")};
}

namespace {

// p(x + a)
Polynomial translate(const Polynomial &p, const std::vector<Rational> &a) {
    const auto &vars = p.vars();
    Polynomial out(vars);
    for (const auto &[e, c] : p.terms()) {
        Polynomial t = Polynomial::constant(vars, c);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (e[i])
                t *= (Polynomial::variable(vars, i) + Polynomial::constant(vars, a[i])).pow(e[i]);
        out += t;
    }
    return out;
}

// (x1 - 2)^2 + x2^2 + x3^2 with (2,0,0) excluded: even and same-signed after shifting the point to 0
bool vanishes_only_at_excluded_point(const Polynomial &den, const Domain &d) {
    if (den.has_radicals())
        return false;
    for (const auto &a : d.excluded_points) {
        Polynomial q = translate(den, a);
        if (even_monomial_sign(q) == 0)
            continue;
        auto dim = zero_set_dimension(q);
        if (dim && *dim <= 0)
            return true;
    }
    return false;
}

} // namespace

Hypothesis smoothness_hypothesis(std::string desc, const std::vector<ScaledFraction> &values,
                                 const CheckContext &ctx) {
    Verdict out = Verdict::Pass;
    std::string witness;
    auto note = [&](const std::string &s) { witness += (witness.empty() ? "" : "; ") + s; };
    for (const auto &v : values) {
        for (const auto &pf : v.powers()) {
            if (!ctx.domain.is_positive_base(pf.base)) {
                out = Verdict::Unknown;
                note("power base " + pf.base.to_string() + " is not a declared positive base");
            }
        }
        const Polynomial &den = v.frac().den();
        if (den.is_constant())
            continue;
        if (sign_of(ScaledFraction(den), ctx.domain, ctx.sign).definite())
            continue;
        if (vanishes_only_at_excluded_point(den, ctx.domain))
            continue;
        RationalSampler sampler(ctx.sign.seed);
        bool hit = false;
        for (int i = 0; i < 200 && !hit; ++i) {
            auto pt = sampler.next_point(ctx.domain.n);
            if (!ctx.domain.contains(pt))
                continue;
            auto val = den.evaluate_exact(std::span<const Rational>(pt));
            if (val && *val == 0) {
                hit = true;
                out = Verdict::Fail;
                note("denominator " + den.to_string() + " vanishes at " + point_text(pt));
            }
        }
        if (!hit) {
            if (out == Verdict::Pass)
                out = Verdict::Assumed;
            note("denominator " + den.to_string() + " not certified nonvanishing; assumed on the domain");
        }
    }
    return {std::move(desc), out, witness};
}

} // namespace cyclebound
