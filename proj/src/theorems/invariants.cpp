#include "common.hpp"

namespace cyclebound {

using namespace detail;

PartialIntegralResult verify_partial_integral(const std::vector<VectorField> &ops, const Polynomial &w) {
    if (w.is_zero())
        throw UsageError("partial integral candidate must be nonzero");
    PartialIntegralResult out;
    InvariantCertificate cert{w, {}};
    for (std::size_t j = 0; j < ops.size(); ++j) {
        ScaledFraction a = apply_operator(ops[j], w);
        std::optional<Polynomial> q;
        if (a.is_zero())
            q = Polynomial(w.vars());
        else if (auto p = a.as_polynomial())
            q = exact_divide(*p, w);
        if (!q) {
            out.failing = j;
            out.residual = a;
            return out;
        }
        cert.cofactors.push_back(*q);
    }
    out.certificate = std::move(cert);
    return out;
}

CheckReport check_partial_integral(const std::vector<VectorField> &ops, const Polynomial &w) {
    CheckReport r;
    r.theorem_id = "PI";
    r.object_kind = "integral hypersurface w = 0";
    r.echo("w", w.to_string());
    for (std::size_t j = 0; j < ops.size(); ++j)
        r.echo("X" + std::to_string(j + 1), field_text(ops[j]));
    if (w.is_zero()) {
        r.hypotheses.push_back(nontrivial("w", true));
        conclude(r, not_applicable("degenerate candidate"));
        return r;
    }
    PartialIntegralResult res = verify_partial_integral(ops, w);
    std::string text = "w = 0 is an integral hypersurface:";
    for (std::size_t j = 0; j < ops.size(); ++j) {
        std::string k = std::to_string(j + 1);
        if (res.certificate && j < res.certificate->cofactors.size()) {
            std::string phi = res.certificate->cofactors[j].to_string();
            r.add("X_" + k + " w = Phi_" + k + " w with polynomial Phi_" + k, Verdict::Pass, "Phi_" + k + " = " + phi);
            text += std::string(j ? "," : "") + " Phi_" + k + " = " + phi;
        } else if (!res.certificate && j == res.failing) {
            r.add("X_" + k + " w = Phi_" + k + " w with polynomial Phi_" + k, Verdict::Fail,
                  "X_" + k + " w = " + res.residual.to_string() + " is not divisible by w");
            break;
        }
    }
    if (res.certificate)
        conclude(r, {ConclusionType::Classification, std::nullopt, text});
    else
        conclude(r, not_applicable("w is not a partial integral"));
    return r;
}

CheckReport check_invariant_combination(const Polynomial &w, const std::vector<KForm> &forms,
                                        const std::vector<ScaledFraction> &multipliers) {
    if (multipliers.size() > forms.size())
        throw UsageError("more multipliers than forms");
    CheckReport r;
    r.theorem_id = "INV";
    r.object_kind = "integral hypersurface w = 0";
    r.echo("w", w.to_string());
    r.echo("forms", forms_text(forms));
    std::string ms;
    for (std::size_t j = 0; j < multipliers.size(); ++j)
        ms += (j ? ", " : "") + multipliers[j].to_string();
    r.echo("multipliers", "(" + ms + ")");
    if (w.is_zero()) {
        r.hypotheses.push_back(nontrivial("w", true));
        conclude(r, not_applicable("degenerate candidate"));
        return r;
    }
    KForm residual = exterior_derivative(KForm::scalar(ScaledFraction(w)));
    for (std::size_t j = 0; j < multipliers.size(); ++j)
        if (!multipliers[j].is_zero())
            residual -= multipliers[j] * forms[j];
    bool ok = true;
    std::string witness;
    for (const auto &[idx, c] : residual.coeffs()) {
        std::string slot = "d" + w.vars()->base_vars()[idx[0]];
        if (!c.powers().empty()) {
            ok = false;
            witness += (witness.empty() ? "" : "; ") + slot + ": power factors not supported";
            continue;
        }
        if (!exact_divide(c.frac().num(), w)) {
            ok = false;
            witness += (witness.empty() ? "" : "; ") + slot + ": " + c.to_string() + " not divisible by w";
        }
    }
    r.add("dw - sum_j c_j omega_j vanishes on w = 0", ok ? Verdict::Pass : Verdict::Fail,
          ok ? "residual " + residual.to_string() : witness);
    if (ok)
        conclude(r, {ConclusionType::Classification, std::nullopt,
                     "w = 0 is an integral hypersurface: dw = sum_j c_j omega_j on w = 0"});
    else
        conclude(r, not_applicable("dw is not a combination of the equations on w = 0"));
    return r;
}

CheckReport check_integrating_factor(const KForm &w, const Polynomial &F) {
    if (w.degree() != 1)
        throw UsageError("expected a 1-form");
    CheckReport r;
    r.theorem_id = "IF";
    r.object_kind = "integrating factor";
    r.echo("omega", w.to_string());
    r.echo("F", F.to_string());
    std::optional<Polynomial> q;
    bool ok = !w.is_zero();
    std::string witness;
    for (std::size_t i = 0; i < w.n() && ok; ++i) {
        ScaledFraction dF = partial_derivative(ScaledFraction(F), i);
        ScaledFraction wi = w.coefficient({static_cast<int>(i)});
        if (wi.is_zero()) {
            ok = dF.is_zero();
            continue;
        }
        auto a = dF.as_polynomial();
        auto b = wi.as_polynomial();
        std::optional<Polynomial> qi;
        if (a && b)
            qi = exact_divide(*a, *b);
        if (!qi || (q && !(*q == *qi))) {
            ok = false;
            witness = "coefficient of d" + w.vars()->base_vars()[i] + " disagrees";
        } else {
            q = qi;
        }
    }
    ok = ok && q.has_value();
    r.add("dF = q omega with polynomial q", ok ? Verdict::Pass : Verdict::Fail,
          ok ? "q = " + q->to_string() : witness);
    if (ok)
        conclude(r, {ConclusionType::Classification, std::nullopt,
                     "integrating factor q = " + q->to_string() + "; leaves lie on F = const"});
    else
        conclude(r, not_applicable("no polynomial integrating factor for this F"));
    return r;
}

CheckReport check_frobenius_operators(const std::vector<DiffOperator> &ops) {
    CheckReport r;
    r.theorem_id = "FROB";
    r.object_kind = "complete solvability";
    for (std::size_t j = 0; j < ops.size(); ++j)
        r.echo("X" + std::to_string(j + 1), field_text(ops[j]));
    FrobeniusTotalReport f = frobenius_total(ops);
    std::string w;
    if (!f.solvable)
        w = "[X" + std::to_string(f.failing_pair->first + 1) + ", X" + std::to_string(f.failing_pair->second + 1) +
            "] = " + field_text(f.bracket);
    r.add("pairwise brackets vanish", f.solvable ? Verdict::Pass : Verdict::Fail, w);
    conclude(r, f.solvable ? Conclusion{ConclusionType::Classification, std::nullopt, "completely solvable"}
                           : not_applicable("not completely solvable"));
    return r;
}

CheckReport check_frobenius_form(const KForm &w) {
    CheckReport r;
    r.theorem_id = "FROB";
    r.object_kind = "complete integrability";
    r.echo("omega", w.to_string());
    FrobeniusPfaffReport f = frobenius_pfaffian(w);
    r.add("d omega ^ omega = 0", f.integrable ? Verdict::Pass : Verdict::Fail,
          f.integrable ? "" : "residual " + f.residual.to_string());
    conclude(r, f.integrable ? Conclusion{ConclusionType::Classification, std::nullopt, "completely integrable"}
                             : not_applicable("not completely integrable"));
    return r;
}

} // namespace cyclebound
