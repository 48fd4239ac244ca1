// One line per acceptance criterion. Exit status is the number of failed criteria.
#include "properties.hpp"
#include "support.hpp"

#include "cyclebound/manifest/runner.hpp"
#include "cyclebound/theorems.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

using namespace cbtest;

namespace {

// Pinned tolerances. Symbolic criteria compare structurally (zero tolerance).
constexpr double probe_tolerance = 1e-6;
constexpr double control_growth = 1e-1;
constexpr double probe_horizon = 5;
constexpr double probe_step = 1e-3;
constexpr std::uint64_t property_seed = 20240611;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string &what) {
        if (!cond) {
            if (!ok)
                detail << "; ";
            ok = false;
            detail << what;
        }
    }
};

CheckContext context_of(const Manifest &m) {
    CheckContext c;
    c.domain = m.domain;
    return c;
}

ScaledFraction expr(const Manifest &m, const std::string &text) { return parse_scalar(text, m.ctx); }
KForm form(const Manifest &m, const std::string &text) { return parse_form(text, m.ctx); }

bool is_bound_one(const CheckReport &r) {
    return r.conclusion.type == ConclusionType::Bound && r.conclusion.bound == 1;
}

const CheckReport *find_report(const std::vector<CheckReport> &rs, const std::string &id) {
    for (const auto &r : rs)
        if (r.theorem_id == id)
            return &r;
    return nullptr;
}

void partial_divergences(Outcome &o) {
    Manifest m = load_fixture("ode5_partial_divergence.cbm");
    const VectorField &f = m.ode.f;
    struct Row {
        std::vector<int> xi;
        const char *mu;
        const char *expected;
    };
    const Row rows[] = {
        {{0, 1, 2, 3}, "g^(-3)", "2/(x1^2 + x2^2 + x3^2 + x4^2)^3"},
        {{0, 1, 2, 4}, "1", "-(3 + 2*x4^2)"},
        {{0, 1, 3, 4}, "1", "-(3 + 2*x3^2)"},
        {{0, 2, 3, 4}, "1", "-(3 + 2*x2^2)"},
        {{1, 2, 3, 4}, "1", "-(3 + 2*x1^2)"},
    };
    for (const auto &row : rows) {
        Sample xi{row.xi};
        ScaledFraction got = partial_divergence(scale(expr(m, row.mu), f), xi);
        o.require(got == expr(m, row.expected), "sample " + xi.label() + " gave " + got.to_string());
    }
    auto reports = run_checks(m, {}).reports;
    const CheckReport *r = find_report(reports, "T1.1");
    o.require(r && is_bound_one(*r), "T1.1 did not conclude Bound(1)");
    o.detail << "five samples match";
}

void total_sphere(Outcome &o) {
    Manifest m = load_fixture("total4_sphere.cbm");
    OdeSystem d1 = induced_ode(m.total, 0);
    ScaledFraction div = divergence(scale(expr(m, "g^(-3)"), d1.f));
    o.require(div == expr(m, "2*g^(-3)"), "div = " + div.to_string());
    auto reports = run_checks(m, {}).reports;
    const CheckReport *r = find_report(reports, "T1.2");
    o.require(r && is_bound_one(*r), "T1.2 did not conclude Bound(1)");
    o.detail << "div = " << div.to_string();
}

FormBoundInput input(const KForm &alpha, std::vector<KForm> aux, std::vector<Elimination> plan = {}) {
    return FormBoundInput{alpha, std::move(aux), std::move(plan), std::nullopt, {}};
}

void exterior_sphere(Outcome &o) {
    Manifest m = load_fixture("exterior4_sphere.cbm");
    auto zero2 = KForm(m.vars, 2);
    auto in = input(form(m, "x1*dx3*dx4"), {form(m, "1/g*dx3*dx4"), zero2, zero2}, {{0, 1}});
    FormBoundTrace tr;
    CheckReport r = check_ed_bound(m.exterior, in, context_of(m), &tr);
    o.require(tr.restricted == form(m, "x1*(2*x2 - x1^2)*dx2*dx3*dx4"), "restricted " + tr.restricted.to_string());
    o.require(tr.B == expr(m, "-3*x1^2"), "B = " + tr.B.to_string());
    SignKind k = sign_of(tr.B, m.domain).kind;
    o.require(k == SignKind::NegativeConstSign, "sign " + to_string(k));
    o.require(is_bound_one(r), "conclusion " + r.conclusion.text);
    o.detail << "B = " << tr.B.to_string() << ", " << to_string(k);
}

void pfaff_sphere(Outcome &o) {
    Manifest m = load_fixture("pfaff4_sphere.cbm");
    auto in = input(KForm(m.vars, 2), {form(m, "1/g*dx1*dx2"), form(m, "dx3*dx4")});
    FormBoundTrace tr;
    CheckReport r = check_pfaff_bound(m.pfaff, in, context_of(m), &tr);
    o.require(tr.wedges.size() == 2, "wedge count");
    if (tr.wedges.size() == 2) {
        o.require(tr.wedges[0] == form(m, "x4*dx1*dx2*dx3 - x3*dx1*dx2*dx4"), "w1^l1 " + tr.wedges[0].to_string());
        o.require(tr.wedges[1] == form(m, "x1*dx1*dx3*dx4 + x2*dx2*dx3*dx4"), "w2^l2 " + tr.wedges[1].to_string());
    }
    o.require(tr.B == expr(m, "-2"), "B = " + tr.B.to_string());
    SignKind k = sign_of(tr.B, m.domain).kind;
    o.require(k == SignKind::NegativeDefinite, "sign " + to_string(k));
    o.require(is_bound_one(r), "conclusion " + r.conclusion.text);
    o.detail << "B = " << tr.B.to_string() << ", wedges match";
}

void torus(Outcome &o) {
    Manifest m = load_fixture("pfaff3_torus.cbm");
    auto in = input(KForm(m.vars, 1), {form(m, "1/((x1 - 2)^2 + x2^2 + x3^2)*dx2"), KForm(m.vars, 1)});
    FormBoundTrace tr;
    CheckReport r = check_pfaff_bound(m.pfaff, in, context_of(m), &tr);
    o.require(tr.B == expr(m, "1"), "B = " + tr.B.to_string());
    o.require(is_bound_one(r), "conclusion " + r.conclusion.text);

    // (x1^2 + x2^2) (dw - 2/(x1^2 + x2^2) w2) must be divisible by w in the ring with s
    const Polynomial &w = m.candidate("torus");
    Polynomial rho = parse_polynomial("x1^2 + x2^2", m.ctx);
    const KForm &w2 = m.pfaff.forms[1];
    bool divisible = true;
    for (std::size_t i = 0; i < 3; ++i) {
        Fraction lhs = partial_derivative(w, i) * Fraction(rho);
        auto wi = w2.coefficient({static_cast<int>(i)}).as_polynomial();
        Fraction diff = lhs - Fraction(Polynomial::constant(m.vars, 2) * *wi);
        auto num = ScaledFraction(diff).as_polynomial();
        divisible = divisible && num && (num->is_zero() || exact_divide(*num, w).has_value());
    }
    o.require(divisible, "dw - (2/(x1^2+x2^2)) w2 not divisible by w");
    CheckReport inv = check_invariant_combination(
        w, m.pfaff.forms, {ScaledFraction(Polynomial(m.vars)), expr(m, "2/(x1^2 + x2^2)")});
    o.require(inv.conclusion.type == ConclusionType::Classification, "INV: " + inv.conclusion.text);
    o.detail << "B = 1, torus invariant";
}

void orthogonal_field(Outcome &o) {
    Manifest m = load_fixture("pfaff4_orthogonal_field.cbm");
    VectorField V;
    for (const char *c : {"g^(-3)*(-x1 - x2 + x1*g)", "g^(-3)*(x1 - x2 + x2*g)", "g^(-3)*(-x3 - x4 + x3*g)",
                          "g^(-3)*(x3 - x4 + x4*g)"})
        V.components.push_back(expr(m, c));
    for (std::size_t j = 0; j < 2; ++j) {
        ScaledFraction d = dot(V, coefficients_of(m.pfaff.forms[j]));
        o.require(d.is_zero(), "V . W" + std::to_string(j + 1) + " = " + d.to_string());
    }
    ScaledFraction div = divergence(V);
    o.require(div == expr(m, "2*g^(-3)"), "div V = " + div.to_string());
    CheckReport r = check_orthogonal_field_bound(m.pfaff, V, context_of(m));
    o.require(is_bound_one(r), "conclusion " + r.conclusion.text);
    o.detail << "div V = " << div.to_string();
}

void solenoidal(Outcome &o) {
    Manifest m = load_fixture("pfaff3_solenoidal.cbm");
    const KForm &w = m.pfaff.forms[0];
    o.require(divergence(coefficients_of(w)).is_zero(), "div A != 0");
    o.require(frobenius_pfaffian(w).integrable, "not integrable");
    CheckReport r = check_solenoidal_absence(w, std::nullopt, context_of(m));
    o.require(r.conclusion.type == ConclusionType::Absence &&
                  r.conclusion.text.find("compact leaves") != std::string::npos,
              "conclusion " + r.conclusion.text);
    KForm dF = exterior_derivative(KForm::scalar(expr(m, "x*y^2*z^3")));
    Polynomial q_expected = parse_polynomial("y*z^2", m.ctx);
    for (const auto &[idx, c] : w.coeffs()) {
        auto q = exact_divide(*dF.coefficient(idx).as_polynomial(), *c.as_polynomial());
        o.require(q && *q == q_expected, "quotient mismatch on a coefficient");
    }
    o.detail << "Absence (compact leaves), factor y*z^2";
}

void ode_sphere(Outcome &o) {
    Manifest m = load_fixture("ode3_sphere.cbm");
    auto cert = verify_partial_integral({m.ode.f}, m.candidate("sphere"));
    o.require(cert.certificate && cert.certificate->cofactors[0] == parse_polynomial("2*x2^2", m.ctx),
              "cofactor");
    KForm zero(m.vars, 1);
    auto in = input(KForm(m.vars, 1), {form(m, "-1/g*dx1"), zero, zero});
    FormBoundTrace tr;
    CheckReport r = check_ode_pfaff_bound(m.ode, in, context_of(m), &tr);
    o.require(tr.B == expr(m, "1"), "B = " + tr.B.to_string());
    o.require(is_bound_one(r), "conclusion " + r.conclusion.text);
    o.detail << "Phi = 2*x2^2, B = 1";
}

void nested_spheres(Outcome &o) {
    Manifest m = load_fixture("total3_nested_spheres.cbm");
    Polynomial g = parse_polynomial("x1^2 + x2^2 + x3^2", m.ctx);
    Polynomial prod = Polynomial::constant(m.vars, 1);
    for (int k = 0; k <= 5; ++k)
        prod *= g - Polynomial::constant(m.vars, k);
    Polynomial d1 = parse_polynomial("2*x2^2", m.ctx) * prod;
    Polynomial d2 = parse_polynomial("2*x3^2", m.ctx) * prod;
    for (int k = 1; k <= 5; ++k) {
        Polynomial w = g - Polynomial::constant(m.vars, k);
        auto res = verify_partial_integral(m.total.columns, w);
        bool ok = res.certificate && res.certificate->cofactors.size() == 2 &&
                  res.certificate->cofactors[0] == *exact_divide(d1, w) &&
                  res.certificate->cofactors[1] == *exact_divide(d2, w);
        o.require(ok, "certificate for g - " + std::to_string(k));
    }
    const std::vector<std::vector<std::string>> regions{{"g", "2 - g"}, {"g - 2", "4 - g"}, {"g - 4"}};
    auto src = InducedSource::of(m.total);
    KForm zero(m.vars, 1);
    for (const auto &region : regions) {
        CheckContext c = context_of(m);
        for (const auto &p : region)
            c.domain.region.push_back(parse_polynomial(p, m.ctx));
        c.domain.declared_ranks[3] = 1;
        auto in = input(KForm(m.vars, 1), {form(m, "-1/P1*dx1"), zero, zero});
        FormBoundTrace tr;
        CheckReport r = check_induced_pfaff_bound(src, 0, in, c, &tr);
        o.require(tr.B == expr(m, "1"), "B = " + tr.B.to_string());
        o.require(is_bound_one(r), "annulus " + region.front() + ": " + r.conclusion.text);
    }
    o.detail << "five certificates, three annuli";
}

void partial_systems(Outcome &o) {
    {
        Manifest m = load_fixture("partial3_induced_pfaff.cbm");
        KForm zero(m.vars, 1);
        auto in = input(KForm(m.vars, 1), {zero, form(m, "1/g*dx1"), zero});
        FormBoundTrace tr;
        CheckReport r = check_induced_pfaff_bound(InducedSource::of(m.partial), 0, in, context_of(m), &tr);
        o.require(tr.B == expr(m, "1"), "B = " + tr.B.to_string());
        o.require(is_bound_one(r), "induced Pfaff: " + r.conclusion.text);
    }
    {
        Manifest m = load_fixture("partial3_dulac.cbm");
        OdeSystem z1 = induced_ode(m.partial, 0);
        ScaledFraction div = divergence(scale(expr(m, "g^(-5/2)"), z1.f));
        SignKind k = sign_of(div, m.domain).kind;
        o.require(k == SignKind::PositiveDefinite, "div sign " + to_string(k));
        CheckReport r = check_induced_dulac(InducedSource::of(m.partial), 0, expr(m, "g^(-5/2)"), context_of(m));
        o.require(is_bound_one(r), "induced Dulac: " + r.conclusion.text);
        o.detail << "B = 1; div = " << div.to_string();
    }
}

void properties(Outcome &o) {
    int total = 0;
    for (const auto &p : run_all_properties(property_seed)) {
        total += p.cases;
        o.require(p.ok(), p.name + ": " + std::to_string(p.failures) + " failures, " + p.first_failure);
    }
    o.detail << total << " cases, seed " << property_seed;
}

void probes(Outcome &o) {
    double worst = 0;
    int count = 0;
    for (const char *name : {"ode3_sphere.cbm", "total3_nested_spheres.cbm", "total4_sphere.cbm"}) {
        Manifest m = load_fixture(name);
        for (auto p : m.probes) {
            p.horizon = probe_horizon;
            p.step = probe_step;
            ProbeResult r = run_probe(m, p);
            ++count;
            worst = std::max(worst, r.max_abs_w);
            o.require(!r.diverged && r.max_abs_w <= probe_tolerance,
                      std::string(name) + " " + p.candidate + ": " + format_double(r.max_abs_w));
        }
    }
    o.require(count == 7, "expected 7 probes, ran " + std::to_string(count));
    Space s = Space::xs(3);
    OdeSystem drift{s.vars, s.field({"1", "0", "0"})};
    ProbeResult c = probe_invariance(drift, s.poly("x1"), {0, 0, 0}, probe_horizon, probe_step);
    o.require(c.max_abs_w > control_growth, "control stayed at " + format_double(c.max_abs_w));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d probes, worst %.2e; control %.3g", count, worst, c.max_abs_w);
    o.detail << buf;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
        {"partial divergences in R^5 and the multi-sample bound", partial_divergences},
        {"total system on S^3: induced divergence and bound", total_sphere},
        {"exterior system: restriction, B and bound", exterior_sphere},
        {"two-equation Pfaff system: wedges, B and bound", pfaff_sphere},
        {"Pfaff system with a torus: B and radical invariance", torus},
        {"orthogonal field: orthogonality, divergence and bound", orthogonal_field},
        {"solenoidal form: Frobenius, absence and integrating factor", solenoidal},
        {"ODE in R^3: sphere certificate and induced Pfaff bound", ode_sphere},
        {"five nested spheres: certificates and per-annulus bounds", nested_spheres},
        {"partial systems: induced Pfaff and Dulac bounds", partial_systems},
        {"property suites", properties},
        {"numeric invariance probes", probes},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::printf("criterion %2zu %s  %s (%s)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.str().c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed;
}
