#include "support.hpp"

#include "cyclebound/theorems.hpp"

#include <gtest/gtest.h>

using namespace cbtest;

namespace {

CheckContext whole(std::size_t n) {
    CheckContext c;
    c.domain.n = n;
    return c;
}

CheckContext punctured(std::size_t n) {
    CheckContext c = whole(n);
    c.domain.excluded_points.push_back(std::vector<Rational>(n, 0));
    return c;
}

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m;
    for (auto r : rows) {
        std::vector<Rational> row;
        for (long v : r)
            row.emplace_back(v);
        m.push_back(row);
    }
    return m;
}

bool gated(const CheckReport &r) {
    bool claims = r.conclusion.type == ConclusionType::Bound || r.conclusion.type == ConclusionType::Absence;
    return !claims || r.blocking() == nullptr;
}

#define EXPECT_CONCLUSION(report, kind)                                                    \
    do {                                                                                   \
        const CheckReport &rep_ = (report);                                                \
        EXPECT_EQ(rep_.conclusion.type, ConclusionType::kind) << rep_.conclusion.text;     \
        EXPECT_TRUE(gated(rep_));                                                          \
    } while (0)

} // namespace

TEST(Theorems, ConcludeDowngradesOnBlockingHypothesis) {
    CheckReport r;
    r.add("fine", Verdict::Pass);
    r.add("assumed", Verdict::Assumed);
    r.add("advisory", Verdict::Advisory);
    conclude(r, bound_conclusion(1, "hypersurfaces", "here"));
    EXPECT_CONCLUSION(r, Bound);
    EXPECT_EQ(r.conclusion.bound, 1);
    r.add("unsure", Verdict::Unknown);
    conclude(r, bound_conclusion(1, "hypersurfaces", "here"));
    EXPECT_CONCLUSION(r, NotApplicable);
    CheckReport f;
    f.add("bad", Verdict::Fail);
    conclude(f, absence_conclusion("orbits", "here"));
    EXPECT_CONCLUSION(f, NotApplicable);
}

TEST(Theorems, TkachevAbsence) {
    Space p(std::vector<std::string>{"x", "y"});
    OdeSystem rot{p.vars, p.field({"-y", "x"})};
    EXPECT_CONCLUSION(check_tkachev_absence(rot, p.scalar("x^2 + y^2"), whole(2)), NotApplicable);
    EXPECT_CONCLUSION(check_tkachev_absence(rot, p.scalar("7"), whole(2)), NotApplicable);

    Space s = Space::xs(3);
    OdeSystem radial{s.vars, s.field({"x1", "x2", "x3"})};
    ScaledFraction N = s.scalar("x1^2 + x2^2 + x3^2");
    EXPECT_CONCLUSION(check_tkachev_absence(radial, N, whole(3)), NotApplicable);
    EXPECT_CONCLUSION(check_tkachev_absence(radial, N, punctured(3)), Absence);
}

TEST(Theorems, DulacTraceless) {
    Space p(std::vector<std::string>{"x", "y"});
    OdeSystem planar{p.vars, p.field({"x + y", "2*x - y"})};
    CheckReport r = check_dulac_bound(planar, p.scalar("1"), whole(2));
    EXPECT_CONCLUSION(r, Bound);
    EXPECT_EQ(r.theorem_id, "T0.1");
    Space s = Space::xs(3);
    OdeSystem spatial{s.vars, s.field({"x2", "-x1", "0"})};
    CheckReport q = check_dulac_bound(spatial, s.scalar("1"), whole(3));
    EXPECT_CONCLUSION(q, NotApplicable);
    EXPECT_EQ(q.theorem_id, "T2.9");
}

TEST(Theorems, DulacInducedColumnWithFractionalPower) {
    Space s = Space::xs(3);
    s.define("g", "x1^2 + x2^2 + x3^2", true);
    OdeSystem o{s.vars, s.field({"-x1 + x2 + x1*g", "-x1 - x2 + x2*g", "-x3 + x3*g"})};
    CheckContext c = punctured(3);
    c.domain.positive_bases = s.ctx.positive_bases;
    CheckReport r = check_dulac_bound(o, s.scalar("g^(-5/2)"), c);
    EXPECT_CONCLUSION(r, Bound);
    EXPECT_EQ(r.conclusion.bound, 1);
}

TEST(Theorems, PartialDivergenceZeroMultiplier) {
    Space s = Space::xs(4);
    OdeSystem o{s.vars, s.field({"x1", "x2", "x3", "x4"})};
    SampleMultipliers mus;
    for (const auto &xi : all_samples(4, 3))
        mus[xi.xi] = s.scalar("1");
    EXPECT_CONCLUSION(check_partial_div_bound(o, 3, mus, punctured(4)), Bound);
    mus[{0, 1, 2}] = ScaledFraction(Polynomial(s.vars));
    EXPECT_CONCLUSION(check_partial_div_bound(o, 3, mus, punctured(4)), NotApplicable);
    mus.erase({0, 1, 3});
    EXPECT_THROW(check_partial_div_bound(o, 3, mus, punctured(4)), UsageError);
}

TEST(Theorems, PartialDivergenceFullSampleMatchesDulac) {
    Space s = Space::xs(3);
    OdeSystem o{s.vars, s.field({"x1 + x2^2", "x2", "x3 - x1*x2"})};
    SampleMultipliers mus{{{0, 1, 2}, s.scalar("1")}};
    CheckReport a = check_partial_div_bound(o, 3, mus, punctured(3));
    CheckReport b = check_dulac_bound(o, s.scalar("1"), punctured(3));
    EXPECT_EQ(a.conclusion.type, b.conclusion.type);
    EXPECT_EQ(a.conclusion.bound, b.conclusion.bound);
}

TEST(Theorems, LinearEigenvalueSums) {
    CheckReport ok = check_linear_td_eigen(LinearTotalSystem{{mat({{0, -2}, {1, 3}})}});
    EXPECT_CONCLUSION(ok, Absence);
    EXPECT_CONCLUSION(check_linear_td_eigen(LinearTotalSystem{{mat({{0, 1}, {1, 0}})}}), NotApplicable);
    EXPECT_CONCLUSION(check_linear_td_eigen(LinearTotalSystem{{mat({{0, 1}, {0, 5}})}}), NotApplicable);
    // non-commuting pair blocks the test
    EXPECT_CONCLUSION(check_linear_td_eigen(LinearTotalSystem{{mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 2}})}}),
                      NotApplicable);
}

TEST(Theorems, OrbitAbsence) {
    Space s = Space::xs(3);
    TotalSystem t{s.vars, {s.field({"x1", "x2", "x3"}), s.field({"x2", "-x1", "0"})}};
    ScaledFraction N = s.scalar("x1^2 + x2^2 + x3^2");
    EXPECT_CONCLUSION(check_orbit_absence_fn(t, N, punctured(3)), Absence);
    EXPECT_CONCLUSION(check_orbit_absence_fn(t, s.scalar("3"), punctured(3)), NotApplicable);
    TotalSystem bad{s.vars, {s.field({"1", "0", "0"}), s.field({"0", "x1", "0"})}};
    EXPECT_CONCLUSION(check_orbit_absence_fn(bad, s.scalar("x1"), whole(3)), NotApplicable);

    EXPECT_CONCLUSION(check_orbit_absence_form(t, s.form("2*x1*dx1 + 2*x2*dx2 + 2*x3*dx3"), punctured(3)), Absence);
    EXPECT_CONCLUSION(check_orbit_absence_form(t, s.form("x2*dx1"), punctured(3)), NotApplicable);
    EXPECT_CONCLUSION(check_orbit_absence_form(t, KForm(s.vars, 1), punctured(3)), NotApplicable);
}

TEST(Theorems, ExteriorBoundZeroAuxiliaries) {
    Space s = Space::xs(3);
    ExteriorSystem e{s.vars, {s.form("x1*dx1 + dx2")}};
    FormBoundInput in{KForm(s.vars, 1), {KForm(s.vars, 1)}, {}, std::nullopt, {}};
    FormBoundTrace tr;
    CheckReport r = check_ed_bound(e, in, punctured(3), &tr);
    EXPECT_TRUE(tr.B.is_zero());
    EXPECT_CONCLUSION(r, NotApplicable);
}

TEST(Theorems, ExteriorSystemOfOneForms) {
    Space s = Space::xs(4);
    s.define("g", "x1^2 + x2^2 + x3^2 + x4^2", true);
    ExteriorSystem e{s.vars,
                     {s.form("x1*dx1 + x2*dx2 + g*(x4*dx3 - x3*dx4)"),
                      s.form("x1*dx1 + x2*dx2 + (2*x3 - x4)*dx3 + (x3 + 2*x4)*dx4")}};
    FormBoundInput in{KForm(s.vars, 2), {s.form("1/g*dx1*dx2"), s.form("dx3*dx4")}, {}, std::nullopt, {}};
    CheckContext c = punctured(4);
    c.domain.positive_bases = s.ctx.positive_bases;
    FormBoundTrace tr;
    CheckReport r = check_ed_bound(e, in, c, &tr);
    EXPECT_EQ(tr.B, s.scalar("-2"));
    EXPECT_CONCLUSION(r, Bound);
    EXPECT_EQ(r.conclusion.bound, 1);
}

TEST(Theorems, FormInvariance) {
    Space s = Space::xs(3);
    KForm z = s.form("x2*dx1 + dx3");
    EXPECT_EQ(check_form_invariance({z}, KForm(s.vars, 1), {KForm(s.vars, 1)}).hypotheses.back().verdict,
              Verdict::Pass);
    KForm theta = s.form("x3*dx1 - x1*dx3");
    KForm eta = s.form("2*dx1");
    // d theta = -2 dx1^dx3 ; z ^ 2dx1 = 2 dx3^dx1 = -2 dx1^dx3
    CheckReport ok = check_form_invariance({z}, theta, {eta});
    for (const auto &h : ok.hypotheses)
        EXPECT_EQ(h.verdict, Verdict::Pass) << h.desc << ": " << h.witness;
    CheckReport bad = check_form_invariance({z}, theta, {KForm(s.vars, 1)});
    EXPECT_TRUE(std::any_of(bad.hypotheses.begin(), bad.hypotheses.end(),
                            [](const Hypothesis &h) { return h.verdict == Verdict::Fail; }));
}

TEST(Theorems, LinearPfaffClassification) {
    Space s = Space::xs(2);
    EXPECT_CONCLUSION(classify_linear_pfaff(PfaffSystem{s.vars, {s.form("x2*dx1 - x1*dx2")}}), Absence);
    CheckReport c = classify_linear_pfaff(PfaffSystem{s.vars, {s.form("x1*dx1 + x2*dx2")}});
    EXPECT_CONCLUSION(c, Classification);
    EXPECT_NE(c.conclusion.text.find("second-order"), std::string::npos);
    Space t = Space::xs(3);
    EXPECT_CONCLUSION(classify_linear_pfaff(PfaffSystem{t.vars, {t.form("x1*dx1"), t.form("x2*dx1 - x1*dx2")}}),
                      Absence);
    EXPECT_THROW(classify_linear_pfaff(PfaffSystem{s.vars, {s.form("x1^2*dx1")}}), UsageError);
}

TEST(Theorems, OrthogonalField) {
    Space s(std::vector<std::string>{"x", "y", "z"});
    PfaffSystem p{s.vars, {s.form("y*z*dx + 2*x*z*dy + 3*x*y*dz")}};
    EXPECT_CONCLUSION(check_orthogonal_field_bound(p, zero_field(s.vars), whole(3)), NotApplicable);
    CheckReport r = check_orthogonal_combination(p, {s.scalar("1"), ScaledFraction(Polynomial(s.vars))}, whole(3));
    EXPECT_TRUE(gated(r));
    EXPECT_NE(r.hypotheses.front().verdict, Verdict::Fail);
}

TEST(Theorems, SolenoidalAbsence) {
    Space s(std::vector<std::string>{"x", "y", "z"});
    EXPECT_CONCLUSION(check_solenoidal_absence(s.form("dx"), s.scalar("1"), whole(3)), Absence);
    EXPECT_CONCLUSION(check_solenoidal_absence(s.form("x*dx"), s.scalar("1"), whole(3)), NotApplicable);
    CheckReport c = check_solenoidal_absence(s.form("y*z*dx + 2*x*z*dy + 3*x*y*dz"), std::nullopt, whole(3));
    EXPECT_CONCLUSION(c, Absence);
    EXPECT_NE(c.conclusion.text.find("compact leaves"), std::string::npos);
}

TEST(Theorems, PlanarAlphaBeta) {
    Space s(std::vector<std::string>{"x", "y"});
    OdeSystem vdp{s.vars, s.field({"y", "-x + (1 - x^2)*y"})};
    EXPECT_CONCLUSION(check_planar_alpha_beta(vdp, s.scalar("0"), s.scalar("1"), 1, whole(2)), NotApplicable);
    OdeSystem damped{s.vars, s.field({"y", "-x - y - y^3"})};
    CheckReport a = check_planar_alpha_beta(damped, s.scalar("0"), s.scalar("1"), 1, whole(2));
    CheckReport b = check_dulac_bound(damped, s.scalar("1"), whole(2));
    EXPECT_EQ(a.conclusion.type, b.conclusion.type);
    EXPECT_CONCLUSION(a, Bound);
}

TEST(Theorems, IsolatedRegular) {
    Space s = Space::xs(2);
    OdeSystem cubic{s.vars, s.field({"-x2", "x1 + x1^3"})};
    CheckReport r = check_isolated_regular_bound(cubic, s.scalar("1"), punctured(2));
    EXPECT_CONCLUSION(r, Bound);
    EXPECT_EQ(r.conclusion.bound, 1);
    EXPECT_CONCLUSION(check_isolated_regular_bound(cubic, s.scalar("x1"), punctured(2)), NotApplicable);
    // linear traceless field with g = 1: the linear phrasing, no isolated hypersurfaces at all
    OdeSystem rot{s.vars, s.field({"-x2", "x1"})};
    CheckReport lin = check_isolated_regular_bound(rot, s.scalar("1"), punctured(2));
    EXPECT_CONCLUSION(lin, Absence);
    EXPECT_NE(lin.conclusion.text.find("no isolated"), std::string::npos);
}

TEST(Theorems, PartialIntegralCertificate) {
    Space s = Space::xs(3);
    s.define("g", "x1^2 + x2^2 + x3^2");
    auto f = s.field({"x3*g", "-x2 + x3 + x2*g", "-x2 - x1*g"});
    auto res = verify_partial_integral({f}, s.poly("g - 1"));
    ASSERT_TRUE(res.certificate);
    EXPECT_EQ(res.certificate->cofactors[0], s.poly("2*x2^2"));
    auto miss = verify_partial_integral({f}, s.poly("g - 2"));
    EXPECT_FALSE(miss.certificate);
    EXPECT_FALSE(miss.residual.is_zero());
    EXPECT_CONCLUSION(check_partial_integral({f}, s.poly("g - 2")), NotApplicable);
}

TEST(Theorems, IntegratingFactor) {
    Space s(std::vector<std::string>{"x", "y", "z"});
    CheckReport r = check_integrating_factor(s.form("y*z*dx + 2*x*z*dy + 3*x*y*dz"), s.poly("x*y^2*z^3"));
    EXPECT_NE(r.conclusion.type, ConclusionType::NotApplicable);
    EXPECT_NE(r.conclusion.text.find("y*z^2"), std::string::npos) << r.conclusion.text;
    CheckReport bad = check_integrating_factor(s.form("y*z*dx + 2*x*z*dy + 3*x*y*dz"), s.poly("x*y*z"));
    EXPECT_CONCLUSION(bad, NotApplicable);
}
