#include "support.hpp"

#include "cyclebound/sign.hpp"

#include <gtest/gtest.h>

using namespace cbtest;

namespace {

Domain whole(std::size_t n) {
    Domain d;
    d.n = n;
    return d;
}

Domain punctured(std::size_t n) {
    Domain d = whole(n);
    d.excluded_points.push_back(std::vector<Rational>(n, 0));
    return d;
}

} // namespace

TEST(Sign, EvenCertificate) {
    Space s = Space::xs(4);
    EXPECT_EQ(sign_of(s.scalar("-(3 + 2*x4^2)"), whole(4)).kind, SignKind::NegativeDefinite);
    EXPECT_EQ(sign_of(s.scalar("-3*x1^2"), punctured(4)).kind, SignKind::NegativeConstSign);
    EXPECT_EQ(sign_of(s.scalar("x1^2 + x2^2 + x3^2 + x4^2"), punctured(4)).kind, SignKind::PositiveDefinite);
    EXPECT_EQ(sign_of(s.scalar("x1^2 + x2^2 + x3^2 + x4^2"), whole(4)).kind, SignKind::PositiveConstSign);
    EXPECT_EQ(sign_of(ScaledFraction(Polynomial(s.vars)), whole(4)).kind, SignKind::IdenticallyZero);
}

TEST(Sign, IndefiniteWitnesses) {
    Space s = Space::xs(3);
    Polynomial p = s.poly("x1^2 - x2^2");
    SignVerdict v = sign_of(ScaledFraction(p), whole(3));
    ASSERT_EQ(v.kind, SignKind::Indefinite);
    ASSERT_EQ(v.witnesses.size(), 2u);
    EXPECT_GT(*p.evaluate_exact(v.witnesses[0].point), 0);
    EXPECT_LT(*p.evaluate_exact(v.witnesses[1].point), 0);
}

TEST(Sign, FractionsAndPowers) {
    Space s = Space::xs(3);
    s.define("g", "x1^2 + x2^2 + x3^2", true);
    Domain d = punctured(3);
    d.positive_bases.push_back(s.poly("g"));
    EXPECT_EQ(sign_of(s.scalar("2*g^(-5/2)"), d).kind, SignKind::PositiveDefinite);
    EXPECT_EQ(sign_of(s.scalar("-1/(1 + x1^2)"), whole(3)).kind, SignKind::NegativeDefinite);
}

TEST(Sign, SeededSamplingIsDeterministic) {
    Space s = Space::xs(2);
    ScaledFraction e = s.scalar("x1^3 - x2 + 1/5");
    SignVerdict a = sign_of(e, whole(2), {9, 1000});
    SignVerdict b = sign_of(e, whole(2), {9, 1000});
    ASSERT_EQ(a.kind, SignKind::Indefinite);
    EXPECT_EQ(a.witnesses[0].point, b.witnesses[0].point);
    EXPECT_EQ(a.witnesses[1].point, b.witnesses[1].point);
}

TEST(Sign, ZeroSetWithin) {
    Space s = Space::xs(4);
    EXPECT_EQ(zero_set_within(s.poly("x1^2 + x2^2 + x3^2 + x4^2"), punctured(4)), Tri::Yes);
    EXPECT_EQ(zero_set_within(s.poly("x1^2"), punctured(4)), Tri::No);
    EXPECT_EQ(zero_set_within(s.poly("x1*x2 - x3"), punctured(4)), Tri::Unknown);
    EXPECT_EQ(zero_set_dimension(s.poly("x1^2 + x2^2")), 2);
    EXPECT_EQ(zero_set_dimension(s.poly("1 + x1^2")), -1);
}

TEST(Sign, ExcludedSubspaceCountsForDefiniteness) {
    Space s = Space::xs(5);
    Domain d = whole(5);
    d.excluded_subspaces.push_back({0, 1, 2, 3});
    EXPECT_EQ(sign_of(s.scalar("x1^2 + x2^2 + x3^2 + x4^2"), d).kind, SignKind::PositiveDefinite);
}

TEST(Sign, HomotopyRank) {
    EXPECT_EQ(homotopy_rank(punctured(4), 4), 1);
    EXPECT_EQ(homotopy_rank(whole(3), 3), 0);
    Domain d = whole(3);
    d.excluded_points.push_back({2, 0, 0});
    EXPECT_EQ(homotopy_rank(d, 3), 1);
    Domain sub = whole(5);
    sub.excluded_subspaces.push_back({0, 1, 2, 3});
    EXPECT_EQ(homotopy_rank(sub, 4), 1);
    Domain two = whole(2);
    two.excluded_points.push_back({0, 0});
    two.excluded_points.push_back({1, 0});
    EXPECT_EQ(homotopy_rank(two, 2), 2);
    EXPECT_EQ(homotopy_rank(two, 1), 0);
    EXPECT_EQ(homotopy_rank(punctured(4), 3), 0);
    // codimension 4 subspace: S^3, so pi_2 vanishes
    EXPECT_EQ(homotopy_rank(sub, 3), 0);
    Domain shell = punctured(3);
    shell.region.push_back(Space::xs(3).poly("x1^2 + x2^2 + x3^2 - 1"));
    EXPECT_FALSE(homotopy_rank(shell, 3).has_value());
    shell.declared_ranks[3] = 1;
    EXPECT_EQ(homotopy_rank(shell, 3), 1);
}

TEST(Sign, DomainContains) {
    Domain d = punctured(2);
    d.excluded_subspaces.push_back({1});
    EXPECT_FALSE(d.contains({0, 0}));
    EXPECT_FALSE(d.contains({3, 0}));
    EXPECT_TRUE(d.contains({3, 1}));
}
