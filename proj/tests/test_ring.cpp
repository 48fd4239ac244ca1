#include "support.hpp"

#include <gtest/gtest.h>

using namespace cbtest;

namespace {

Space space4() {
    Space s = Space::xs(4);
    s.define("g", "x1^2 + x2^2 + x3^2 + x4^2", true);
    return s;
}

} // namespace

TEST(Ring, AdditionCollectsTerms) {
    Space s = Space::xs(4);
    EXPECT_EQ(s.poly("x1^2 + x2^2") + s.poly("x3^2 + x4^2"), s.poly("x4^2 + x3^2 + x2^2 + x1^2"));
    Polynomial p = s.poly("x1*x2 - 3");
    EXPECT_EQ(p + Polynomial(s.vars), p);
    EXPECT_EQ(p * Polynomial::constant(s.vars, 1), p);
}

TEST(Ring, NoZeroCoefficientsStored) {
    Space s = Space::xs(2);
    Polynomial p = s.poly("x1 + x2") - s.poly("x1");
    EXPECT_EQ(p.terms().size(), 1u);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(Ring, LeadingTermIsGrlexLargest) {
    Space s = Space::xs(3);
    Polynomial p = s.poly("x3^3 + x1*x2^2 + x1^2*x2 + 7");
    EXPECT_EQ(p.leading_exponents(), (Exponents{2, 1, 0}));
    EXPECT_EQ(p.leading_coefficient(), 1);
    EXPECT_EQ(p.total_degree(), 3);
}

TEST(Ring, PowerFactorsAddExponents) {
    Space s = space4();
    ScaledFraction a = s.scalar("g^(-3)");
    ScaledFraction prod = a * a;
    ASSERT_EQ(prod.powers().size(), 1u);
    EXPECT_EQ(prod.powers()[0].exponent, -6);
    EXPECT_EQ(prod, s.scalar("g^(-6)"));
    // nonnegative integer exponents fold back into the fraction
    ScaledFraction back = prod * s.scalar("g^6");
    EXPECT_TRUE(back.is_polynomial());
    EXPECT_EQ(back.constant_value(), Rational(1));
}

TEST(Ring, Derivatives) {
    Space s = space4();
    EXPECT_EQ(s.poly("x1^2 + x2^2 + x3^2 + x4^2").derivative_plain(0), s.poly("2*x1"));
    EXPECT_EQ(partial_derivative(s.scalar("g^(-3)"), 0), s.scalar("-6*x1*g^(-4)"));
}

TEST(Ring, RadicalDerivativeAndReduction) {
    Space s = Space::xs(2);
    auto vt = std::make_shared<VarTable>(std::vector<std::string>{"x1", "x2"});
    vt->add_radical("s", s.poly("x1^2 + x2^2").terms());
    Space r(std::vector<std::string>{"x1", "x2"});
    r.vars = vt;
    r.ctx.vars = vt;
    Polynomial sq = r.poly("s^2");
    EXPECT_EQ(sq, r.poly("x1^2 + x2^2"));
    EXPECT_EQ(r.poly("s^3"), r.poly("(x1^2 + x2^2)*s"));
    Fraction ds = partial_derivative(r.poly("s"), 0);
    // x1/s, compared by cross-multiplication
    EXPECT_EQ(ds * Fraction(r.poly("s")), Fraction(r.poly("x1")));
    EXPECT_EQ(r.poly("(s - 2)^2 + 1").conjugate(0), r.poly("(s + 2)^2 + 1"));
}

TEST(Ring, ExactDivide) {
    Space s = Space::xs(3);
    s.define("g", "x1^2 + x2^2 + x3^2");
    auto q = exact_divide(s.poly("2*x2^2*(g - 1)"), s.poly("g - 1"));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, s.poly("2*x2^2"));
    auto q2 = exact_divide(s.poly("x1^2 - 1"), s.poly("x1 + 1"));
    ASSERT_TRUE(q2);
    EXPECT_EQ(*q2, s.poly("x1 - 1"));
    EXPECT_FALSE(exact_divide(s.poly("x1^2 + 1"), s.poly("x1")));
    EXPECT_THROW(exact_divide(s.poly("x1"), Polynomial(s.vars)), UsageError);
}

TEST(Ring, Evaluate) {
    Space s = space4();
    std::vector<Rational> e1{1, 0, 0, 0};
    EXPECT_EQ(*s.poly("g").evaluate_exact(e1), 1);
    std::vector<Rational> ones{1, 1, 1, 1};
    Value v = s.scalar("2*g^(-3)").evaluate(std::span<const Rational>(ones));
    ASSERT_TRUE(std::holds_alternative<Rational>(v));
    // g(1,1,1,1) = 4, 2/4^3
    EXPECT_EQ(std::get<Rational>(v), Rational(1, 32));
    std::vector<Rational> zero{0, 1, 1, 1};
    EXPECT_THROW(s.scalar("1/x1").evaluate(std::span<const Rational>(zero)), EvaluationSingular);
    std::vector<Rational> origin{0, 0, 0, 0};
    EXPECT_THROW(s.scalar("g^(-1)").evaluate(std::span<const Rational>(origin)), EvaluationSingular);
}

TEST(Ring, NegativeRadicandIsDomainError) {
    auto vt = std::make_shared<VarTable>(std::vector<std::string>{"x1"});
    Space base = Space::xs(1);
    vt->add_radical("s", base.poly("x1").terms());
    Polynomial s = Polynomial::variable(vt, 1);
    std::vector<double> p{-1.0};
    EXPECT_THROW(s.evaluate(std::span<const double>(p)), DomainError);
    std::vector<double> q{4.0};
    EXPECT_DOUBLE_EQ(s.evaluate(std::span<const double>(q)), 2.0);
}

TEST(Ring, MismatchedTablesRejected) {
    Space a = Space::xs(2), b = Space::xs(2);
    EXPECT_THROW(a.poly("x1") + b.poly("x1"), UsageError);
}

TEST(Ring, FractionArithmetic) {
    Space s = Space::xs(2);
    Fraction f(s.poly("x1"), s.poly("x2"));
    Fraction g(s.poly("x2"), s.poly("x1"));
    EXPECT_EQ(f * g, Fraction(Polynomial::constant(s.vars, 1)));
    EXPECT_EQ(f + f, Fraction(s.poly("2*x1"), s.poly("x2")));
    EXPECT_EQ(f - f, Fraction(Polynomial(s.vars)));
    EXPECT_EQ(f / f, Fraction(Polynomial::constant(s.vars, 1)));
}
