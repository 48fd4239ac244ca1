#include "support.hpp"

#include "cyclebound/exterior.hpp"

#include <gtest/gtest.h>

using namespace cbtest;

namespace {

Space sphere4() {
    Space s = Space::xs(4);
    s.define("g", "x1^2 + x2^2 + x3^2 + x4^2", true);
    return s;
}

} // namespace

TEST(Exterior, WedgeBasics) {
    Space s = Space::xs(3);
    KForm d1 = s.form("dx1"), d2 = s.form("dx2");
    EXPECT_TRUE(wedge(d1, d1).is_zero());
    EXPECT_EQ(wedge(d2, d1), -wedge(d1, d2));
    EXPECT_EQ(wedge(d2, d1), s.form("-dx1*dx2"));
}

TEST(Exterior, WedgeOfSphereFormWithEll) {
    Space s = sphere4();
    KForm w1 = s.form("x1*dx1 + x2*dx2 + g*(x4*dx3 - x3*dx4)");
    KForm l1 = s.form("1/g*dx1*dx2");
    EXPECT_EQ(wedge(w1, l1), s.form("x4*dx1*dx2*dx3 - x3*dx1*dx2*dx4"));
}

TEST(Exterior, ExteriorDerivative) {
    Space s = sphere4();
    EXPECT_EQ(exterior_derivative(s.form("x1*dx3*dx4")), s.form("dx1*dx3*dx4"));
    KForm w1 = s.form("x1*dx1 + x2*dx2 + g*(x4*dx3 - x3*dx4)");
    KForm w2 = s.form("x1*dx1 + x2*dx2 + (2*x3 - x4)*dx3 + (x3 + 2*x4)*dx4");
    KForm sum = wedge(w1, s.form("1/g*dx1*dx2")) + wedge(w2, s.form("dx3*dx4"));
    EXPECT_EQ(exterior_derivative(sum), s.form("-2*dx1*dx2*dx3*dx4"));
    EXPECT_TRUE(exterior_derivative(exterior_derivative(s.form("x1*x2^3*dx4 + g^(-2)*dx1"))).is_zero());
}

TEST(Exterior, RestrictEliminatesDifferential) {
    Space s = Space::xs(4);
    KForm a = s.form("dx1*dx3*dx4");
    KForm sub = s.form("-x1*(-2*x2 + x1^2)*dx2 - (x1^2 + x3^2)*dx3 - (x2^2 + x4^2)*dx4");
    EXPECT_EQ(restrict(a, Substitution{{0, sub}}), s.form("x1*(2*x2 - x1^2)*dx2*dx3*dx4"));
    EXPECT_EQ(restrict(a, Substitution{}), a);
    EXPECT_THROW(restrict(a, Substitution{{0, s.form("dx1 + dx2")}}), UsageError);
}

TEST(Exterior, VolumeCoefficient) {
    Space s = Space::xs(4);
    EXPECT_EQ(volume_coefficient(s.form("-3*x1^2*dx1*dx2*dx3*dx4")), s.scalar("-3*x1^2"));
    EXPECT_TRUE(volume_coefficient(KForm(s.vars, 4)).is_zero());
    EXPECT_THROW(volume_coefficient(s.form("dx1*dx2")), UsageError);
    Space t = Space::xs(3);
    EXPECT_EQ(volume_coefficient(t.form("dx1*dx2*dx3")), t.scalar("1"));
}

TEST(Exterior, ApplyOperator) {
    Space s = Space::xs(3);
    s.define("g", "x1^2 + x2^2 + x3^2");
    VectorField f = s.field({"x3*g", "-x2 + x3 + x2*g", "-x2 - x1*g"});
    EXPECT_EQ(apply_operator(f, s.scalar("g - 1")), s.scalar("2*x2^2*(g - 1)"));
    EXPECT_TRUE(apply_operator(zero_field(s.vars), s.scalar("g")).is_zero());

    Space r = Space::xs(5);
    r.define("g", "x1^2 + x2^2 + x3^2 + x4^2");
    VectorField h = r.field({"-x1 - x2 + x1*g", "x1 - x2 + x2*g", "-x3 - x4 + x3*g", "x3 - x4 + x4*g", "-5*x5*g"});
    EXPECT_EQ(apply_operator(h, r.scalar("g - 1")), r.scalar("2*(g - 1)*g"));
}

TEST(Exterior, DivergenceExamples) {
    Space s(std::vector<std::string>{"x", "y", "z"});
    EXPECT_TRUE(divergence(s.field({"y*z", "2*x*z", "3*x*y"})).is_zero());
    EXPECT_TRUE(divergence(s.field({"1", "-2", "5/3"})).is_zero());
}

TEST(Exterior, PartialDivergences) {
    Space s = Space::xs(5);
    s.define("g", "x1^2 + x2^2 + x3^2 + x4^2", true);
    VectorField f = s.field({"-x1 - x2 + x1*g", "x1 - x2 + x2*g", "-x3 - x4 + x3*g", "x3 - x4 + x4*g", "-5*x5*g"});
    // the g^-3 multiple of the first four components
    ScaledFraction mu = s.scalar("g^(-3)");
    EXPECT_EQ(partial_divergence(scale(mu, f), Sample{{0, 1, 2, 3}}), s.scalar("2/(x1^2 + x2^2 + x3^2 + x4^2)^3"));
    EXPECT_EQ(partial_divergence(f, Sample{{0, 1, 2, 4}}), s.scalar("-(3 + 2*x4^2)"));
    EXPECT_EQ(partial_divergence(f, Sample{{0, 1, 2, 3, 4}}), divergence(f));
}

TEST(Exterior, LieBracket) {
    Space s = Space::xs(2);
    VectorField X = s.field({"1", "0"}), Y = s.field({"x1", "0"});
    EXPECT_EQ(lie_bracket(X, Y), X);
    VectorField Z = s.field({"x1*x2", "x2^2 - 1"});
    EXPECT_TRUE(lie_bracket(Z, Z).is_zero());
}

TEST(Exterior, Potential) {
    Space s(std::vector<std::string>{"x", "y", "z"});
    EXPECT_EQ(potential(s.form("2*x*dx + 2*y*dy")), s.poly("x^2 + y^2"));
    EXPECT_EQ(potential(s.form("y^2*z^3*dx + 2*x*y*z^3*dy + 3*x*y^2*z^2*dz")), s.poly("x*y^2*z^3"));
    EXPECT_THROW(potential(s.form("y*z*dx + 2*x*z*dy + 3*x*y*dz")), PreconditionError);
    EXPECT_THROW(potential(s.form("1/(1 + x^2)*dx")), Unsupported);
}

TEST(Exterior, BoundaryForm) {
    Space s = Space::xs(3);
    VectorField f = s.field({"x1", "x2", "x3"});
    EXPECT_EQ(boundary_form(f), s.form("x1*dx2*dx3 - x2*dx1*dx3 + x3*dx1*dx2"));
    EXPECT_EQ(exterior_derivative(boundary_form(f)), s.form("3*dx1*dx2*dx3"));
}

TEST(Exterior, Samples) {
    auto samples = all_samples(5, 4);
    ASSERT_EQ(samples.size(), 5u);
    EXPECT_EQ(samples.front().label(), "1234");
    EXPECT_EQ(samples.back().label(), "2345");
    EXPECT_EQ(all_samples(4, 0).size(), 1u);
}
