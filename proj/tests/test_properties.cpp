#include "properties.hpp"

#include <gtest/gtest.h>

using namespace cbtest;

namespace {

constexpr std::uint64_t seed = 20240611;

void expect_ok(const PropertyResult &r, int cases) {
    EXPECT_EQ(r.cases, cases) << r.name;
    EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

} // namespace

TEST(Properties, DdIsZero) { expect_ok(prop_dd_zero(seed), 100); }
TEST(Properties, Leibniz) { expect_ok(prop_leibniz(seed), 100); }
TEST(Properties, GradedAnticommutativity) { expect_ok(prop_anticommutative(seed), 100); }
TEST(Properties, BracketJacobi) { expect_ok(prop_bracket_jacobi(seed), 50); }
TEST(Properties, BracketFiniteDifference) { expect_ok(prop_bracket_finite_difference(seed), 50); }
TEST(Properties, DivergenceBoundaryForm) { expect_ok(prop_divergence_boundary(seed), 100); }
TEST(Properties, PotentialInvertsD) { expect_ok(prop_potential_inverts_d(seed), 100); }
TEST(Properties, RestrictEvaluate) { expect_ok(prop_restrict_evaluate(seed), 100); }
TEST(Properties, EigenResultant) { expect_ok(prop_eigen_resultant(seed), 100); }
TEST(Properties, ExactDivide) { expect_ok(prop_exact_divide(seed), 200); }
TEST(Properties, SignSoundness) { expect_ok(prop_sign_sound(seed), 100); }

// A second seed, so the suites are not tuned to one stream.
TEST(Properties, OtherSeed) {
    for (const auto &r : run_all_properties(7))
        EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}
