#include <gtest/gtest.h>

#include <cmath>

#include "hosc/oracle.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(Oracle, GaussHermiteOrderOne) {
  const auto r = gauss_rule(RuleFamily::GaussHermite, 1);
  ASSERT_EQ(r->order, 1);
  EXPECT_NEAR(r->nodes[0], 0.0, 1e-15);
  EXPECT_NEAR(r->weights[0], std::sqrt(kPi), 1e-14);
}

TEST(Oracle, GaussLaguerreOrderOne) {
  const auto r = gauss_rule(RuleFamily::GaussLaguerre, 1, 0.0);
  EXPECT_NEAR(r->nodes[0], 1.0, 1e-15);
  EXPECT_NEAR(r->weights[0], 1.0, 1e-15);
}

TEST(Oracle, GaussJacobiLegendreOrderTwo) {
  const auto r = gauss_rule(RuleFamily::GaussJacobi, 2, 0.0, 0.0);
  EXPECT_NEAR(r->nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r->nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r->weights[0], 1.0, 1e-14);
  EXPECT_NEAR(r->weights[1], 1.0, 1e-14);
}

TEST(Oracle, GaussRulesIntegratePolynomialsExactly) {
  // Order 10 integrates degree 19: x^8 e^{-x^2} gives 105 sqrt(pi)/16; x^5 e^{-x} gives 5!.
  const auto gh = gauss_rule(RuleFamily::GaussHermite, 10);
  EXPECT_NEAR(gh->integrate([](double x) { return std::pow(x, 8); }), 105.0 * std::sqrt(kPi) / 16.0, 1e-12);
  const auto gl = gauss_rule(RuleFamily::GaussLaguerre, 10, 0.0);
  EXPECT_NEAR(gl->integrate([](double x) { return std::pow(x, 5); }), 120.0, 1e-10);
}

TEST(Oracle, RulesAreCached) {
  EXPECT_EQ(gauss_rule(RuleFamily::GaussHermite, 12).get(), gauss_rule(RuleFamily::GaussHermite, 12).get());
}

TEST(Oracle, AdaptiveExponentialTail) {
  const auto e = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, INFINITY);
  EXPECT_NEAR(e.value, 1.0, 1e-12);
}

TEST(Oracle, AdaptiveGaussianLogIntegrand) {
  const auto e = integrate_adaptive([](double x) { return std::exp(-x * x) * (-x * x); }, -INFINITY, INFINITY);
  EXPECT_NEAR(e.value, -std::sqrt(kPi) / 2.0, 1e-12);
}

TEST(Oracle, AdaptiveLogarithmicEndpoint) {
  const auto e = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0);
  EXPECT_NEAR(e.value, -1.0, 1e-12);
}

TEST(Oracle, NonIntegrableSingularityRaisesConvergenceError) {
  try {
    integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0);
    FAIL() << "expected a convergence error";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.abs_error(), 0.0);
  }
}

TEST(Oracle, AdaptiveRejectsBadInput) {
  EXPECT_THROW(integrate_adaptive([](double) { return 1.0; }, 1.0, 0.0), DomainError);
  EXPECT_THROW(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0, {}, 0.0), DomainError);
}

TEST(Oracle, WeightedNormAtUnitOrderIsOne) {
  for (int nr : {0, 3, 9})
    for (int D : {2, 3, 7}) EXPECT_NEAR(weighted_Lq_norm(nr, 1, D, 1.0), 1.0, 1e-10);
}

TEST(Oracle, WeightedNormTwoDimensionalGround) {
  EXPECT_NEAR(weighted_Lq_norm(0, 0, 2, 2.0), 0.5, 1e-12);
}

TEST(Oracle, OrthonormalLaguerreGroundEntropy) {
  for (double a : {0.0, 0.5, 2.5}) EXPECT_NEAR(polynomial_entropy(PolySpec::laguerre(0, a)), std::lgamma(a + 1.0), 1e-12);
}

}  // namespace
