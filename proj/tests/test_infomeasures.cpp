#include <gtest/gtest.h>

#include <cmath>

#include "hosc/infomeasures.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

HyperState state(double w, int D, int nr, int l, int m = 0) { return HyperState::with_lm(OscillatorSpec(w, D), nr, l, D == 2 ? l : m); }

TEST(Fisher, GroundValues) {
  EXPECT_NEAR(fisher(state(1.0, 3, 0, 0), Space::Position).value, 6.0, 1e-14);
  EXPECT_NEAR(fisher(state(2.0, 4, 0, 0), Space::Momentum).value, 4.0, 1e-14);
}

TEST(Fisher, ExcitedValue) {
  EXPECT_NEAR(fisher(state(2.0, 3, 1, 1, 1), Space::Position).value, 28.0, 1e-13);
}

TEST(Fisher, ClosedFormMatchesMomentRoute) {
  for (const auto& s : {state(1.0, 3, 2, 2, -1), state(0.5, 5, 1, 3, 2), state(2.0, 2, 3, 2)})
    for (Space sp : {Space::Position, Space::Momentum})
      EXPECT_NEAR(fisher(s, sp).value, fisher_moment_route(s, sp), 1e-12 * fisher(s, sp).value);
}

TEST(HermiteEntropy, FirstValues) {
  EXPECT_NEAR(hermite_entropy(0), 0.0, 1e-15);
  EXPECT_NEAR(hermite_entropy(1), std::sqrt(kPi) * (4.0 - 2.0 * kEulerGamma), 1e-9);
}

TEST(HermiteEntropy, ClosedFormMatchesFullLineOracle) {
  for (int n = 2; n <= 8; ++n) {
    const double closed = hermite_entropy(n);
    EXPECT_NEAR(hermite_entropy_oracle(n).value, closed, 1e-8 * std::fabs(closed)) << "n=" << n;
  }
}

TEST(Shannon, OneDimensionalValues) {
  EXPECT_NEAR(shannon_cartesian(CartesianState(1.0, {0})).value, 0.5 * (1.0 + std::log(kPi)), 1e-12);
  EXPECT_NEAR(shannon_cartesian(CartesianState(1.0, {1})).value, 1.3427278, 1e-7);
  EXPECT_NEAR(shannon_cartesian_oracle(CartesianState(1.0, {1})).value,
              shannon_cartesian(CartesianState(1.0, {1})).value, 1e-10);
}

TEST(Shannon, CartesianClosedFormMatchesOracle) {
  const CartesianState c(OscillatorSpec(0.5, 3), {4, 1, 6});
  for (Space sp : {Space::Position, Space::Momentum})
    EXPECT_NEAR(shannon_cartesian(c, sp).value, shannon_cartesian_oracle(c, sp).value, 1e-7);
}

TEST(Shannon, SwaveAngularEntropy) {
  EXPECT_NEAR(angular_shannon(state(1.0, 3, 0, 0)).value, std::log(4.0 * kPi), 1e-12);
  EXPECT_NEAR(angular_shannon(state(1.0, 2, 0, 0)).value, std::log(2.0 * kPi), 1e-12);
  for (int D : {4, 7}) {
    const double area = std::log(2.0) + 0.5 * D * std::log(kPi) - std::lgamma(0.5 * D);
    EXPECT_NEAR(angular_shannon(state(1.0, D, 3, 0)).value, area, 1e-10);
  }
}

TEST(Shannon, HypersphericalGroundEqualsCartesianGround) {
  EXPECT_NEAR(shannon_hyperspherical(state(1.0, 3, 0, 0)).value, 1.5 * (1.0 + std::log(kPi)), 1e-10);
}

TEST(Shannon, HypersphericalDecompositionMatchesOracle) {
  const auto s = state(1.0, 3, 2, 2, 1);
  const auto closed = shannon_hyperspherical_parts(s);
  const auto oracle = shannon_hyperspherical_oracle(s);
  EXPECT_NEAR(closed.total, oracle.total, 1e-8);
}

TEST(Renyi, CartesianGround) {
  for (int q : {2, 3, 5}) {
    const double expected = 0.5 * 2 * std::log(kPi * std::pow(q, 1.0 / (q - 1)) / 1.5);
    EXPECT_NEAR(renyi_cartesian(CartesianState(1.5, {0, 0}), q).value, expected, 1e-10);
  }
  EXPECT_NEAR(renyi_cartesian(CartesianState(1.0, {0}), 2).value, 0.5 * std::log(2.0 * kPi), 1e-12);
}

TEST(Renyi, FirstExcitedSecondOrder) {
  // int rho^2 with rho = (2/sqrt(pi)) x^2 e^{-x^2} is 3 / (4 sqrt(2 pi)).
  const double expected = -std::log(3.0 / (4.0 * std::sqrt(2.0 * kPi)));
  EXPECT_NEAR(renyi_cartesian(CartesianState(1.0, {1}), 2).value, expected, 1e-12);
  EXPECT_NEAR(expected, 1.2066206056564, 1e-12);
}

TEST(Renyi, LinearizationMatchesOracle) {
  for (int q : {2, 3}) {
    const CartesianState c(1.0, {5, 2});
    EXPECT_NEAR(renyi_cartesian(c, q).value, renyi_cartesian_oracle(c, q).value, 1e-8);
  }
}

TEST(Renyi, ApproachesShannonNearUnitOrder) {
  const auto s = state(1.0, 3, 1, 1);
  const double sh = shannon_hyperspherical(s).value;
  const double below = renyi_hyperspherical(s, 0.999).value, above = renyi_hyperspherical(s, 1.001).value;
  EXPECT_NEAR(below, sh, 1e-2);
  EXPECT_NEAR(above, sh, 1e-2);
  EXPECT_GT(below, above);
}

TEST(Disequilibrium, EqualsExpOfSecondRenyi) {
  const auto s = state(1.0, 3, 2, 1, 1);
  EXPECT_NEAR(disequilibrium(s).value, std::exp(-renyi_hyperspherical(s, 2.0).value), 1e-9 * disequilibrium(s).value);
}

TEST(Disequilibrium, ThreeJRouteMatchesDougall) {
  for (int l = 0; l <= 3; ++l)
    for (int m = -l; m <= l; ++m) {
      const auto s = state(1.0, 3, 0, l, m);
      EXPECT_NEAR(angular_disequilibrium_3j(l, m), angular_disequilibrium(s), 1e-12) << "l=" << l << " m=" << m;
    }
  EXPECT_NEAR(angular_disequilibrium(state(1.0, 3, 0, 0)), 1.0 / (4.0 * kPi), 1e-15);
}

TEST(Disequilibrium, ClosedFormMatchesOracle) {
  const auto s = state(1.0, 5, 3, 2, 1);
  EXPECT_NEAR(disequilibrium(s).value, disequilibrium_oracle(s).value, 1e-9 * disequilibrium(s).value);
}

TEST(Renyi, InvalidOrders) {
  EXPECT_THROW(RenyiOrder(1.0), DomainError);
  EXPECT_THROW(RenyiOrder(-2.0), DomainError);
  EXPECT_THROW(RenyiOrder(0.4).conjugate(), DomainError);
}

}  // namespace
