#include <gtest/gtest.h>

#include <cmath>

#include "hosc/moments.hpp"

using namespace hosc;

namespace {

HyperState state(double w, int D, int nr, int l, int m = 0) { return HyperState::with_lm(OscillatorSpec(w, D), nr, l, D == 2 ? l : m); }

TEST(Moments, SecondMoment) {
  EXPECT_NEAR(radial_moment(state(1.0, 3, 1, 2), 2.0), 5.5, 1e-13);
}

TEST(Moments, InverseSquareMoment) {
  EXPECT_NEAR(radial_moment(state(2.0, 3, 0, 1), -2.0), 4.0 / 3.0, 1e-13);
}

TEST(Moments, ZerothMomentIsOne) {
  for (int nr : {0, 4, 25}) EXPECT_NEAR(radial_moment(state(0.5, 6, nr, 3), 0.0), 1.0, 1e-13);
}

TEST(Moments, MomentumMomentsScaleWithOmega) {
  // <p^k> = w^k <r^k> at the same w.
  const auto s = state(2.0, 4, 3, 1);
  for (double k : {-1.0, 1.0, 2.0, 3.5})
    EXPECT_NEAR(radial_moment(s, k, Space::Momentum), std::pow(2.0, k) * radial_moment(s, k),
                1e-12 * radial_moment(s, k, Space::Momentum));
}

TEST(Moments, ClosedFormMatchesOracle) {
  for (const auto& s : {state(1.0, 3, 2, 1), state(0.5, 2, 4, 3), state(2.0, 12, 5, 0)})
    for (double k : {-1.0, 1.0, 3.0, 6.0}) {
      const double closed = radial_moment(s, k);
      EXPECT_NEAR(radial_moment_oracle(s, k).value, closed, 1e-10 * closed);
    }
}

TEST(Moments, ThreeF2FormAgreesWithFiniteSum) {
  const auto d = radial_moment_detail(state(1.0, 5, 6, 2), 3.0);
  ASSERT_TRUE(d.dual_checked);
  EXPECT_NEAR(d.threef2_value, d.value, 1e-12 * d.value);
}

TEST(Moments, RecurrenceClosesOnClosedForm) {
  const auto s = state(1.5, 3, 3, 2);
  for (int k = 0; k <= 4; ++k)
    EXPECT_NEAR(recurrence_step(s, k, radial_moment(s, k), radial_moment(s, k - 2.0)), radial_moment(s, k + 2.0),
                1e-11 * radial_moment(s, k + 2.0));
}

TEST(Moments, ReflectionFormulas) {
  const auto s = state(0.7, 5, 2, 1);
  for (int k : {0, 1, 2})
    EXPECT_NEAR(reflection_moment(s, k), radial_moment(s, -k - 2.0), 1e-11 * radial_moment(s, -k - 2.0));
  EXPECT_NEAR(reflection_r_minus3(s), radial_moment(s, -3.0), 1e-11 * radial_moment(s, -3.0));
}

TEST(Moments, HeisenbergProductIsOmegaInvariant) {
  const auto s = state(1.0, 4, 2, 3);
  const double n = 2 * 2 + 3 + 2.0;
  for (double w : {0.5, 1.0, 2.0}) EXPECT_NEAR(heisenberg_product(s.with_omega(w), 2.0), n * n, 1e-12 * n * n);
}

TEST(Moments, LargeRadialNumberStaysFinite) {
  const auto s = state(1.0, 3, 10000, 0);
  EXPECT_NEAR(radial_moment(s, 2.0), 2 * 10000 + 1.5, 1e-9 * 20001.5);
  EXPECT_TRUE(std::isfinite(radial_moment(s, 1.0)));
}

TEST(Moments, DivergentMomentRaises) {
  EXPECT_THROW(radial_moment(state(1.0, 3, 0, 0), -3.0), DomainError);
  EXPECT_FALSE(moment_exists(state(1.0, 2, 1, 0), -2.0));
  EXPECT_TRUE(moment_exists(state(1.0, 2, 1, 1), -2.0));
}

}  // namespace
