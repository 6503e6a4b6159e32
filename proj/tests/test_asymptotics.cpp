#include <gtest/gtest.h>

#include <cmath>

#include "hosc/asymptotics.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;

HyperState state(double w, int D, int nr, int l, int m = 0) { return HyperState::with_lm(OscillatorSpec(w, D), nr, l, D == 2 ? l : m); }

TEST(Rydberg, FirstMoment) {
  const auto v = rydberg_moment(1.0, 1000, RydbergLimit(0.0), 1.0);
  EXPECT_NEAR(v.value, 2.0 / kPi * std::sqrt(4000.0), 1e-12);
  EXPECT_NEAR(v.value, 40.2634, 1e-4);
  EXPECT_EQ(v.regime, Regime::Rydberg);
  EXPECT_FALSE(v.order_note.empty());
}

TEST(Rydberg, ZerothMomentIsExact) {
  EXPECT_DOUBLE_EQ(rydberg_moment(0.0, 50, RydbergLimit(0.3), 2.0).value, 1.0);
  EXPECT_DOUBLE_EQ(rydberg_heisenberg(0.0, 50).value, 1.0);
}

TEST(Rydberg, SecondMomentResidualShrinks) {
  double last = INFINITY;
  for (int nr : {100, 1000, 10000}) {
    const double exact = 2.0 * nr + 1.5;
    const double r = std::fabs(rydberg_moment(2.0, nr, RydbergLimit(0.0), 1.0).value - exact) / exact;
    EXPECT_NEAR(r, 1.5 / exact, 1e-12);
    EXPECT_LT(r, last);
    last = r;
  }
}

TEST(Rydberg, NonzeroLimitReducesToGammaFormAtSmallS) {
  const double a = rydberg_moment(3.0, 500, RydbergLimit(1e-7), 1.0).value;
  const double b = rydberg_moment(3.0, 500, RydbergLimit(0.0), 1.0).value;
  EXPECT_NEAR(a, b, 1e-6 * b);
}

TEST(Rydberg, HeisenbergProduct) {
  EXPECT_NEAR(rydberg_heisenberg(2.0, 100).value, 40000.0, 1e-8);
  double last = INFINITY;
  for (int nr : {100, 1000, 10000}) {
    const double exact = std::pow(2.0 * nr + 1.5, 2);
    const double r = std::fabs(rydberg_heisenberg(2.0, nr).value / exact - 1.0);
    EXPECT_LT(r, last);
    last = r;
  }
}

TEST(Rydberg, NegativeOrderOnZeroBranchIsUnsupported) {
  EXPECT_THROW(rydberg_moment(-1.0, 100, RydbergLimit(0.0), 1.0), UnsupportedError);
  EXPECT_THROW(rydberg_heisenberg(-1.5, 100), UnsupportedError);
}

TEST(HighDim, FirstMomentLeadingTerm) {
  const auto m = highdim_moment(1.0, 2000, 1.0, 0, 0);
  EXPECT_NEAR(m.leading.value, std::sqrt(1000.0), 1e-12);
  EXPECT_NEAR(m.characteristic_length, 31.6228, 1e-4);
  EXPECT_EQ(m.leading.regime, Regime::HighDim);
}

TEST(HighDim, CharacteristicLengthFromMoments) {
  for (double k : {1.0, 2.0, 4.0}) {
    const auto m = highdim_moment(k, 4000, 2.0, 0, 0);
    EXPECT_NEAR(std::pow(m.refined.value, 1.0 / k) / m.characteristic_length, 1.0, 2e-3);
  }
}

TEST(HighDim, LowDimensionIsFlagged) {
  EXPECT_NE(highdim_moment(2.0, 10, 1.0, 0, 0).leading.order_note.find("outside"), std::string::npos);
}

TEST(LaguerreEntropy, LeadingTermAndDomain) {
  // Leading form -2n + (a+1) ln n - a - 2 + ln 2pi at n = 1.
  const double a = 0.5;
  EXPECT_NEAR(laguerre_entropy_leading(1, a), -2.0 - a - 2.0 + std::log(2.0 * kPi), 1e-14);
  EXPECT_THROW(laguerre_entropy_asymptotics(0, a, 0.0), DomainError);
}

TEST(RenyiNorm, CriticalOrder) {
  const auto n = n_asymp(200, 0, 3, 1.5);
  EXPECT_EQ(n.regime, "q=q*");
  EXPECT_EQ(n_asymp(200, 0, 3, 1.2).regime, "q<q*");
  EXPECT_EQ(n_asymp(200, 0, 3, 2.0).regime, "q>q*");
  EXPECT_THROW(n_asymp(200, 0, 2, 2.0), UnsupportedError);
}

TEST(RenyiNorm, BesselConstantHalfOrder) {
  // Half-integer order makes the integrand elementary; the integral is 1/pi.
  const double v = bessel_power_integral(0.5, -0.5, 2.0);
  EXPECT_NEAR(v, 1.0 / kPi, 1e-9 / kPi);
  EXPECT_EQ(v, bessel_power_integral(0.5, -0.5, 2.0));
}

TEST(HighDimRenyi, LeadingTermMatchesCartesianGround) {
  for (int D : {10, 100, 1000}) {
    for (double q : {2.0, 3.0}) {
      const auto r = highdim_renyi(state(1.0, D, 0, 0), q);
      const double exact = 0.5 * D * std::log(kPi * std::pow(q, 1.0 / (q - 1.0)));
      EXPECT_NEAR(r.leading.value, exact, 1e-9 * exact);
    }
  }
}

TEST(HighDimRenyi, SwaveAngularAndConjugateSum) {
  EXPECT_NEAR(renyi_swave_angular(3), std::log(4.0 * kPi), 1e-14);
  const double q = 2.0, p = q / (2.0 * q - 1.0);
  EXPECT_NEAR(highdim_renyi_sum(50, p, q),
              highdim_renyi(state(1.0, 50, 0, 0), q).leading.value +
                  highdim_renyi(state(1.0, 50, 0, 0), p, Space::Momentum).leading.value,
              1e-10);
}

TEST(HighDimShannon, Modes) {
  const auto s = state(1.0, 400, 0, 0);
  EXPECT_NEAR(highdim_shannon(s).value, 200.0 * (1.0 + std::log(kPi)), 1e-10);
  EXPECT_NEAR(highdim_shannon(s, Space::Position, ShannonMode::AsPublished).value, 200.0 * std::log(400.0), 1e-10);
}

}  // namespace
