#include <gtest/gtest.h>

#include <cmath>

#include "hosc/oracle.hpp"
#include "hosc/states.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(States, CartesianEnergy) {
  const CartesianState c(OscillatorSpec(2.0, 3), {1, 0, 2});
  EXPECT_DOUBLE_EQ(energy(c), 9.0);
  EXPECT_EQ(c.N(), 3);
}

TEST(States, HypersphericalEnergy) {
  EXPECT_DOUBLE_EQ(energy(HyperState::with_lm(OscillatorSpec(1.0, 3), 0, 0, 0)), 1.5);
  EXPECT_DOUBLE_EQ(energy(HyperState::with_lm(OscillatorSpec(1.0, 5), 2, 1, 0)), 7.5);
}

TEST(States, WithLmBuildsCanonicalLabels) {
  const auto s = HyperState::with_lm(OscillatorSpec(1.0, 5), 1, 3, -2);
  EXPECT_EQ(s.mu(), (std::vector<int>{3, 2, 2, -2}));
  EXPECT_EQ(s.l(), 3);
  EXPECT_EQ(s.abs_m(), 2);
  EXPECT_DOUBLE_EQ(s.alpha(), 3 + 2.5 - 1);
}

TEST(States, GroundDensityAtOrigin) {
  for (int D : {2, 3, 6}) {
    const auto s = HyperState::with_lm(OscillatorSpec(1.0, D), 0, 0, 0);
    // S-wave angular density is the inverse hypersphere area.
    const double angular = std::exp(std::lgamma(0.5 * D)) / (2.0 * std::pow(kPi, 0.5 * D));
    EXPECT_NEAR(radial_density(s, Space::Position, 0.0) * angular, std::pow(kPi, -0.5 * D), 1e-14);
    const CartesianState c(1.0, std::vector<int>(D, 0));
    EXPECT_NEAR(cartesian_density(c, Space::Position, std::vector<double>(D, 0.0)), std::pow(kPi, -0.5 * D), 1e-14);
  }
}

TEST(States, RadialDensityIsNormalized) {
  for (Space sp : {Space::Position, Space::Momentum}) {
    const auto s = HyperState::with_lm(OscillatorSpec(2.0, 3), 3, 2, 1);
    const auto e = integrate_adaptive(
        [&](double r) { return std::pow(r, s.dim() - 1) * radial_density(s, sp, r); }, 0.0, INFINITY, {1.0, 3.0, 6.0});
    EXPECT_NEAR(e.value, 1.0, 1e-11);
  }
}

TEST(States, JsonRoundTrip) {
  const std::string text = R"({"kind":"hyper","D":4,"omega":0.5,"nr":2,"mu":[3,1,-1]})";
  const State s = parse_state(text);
  ASSERT_TRUE(std::holds_alternative<HyperState>(s));
  const State again = parse_state(serialize_state(s));
  EXPECT_EQ(std::get<HyperState>(again).mu(), (std::vector<int>{3, 1, -1}));
  EXPECT_DOUBLE_EQ(std::get<HyperState>(again).omega(), 0.5);
}

TEST(States, InvalidQuantumNumbers) {
  EXPECT_THROW(HyperState(OscillatorSpec(1.0, 3), -1, {0, 0}), DomainError);
  EXPECT_THROW(HyperState(OscillatorSpec(1.0, 4), 0, {1, 2, 0}), DomainError);
  EXPECT_THROW(HyperState(OscillatorSpec(1.0, 3), 0, {0}), DomainError);
  EXPECT_THROW(OscillatorSpec(0.0, 3), DomainError);
  EXPECT_THROW(CartesianState(1.0, {1, -2}), DomainError);
}

TEST(States, MalformedJson) {
  EXPECT_THROW(parse_state("{\"kind\":\"hyper\""), ParseError);
  EXPECT_THROW(parse_state(R"({"kind":"ring","omega":1})"), ParseError);
  EXPECT_THROW(parse_state(R"({"kind":"hyper","D":3,"omega":1,"nr":0})"), ParseError);
}

}  // namespace
