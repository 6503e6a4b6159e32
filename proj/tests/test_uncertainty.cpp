#include <gtest/gtest.h>

#include <cmath>

#include "hosc/uncertainty.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;

HyperState state(double w, int D, int nr, int l, int m = 0) { return HyperState::with_lm(OscillatorSpec(w, D), nr, l, D == 2 ? l : m); }

TEST(Uncertainty, CentralHeisenbergGround) {
  const auto r = check("heisenberg_central", state(1.0, 4, 0, 0));
  EXPECT_NEAR(r.lhs, 4.0, 1e-13);
  EXPECT_NEAR(r.bound, 4.0, 1e-15);
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.saturated);
}

TEST(Uncertainty, BbmCartesianGround) {
  const auto r = check("bbm", CartesianState(1.0, {0, 0, 0}));
  EXPECT_NEAR(r.lhs, 3.0 * (1.0 + std::log(kPi)), 1e-12);
  EXPECT_TRUE(r.saturated);
}

TEST(Uncertainty, CentralFisherProduct) {
  const auto r = check("fisher_product_central", state(1.0, 3, 1, 1, 1));
  EXPECT_NEAR(r.lhs, 196.0, 1e-11);
  EXPECT_NEAR(r.bound, 100.0 / 9.0, 1e-12);
  EXPECT_TRUE(r.satisfied);
  EXPECT_FALSE(r.saturated);
}

TEST(Uncertainty, SlackIsLhsMinusBound) {
  const auto r = check("heisenberg_general", state(2.0, 3, 2, 1));
  EXPECT_DOUBLE_EQ(r.slack, r.lhs - r.bound);
  EXPECT_GT(r.slack, 0.0);
}

TEST(Uncertainty, AllRelationsHoldOnSmallGrid) {
  for (int D : {2, 3, 5})
    for (int nr = 0; nr <= 2; ++nr)
      for (int l = 0; l <= 2; ++l)
        for (int m = D == 2 ? l : -l; m <= l; ++m) {
          const auto s = state(1.0, D, nr, l, m);
          for (const auto& r : check_all(s)) {
            EXPECT_TRUE(r.satisfied) << r.relation_id << " D=" << D << " nr=" << nr << " l=" << l << " m=" << m;
            EXPECT_EQ(r.saturated, expected_saturation(r.relation_id, s))
                << r.relation_id << " D=" << D << " nr=" << nr << " l=" << l << " m=" << m;
          }
        }
}

TEST(Uncertainty, ConjugateRenyiGroundSaturation) {
  for (double q : {2.0, 3.0, 0.75}) {
    const auto r = check("renyi_conjugate", state(1.0, 3, 0, 0), {q});
    EXPECT_TRUE(r.saturated) << "q=" << q;
  }
  const auto c = check("renyi_conjugate", CartesianState(1.0, {2, 1}), {2.0});
  EXPECT_TRUE(c.satisfied);
  EXPECT_FALSE(c.saturated);
}

TEST(Uncertainty, CartesianStatesCoverEntropicRelationsOnly) {
  EXPECT_EQ(check_all(CartesianState(1.0, {1, 0})).size(), 2u);
  EXPECT_THROW(check("stam", CartesianState(1.0, {1, 0})), UnsupportedError);
  EXPECT_THROW(check("no_such_relation", state(1.0, 3, 0, 0)), DomainError);
}

}  // namespace
