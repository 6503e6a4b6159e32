#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hosc/quantities.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;

State hyper(double w, int D, int nr, int l, int m = 0) { return HyperState::with_lm(OscillatorSpec(w, D), nr, l, D == 2 ? l : m); }

QuantityParams params() { return {}; }

TEST(Quantities, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& q : quantity_registry()) EXPECT_TRUE(ids.insert(q.id).second) << q.id;
  EXPECT_EQ(ids.size(), 11u);
  EXPECT_THROW(quantity_info("entropy"), ParseError);
}

TEST(Quantities, EveryAdvertisedEngineEvaluates) {
  const State s = hyper(1.0, 3, 1, 1);
  for (const auto& q : quantity_registry()) {
    std::string engines = q.engines;
    size_t start = 0;
    while (start <= engines.size()) {
      const size_t end = std::min(engines.find(',', start), engines.size());
      const Engine e = parse_engine(engines.substr(start, end - start));
      QuantityParams p;
      p.n = 4;
      p.alpha = 0.5;
      std::optional<State> st = q.needs_state ? std::optional<State>(s) : std::nullopt;
      if (e == Engine::Asymptotic && std::string(q.id) != "laguerre_entropy")
        st = hyper(1.0, 3, 200, 0);
      const auto r = evaluate(q.id, st, e, Space::Position, p);
      EXPECT_TRUE(std::isfinite(r.value)) << q.id << " engine " << engines.substr(start, end - start);
      start = end + 1;
    }
  }
}

TEST(Quantities, FisherGround) {
  EXPECT_DOUBLE_EQ(evaluate("fisher", hyper(1.0, 3, 0, 0), Engine::Closed, Space::Position, params()).value, 6.0);
}

TEST(Quantities, ZerothMoment) {
  QuantityParams p;
  p.k = 0.0;
  for (Engine e : {Engine::Closed, Engine::Oracle})
    EXPECT_NEAR(evaluate("moment", hyper(0.5, 4, 3, 2, 1), e, Space::Momentum, p).value, 1.0, 1e-12);
}

TEST(Quantities, CartesianShannonEngines) {
  const State c = CartesianState(1.0, {1});
  const double closed = evaluate("shannon", c, Engine::Closed, Space::Position, params()).value;
  const auto oracle = evaluate("shannon", c, Engine::Oracle, Space::Position, params());
  EXPECT_NEAR(oracle.value, closed, 1e-10);
  ASSERT_TRUE(oracle.error_estimate.has_value());
  EXPECT_LT(*oracle.error_estimate, 1e-8);
}

TEST(Quantities, CartesianDisequilibriumIsExpOfSecondRenyi) {
  const State c = CartesianState(1.0, {0});
  EXPECT_NEAR(evaluate("disequilibrium", c, Engine::Closed, Space::Position, params()).value,
              1.0 / std::sqrt(2.0 * kPi), 1e-14);
}

TEST(Quantities, AsymptoticCarriesOrderNote) {
  QuantityParams p;
  p.k = 1.0;
  const auto r = evaluate("moment", hyper(1.0, 3, 1000, 0), Engine::Asymptotic, Space::Position, p);
  EXPECT_NEAR(r.value, 2.0 / kPi * std::sqrt(4000.0), 1e-10);
  EXPECT_FALSE(r.order_note.empty());
}

TEST(Quantities, HighDimShannonModes) {
  QuantityParams p;
  p.regime = Regime::HighDim;
  const State s = hyper(1.0, 400, 0, 0);
  const double ql = evaluate("shannon", s, Engine::Asymptotic, Space::Position, p).value;
  p.shannon_mode = ShannonMode::AsPublished;
  const double ap = evaluate("shannon", s, Engine::Asymptotic, Space::Position, p).value;
  EXPECT_NEAR(ql, 200.0 * (1.0 + std::log(kPi)), 1e-10);
  EXPECT_NEAR(ap, 200.0 * std::log(400.0), 1e-10);
}

TEST(Quantities, StateFreeQuantities) {
  QuantityParams p;
  p.n = 1;
  EXPECT_NEAR(evaluate("hermite_entropy", std::nullopt, Engine::Closed, Space::Position, p).value,
              std::sqrt(kPi) * (4.0 - 2.0 * 0.57721566490153286061), 1e-9);
}

TEST(Quantities, Errors) {
  EXPECT_THROW(evaluate("fisher", std::nullopt, Engine::Closed, Space::Position, params()), ParseError);
  EXPECT_THROW(evaluate("fisher", hyper(1.0, 3, 0, 0), Engine::Asymptotic, Space::Position, params()), UnsupportedError);
  EXPECT_THROW(evaluate("shannon_angular", State(CartesianState(1.0, {1})), Engine::Closed, Space::Position, params()),
               UnsupportedError);
  EXPECT_THROW(parse_engine("exact"), ParseError);
  EXPECT_THROW(parse_space("phase"), ParseError);
  EXPECT_THROW(parse_regime("classical"), ParseError);
  EXPECT_THROW(parse_shannon_mode("ln_D"), ParseError);
}

}  // namespace
