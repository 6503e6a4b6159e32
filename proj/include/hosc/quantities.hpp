#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymptotics.hpp"
#include "errors.hpp"
#include "infomeasures.hpp"
#include "moments.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace hosc {

/// Parameters a quantity may read; unused ones are ignored.
struct QuantityParams {
  double k = 2.0;                          // moment / Heisenberg order
  double q = 2.0;                          // Renyi or norm order
  int n = 1;                               // polynomial degree for state-free quantities
  double alpha = 0.0;                      // Laguerre parameter
  Regime regime = Regime::Rydberg;         // asymptotic engine regime
  ShannonMode shannon_mode = ShannonMode::QLimit;
  double tol = default_oracle_tol;
};

struct EvalResult {
  double value = 0.0;
  std::optional<double> error_estimate;
  std::string order_note;
};

struct QuantityInfo {
  const char* id;
  const char* params;   // comma-separated parameter names it reads
  const char* engines;  // comma-separated engines it supports
  bool needs_state;
  const char* anchor;
};

inline const std::vector<QuantityInfo>& quantity_registry() {
  static const std::vector<QuantityInfo> q = {
      {"moment", "k", "closed,oracle,asymptotic", true,
       "radial expectation value <r^k> or <p^k>: terminating 3F2 at unit argument, finite binomial sum; "
       "Rydberg weak asymptotics; high-dimensional Stirling form"},
      {"heisenberg", "k", "closed,oracle,asymptotic", true,
       "generalized Heisenberg product <r^k><p^k>; Rydberg and high-dimensional limits"},
      {"fisher", "", "closed", true, "Fisher information 4(2n_r+l-|m|+D/2) w^{+-1}, checked against the moment route"},
      {"shannon", "", "closed,oracle,asymptotic", true,
       "Shannon entropy: hyperspherical radial/angular decomposition or Cartesian Hermite logarithmic potential; "
       "Rydberg and high-dimensional limits (modes q_limit, as_published)"},
      {"shannon_angular", "", "closed,oracle", true, "angular Shannon entropy S[Y] = B_1 + sum of Gegenbauer entropies"},
      {"renyi", "q", "closed,oracle,asymptotic", true,
       "Renyi entropy: Laguerre/Gegenbauer L_q norms or Cartesian Hermite-power linearization (Lauricella sums); "
       "Rydberg three-regime and high-dimensional totals"},
      {"renyi_angular", "q", "closed,oracle", true, "angular Renyi entropy from Gegenbauer L_q norms"},
      {"disequilibrium", "", "closed,oracle", true,
       "disequilibrium <rho>: radial Laguerre-product sum times Dougall angular factor (3j route for D=3)"},
      {"hermite_entropy", "n", "closed,oracle", false, "Hermite entropy E(H_n) from the logarithmic potential at the roots"},
      {"laguerre_entropy", "n,alpha", "oracle,asymptotic", false,
       "Laguerre polynomial entropy E(L~_n^alpha); asymptotic -2n+(a+1)ln n-a-2+ln 2pi expansion"},
      {"weighted_norm", "q", "oracle,asymptotic", true,
       "weighted Laguerre L_q norm N_{n_r,l}(D,q); asymptotic three-regime value around q*=D/(D-1)"},
  };
  return q;
}

inline const QuantityInfo& quantity_info(const std::string& id) {
  for (const auto& q : quantity_registry())
    if (id == q.id) return q;
  throw ParseError("unknown quantity id: " + id);
}

inline Engine parse_engine(const std::string& s) {
  if (s == "closed") return Engine::Closed;
  if (s == "oracle") return Engine::Oracle;
  if (s == "asymptotic") return Engine::Asymptotic;
  throw ParseError("unknown engine: " + s + " (expected closed, oracle or asymptotic)");
}

inline Space parse_space(const std::string& s) {
  if (s == "position") return Space::Position;
  if (s == "momentum") return Space::Momentum;
  throw ParseError("unknown space: " + s + " (expected position or momentum)");
}

inline Regime parse_regime(const std::string& s) {
  if (s == "rydberg") return Regime::Rydberg;
  if (s == "high_dim") return Regime::HighDim;
  throw ParseError("unknown regime: " + s + " (expected rydberg or high_dim)");
}

inline ShannonMode parse_shannon_mode(const std::string& s) {
  if (s == "q_limit") return ShannonMode::QLimit;
  if (s == "as_published") return ShannonMode::AsPublished;
  throw ParseError("unknown Shannon mode: " + s + " (expected q_limit or as_published)");
}

namespace detail {

inline EvalResult from_measure(const MeasureValue& m, std::string note = {}) { return {m.value, m.error_estimate, note}; }
inline EvalResult from_integral(const IntegralEstimate& e) { return {e.value, e.abs_error_estimate, {}}; }
inline EvalResult from_asymptotic(const AsymptoticValue& a) {
  return {a.value, std::nullopt, std::string(regime_name(a.regime)) + ": " + a.order_note};
}

[[noreturn]] inline void unsupported(const std::string& quantity, Engine e, const char* what = "this state kind") {
  throw UnsupportedError("quantity " + quantity + " has no " + engine_name(e) + " engine for " + what);
}

inline const HyperState& need_hyper(const std::optional<State>& st, const std::string& quantity) {
  if (!st) throw ParseError("quantity " + quantity + " needs a state");
  if (!std::holds_alternative<HyperState>(*st))
    throw UnsupportedError("quantity " + quantity + " is defined for hyperspherical states only");
  return std::get<HyperState>(*st);
}

inline RydbergLimit limit_of(const HyperState& s) {
  const double n = 2.0 * s.n_r() + s.l();
  return RydbergLimit(n > 0.0 ? s.l() / n : 0.0);
}

/// The high-dimensional Shannon and Renyi leading forms depend on D and w only.
inline HyperState ground_like(int D, double omega) { return HyperState::with_lm(OscillatorSpec(omega, D), 0, 0, 0); }

inline int state_dim(const State& s) {
  return std::visit([](const auto& v) { return v.dim(); }, s);
}
inline double state_omega(const State& s) {
  return std::visit([](const auto& v) { return v.omega(); }, s);
}

}  // namespace detail

/**
 * @brief Evaluates a registered quantity with one engine. State-free quantities
 * (hermite_entropy, laguerre_entropy) ignore the state.
 */
inline EvalResult evaluate(const std::string& quantity, const std::optional<State>& state, Engine engine, Space space,
                           const QuantityParams& p) {
  using detail::need_hyper;
  const auto& info = quantity_info(quantity);
  if (info.needs_state && !state) throw ParseError("quantity " + quantity + " needs --state");

  if (quantity == "moment" || quantity == "heisenberg") {
    const auto& s = need_hyper(state, quantity);
    const bool heis = quantity == "heisenberg";
    if (engine == Engine::Closed)
      return {heis ? heisenberg_product(s, p.k) : radial_moment(s, p.k, space), std::nullopt, {}};
    if (engine == Engine::Oracle) {
      if (!heis) return detail::from_integral(radial_moment_oracle(s, p.k, space, p.tol));
      const auto a = radial_moment_oracle(s, p.k, Space::Position, p.tol);
      const auto b = radial_moment_oracle(s, p.k, Space::Momentum, p.tol);
      return {a.value * b.value, std::fabs(a.value) * b.abs_error_estimate + std::fabs(b.value) * a.abs_error_estimate, {}};
    }
    if (p.regime == Regime::Rydberg) {
      if (heis) return detail::from_asymptotic(rydberg_heisenberg(p.k, s.n_r()));
      return detail::from_asymptotic(rydberg_moment(p.k, s.n_r(), detail::limit_of(s), s.omega(), space));
    }
    const double w = space == Space::Position ? s.omega() : 1.0 / s.omega();
    const auto h = highdim_moment(p.k, s.dim(), w, s.n_r(), s.l());
    return detail::from_asymptotic(heis ? h.heisenberg : h.refined);
  }

  if (quantity == "fisher") {
    const auto& s = need_hyper(state, quantity);
    if (engine != Engine::Closed) detail::unsupported(quantity, engine, "any state");
    return detail::from_measure(fisher(s, space));
  }

  if (quantity == "shannon" || quantity == "renyi") {
    const bool ren = quantity == "renyi";
    if (engine == Engine::Asymptotic) {
      if (p.regime == Regime::HighDim) {
        const auto g = std::holds_alternative<HyperState>(*state)
                           ? std::get<HyperState>(*state)
                           : detail::ground_like(detail::state_dim(*state), detail::state_omega(*state));
        if (!ren) return detail::from_asymptotic(highdim_shannon(g, space, p.shannon_mode));
        if (!std::holds_alternative<HyperState>(*state))
          return detail::from_asymptotic(highdim_renyi(g, p.q, space).leading);
        return detail::from_asymptotic(highdim_renyi(g, p.q, space).full);
      }
      const auto& s = need_hyper(state, quantity);
      return detail::from_asymptotic(ren ? rydberg_renyi(s, p.q, space) : rydberg_shannon(s, space));
    }
    if (std::holds_alternative<CartesianState>(*state)) {
      const auto& c = std::get<CartesianState>(*state);
      if (!ren)
        return detail::from_measure(engine == Engine::Closed ? shannon_cartesian(c, space)
                                                             : shannon_cartesian_oracle(c, space, p.tol));
      if (engine == Engine::Closed) {
        if (p.q != std::floor(p.q) || p.q < 2.0)
          throw UnsupportedError("renyi: the Cartesian closed form needs an integer q >= 2");
        return detail::from_measure(renyi_cartesian(c, int(p.q), space));
      }
      return detail::from_measure(renyi_cartesian_oracle(c, p.q, space, p.tol));
    }
    const auto& s = std::get<HyperState>(*state);
    if (engine == Engine::Closed)
      return detail::from_measure(ren ? renyi_hyperspherical(s, p.q, space, p.tol) : shannon_hyperspherical(s, space, p.tol),
                                  "polynomial entropies and L_q norms by quadrature");
    const auto parts = ren ? renyi_hyperspherical_oracle(s, p.q, space, p.tol) : shannon_hyperspherical_oracle(s, space, p.tol);
    return {parts.total, parts.error, {}};
  }

  if (quantity == "shannon_angular" || quantity == "renyi_angular") {
    const auto& s = need_hyper(state, quantity);
    const bool ren = quantity == "renyi_angular";
    if (engine == Engine::Closed)
      return detail::from_integral(ren ? angular_renyi(s, p.q, p.tol) : angular_shannon(s, p.tol));
    if (engine == Engine::Oracle) {
      const auto parts = ren ? renyi_hyperspherical_oracle(s, p.q, space, p.tol) : shannon_hyperspherical_oracle(s, space, p.tol);
      return {parts.angular, parts.error, {}};
    }
    detail::unsupported(quantity, engine, "any state");
  }

  if (quantity == "disequilibrium") {
    if (std::holds_alternative<CartesianState>(*state)) {
      const auto& c = std::get<CartesianState>(*state);
      if (engine == Engine::Closed) return {std::exp(-renyi_cartesian(c, 2, space).value), std::nullopt, "exp(-R_2)"};
      if (engine == Engine::Oracle) return {std::exp(-renyi_cartesian_oracle(c, 2.0, space, p.tol).value), std::nullopt, "exp(-R_2)"};
      detail::unsupported(quantity, engine);
    }
    const auto& s = std::get<HyperState>(*state);
    if (engine == Engine::Closed) return detail::from_measure(disequilibrium(s, space));
    if (engine == Engine::Oracle) return detail::from_measure(disequilibrium_oracle(s, space, p.tol));
    detail::unsupported(quantity, engine);
  }

  if (quantity == "hermite_entropy") {
    if (engine == Engine::Closed) return {hermite_entropy(p.n), std::nullopt, {}};
    if (engine == Engine::Oracle) return detail::from_integral(hermite_entropy_oracle(p.n, p.tol));
    detail::unsupported(quantity, engine, "Hermite polynomials");
  }

  if (quantity == "laguerre_entropy") {
    if (engine == Engine::Oracle) return detail::from_integral(polynomial_entropy_estimate(PolySpec::laguerre(p.n, p.alpha), 0.0, p.tol));
    if (engine == Engine::Asymptotic)
      return {-laguerre_entropy_asymptotics(p.n, p.alpha, 0.0), std::nullopt, "n -> inf: o(1) remainder"};
    detail::unsupported(quantity, engine, "Laguerre polynomials (no closed form is known)");
  }

  if (quantity == "weighted_norm") {
    const auto& s = need_hyper(state, quantity);
    if (engine == Engine::Oracle) {
      const auto e = log_weighted_Lq_norm(s.n_r(), s.l(), s.dim(), p.q, p.tol);
      const double v = std::exp(e.value);
      return {v, v * e.abs_error_estimate, {}};
    }
    if (engine == Engine::Asymptotic) {
      const auto a = n_asymp(s.n_r(), s.l(), s.dim(), p.q);
      return {a.value, std::nullopt, "rydberg: regime " + a.regime};
    }
    detail::unsupported(quantity, engine, "any state");
  }

  throw ParseError("unknown quantity id: " + quantity);
}

}  // namespace hosc
