#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "infomeasures.hpp"
#include "moments.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace hosc {

inline constexpr double saturation_tol = 1e-9;

struct RelationReport {
  std::string relation_id;
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // lhs - bound
  bool satisfied = false;
  bool saturated = false;
};

struct RelationParams {
  double q = 2.0;                      // Renyi order for renyi_conjugate; its partner is q/(2q-1)
  double tol = default_oracle_tol;     // oracle tolerance for entropic terms
};

inline const std::array<const char*, 8>& relation_ids() {
  static const std::array<const char*, 8> ids = {"heisenberg_general", "heisenberg_central", "stam",
                                                 "fisher_product_general", "fisher_product_central", "bbm",
                                                 "rudnicki_central", "renyi_conjugate"};
  return ids;
}

inline RelationReport make_report(std::string id, double lhs, double bound) {
  RelationReport r;
  r.relation_id = std::move(id);
  r.lhs = lhs;
  r.bound = bound;
  r.slack = lhs - bound;
  const double tol = saturation_tol * std::max(1.0, std::fabs(bound));
  r.satisfied = r.slack >= -tol;
  r.saturated = std::fabs(r.slack) <= tol;
  return r;
}

/**
 * @brief Bound C_{l,{mu}} of the central-potential Shannon relation:
 * 2l + D + 2 ln(Gamma(l+D/2)/2) - (2l+D-1) psi(l+D/2) + (D-1)(psi((2l+D)/4) + ln 2) + 2 S[Y].
 */
inline double rudnicki_bound(const HyperState& s, double tol = default_oracle_tol) {
  const double l = s.l(), d = s.dim();
  const double ey = angular_shannon(s, tol).value;
  return 2.0 * l + d + 2.0 * (ln_gamma(l + 0.5 * d) - std::log(2.0)) - (2.0 * l + d - 1.0) * digamma(l + 0.5 * d) +
         (d - 1.0) * (digamma(0.25 * (2.0 * l + d)) + std::log(2.0)) + 2.0 * ey;
}

/// Conjugate Renyi bound D ln(pi q^{1/(2q-2)} p^{1/(2p-2)}) with 1/q + 1/p = 2.
inline double renyi_conjugate_bound(int D, double q) {
  const RenyiOrder o(q);
  const double p = o.conjugate();
  return D * (std::log(detail::pi) + std::log(q) / (2.0 * q - 2.0) + std::log(p) / (2.0 * p - 2.0));
}

namespace detail {

inline RelationReport check_hyper(const std::string& id, const HyperState& s, const RelationParams& params) {
  const double d = s.dim(), l = s.l();
  if (id == "heisenberg_general") return make_report(id, heisenberg_product(s, 2.0), 0.25 * d * d);
  if (id == "heisenberg_central") return make_report(id, heisenberg_product(s, 2.0), (l + 0.5 * d) * (l + 0.5 * d));
  if (id == "stam") {
    // F[rho] <= 4<p^2> and F[gamma] <= 4<r^2>; the side with the smaller relative slack is reported.
    const auto pos = make_report(id, 4.0 * radial_moment(s, 2.0, Space::Momentum), fisher(s, Space::Position).value);
    const auto mom = make_report(id, 4.0 * radial_moment(s, 2.0, Space::Position), fisher(s, Space::Momentum).value);
    const double rp = pos.slack / std::max(1.0, std::fabs(pos.bound));
    const double rm = mom.slack / std::max(1.0, std::fabs(mom.bound));
    return rp <= rm ? pos : mom;
  }
  if (id == "fisher_product_general" || id == "fisher_product_central") {
    const double lhs = fisher(s, Space::Position).value * fisher(s, Space::Momentum).value;
    if (id == "fisher_product_general") return make_report(id, lhs, 4.0 * d * d);
    const double m = s.abs_m();
    const double f = m == 0.0 ? 1.0 : 1.0 - 2.0 * m / (2.0 * l + d - 2.0);
    return make_report(id, lhs, 16.0 * (l + 0.5 * d) * (l + 0.5 * d) * f * f);
  }
  if (id == "bbm" || id == "rudnicki_central") {
    const double lhs = shannon_hyperspherical(s, Space::Position, params.tol).value +
                       shannon_hyperspherical(s, Space::Momentum, params.tol).value;
    if (id == "bbm") return make_report(id, lhs, d * (1.0 + std::log(pi)));
    return make_report(id, lhs, rudnicki_bound(s, params.tol));
  }
  if (id == "renyi_conjugate") {
    const double p = RenyiOrder(params.q).conjugate();
    const double lhs = renyi_hyperspherical(s, params.q, Space::Position, params.tol).value +
                       renyi_hyperspherical(s, p, Space::Momentum, params.tol).value;
    return make_report(id, lhs, renyi_conjugate_bound(s.dim(), params.q));
  }
  throw DomainError("unknown relation id: " + id);
}

inline RelationReport check_cartesian(const std::string& id, const CartesianState& s, const RelationParams& params) {
  const double d = s.dim();
  if (id == "bbm") {
    const double lhs = shannon_cartesian(s, Space::Position).value + shannon_cartesian(s, Space::Momentum).value;
    return make_report(id, lhs, d * (1.0 + std::log(pi)));
  }
  if (id == "renyi_conjugate") {
    const double q = params.q, p = RenyiOrder(q).conjugate();
    auto renyi = [&](double order, Space space) {
      if (order == std::floor(order) && order >= 2.0 && order <= 64.0)
        return renyi_cartesian(s, int(order), space).value;
      return renyi_cartesian_oracle(s, order, space, params.tol).value;
    };
    return make_report(id, renyi(q, Space::Position) + renyi(p, Space::Momentum), renyi_conjugate_bound(s.dim(), q));
  }
  if (std::find_if(relation_ids().begin(), relation_ids().end(), [&](const char* r) { return id == r; }) ==
      relation_ids().end())
    throw DomainError("unknown relation id: " + id);
  throw UnsupportedError("relation " + id + " is defined for hyperspherical states only");
}

}  // namespace detail

/// Left side, bound, slack and saturation of one uncertainty relation for a state.
inline RelationReport check(const std::string& relation_id, const State& state, const RelationParams& params = {}) {
  return std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HyperState>)
          return detail::check_hyper(relation_id, s, params);
        else
          return detail::check_cartesian(relation_id, s, params);
      },
      state);
}

/// Relations applicable to the state kind, in relation_ids() order.
inline std::vector<RelationReport> check_all(const State& state, const RelationParams& params = {}) {
  std::vector<RelationReport> out;
  const bool hyper = std::holds_alternative<HyperState>(state);
  for (const char* id : relation_ids()) {
    const std::string r = id;
    if (!hyper && r != "bbm" && r != "renyi_conjugate") continue;
    out.push_back(check(r, state, params));
  }
  return out;
}

/**
 * @brief States at which each relation is an equality, for hyperspherical states.
 *
 * Heisenberg-type and entropic sums saturate at n_r = l = 0 (the central Heisenberg
 * bound at every nodeless n_r = 0 state); Stam at m = 0; the general Fisher product
 * at n_r = 0 with |m| = l; the central Fisher product at n_r = 0 with m = 0.
 */
inline bool expected_saturation(const std::string& relation_id, const HyperState& s) {
  const bool ground = s.n_r() == 0 && s.l() == 0;
  if (relation_id == "heisenberg_general" || relation_id == "bbm" || relation_id == "renyi_conjugate") return ground;
  if (relation_id == "heisenberg_central") return s.n_r() == 0;
  if (relation_id == "stam") return s.abs_m() == 0;
  if (relation_id == "fisher_product_general") return s.n_r() == 0 && s.abs_m() == s.l();
  if (relation_id == "fisher_product_central") return s.n_r() == 0 && s.abs_m() == 0;
  if (relation_id == "rudnicki_central") return false;
  throw DomainError("unknown relation id: " + relation_id);
}

}  // namespace hosc
