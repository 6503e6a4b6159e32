#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "detail/sum.hpp"
#include "errors.hpp"
#include "specfun.hpp"

namespace hosc {

/// Oscillator strength omega and dimension D of V(r) = omega^2 r^2 / 2.
struct OscillatorSpec {
  double omega = 1.0;
  int dim = 3;

  OscillatorSpec() = default;
  OscillatorSpec(double w, int d) : omega(w), dim(d) {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("OscillatorSpec: omega must be positive and finite");
    if (dim < 1) throw DomainError("OscillatorSpec: dimension must be at least 1");
  }
};

enum class Space { Position, Momentum };

inline const char* space_name(Space s) { return s == Space::Position ? "position" : "momentum"; }

/// Which computational route produced a number.
enum class Engine { Closed, Oracle, Asymptotic };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::Closed: return "closed";
    case Engine::Oracle: return "oracle";
    case Engine::Asymptotic: return "asymptotic";
  }
  return "?";
}

/**
 * Stationary state in hyperspherical quantum numbers: n_r and the chain
 * mu_1 >= mu_2 >= ... >= |mu_{D-1}|, with l = mu_1 and m = mu_{D-1}.
 */
class HyperState {
 public:
  HyperState(OscillatorSpec spec, int n_r, std::vector<int> mu) : spec_(spec), n_r_(n_r), mu_(std::move(mu)) {
    const int D = spec_.dim;
    if (D < 2) throw DomainError("HyperState: hyperspherical states need D >= 2");
    if (n_r_ < 0) throw DomainError("HyperState: n_r must be non-negative");
    if (static_cast<int>(mu_.size()) != D - 1)
      throw DomainError("HyperState: mu must have D-1 entries, got " + std::to_string(mu_.size()));
    if (D == 2 && mu_[0] < 0) throw DomainError("HyperState: for D = 2 the single label l = mu_1 must be >= 0");
    for (int j = 0; j + 1 < D - 1; ++j) {
      const int next = (j + 2 == D - 1) ? std::abs(mu_[j + 1]) : mu_[j + 1];
      if (mu_[j] < next || next < 0)
        throw DomainError("HyperState: need mu_1 >= mu_2 >= ... >= |mu_{D-1}| >= 0");
    }
  }

  /// Convenience: mu = (l, |m|, ..., |m|, m).
  static HyperState with_lm(OscillatorSpec spec, int n_r, int l, int m) {
    if (spec.dim == 2) {
      if (m != l) throw DomainError("HyperState: for D = 2 the state has the single label l = m");
      return HyperState(spec, n_r, {l});
    }
    std::vector<int> mu(spec.dim - 1, std::abs(m));
    mu.front() = l;
    mu.back() = m;
    return HyperState(spec, n_r, mu);
  }

  const OscillatorSpec& spec() const { return spec_; }
  double omega() const { return spec_.omega; }
  int dim() const { return spec_.dim; }
  int n_r() const { return n_r_; }
  const std::vector<int>& mu() const { return mu_; }

  int l() const { return mu_.front(); }
  int m() const { return mu_.back(); }
  int abs_m() const { return std::abs(mu_.back()); }
  int n() const { return 2 * n_r_ + l(); }
  double eta() const { return n() + 0.5 * (dim() - 3); }
  double L() const { return l() + 0.5 * (dim() - 3); }
  double alpha() const { return l() + 0.5 * dim() - 1.0; }

  /// alpha_j = (D - j - 1)/2, j = 1..D-2.
  double alpha_j(int j) const { return 0.5 * (dim() - j - 1); }
  /// mu_j with the last label entering as |m|, j = 1..D-1.
  int mu_abs(int j) const { return j == dim() - 1 ? std::abs(mu_[j - 1]) : mu_[j - 1]; }

  HyperState with_omega(double w) const { return HyperState(OscillatorSpec(w, dim()), n_r_, mu_); }

 private:
  OscillatorSpec spec_;
  int n_r_;
  std::vector<int> mu_;
};

/// Stationary state in Cartesian quantum numbers n_1..n_D.
class CartesianState {
 public:
  CartesianState(OscillatorSpec spec, std::vector<int> n) : spec_(spec), n_(std::move(n)) {
    if (static_cast<int>(n_.size()) != spec_.dim)
      throw DomainError("CartesianState: need one quantum number per dimension");
    for (int v : n_)
      if (v < 0) throw DomainError("CartesianState: quantum numbers must be non-negative");
  }
  CartesianState(double omega, std::vector<int> n) : CartesianState(OscillatorSpec(omega, static_cast<int>(n.size())), n) {}

  const OscillatorSpec& spec() const { return spec_; }
  double omega() const { return spec_.omega; }
  int dim() const { return spec_.dim; }
  const std::vector<int>& n() const { return n_; }
  int N() const { return std::accumulate(n_.begin(), n_.end(), 0); }
  int N_O() const {
    int c = 0;
    for (int v : n_) c += v % 2;
    return c;
  }
  CartesianState with_omega(double w) const { return CartesianState(OscillatorSpec(w, dim()), n_); }

 private:
  OscillatorSpec spec_;
  std::vector<int> n_;
};

using State = std::variant<HyperState, CartesianState>;

inline double energy(const HyperState& s) { return (s.n() + 0.5 * s.dim()) * s.omega(); }
inline double energy(const CartesianState& s) { return (s.N() + 0.5 * s.dim()) * s.omega(); }

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

/**
 * ln of the radial factor of rho (or gamma) at r, without the r^{D-1}
 * Jacobian: rho(r) = 2 omega^{D/2} x^l e^{-x} L~^2(x), x = omega r^2, where L~
 * is the orthonormal Laguerre polynomial of degree n_r and parameter l+D/2-1.
 * Momentum: gamma(p) = omega^{-D} rho(p/omega).
 */
inline double log_radial_density(const HyperState& s, Space space, double r) {
  if (!(r >= 0.0)) throw DomainError("radial_density: r must be non-negative");
  const double w = s.omega();
  const int D = s.dim();
  double shift = 0.0;
  if (space == Space::Momentum) {
    shift = -D * std::log(w);
    r /= w;
  }
  const double x = w * r * r;
  const auto lv = eval_poly_log(PolySpec::laguerre(s.n_r(), s.alpha(), Normalization::Orthonormal), x);
  if (lv.sign == 0) return -std::numeric_limits<double>::infinity();
  double xl;
  if (s.l() == 0) xl = 0.0;
  else if (x == 0.0) return -std::numeric_limits<double>::infinity();
  else xl = s.l() * std::log(x);
  return shift + std::log(2.0) + 0.5 * D * std::log(w) + xl - x + 2.0 * lv.log_abs;
}

inline double radial_density(const HyperState& s, Space space, double r) {
  return std::exp(log_radial_density(s, space, r));
}

/// Exponent of (1-x^2) in the measure of the j-th angular factor: alpha_j - 1/2.
inline double angular_weight_exponent(const HyperState& s, int j) {
  if (j < 1 || j > s.dim() - 2) throw DomainError("angular_density_factor: j must lie in 1..D-2");
  return s.alpha_j(j) - 0.5;
}

/// Gegenbauer polynomial of the j-th angular factor.
inline PolySpec angular_polynomial(const HyperState& s, int j) {
  if (j < 1 || j > s.dim() - 2) throw DomainError("angular_density_factor: j must lie in 1..D-2");
  return PolySpec::gegenbauer(s.mu_abs(j) - s.mu_abs(j + 1), s.alpha_j(j) + s.mu_abs(j + 1), Normalization::Orthonormal);
}

/**
 * j-th factor [C~(x)]^2 (1-x^2)^{mu_{j+1}} of |Y|^2, to be integrated against
 * (1-x^2)^{alpha_j - 1/2} dx. The product over j, times 1/(2 pi) for the
 * azimuth, integrates to 1.
 */
inline double angular_density_factor(const HyperState& s, int j, double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("angular_density_factor: x must lie in [-1, 1]");
  const PolySpec p = angular_polynomial(s, j);
  const auto lv = eval_poly_log(p, x);
  if (lv.sign == 0) return 0.0;
  const int mu_next = s.mu_abs(j + 1);
  const double lw = mu_next == 0 ? 0.0 : mu_next * std::log1p(-x * x);
  return std::exp(2.0 * lv.log_abs + lw);
}

/// ln of the one-dimensional Hermite density with Gaussian scale a (a = omega, or 1/omega in momentum space).
inline double log_hermite_density_1d(int n, double a, double x) {
  const double t = std::sqrt(a) * x;
  const auto lv = eval_poly_log(PolySpec::hermite(n, Normalization::Orthonormal), t);
  if (lv.sign == 0) return -std::numeric_limits<double>::infinity();
  return 0.5 * std::log(a) + 2.0 * lv.log_abs - t * t;
}

/// Product of D Hermite densities; alpha' = omega in position space and 1/omega in momentum space.
inline double cartesian_density(const CartesianState& s, Space space, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != s.dim()) throw DomainError("cartesian_density: coordinate vector length must equal D");
  const double a = space == Space::Position ? s.omega() : 1.0 / s.omega();
  double acc = 0.0;
  for (int i = 0; i < s.dim(); ++i) acc += log_hermite_density_1d(s.n()[i], a, x[i]);
  return std::exp(acc);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const HyperState& s) {
  return {{"kind", "hyper"}, {"D", s.dim()}, {"omega", s.omega()}, {"nr", s.n_r()}, {"mu", s.mu()}};
}

inline nlohmann::json to_json(const CartesianState& s) {
  return {{"kind", "cartesian"}, {"omega", s.omega()}, {"n", s.n()}};
}

inline nlohmann::json to_json(const State& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

inline std::string serialize_state(const State& s) { return to_json(s).dump(); }

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("state: missing key \"") + key + "\"");
  return j.at(key);
}

inline int json_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string("state: \"") + what + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> json_int_list(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string("state: \"") + what + "\" must be a list of integers");
  std::vector<int> out;
  for (const auto& e : v) out.push_back(json_int(e, what));
  return out;
}

inline double json_real(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string("state: \"") + what + "\" must be a number");
  return v.get<double>();
}

}  // namespace detail

/// Parse a state object; malformed JSON raises ParseError, invalid quantum numbers DomainError.
inline State state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state: expected a JSON object");
  const auto& kind = detail::require_key(j, "kind");
  if (!kind.is_string()) throw ParseError("state: \"kind\" must be a string");
  const double omega = detail::json_real(detail::require_key(j, "omega"), "omega");
  if (kind == "hyper") {
    const int D = detail::json_int(detail::require_key(j, "D"), "D");
    const int nr = detail::json_int(detail::require_key(j, "nr"), "nr");
    auto mu = detail::json_int_list(detail::require_key(j, "mu"), "mu");
    return HyperState(OscillatorSpec(omega, D), nr, std::move(mu));
  }
  if (kind == "cartesian") {
    auto n = detail::json_int_list(detail::require_key(j, "n"), "n");
    if (n.empty()) throw DomainError("state: \"n\" must not be empty");
    return CartesianState(omega, std::move(n));
  }
  throw ParseError("state: unknown kind \"" + kind.get<std::string>() + "\"");
}

inline State parse_state(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state: invalid JSON: ") + e.what());
  }
  return state_from_json(j);
}

}  // namespace hosc
