#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "detail/sum.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace hosc {

/// Renyi order q > 0, q != 1, with its conjugate 1/q + 1/q* = 2 (q > 1/2).
struct RenyiOrder {
  double q;

  explicit RenyiOrder(double q_) : q(q_) {
    if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("RenyiOrder: q must be positive and finite");
    if (q == 1.0) throw DomainError("RenyiOrder: q = 1 is the Shannon limit, not a Renyi order");
  }
  double conjugate() const {
    if (!(q > 0.5)) throw DomainError("RenyiOrder: the conjugate order needs q > 1/2");
    return q / (2.0 * q - 1.0);
  }
  double beta(int D) const { return (q - 1.0) * (1.0 - 0.5 * D); }
};

struct MeasureValue {
  double value = 0.0;
  Space space = Space::Position;
  Engine engine = Engine::Closed;
  std::optional<double> error_estimate;
};

namespace detail {

constexpr double pi = boost::math::constants::pi<double>();
constexpr double euler_gamma = boost::math::constants::euler<double>();

inline double omega_sign(Space s) { return s == Space::Position ? -1.0 : 1.0; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Fisher information
// ---------------------------------------------------------------------------

/// 4<p^2> - 2|m|(2l+D-2)<r^{-2}> (position) or the conjugate combination (momentum).
inline double fisher_moment_route(const HyperState& s, Space space) {
  const Space other = space == Space::Position ? Space::Momentum : Space::Position;
  double v = 4.0 * radial_moment(s, 2.0, other);
  if (s.abs_m() != 0) v -= 2.0 * s.abs_m() * (2.0 * s.l() + s.dim() - 2.0) * radial_moment(s, -2.0, space);
  return v;
}

/// F = 4(2n_r + l - |m| + D/2) w^{+-1}, checked against the moment combination.
inline MeasureValue fisher(const HyperState& s, Space space = Space::Position) {
  const double w = space == Space::Position ? s.omega() : 1.0 / s.omega();
  const double v = 4.0 * (2.0 * s.n_r() + s.l() - s.abs_m() + 0.5 * s.dim()) * w;
  const double alt = fisher_moment_route(s, space);
  if (std::fabs(v - alt) > 1e-12 * std::max(1.0, std::fabs(v)) * 8.0)
    throw ConsistencyError("fisher: closed form and moment combination disagree");
  return {v, space, Engine::Closed, std::nullopt};
}

// ---------------------------------------------------------------------------
// Hermite logarithmic potential and entropy
// ---------------------------------------------------------------------------

namespace detail {

// Per-root pieces of the logarithmic potential: sum_roots x^2 2F2(1,1;3/2,2;-x^2)
// and sum_k C(n,k)(-2)^k/k sum_roots 1F1(k;1/2;-x^2), both in 100-digit arithmetic.
struct HermiteRootSums {
  double s22 = 0.0;
  double s11 = 0.0;
};

inline HermiteRootSums hermite_root_sums_uncached(int n) {
  HermiteRootSums out;
  if (n == 0) return out;
  const auto roots = poly_roots(PolySpec::hermite(n));
  f100 s22 = 0, s11 = 0;
  for (double x : roots) {
    const double z = x * x;
    if (z > 0.0) s22 += f100(z) * pfq_sum<f100>({1.0, 1.0}, {1.5, 2.0}, -z, -1).value;
    const f100 ez = z > 0.0 ? f100(exp(f100(-z))) : f100(1);
    f100 c = 1;  // C(n,k) (-2)^k
    for (int k = 1; k <= n; ++k) {
      c = c * (n - k + 1) / k * (-2);
      const f100 f11 = z > 0.0 ? ez * pfq_sum<f100>({0.5 - k}, {0.5}, z, -1).value : f100(1);
      s11 += c / k * f11;
    }
  }
  out.s22 = static_cast<double>(s22);
  out.s11 = static_cast<double>(s11);
  return out;
}

// The 100-digit sums depend on n only; each degree is computed once per process.
inline HermiteRootSums hermite_root_sums(int n) {
  if (n > 70) throw UnsupportedError("hermite_entropy: degree above 70 is outside the series engine range");
  static std::mutex mutex;
  static std::map<int, HermiteRootSums> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const auto v = hermite_root_sums_uncached(n);
  std::lock_guard lock(mutex);
  cache.emplace(n, v);
  return v;
}

}  // namespace detail

/**
 * @brief E(H_n) = int_R H_n^2 ln H_n^2 e^{-x^2} dx from the logarithmic
 * potential at the Hermite roots: c ln 2^{2n} - 2 sum_k V_n(x_k), c = 2^n n! sqrt(pi).
 */
inline double hermite_entropy(int n) {
  if (n < 0) throw DomainError("hermite_entropy: n must be non-negative");
  if (n == 0) return 0.0;
  const auto r = detail::hermite_root_sums(n);
  const double c = std::exp(n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(detail::pi));
  // sum_k V_n(x_k) = c [n (ln 2 + gamma/2) - s22 + s11/2]
  const double vsum = c * (n * (std::log(2.0) + 0.5 * detail::euler_gamma) - r.s22 + 0.5 * r.s11);
  return c * 2.0 * n * std::log(2.0) - 2.0 * vsum;
}

/// Full-line quadrature of H_n^2 ln H_n^2 e^{-x^2}.
inline IntegralEstimate hermite_entropy_oracle(int n, double tol = default_oracle_tol) {
  if (n < 0) throw DomainError("hermite_entropy_oracle: n must be non-negative");
  const PolySpec h = PolySpec::hermite(n);
  std::vector<double> pts = n > 0 ? poly_roots(h) : std::vector<double>{};
  const double edge = std::sqrt(2.0 * n + 1.0);
  for (int i = 0; i <= 4; ++i) {
    pts.push_back(edge + 1.5 * i);
    pts.push_back(-edge - 1.5 * i);
  }
  auto f = [&](double x) {
    const auto lv = eval_poly_log(h, x);
    if (lv.sign == 0) return 0.0;
    const double ly = 2.0 * lv.log_abs;
    return std::exp(ly - x * x) * ly;
  };
  const double inf = std::numeric_limits<double>::infinity();
  return integrate_adaptive(f, -inf, inf, pts, tol);
}

// ---------------------------------------------------------------------------
// Cartesian Shannon and Renyi
// ---------------------------------------------------------------------------

/// Per-axis term of A: n ln(2 e^{1+gamma}) + ln n! - 2 s22 + s11.
inline double shannon_axis_term(int n) {
  if (n == 0) return 0.0;
  const auto r = detail::hermite_root_sums(n);
  return n * (std::log(2.0) + 1.0 + detail::euler_gamma) + std::lgamma(n + 1.0) - 2.0 * r.s22 + r.s11;
}

/// S = A + (D/2) ln(e pi / w) (position) or A + (D/2) ln(e pi w) (momentum).
inline MeasureValue shannon_cartesian(const CartesianState& s, Space space = Space::Position) {
  double a = 0.0;
  for (int n : s.n()) a += shannon_axis_term(n);
  const double v = a + 0.5 * s.dim() * (1.0 + std::log(detail::pi) + detail::omega_sign(space) * std::log(s.omega()));
  return {v, space, Engine::Closed, std::nullopt};
}

namespace detail {

inline std::vector<double> hermite_density_breakpoints(int n, double a) {
  std::vector<double> pts = n > 0 ? poly_roots(PolySpec::hermite(n)) : std::vector<double>{};
  const double edge = std::sqrt(2.0 * n + 1.0);
  for (int i = 0; i <= 4; ++i) {
    pts.push_back(edge + 1.5 * i);
    pts.push_back(-edge - 1.5 * i);
  }
  for (double& p : pts) p /= std::sqrt(a);
  return pts;
}

inline double cartesian_scale(const CartesianState& s, Space space) {
  return space == Space::Position ? s.omega() : 1.0 / s.omega();
}

}  // namespace detail

/// Sum over axes of -int rho_1 ln rho_1 dx by quadrature.
inline MeasureValue shannon_cartesian_oracle(const CartesianState& s, Space space = Space::Position,
                                             double tol = default_oracle_tol) {
  const double a = detail::cartesian_scale(s, space);
  const double inf = std::numeric_limits<double>::infinity();
  double total = 0.0, err = 0.0;
  for (int n : s.n()) {
    auto f = [&](double x) {
      const double lr = log_hermite_density_1d(n, a, x);
      if (!std::isfinite(lr)) return 0.0;
      return -std::exp(lr) * lr;
    };
    const auto e = integrate_adaptive(f, -inf, inf, detail::hermite_density_breakpoints(n, a), tol);
    total += e.value;
    err += e.abs_error_estimate;
  }
  return {total, space, Engine::Oracle, err};
}

/**
 * @brief Cartesian Renyi entropy of integer order q >= 2 from the Lauricella sums:
 * -+(D/2) ln w + K_q D + Kbar_q N_O + q/(q-1) sum (-1)^{n_i} ln(((n_i+1)/2)_{1/2})
 * + 1/(1-q) sum ln F_q(n_i).
 */
inline MeasureValue renyi_cartesian(const CartesianState& s, int q, Space space = Space::Position) {
  if (q < 2) throw DomainError("renyi_cartesian: closed form needs an integer q >= 2");
  const double pi = detail::pi;
  const double K = (std::log(std::pow(pi, q - 0.5) * std::sqrt(double(q)))) / (q - 1.0);
  const double Kb = (q * std::log(4.0) + std::lgamma(0.5 + q) - 0.5 * std::log(pi) - q * std::log(double(q))) / (1.0 - q);
  double v = detail::omega_sign(space) * 0.5 * s.dim() * std::log(s.omega()) + K * s.dim() + Kb * s.N_O();
  for (int n : s.n()) {
    const double poch_half = std::lgamma(0.5 * n + 1.0) - std::lgamma(0.5 * (n + 1.0));
    const double F = lauricella_FA_finite(q, n % 2, n);
    if (!(F > 0.0)) throw ConsistencyError("renyi_cartesian: non-positive Lauricella sum");
    v += q / (q - 1.0) * ((n % 2) ? -1.0 : 1.0) * poch_half + std::log(F) / (1.0 - q);
  }
  return {v, space, Engine::Closed, std::nullopt};
}

/// Sum over axes of ln(int rho_1^q dx)/(1-q) by quadrature; any real q > 0, q != 1.
inline MeasureValue renyi_cartesian_oracle(const CartesianState& s, double q, Space space = Space::Position,
                                           double tol = default_oracle_tol) {
  RenyiOrder order(q);
  const double a = detail::cartesian_scale(s, space);
  const double inf = std::numeric_limits<double>::infinity();
  double total = 0.0, err = 0.0;
  for (int n : s.n()) {
    auto f = [&](double x) { return std::exp(q * log_hermite_density_1d(n, a, x)); };
    const auto e = integrate_adaptive(f, -inf, inf, detail::hermite_density_breakpoints(n, a), tol);
    total += std::log(e.value) / (1.0 - q);
    err += e.abs_error_estimate / (e.value * std::fabs(1.0 - q));
  }
  return {total, space, Engine::Oracle, err};
}

// ---------------------------------------------------------------------------
// Hyperspherical Shannon
// ---------------------------------------------------------------------------

struct EntropyParts {
  double radial = 0.0;
  double angular = 0.0;
  double total = 0.0;
  double error = 0.0;
};

/// B_1 = ln 2pi - 2 sum_j mu_{j+1}[psi(2a_j+mu_j+mu_{j+1}) - psi(a_j+mu_j) - ln 2 - 1/(2(a_j+mu_j))].
inline double angular_shannon_constant(const HyperState& s) {
  double b = std::log(2.0 * detail::pi);
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const double a = s.alpha_j(j);
    const int mj = s.mu_abs(j), mn = s.mu_abs(j + 1);
    if (mn == 0) continue;
    b -= 2.0 * mn * (digamma(2.0 * a + mj + mn) - digamma(a + mj) - std::log(2.0) - 1.0 / (2.0 * (a + mj)));
  }
  return b;
}

/// S[Y] = B_1 + sum_j E(C~_{mu_j - mu_{j+1}}^{(a_j + mu_{j+1})}), polynomial entropies by quadrature.
inline IntegralEstimate angular_shannon(const HyperState& s, double tol = default_oracle_tol) {
  IntegralEstimate out{angular_shannon_constant(s), 0.0, 0};
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const auto e = polynomial_entropy_estimate(angular_polynomial(s, j), 0.0, tol);
    out.value += e.value;
    out.abs_error_estimate += e.abs_error_estimate;
    out.subdivisions += e.subdivisions;
  }
  return out;
}

/// Radial Shannon: 2n_r + l + D/2 - ln 2 - l psi(n_r+l+D/2) + E(L~) -+ (D/2) ln w.
inline IntegralEstimate radial_shannon(const HyperState& s, Space space = Space::Position, double tol = default_oracle_tol) {
  const auto e = polynomial_entropy_estimate(PolySpec::laguerre(s.n_r(), s.alpha()), 0.0, tol);
  const double d2 = 0.5 * s.dim();
  double v = 2.0 * s.n_r() + s.l() + d2 - std::log(2.0) + e.value;
  if (s.l() != 0) v -= s.l() * digamma(s.n_r() + s.l() + d2);
  v += detail::omega_sign(space) * d2 * std::log(s.omega());
  return {v, e.abs_error_estimate, e.subdivisions};
}

inline EntropyParts shannon_hyperspherical_parts(const HyperState& s, Space space = Space::Position,
                                                 double tol = default_oracle_tol) {
  const auto r = radial_shannon(s, space, tol);
  const auto a = angular_shannon(s, tol);
  return {r.value, a.value, r.value + a.value, r.abs_error_estimate + a.abs_error_estimate};
}

inline MeasureValue shannon_hyperspherical(const HyperState& s, Space space = Space::Position,
                                           double tol = default_oracle_tol) {
  const auto p = shannon_hyperspherical_parts(s, space, tol);
  return {p.total, space, Engine::Oracle, p.error};
}

namespace detail {

inline std::vector<double> radial_breakpoints(const HyperState& s, Space space) {
  const double scale = space == Space::Position ? 1.0 / std::sqrt(s.omega()) : std::sqrt(s.omega());
  std::vector<double> pts;
  if (s.n_r() > 0)
    for (double x : poly_roots(PolySpec::laguerre(s.n_r(), s.alpha()))) pts.push_back(std::sqrt(x) * scale);
  const double peak = std::sqrt(s.n() + 0.5 * s.dim()) * scale;
  const double last = std::max(peak, pts.empty() ? 0.0 : pts.back());
  pts.push_back(peak);
  for (int i = 1; i <= 4; ++i) pts.push_back(last + 2.0 * i * scale);
  return pts;
}

inline std::vector<double> angular_breakpoints(const HyperState& s, int j) {
  const PolySpec p = angular_polynomial(s, j);
  std::vector<double> pts = p.degree > 0 ? poly_roots(p) : std::vector<double>{};
  pts.push_back(0.0);
  return pts;
}

// ln of the j-th angular factor f_j(x) and of its measure.
inline double log_angular_factor(const HyperState& s, const PolySpec& p, int j, double x) {
  const auto lv = eval_poly_log(p, x);
  if (lv.sign == 0) return -std::numeric_limits<double>::infinity();
  const int mn = s.mu_abs(j + 1);
  return 2.0 * lv.log_abs + (mn == 0 ? 0.0 : mn * std::log1p(-x * x));
}

}  // namespace detail

/// Density-level quadrature of both Shannon parts (radial and angular) of a hyperspherical state.
inline EntropyParts shannon_hyperspherical_oracle(const HyperState& s, Space space = Space::Position,
                                                  double tol = default_oracle_tol) {
  const int D = s.dim();
  auto fr = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double lr = log_radial_density(s, space, r);
    if (!std::isfinite(lr)) return 0.0;
    return -std::exp(lr + (D - 1.0) * std::log(r)) * lr;
  };
  const auto er = integrate_adaptive(fr, 0.0, std::numeric_limits<double>::infinity(), detail::radial_breakpoints(s, space), tol);
  EntropyParts out;
  out.radial = er.value;
  out.error = er.abs_error_estimate;
  out.angular = std::log(2.0 * detail::pi);
  for (int j = 1; j <= D - 2; ++j) {
    const PolySpec p = angular_polynomial(s, j);
    const double wexp = angular_weight_exponent(s, j);
    auto fa = [&](double x) {
      if (x <= -1.0 || x >= 1.0) return 0.0;
      const double lf = detail::log_angular_factor(s, p, j, x);
      if (!std::isfinite(lf)) return 0.0;
      return -std::exp(lf + wexp * std::log1p(-x * x)) * lf;
    };
    const auto ea = integrate_adaptive(fa, -1.0, 1.0, detail::angular_breakpoints(s, j), tol);
    out.angular += ea.value;
    out.error += ea.abs_error_estimate;
  }
  out.total = out.radial + out.angular;
  return out;
}

// ---------------------------------------------------------------------------
// Hyperspherical Renyi
// ---------------------------------------------------------------------------

/// ln Lambda_q = (1-q) ln 2pi + sum_j ln int f_j^q (1-x^2)^{a_j-1/2} dx.
inline IntegralEstimate log_angular_entropic_moment(const HyperState& s, double q, double tol = default_oracle_tol) {
  RenyiOrder order(q);
  IntegralEstimate out{(1.0 - q) * std::log(2.0 * detail::pi), 0.0, 0};
  const double qi = std::round(q);
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const PolySpec p = angular_polynomial(s, j);
    const int mn = s.mu_abs(j + 1);
    const double wexp = angular_weight_exponent(s, j);
    if (q == qi && qi <= 64) {
      // Polynomial C~^{2q} against (1-x^2)^{a_j - 1/2 + q mu_{j+1}}: exact Gauss-Jacobi.
      const int iq = static_cast<int>(qi);
      const double ab = wexp + q * mn;
      const auto rule = gauss_rule(RuleFamily::GaussJacobi, iq * p.degree + 1, ab, ab);
      std::vector<double> terms;
      for (int i = 0; i < rule->order; ++i) {
        const auto lv = eval_poly_log(p, rule->nodes[i]);
        if (lv.sign == 0) continue;
        terms.push_back(rule->log_weights[i] + 2.0 * q * lv.log_abs);
      }
      out.value += detail::log_sum_exp(terms);
    } else {
      auto f = [&](double x) {
        if (x <= -1.0 || x >= 1.0) return 0.0;
        const double lf = detail::log_angular_factor(s, p, j, x);
        return std::exp(q * lf + wexp * std::log1p(-x * x));
      };
      const auto e = integrate_adaptive(f, -1.0, 1.0, detail::angular_breakpoints(s, j), tol);
      out.value += std::log(e.value);
      out.abs_error_estimate += e.abs_error_estimate / e.value;
    }
  }
  return out;
}

/// Radial Renyi: -ln(2 w^{D/2}) + ln N/(1-q) in position; momentum flips the sign of the w term.
inline IntegralEstimate radial_renyi(const HyperState& s, double q, Space space = Space::Position,
                                     double tol = default_oracle_tol) {
  RenyiOrder order(q);
  const auto n = log_weighted_Lq_norm(s.n_r(), s.l(), s.dim(), q, tol);
  const double v = -std::log(2.0) + detail::omega_sign(space) * 0.5 * s.dim() * std::log(s.omega()) + n.value / (1.0 - q);
  return {v, n.abs_error_estimate / std::fabs(1.0 - q), n.subdivisions};
}

inline IntegralEstimate angular_renyi(const HyperState& s, double q, double tol = default_oracle_tol) {
  const auto l = log_angular_entropic_moment(s, q, tol);
  return {l.value / (1.0 - q), l.abs_error_estimate / std::fabs(1.0 - q), l.subdivisions};
}

inline EntropyParts renyi_hyperspherical_parts(const HyperState& s, double q, Space space = Space::Position,
                                               double tol = default_oracle_tol) {
  const auto r = radial_renyi(s, q, space, tol);
  const auto a = angular_renyi(s, q, tol);
  return {r.value, a.value, r.value + a.value, r.abs_error_estimate + a.abs_error_estimate};
}

inline MeasureValue renyi_hyperspherical(const HyperState& s, double q, Space space = Space::Position,
                                         double tol = default_oracle_tol) {
  const auto p = renyi_hyperspherical_parts(s, q, space, tol);
  return {p.total, space, Engine::Oracle, p.error};
}

/// Density-level quadrature of R_q for a hyperspherical state.
inline EntropyParts renyi_hyperspherical_oracle(const HyperState& s, double q, Space space = Space::Position,
                                                double tol = default_oracle_tol) {
  RenyiOrder order(q);
  const int D = s.dim();
  auto fr = [&](double r) {
    if (r <= 0.0) return 0.0;
    return std::exp(q * log_radial_density(s, space, r) + (D - 1.0) * std::log(r));
  };
  const auto er = integrate_adaptive(fr, 0.0, std::numeric_limits<double>::infinity(), detail::radial_breakpoints(s, space), tol);
  EntropyParts out;
  out.radial = std::log(er.value) / (1.0 - q);
  out.error = er.abs_error_estimate / (er.value * std::fabs(1.0 - q));
  double la = (1.0 - q) * std::log(2.0 * detail::pi);
  for (int j = 1; j <= D - 2; ++j) {
    const PolySpec p = angular_polynomial(s, j);
    const double wexp = angular_weight_exponent(s, j);
    auto fa = [&](double x) {
      if (x <= -1.0 || x >= 1.0) return 0.0;
      return std::exp(q * detail::log_angular_factor(s, p, j, x) + wexp * std::log1p(-x * x));
    };
    const auto ea = integrate_adaptive(fa, -1.0, 1.0, detail::angular_breakpoints(s, j), tol);
    la += std::log(ea.value);
    out.error += ea.abs_error_estimate / (ea.value * std::fabs(1.0 - q));
  }
  out.angular = la / (1.0 - q);
  out.total = out.radial + out.angular;
  return out;
}

// ---------------------------------------------------------------------------
// Disequilibrium
// ---------------------------------------------------------------------------

/**
 * @brief int rho(r)^2 r^{D-1} dr from the twice-linearized Laguerre product:
 * w^{D/2} 2^{1-D/2-2l-4n_r} Gamma(D/2+2l) sum_{k,k'} sum_{r <= min(2k,2k')} ...
 */
inline double radial_disequilibrium(const HyperState& s, Space space = Space::Position) {
  const int nr = s.n_r(), l = s.l();
  const double d2 = 0.5 * s.dim();
  std::vector<double> lead(nr + 1);
  for (int k = 0; k <= nr; ++k)
    lead[k] = log_binomial(2.0 * nr - 2.0 * k, nr - k).log_abs + std::lgamma(2.0 * k + 1.0) - std::lgamma(k + 1.0) -
              std::lgamma(l + d2 + k);
  detail::Accumulator<> acc;
  for (int k = 0; k <= nr; ++k)
    for (int kp = 0; kp <= nr; ++kp)
      for (int r = 0; r <= std::min(2 * k, 2 * kp); ++r) {
        const double b = binomial(1.0 - d2, 2 * k - r) * binomial(1.0 - d2, 2 * kp - r);
        if (b == 0.0) continue;
        acc.add(b * std::exp(lead[k] + lead[kp] + log_binomial(2.0 * l + d2 - 1.0 + r, r).log_abs));
      }
  const double pref = (1.0 - d2 - 2.0 * l - 4.0 * nr) * std::log(2.0) + std::lgamma(d2 + 2.0 * l);
  const double lw = (space == Space::Position ? d2 : -d2) * std::log(s.omega());
  return std::exp(pref + lw) * acc.value();
}

/// (1/2pi) prod_j sum_k b_k^2 with b_k the Dougall coefficients of [C~]^2.
inline double angular_disequilibrium(const HyperState& s) {
  double v = 1.0 / (2.0 * detail::pi);
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const int mn = s.mu_abs(j + 1);
    const auto lin = gegenbauer_square_linearize(s.mu_abs(j) - mn, s.alpha_j(j) + mn, mn);
    detail::Accumulator<> acc;
    for (const auto& [deg, c] : lin.coefficients) acc.add(c * c);
    v *= acc.value();
  }
  return v;
}

/// D = 3: sum_{l'} (2l+1)^2 (2l'+1)/(4pi) (l l l'; 0 0 0)^2 (l l l'; m m -2m)^2.
inline double angular_disequilibrium_3j(int l, int m) {
  if (l < 0 || std::abs(m) > l) throw DomainError("angular_disequilibrium_3j: need |m| <= l");
  detail::Accumulator<> acc;
  for (int lp = 0; lp <= 2 * l; ++lp) {
    const double a = wigner_3j(l, l, lp, 0, 0, 0), b = wigner_3j(l, l, lp, m, m, -2 * m);
    acc.add((2.0 * l + 1.0) * (2.0 * l + 1.0) * (2.0 * lp + 1.0) / (4.0 * detail::pi) * a * a * b * b);
  }
  return acc.value();
}

/// <rho> = int rho^2: radial closed form times the Dougall angular form (3j route asserted for D = 3).
inline MeasureValue disequilibrium(const HyperState& s, Space space = Space::Position) {
  const double ang = angular_disequilibrium(s);
  if (s.dim() == 3) {
    const double alt = angular_disequilibrium_3j(s.l(), s.m());
    if (std::fabs(alt - ang) > 1e-11 * ang)
      throw ConsistencyError("disequilibrium: Dougall and 3j angular forms disagree");
  }
  return {radial_disequilibrium(s, space) * ang, space, Engine::Closed, std::nullopt};
}

/// Density-level quadrature of int rho^2.
inline MeasureValue disequilibrium_oracle(const HyperState& s, Space space = Space::Position,
                                          double tol = default_oracle_tol) {
  const int D = s.dim();
  auto fr = [&](double r) {
    if (r <= 0.0) return 0.0;
    return std::exp(2.0 * log_radial_density(s, space, r) + (D - 1.0) * std::log(r));
  };
  const auto er = integrate_adaptive(fr, 0.0, std::numeric_limits<double>::infinity(), detail::radial_breakpoints(s, space), tol);
  double v = er.value / (2.0 * detail::pi);
  double rel = er.abs_error_estimate / er.value;
  for (int j = 1; j <= D - 2; ++j) {
    const PolySpec p = angular_polynomial(s, j);
    const double wexp = angular_weight_exponent(s, j);
    auto fa = [&](double x) {
      if (x <= -1.0 || x >= 1.0) return 0.0;
      return std::exp(2.0 * detail::log_angular_factor(s, p, j, x) + wexp * std::log1p(-x * x));
    };
    const auto ea = integrate_adaptive(fa, -1.0, 1.0, detail::angular_breakpoints(s, j), tol);
    v *= ea.value;
    rel += ea.abs_error_estimate / ea.value;
  }
  return {v, space, Engine::Oracle, v * rel};
}

}  // namespace hosc
