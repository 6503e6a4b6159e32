#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include <boost/math/special_functions/bessel.hpp>

#include "errors.hpp"
#include "infomeasures.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace hosc {

enum class Regime { Rydberg, HighDim };

inline const char* regime_name(Regime r) { return r == Regime::Rydberg ? "rydberg" : "high_dim"; }

struct AsymptoticValue {
  double value = 0.0;
  Regime regime = Regime::Rydberg;
  std::string order_note;
};

/**
 * Rydberg limit parameter s = lim l/n with n = 2 n_r + l, and the derived
 * a = 2(1 + sqrt(1-s^2))/(1-s) (a = 4 at s = 0).
 */
struct RydbergLimit {
  double s = 0.0;

  RydbergLimit() = default;
  explicit RydbergLimit(double s_) : s(s_) {
    if (!(s >= 0.0 && s < 1.0)) throw DomainError("RydbergLimit: s must lie in [0, 1)");
  }
  /// From the ratio t = lim l/n_r, which gives s = t/(2+t).
  static RydbergLimit from_ratio(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("RydbergLimit: ratio l/n_r must be non-negative");
    return RydbergLimit(t / (2.0 + t));
  }
  double a() const { return 2.0 * (1.0 + std::sqrt(1.0 - s * s)) / (1.0 - s); }
  /// Argument of 2F1(-k/2, 1/2; 1; z): (2/s^2)(-1 + s^2 + sqrt(1-s^2)) = 2r/(1+r) with r = sqrt(1-s^2).
  double z() const {
    const double r = std::sqrt(1.0 - s * s);
    return 2.0 * r / (1.0 + r);
  }
  /// 1 - z = (1-r)/(1+r) = s^2/(1+r)^2, free of cancellation for small s.
  double one_minus_z() const {
    const double r = std::sqrt(1.0 - s * s);
    return s * s / ((1.0 + r) * (1.0 + r));
  }
};

// ---------------------------------------------------------------------------
// Rydberg moments and Heisenberg products
// ---------------------------------------------------------------------------

namespace detail {

// Gamma((1+k)/2) / (sqrt(pi) Gamma(1+k/2)) = 2F1(-k/2, 1/2; 1; 1).
inline double unit_2f1_half(double k) {
  return std::exp(ln_gamma(0.5 * (1.0 + k)) - 0.5 * std::log(pi) - ln_gamma(1.0 + 0.5 * k));
}

// 2F1(-k/2, 1/2; 1; z) = (1/pi) int_0^pi (1 - z sin^2(t/2))^{k/2} dt for z < 1, with the base
// written as cos^2(t/2) + (1-z) sin^2(t/2) so it stays non-negative as z -> 1.
inline double moment_2f1(double k, double one_minus_z) {
  auto f = [&](double t) {
    const double sn = std::sin(0.5 * t), cs = std::cos(0.5 * t);
    return std::pow(cs * cs + one_minus_z * sn * sn, 0.5 * k);
  };
  return integrate_adaptive(f, 0.0, pi, {0.5 * pi}, 1e-13).value / pi;
}

}  // namespace detail

/**
 * @brief Weak-asymptotic <r^k> (or <p^k>) for n_r -> infinity:
 * (a n_r)^{k/2} 2F1(-k/2, 1/2; 1; z) w^{-k/2}; at s = 0 the Gamma form
 * (4 n_r)^{k/2} Gamma((1+k)/2)/(sqrt(pi) Gamma(1+k/2)) w^{-k/2}, valid for k > -1.
 */
inline AsymptoticValue rydberg_moment(double k, int n_r, RydbergLimit limit, double omega, Space space = Space::Position) {
  if (n_r < 1) throw DomainError("rydberg_moment: n_r must be positive");
  if (!(omega > 0.0)) throw DomainError("rydberg_moment: omega must be positive");
  const double lw = space == Space::Position ? -0.5 * k * std::log(omega) : 0.5 * k * std::log(omega);
  if (k == 0.0) return {1.0, Regime::Rydberg, "exact"};
  double f;
  if (limit.s == 0.0) {
    if (!(k > -1.0)) throw UnsupportedError("rydberg_moment: k <= -1 is outside the validity range at s = 0");
    f = detail::unit_2f1_half(k);
  } else {
    f = detail::moment_2f1(k, limit.one_minus_z());
  }
  const double v = std::exp(0.5 * k * std::log(limit.a() * n_r) + lw) * f;
  return {v, Regime::Rydberg, "leading term; relative corrections o(1) as n_r -> inf"};
}

/// (4 n_r)^k pi^{-1} [Gamma((1+k)/2)/Gamma(1+k/2)]^2, k > -1.
inline AsymptoticValue rydberg_heisenberg(double k, int n_r) {
  if (n_r < 1) throw DomainError("rydberg_heisenberg: n_r must be positive");
  if (!(k > -1.0)) throw UnsupportedError("rydberg_heisenberg: k <= -1 is outside the validity range");
  if (k == 0.0) return {1.0, Regime::Rydberg, "exact"};
  const double g = detail::unit_2f1_half(k);
  return {std::exp(k * std::log(4.0 * n_r)) * g * g, Regime::Rydberg, "leading term; relative corrections o(1) as n_r -> inf"};
}

// ---------------------------------------------------------------------------
// High-dimensional moments
// ---------------------------------------------------------------------------

struct HighDimMoment {
  AsymptoticValue refined;     // sqrt(2pi) e^{-a} a^{a+n_r+(k+1)/2} / Gamma(n_r+l+D/2) w^{-k/2}
  AsymptoticValue leading;     // (D/(2w))^{k/2}
  AsymptoticValue heisenberg;  // (D/2)^k
  double characteristic_length = 0.0;  // (D/(2w))^{1/2}
};

inline HighDimMoment highdim_moment(double k, int D, double omega, int n_r, int l) {
  if (D < 2 || n_r < 0 || l < 0) throw DomainError("highdim_moment: need D >= 2, n_r >= 0, l >= 0");
  if (!(omega > 0.0)) throw DomainError("highdim_moment: omega must be positive");
  const double a = l + 0.5 * D - 1.0;
  if (!(a > 0.0)) throw DomainError("highdim_moment: l + D/2 - 1 must be positive");
  HighDimMoment out;
  const double lr = 0.5 * std::log(2.0 * detail::pi) - a + (a + n_r + 0.5 * (k + 1.0)) * std::log(a) -
                    ln_gamma(n_r + l + 0.5 * D) - 0.5 * k * std::log(omega);
  const std::string note = D < 50 ? "relative corrections O(1/D); D below 50, outside the large-D regime"
                                  : "relative corrections O(1/D)";
  out.refined = {std::exp(lr), Regime::HighDim, note};
  out.leading = {std::pow(0.5 * D / omega, 0.5 * k), Regime::HighDim, note};
  out.heisenberg = {std::pow(0.5 * D, k), Regime::HighDim, note};
  out.characteristic_length = std::sqrt(0.5 * D / omega);
  return out;
}

// ---------------------------------------------------------------------------
// Laguerre entropy asymptotics
// ---------------------------------------------------------------------------

/**
 * @brief Three-term n-asymptotics of E_beta = int x^beta w_a L~_n^2 ln L~_n^2 dx
 * (note the + sign; the polynomial entropy is E(L~) = -E_0).
 */
inline double laguerre_entropy_asymptotics(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("laguerre_entropy_asymptotics: n must be positive");
  if (!(alpha > -1.0)) throw DomainError("laguerre_entropy_asymptotics: alpha must exceed -1");
  if (!(beta > -0.5)) throw DomainError("laguerre_entropy_asymptotics: beta must exceed -1/2");
  const double pi = detail::pi, ln2 = std::log(2.0), nn = n;
  const double c1 = std::exp((2.0 * beta + 2.0) * ln2 + ln_gamma(beta + 1.5) - 0.5 * std::log(pi) - ln_gamma(beta + 2.0));
  const double c0 = std::exp(2.0 * beta * ln2 + ln_gamma(beta + 0.5) - 0.5 * std::log(pi) - ln_gamma(beta + 1.0));
  const double bracket = 2.0 * (alpha + 1.0) * digamma(beta + 1.0) - (2.0 * alpha + 1.0) * digamma(beta + 0.5) -
                         2.0 * std::log(pi) - 4.0 * (alpha + 1.0) * ln2 + detail::euler_gamma + 4.0 +
                         2.0 * (alpha + 2.0 * beta) + 4.0 * alpha * beta;
  return c1 * std::pow(nn, beta + 1.0) - c0 * (alpha + 1.0) * std::pow(nn, beta) * std::log(nn) +
         0.5 * c0 * bracket * std::pow(nn, beta);
}

/// Leading behaviour of the Laguerre polynomial entropy: -2n + (a+1) ln n - a - 2 + ln 2pi.
inline double laguerre_entropy_leading(int n, double alpha) {
  if (n < 1) throw DomainError("laguerre_entropy_leading: n must be positive");
  return -2.0 * n + (alpha + 1.0) * std::log(double(n)) - alpha - 2.0 + std::log(2.0 * detail::pi);
}

// ---------------------------------------------------------------------------
// Rydberg Shannon
// ---------------------------------------------------------------------------

/// S ~ (D/2) ln n_r + ln pi - 1 + S[Y] -+ (D/2) ln w.
inline AsymptoticValue rydberg_shannon(const HyperState& s, Space space = Space::Position) {
  if (s.n_r() < 1) throw DomainError("rydberg_shannon: n_r must be positive");
  const double ey = angular_shannon(s).value;
  const double v = 0.5 * s.dim() * std::log(double(s.n_r())) + std::log(detail::pi) - 1.0 + ey +
                   detail::omega_sign(space) * 0.5 * s.dim() * std::log(s.omega());
  return {v, Regime::Rydberg, "o(1) as n_r -> inf"};
}

/// Position plus momentum: D ln n_r + 2(ln pi - 1 + S[Y]); independent of w.
inline AsymptoticValue rydberg_shannon_sum(const HyperState& s) {
  const auto p = rydberg_shannon(s, Space::Position), m = rydberg_shannon(s, Space::Momentum);
  return {p.value + m.value, Regime::Rydberg, "o(1) as n_r -> inf"};
}

// ---------------------------------------------------------------------------
// Bessel power integral and Rydberg Renyi
// ---------------------------------------------------------------------------

namespace detail {

inline double bessel_power_tail(double alpha, double beta, double q, double t) {
  (void)alpha;
  // |J(2t)|^{2q} ~ (pi t)^{-q} |cos|^{2q}, whose mean is Gamma(q+1/2)/(sqrt(pi) Gamma(q+1)).
  const double mean = std::exp(std::lgamma(q + 0.5) - 0.5 * std::log(pi) - std::lgamma(q + 1.0));
  const double e = 2.0 * beta + 2.0 - q;
  return 2.0 * mean * std::pow(pi, -q) * std::pow(t, e) / (-e);
}

inline double bessel_power_integral_uncached(double alpha, double beta, double q) {
  const auto rule = gauss_rule(RuleFamily::GaussJacobi, 40, 0.0, 0.0);
  auto f = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double j = std::fabs(boost::math::cyl_bessel_j(alpha, 2.0 * t));
    if (j == 0.0) return 0.0;
    return 2.0 * std::exp((2.0 * beta + 1.0) * std::log(t) + 2.0 * q * std::log(j));
  };
  constexpr int k1 = 200, k2 = 400, k3 = 800;
  std::vector<double> zeros(k3 + 1, 0.0);
  for (int k = 1; k <= k3; ++k) zeros[k] = 0.5 * boost::math::cyl_bessel_j_zero(alpha, k);
  // The first panel carries the t^{2 beta + 1 + 2 alpha q} endpoint behaviour at 0.
  Accumulator<> acc;
  acc.add(integrate_adaptive(f, 0.0, zeros[1], {}, 1e-13).value);
  std::vector<double> partial(k3 + 1, 0.0);
  partial[1] = acc.value();
  for (int k = 1; k < k3; ++k) {
    const double a = zeros[k], b = zeros[k + 1], h = 0.5 * (b - a), c = 0.5 * (a + b);
    Accumulator<> p;
    for (int i = 0; i < rule->order; ++i) p.add(rule->weights[i] * f(c + h * rule->nodes[i]));
    acc.add(h * p.value());
    partial[k + 1] = acc.value();
  }
  // Partial integral plus the averaged tail, with its O(t^{-(q-2beta-1)}) error removed by Richardson.
  const double p = q - 2.0 * beta - 1.0;
  auto estimate = [&](int k) { return partial[k] + bessel_power_tail(alpha, beta, q, zeros[k]); };
  auto richardson = [&](int ka, int kb) {
    const double wa = std::pow(zeros[ka], p), wb = std::pow(zeros[kb], p);
    return (estimate(kb) * wb - estimate(ka) * wa) / (wb - wa);
  };
  const double r1 = richardson(k1, k2), r2 = richardson(k2, k3);
  if (std::fabs(r1 - r2) > 1e-8 * std::fabs(r2))
    throw ConvergenceError("bessel_power_integral: tail extrapolation did not reach 1e-8", r2, std::fabs(r1 - r2));
  return r2;
}

class BesselIntegralCache {
 public:
  double get(double alpha, double beta, double q) {
    const auto key = std::make_tuple(alpha, beta, q);
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    const double v = bessel_power_integral_uncached(alpha, beta, q);
    std::unique_lock lock(mutex_);
    values_.emplace(key, v);
    return v;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<double, double, double>, double> values_;
};

inline BesselIntegralCache& bessel_cache() {
  static BesselIntegralCache cache;
  return cache;
}

}  // namespace detail

/// C_B(a, b, q) = 2 int_0^inf t^{2b+1} |J_a(2t)|^{2q} dt (memoized).
inline double bessel_power_integral(double alpha, double beta, double q) {
  if (!(alpha >= 0.0) || !(q > 0.0)) throw DomainError("bessel_power_integral: need alpha >= 0 and q > 0");
  if (!(2.0 * beta + 2.0 + 2.0 * alpha * q > 0.0)) throw DomainError("bessel_power_integral: divergent at t = 0");
  if (!(q - 2.0 * beta - 2.0 > 0.0)) throw DomainError("bessel_power_integral: divergent at t = infinity");
  return detail::bessel_cache().get(alpha, beta, q);
}

/// C(b, q) = 2^{b+1} Gamma(b+1-q/2) Gamma(1-q/2) Gamma(q+1/2) / (pi^{q+1/2} Gamma(b+2-q) Gamma(1+q)).
inline double renyi_constant_C(double beta, double q) {
  const double g1 = beta + 1.0 - 0.5 * q, g2 = 1.0 - 0.5 * q, g3 = beta + 2.0 - q;
  if (is_nonpositive_integer(g1) || is_nonpositive_integer(g2))
    throw DomainError("renyi_constant_C: Gamma pole (q >= 2 or beta + 1 - q/2 at a pole) in the small-q regime");
  if (is_nonpositive_integer(g3)) throw DomainError("renyi_constant_C: 1/Gamma(beta + 2 - q) vanishes");
  int s1 = 1, s2 = 1, s3 = 1;
  const double l = (beta + 1.0) * std::log(2.0) + ln_gamma(g1, &s1) + ln_gamma(g2, &s2) + std::lgamma(q + 0.5) -
                   (q + 0.5) * std::log(detail::pi) - ln_gamma(g3, &s3) - std::lgamma(1.0 + q);
  return s1 * s2 * s3 * std::exp(l);
}

struct NormAsymptotic {
  double value = 0.0;
  std::string regime;  // "q<q*", "q=q*", "q>q*"
};

/// Large-n_r value of the weighted Laguerre L_q norm N_{n_r,l}(D,q); three regimes around q* = D/(D-1), D > 2.
inline NormAsymptotic n_asymp(int n_r, int l, int D, double q) {
  if (D <= 2) throw UnsupportedError("n_asymp: the three-regime formula covers D > 2 only");
  if (n_r < 1) throw DomainError("n_asymp: n_r must be positive");
  RenyiOrder order(q);
  const double qs = D / (D - 1.0);
  const double alpha = l + 0.5 * D - 1.0, beta = (q - 1.0) * (1.0 - 0.5 * D);
  const double n = n_r;
  if (std::fabs(q - qs) <= 1e-12) {
    const double v = 2.0 / (std::pow(detail::pi, q + 0.5) * std::pow(n, 0.5 * q)) *
                     std::exp(std::lgamma(q + 0.5) - std::lgamma(q + 1.0)) * std::log(n);
    return {v, "q=q*"};
  }
  if (q < qs) {
    const double c = renyi_constant_C(beta, q);
    if (!(c > 0.0)) throw DomainError("n_asymp: C(beta, q) is not positive for these parameters");
    return {c * std::pow(2.0 * n, (1.0 - q) * 0.5 * D), "q<q*"};
  }
  return {bessel_power_integral(alpha, beta, q) * std::pow(n, (q - 1.0) * 0.5 * D - q), "q>q*"};
}

/// R_q ~ -ln 2 -+ (D/2) ln w + ln N_asymp/(1-q) + R_q[Y].
inline AsymptoticValue rydberg_renyi(const HyperState& s, double q, Space space = Space::Position) {
  const auto na = n_asymp(s.n_r(), s.l(), s.dim(), q);
  const double ry = angular_renyi(s, q).value;
  const double v = -std::log(2.0) + detail::omega_sign(space) * 0.5 * s.dim() * std::log(s.omega()) +
                   std::log(na.value) / (1.0 - q) + ry;
  const std::string note = na.regime == "q=q*" ? "regime q=q*; O(1/ln n_r) relative in the norm"
                                               : "regime " + na.regime + "; o(1) as n_r -> inf";
  return {v, Regime::Rydberg, note};
}

/// Position plus momentum at the same q: 2 ln N_asymp/(1-q) + 2 R_q[Y] - 2 ln 2; independent of w.
inline AsymptoticValue rydberg_renyi_sum(const HyperState& s, double q) {
  const auto p = rydberg_renyi(s, q, Space::Position), m = rydberg_renyi(s, q, Space::Momentum);
  return {p.value + m.value, Regime::Rydberg, p.order_note};
}

// ---------------------------------------------------------------------------
// High-dimensional Shannon and Renyi
// ---------------------------------------------------------------------------

enum class ShannonMode { QLimit, AsPublished };

/**
 * @brief High-D Shannon entropy.
 *
 * QLimit (default): (D/2) ln(e pi / w) in position, (D/2) ln(e pi w) in momentum.
 * AsPublished: (1/2) D ln D -+ (D/2) ln w with the O(D) remainder dropped.
 */
inline AsymptoticValue highdim_shannon(const HyperState& s, Space space = Space::Position,
                                       ShannonMode mode = ShannonMode::QLimit) {
  const double d = s.dim(), lw = detail::omega_sign(space) * 0.5 * d * std::log(s.omega());
  if (mode == ShannonMode::QLimit)
    return {0.5 * d * (1.0 + std::log(detail::pi)) + lw, Regime::HighDim, "o(D) state-dependent remainder"};
  return {0.5 * d * std::log(d) + lw, Regime::HighDim, "O(D) remainder dropped"};
}

/// Component asymptotics of the decomposition: A_{2,inf} + E(L~_inf); B_inf = O(D) and the Gegenbauer sum O(ln D) are not stated.
struct HighDimShannonTerms {
  double a2_inf = 0.0;        // D/2 - l ln(D/2) - l(n_r+l-1/2)(2/D) + ln(e^{2n_r+l}/2)
  double laguerre_inf = 0.0;  // (1/2) D ln D - (ln 2 + 1) D/2
};

inline HighDimShannonTerms highdim_shannon_terms(const HyperState& s) {
  const double d = s.dim(), l = s.l(), nr = s.n_r();
  HighDimShannonTerms t;
  t.a2_inf = 0.5 * d - l * std::log(0.5 * d) - l * (nr + l - 0.5) * (2.0 / d) + (2.0 * nr + l) - std::log(2.0);
  t.laguerre_inf = 0.5 * d * std::log(d) - 0.5 * (std::log(2.0) + 1.0) * d;
  return t;
}

/// Large-alpha Gegenbauer entropy: -m ln a + m(m+2)/(2a) - 2m ln 2 - m psi(m+1/2) + ln Gamma(m+1).
inline double gegenbauer_entropy_highdim(int m, double alpha) {
  if (m < 0 || !(alpha > 0.0)) throw DomainError("gegenbauer_entropy_highdim: need m >= 0 and alpha > 0");
  if (m == 0) return 0.0;
  return -m * std::log(alpha) + m * (m + 2.0) / (2.0 * alpha) - 2.0 * m * std::log(2.0) - m * digamma(m + 0.5) +
         std::lgamma(m + 1.0);
}

namespace detail {

// ln E~(D, mu) and ln M~(D, q, mu).
inline double log_e_tilde(const HyperState& s) {
  double v = 0.0;
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const double a = s.alpha_j(j);
    const int mj = s.mu_abs(j), mn = s.mu_abs(j + 1);
    if (mj == mn) continue;
    v += 2.0 * (mj - mn) * std::log(a + mn) + ln_gamma(2.0 * a + 2.0 * mn) - ln_gamma(2.0 * a + mn + mj) +
         ln_gamma(a + mn) - ln_gamma(a + mj);
  }
  return v;
}

inline double log_m_tilde(const HyperState& s, double q) {
  // Factors with mu_j = mu_{j+1} contribute Gamma(1/2) = sqrt(pi) each and cancel against pi^{1-D/2}.
  double v = q * (s.l() - s.abs_m()) * std::log(4.0);
  int zero = 0;
  for (int j = 1; j <= s.dim() - 2; ++j) {
    const int d = s.mu_abs(j) - s.mu_abs(j + 1);
    if (d == 0) {
      ++zero;
      continue;
    }
    v += std::lgamma(q * d + 0.5) - q * std::lgamma(d + 1.0);
  }
  v += (1.0 - 0.5 * s.dim() + 0.5 * zero) * std::log(pi);
  return v;
}

}  // namespace detail

struct HighDimRenyi {
  AsymptoticValue leading;  // (D/2) ln(q^{1/(q-1)} pi) -+ (D/2) ln w
  AsymptoticValue full;     // position: all stated terms incl. ln D and the constants; momentum: leading + ln D term
  AsymptoticValue radial;   // (1/2) D ln D + (1/2) ln(q^{1/(q-1)}/(2 w e)) D + (q n_r/(1-q) - 1/2) ln D
  AsymptoticValue angular;  // -(1/2) D ln D + (1/2) D ln(2 e pi) + (1/2) ln D + ln(E~^q M~)/(1-q)
  double e_tilde = 1.0;
  double m_tilde = 1.0;
};

inline HighDimRenyi highdim_renyi(const HyperState& s, double q, Space space = Space::Position) {
  RenyiOrder order(q);
  const double d = s.dim(), nr = s.n_r(), l = s.l(), lnD = std::log(d);
  const double sign = detail::omega_sign(space);
  const double lw = sign * 0.5 * d * std::log(s.omega());
  const double lead = 0.5 * d * (std::log(q) / (q - 1.0) + std::log(detail::pi));
  const double le = detail::log_e_tilde(s), lm = detail::log_m_tilde(s, q);
  HighDimRenyi out;
  out.e_tilde = std::exp(le);
  out.m_tilde = std::exp(lm);
  out.leading = {lead + lw, Regime::HighDim, "O(ln D) remainder"};
  const double ln_c_hat = (q - 1.0) * std::log(2.0) - q * std::lgamma(nr + 1.0) - q * (2.0 * nr + l) * std::log(q) +
                          (nr == 0 ? 0.0 : 2.0 * nr * q * std::log(std::fabs(q - 1.0)));
  double full = lead + q * nr / (1.0 - q) * lnD + lw;
  if (space == Space::Position) full += (q * le + lm + ln_c_hat - q * nr * std::log(2.0)) / (1.0 - q);
  out.full = {full, Regime::HighDim, "O(1) remainder"};
  const double w = space == Space::Position ? s.omega() : 1.0 / s.omega();
  out.radial = {0.5 * d * lnD + 0.5 * std::log(std::pow(q, 1.0 / (q - 1.0)) / (2.0 * w * std::exp(1.0))) * d +
                    (q * nr / (1.0 - q) - 0.5) * lnD,
                Regime::HighDim, "O(1) remainder"};
  out.angular = {-0.5 * d * lnD + 0.5 * d * std::log(2.0 * std::exp(1.0) * detail::pi) + 0.5 * lnD + (q * le + lm) / (1.0 - q),
                 Regime::HighDim, "O(1) remainder"};
  return out;
}

/// ln(2 pi^{D/2}/Gamma(D/2)): angular Renyi entropy of S-wave states.
inline double renyi_swave_angular(int D) {
  return std::log(2.0) + 0.5 * D * std::log(detail::pi) - std::lgamma(0.5 * D);
}

/// High-D angular Renyi entropy of circular states (l = |m| = n-1).
inline double renyi_circular_angular_highdim(int D, int n, double q) {
  RenyiOrder order(q);
  const double d = D;
  return -0.5 * d * std::log(d) + 0.5 * d * std::log(2.0 * std::exp(1.0) * detail::pi) + 0.5 * std::log(d) +
         (std::lgamma((n - 1.0) * q + 1.0) - q * std::lgamma(double(n))) / (1.0 - q);
}

/// Conjugate high-D Renyi sum D ln(pi p^{1/(2(p-1))} q^{1/(2(q-1))}).
inline double highdim_renyi_sum(int D, double p, double q) {
  RenyiOrder op(p), oq(q);
  return D * (std::log(detail::pi) + std::log(p) / (2.0 * (p - 1.0)) + std::log(q) / (2.0 * (q - 1.0)));
}

}  // namespace hosc
