#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "detail/sum.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "states.hpp"

namespace hosc {

/// Both closed representations of a radial moment and how well they agree.
struct MomentDetail {
  double value = 0.0;           // finite-sum form (returned by radial_moment)
  double threef2_value = 0.0;   // 3F2 form
  double condition = 1.0;       // cancellation condition number of the 3F2 sum
  bool dual_checked = false;    // false when the 3F2 sum is too ill-conditioned to compare
};

inline bool moment_exists(const HyperState& s, double k) { return k > -s.dim() - 2.0 * s.l(); }

namespace detail {

inline void require_moment(const HyperState& s, double k, const char* who) {
  if (!std::isfinite(k) || !moment_exists(s, k))
    throw DomainError(std::string(who) + ": <r^k> needs k > -D - 2l");
}

// ln <r^k> at omega = 1 from the finite sum
// n_r!/Gamma(n_r+l+D/2) sum_i binom(k/2, n_r-i)^2 Gamma(l+(D+k)/2+i)/i!.
// Terms are taken relative to i = n_r through their exact rational ratios, so
// the only Gamma evaluation left is Gamma(a+k/2)/Gamma(a) with a = n_r+l+D/2.
inline double log_moment_unit(const HyperState& s, double k) {
  const int nr = s.n_r();
  const double h = 0.5 * k;
  const double base = s.l() + 0.5 * s.dim() + h;
  Accumulator<> sum;
  double r = 1.0;
  sum.add(r);
  for (int j = 1; j <= nr; ++j) {
    const double b = (h - j + 1.0) / j;
    r *= b * b * (nr - j + 1.0) / (base + nr - j);
    if (r == 0.0) break;
    sum.add(r);
  }
  const double a = nr + s.l() + 0.5 * s.dim();
  double lratio;
  const double ratio = boost::math::tgamma_delta_ratio(a, h);
  if (ratio > 0.0 && std::isfinite(ratio) && ratio > 1e-300 && ratio < 1e300)
    lratio = -std::log(ratio);
  else
    lratio = ln_gamma(a + h) - ln_gamma(a);
  return lratio + std::log(sum.value());
}

}  // namespace detail

/**
 * @brief <r^k> (position) or <p^k> (momentum) with both closed forms evaluated.
 *
 * The finite binomial sum (all terms positive) is the returned value; the
 * terminating 3F2(-n_r, -k/2, k/2+1; l+D/2, 1; 1) form is summed in 50-digit
 * arithmetic and must agree to max(1e-12, 8 cond 1e-50). When cond 1e-50
 * exceeds 1e-6 the comparison is skipped and dual_checked is false.
 */
inline MomentDetail radial_moment_detail(const HyperState& s, double k, Space space = Space::Position) {
  detail::require_moment(s, k, "radial_moment");
  const double w = s.omega();
  MomentDetail out;
  if (k == 0.0) {
    out.value = out.threef2_value = 1.0;
    out.dual_checked = true;
    return out;
  }
  const double lw = space == Space::Position ? -0.5 * k * std::log(w) : 0.5 * k * std::log(w);
  out.value = std::exp(detail::log_moment_unit(s, k) + lw);

  const auto h = hyp_3F2_unit_detail(-s.n_r(), -0.5 * k, 0.5 * k + 1.0, s.l() + 0.5 * s.dim(), 1.0);
  out.condition = h.condition;
  const double pref = ln_gamma(s.l() + 0.5 * (s.dim() + k)) - ln_gamma(s.l() + 0.5 * s.dim());
  out.threef2_value = std::exp(pref + lw) * h.value;
  const double noise = h.condition * 1e-50;
  if (noise <= 1e-6) {
    out.dual_checked = true;
    const double tol = std::max(1e-12, 8.0 * noise);
    if (std::fabs(out.threef2_value - out.value) > tol * std::fabs(out.value))
      throw ConsistencyError("radial_moment: 3F2 and finite-sum forms disagree");
  }
  return out;
}

inline double radial_moment(const HyperState& s, double k, Space space = Space::Position) {
  return radial_moment_detail(s, k, space).value;
}

/**
 * @brief <r^{k+2}> from <r^k> and <r^{k-2}> by the Kramers-type recurrence
 * (k+2) w^2 <r^{k+2}> = (k+1) w (2n+D) <r^k> + (k/4)[k^2 - (2l+D-2)^2] <r^{k-2}>.
 */
inline double recurrence_step(const HyperState& s, double k, double m_k, double m_km2) {
  if (k == -2.0) throw DomainError("recurrence_step: k = -2 divides by zero");
  const double w = s.omega();
  const double c = 2.0 * s.l() + s.dim() - 2.0;
  return ((k + 1.0) * w * (2.0 * s.n() + s.dim()) * m_k + 0.25 * k * (k * k - c * c) * m_km2) / ((k + 2.0) * w * w);
}

/**
 * @brief <r^{-k-2}> from <r^k>: w^{k+1} Gamma(l+(D-k)/2-1)/Gamma(l+(D+k)/2) <r^k>.
 *
 * k = -1 is the fixed point (the Gamma ratio is 1 there).
 */
inline double reflection_moment(const HyperState& s, double k) {
  detail::require_moment(s, k, "reflection_moment");
  detail::require_moment(s, -k - 2.0, "reflection_moment");
  const double g1 = s.l() + 0.5 * (s.dim() - k) - 1.0;
  const double g2 = s.l() + 0.5 * (s.dim() + k);
  if (!(g1 > 0.0 && g2 > 0.0)) throw DomainError("reflection_moment: Gamma argument not positive");
  return std::exp((k + 1.0) * std::log(s.omega()) + ln_gamma(g1) - ln_gamma(g2)) * radial_moment(s, k);
}

/// <r^{-3}> = 4 w^2 <r> / ((D-1+2l)(D-3+2l)).
inline double reflection_r_minus3(const HyperState& s) {
  const double a = s.dim() - 1.0 + 2.0 * s.l(), b = s.dim() - 3.0 + 2.0 * s.l();
  if (!(b > 0.0)) throw DomainError("reflection_r_minus3: <r^{-3}> needs D + 2l > 3");
  return 4.0 * s.omega() * s.omega() * radial_moment(s, 1.0) / (a * b);
}

/// <r^k><p^k>; independent of omega.
inline double heisenberg_product(const HyperState& s, double k) {
  return radial_moment(s, k, Space::Position) * radial_moment(s, k, Space::Momentum);
}

/// Quadrature value of int r^k rho(r) r^{D-1} dr (or the momentum analogue).
inline IntegralEstimate radial_moment_oracle(const HyperState& s, double k, Space space = Space::Position,
                                             double tol = default_oracle_tol) {
  detail::require_moment(s, k, "radial_moment_oracle");
  const double scale = space == Space::Position ? 1.0 / std::sqrt(s.omega()) : std::sqrt(s.omega());
  std::vector<double> pts;
  if (s.n_r() > 0) {
    for (double x : poly_roots(PolySpec::laguerre(s.n_r(), s.alpha()))) pts.push_back(std::sqrt(x) * scale);
  }
  // Peak of r^{k+D-1} rho and a few widths beyond the outermost node.
  const double peak = std::sqrt(std::max(s.n() + 0.5 * (s.dim() + k), 0.5)) * scale;
  const double last = std::max(peak, pts.empty() ? 0.0 : pts.back());
  pts.push_back(peak);
  for (int i = 1; i <= 4; ++i) pts.push_back(last + 2.0 * i * scale);
  const int D = s.dim();
  auto f = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double lr = log_radial_density(s, space, r);
    return std::exp(lr + (k + D - 1.0) * std::log(r));
  };
  return integrate_adaptive(f, 0.0, std::numeric_limits<double>::infinity(), pts, tol);
}

}  // namespace hosc
