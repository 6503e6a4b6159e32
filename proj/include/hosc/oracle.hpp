#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "detail/sum.hpp"
#include "errors.hpp"
#include "specfun.hpp"

namespace hosc {

// ---------------------------------------------------------------------------
// Gauss rules
// ---------------------------------------------------------------------------

enum class RuleFamily { GaussHermite, GaussLaguerre, GaussJacobi };

/**
 * Nodes and weights of an order-n Gauss rule. For weights far outside the
 * double range (Laguerre with a large parameter) use log_weights; weights
 * then hold the exponentiated values, which may be inf or 0.
 */
struct QuadratureRule {
  RuleFamily family;
  double a = 0.0;  // Laguerre parameter, or Jacobi exponent of (1-x)
  double b = 0.0;  // Jacobi exponent of (1+x)
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;

  template <class F>
  double integrate(F&& f) const {
    detail::Accumulator<> acc;
    for (int i = 0; i < order; ++i) acc.add(weights[i] * f(nodes[i]));
    return acc.value();
  }
};

namespace detail {

inline Recurrence rule_recurrence(RuleFamily fam, double a, double b) {
  switch (fam) {
    case RuleFamily::GaussHermite: return {Recurrence::Kind::Hermite, 0.0, 0.0};
    case RuleFamily::GaussLaguerre: return {Recurrence::Kind::Laguerre, a, 0.0};
    case RuleFamily::GaussJacobi: return {Recurrence::Kind::Jacobi, a, b};
  }
  return {Recurrence::Kind::Hermite, 0.0, 0.0};
}

// ln sum_{k<n} p_k(x)^2 for the orthonormal family (reciprocal Christoffel function).
inline double log_christoffel_sum(const Recurrence& r, int n, double x) {
  constexpr double big = 1e100, small = 1e-100;
  const double lbig = std::log(big);
  double pm = 0.0, p = 1.0, scale = -0.5 * r.log_mass();
  double sum = 1.0;  // p_0^2 in units of exp(2 scale)
  double boff = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double bn = r.off(k + 1);
    const double pn = ((x - r.diag(k)) * p - boff * pm) / bn;
    pm = p;
    p = pn;
    boff = bn;
    sum += p * p;
    const double mag = std::max(std::fabs(p), std::fabs(pm));
    if (mag > big) {
      p *= small; pm *= small; sum *= small * small;
      scale += lbig;
    }
  }
  return std::log(sum) + 2.0 * scale;
}

inline std::shared_ptr<const QuadratureRule> build_rule(RuleFamily fam, int order, double a, double b) {
  auto rule = std::make_shared<QuadratureRule>();
  rule->family = fam;
  rule->a = a;
  rule->b = b;
  rule->order = order;
  const Recurrence rec = rule_recurrence(fam, a, b);
  rule->nodes = jacobi_roots(rec, order);
  rule->weights.resize(order);
  rule->log_weights.resize(order);
  for (int i = 0; i < order; ++i) {
    const double lw = -log_christoffel_sum(rec, order, rule->nodes[i]);
    rule->log_weights[i] = lw;
    rule->weights[i] = std::exp(lw);
  }
  return rule;
}

class RuleCache {
 public:
  std::shared_ptr<const QuadratureRule> get(RuleFamily fam, int order, double a, double b) {
    const Key key{static_cast<int>(fam), a, b, order};
    {
      std::shared_lock lock(mutex_);
      auto it = rules_.find(key);
      if (it != rules_.end()) return it->second;
    }
    auto rule = build_rule(fam, order, a, b);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = rules_.emplace(key, std::move(rule));
    return it->second;
  }

 private:
  using Key = std::tuple<int, double, double, int>;
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const QuadratureRule>> rules_;
};

inline RuleCache& rule_cache() {
  static RuleCache cache;
  return cache;
}

}  // namespace detail

/// Gauss rule for e^{-x^2}, x^a e^{-x} or (1-x)^a (1+x)^b; built once and cached.
inline std::shared_ptr<const QuadratureRule> gauss_rule(RuleFamily fam, int order, double a = 0.0, double b = 0.0) {
  if (order < 1) throw DomainError("gauss_rule: order must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("gauss_rule: non-finite parameter");
  if (fam == RuleFamily::GaussLaguerre && !(a > -1.0)) throw DomainError("gauss_rule: Laguerre parameter must exceed -1");
  if (fam == RuleFamily::GaussJacobi && !(a > -1.0 && b > -1.0))
    throw DomainError("gauss_rule: Jacobi exponents must exceed -1");
  if (fam == RuleFamily::GaussHermite) a = b = 0.0;
  if (fam == RuleFamily::GaussLaguerre) b = 0.0;
  return detail::rule_cache().get(fam, order, a, b);
}

// ---------------------------------------------------------------------------
// Adaptive integration
// ---------------------------------------------------------------------------

struct IntegralEstimate {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
};

inline constexpr double default_oracle_tol = 1e-11;

namespace detail {

struct Panel {
  double a, b;
  double value = 0.0, error = 0.0, l1 = 0.0;
};

inline void integrate_panel(const std::function<double(double)>& f, Panel& p, double tol) {
  using boost::math::quadrature::exp_sinh;
  using boost::math::quadrature::tanh_sinh;
  thread_local tanh_sinh<double> ts(15);
  thread_local exp_sinh<double> es(9);
  const double rtol = std::max(tol, 1e-15);
  try {
    if (std::isinf(p.a) || std::isinf(p.b)) {
      // Far out in a tail the integrands here are exp(-huge); the recurrences
      // overflow before that, so the value is taken as zero there.
      auto g = [&](double x) {
        if (std::fabs(x) > 1e50) return 0.0;
        return f(x);
      };
      p.value = es.integrate(g, p.a, p.b, rtol, &p.error, &p.l1);
    } else {
      // Map to [-1, 1] and use the complement argument so nodes next to an
      // endpoint are placed at their exact distance from it.
      const double half = 0.5 * (p.b - p.a), a = p.a, b = p.b;
      auto g = [&](double z, double zc) {
        const double x = z < 0 ? a - half * zc : b - half * zc;
        if (!(x > a && x < b)) return 0.0;
        return f(x) * half;
      };
      std::size_t levels = 0;
      p.value = ts.integrate(g, -1.0, 1.0, rtol, &p.error, &p.l1, &levels);
    }
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("integrate_adaptive: quadrature failed: ") + e.what(),
                           std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity());
  }
  if (!std::isfinite(p.value))
    throw ConvergenceError("integrate_adaptive: non-finite panel value", p.value, std::numeric_limits<double>::infinity());
}

}  // namespace detail

/**
 * @brief Integral of f over [a, b] (either end may be infinite).
 *
 * The domain is cut at every listed point inside it; finite panels go to
 * tanh-sinh, half-infinite tails to exp-sinh. Panels whose error dominates are
 * bisected until |error| <= max(tol |value|, 1e-14) or the budget runs out.
 */
inline IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                           std::vector<double> breakpoints = {}, double tol = default_oracle_tol) {
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tolerance must be positive");
  if (std::isnan(a) || std::isnan(b) || !(a < b)) throw DomainError("integrate_adaptive: need a < b");
  std::vector<double> cuts;
  for (double x : breakpoints)
    if (std::isfinite(x) && x > a && x < b) cuts.push_back(x);
  if (std::isinf(a) && std::isinf(b) && cuts.empty()) cuts.push_back(0.0);
  std::sort(cuts.begin(), cuts.end());
  // Merge cuts that would leave panels too narrow to resolve in double precision.
  auto too_close = [](double x, double y) { return y - x <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)}); };
  cuts.erase(std::unique(cuts.begin(), cuts.end(), too_close), cuts.end());
  if (!cuts.empty() && std::isfinite(a) && too_close(a, cuts.front())) cuts.erase(cuts.begin());
  if (!cuts.empty() && std::isfinite(b) && too_close(cuts.back(), b)) cuts.pop_back();

  std::vector<detail::Panel> panels;
  double prev = a;
  for (double c : cuts) {
    panels.push_back({prev, c});
    prev = c;
  }
  panels.push_back({prev, b});

  const double panel_tol = tol * 0.05;
  for (auto& p : panels) detail::integrate_panel(f, p, panel_tol);

  constexpr int max_panels = 4000;
  for (int round = 0;; ++round) {
    detail::Accumulator<> v, e;
    for (const auto& p : panels) {
      v.add(p.value);
      e.add(p.error);
    }
    const double value = v.value(), err = e.value();
    const double target = std::max(tol * std::fabs(value), 1e-14);
    if (err <= target) return {value, err, static_cast<int>(panels.size())};
    if (static_cast<int>(panels.size()) >= max_panels || round > 40)
      throw ConvergenceError("integrate_adaptive: tolerance not reached within the subdivision budget", value, err);
    // Split every panel that carries more than its share of the error.
    std::vector<detail::Panel> next;
    next.reserve(panels.size() * 2);
    const double share = target / static_cast<double>(panels.size());
    for (const auto& p : panels) {
      const bool narrow = std::isfinite(p.a) && std::isfinite(p.b) &&
                          p.b - p.a <= 1e-9 * std::max({1.0, std::fabs(p.a), std::fabs(p.b)});
      if (p.error <= share || narrow) {
        next.push_back(p);
        continue;
      }
      double mid;
      if (std::isinf(p.b)) mid = p.a + std::max(1.0, std::fabs(p.a));
      else if (std::isinf(p.a)) mid = p.b - std::max(1.0, std::fabs(p.b));
      else mid = 0.5 * (p.a + p.b);
      detail::Panel l{p.a, mid}, r{mid, p.b};
      detail::integrate_panel(f, l, panel_tol);
      detail::integrate_panel(f, r, panel_tol);
      next.push_back(l);
      next.push_back(r);
    }
    panels.swap(next);
  }
}

// ---------------------------------------------------------------------------
// Weighted L_q norm of orthonormal Laguerre polynomials
// ---------------------------------------------------------------------------

namespace detail {

// Breakpoints for x^c e^{-q x} p(x)^{2q}: roots, the peak of the envelope and a few widths past it.
inline std::vector<double> laguerre_breakpoints(int n, double alpha, double c, double q) {
  std::vector<double> pts;
  if (n >= 1) pts = jacobi_roots(Recurrence{Recurrence::Kind::Laguerre, alpha, 0.0}, n);
  const double peak = std::max(c, 0.0) / q;
  const double width = std::sqrt(std::max(c, 1.0)) / q;
  const double last = pts.empty() ? peak : std::max(peak, pts.back());
  pts.push_back(peak);
  for (int s = 1; s <= 6; ++s) pts.push_back(last + 4.0 * s * width);
  if (peak > 8.0 * width) {
    for (int s = -6; s <= -1; ++s) pts.push_back(peak + 4.0 * s * width);
  }
  return pts;
}

}  // namespace detail

/**
 * @brief ln of N_{n_r,l}(D,q) = int ([L~_{n_r}^{(a)}(x)]^2 x^a e^{-x})^q x^b dx,
 * a = l + D/2 - 1, b = (1-q)(a-l).
 *
 * Integer q is exact by a Gauss-Laguerre rule in y = q x; other orders
 * integrate adaptively with a log-scaled integrand.
 */
inline IntegralEstimate log_weighted_Lq_norm(int n_r, int l, int D, double q, double tol = default_oracle_tol) {
  if (!(q > 0.0)) throw DomainError("weighted_Lq_norm: q must be positive");
  if (n_r < 0 || l < 0 || D < 2) throw DomainError("weighted_Lq_norm: need n_r, l >= 0 and D >= 2");
  const double alpha = l + 0.5 * D - 1.0;
  const double beta = (1.0 - q) * (alpha - l);
  const double c = beta + q * alpha;
  if (!(c > -1.0)) throw DomainError("weighted_Lq_norm: convergence condition D/2 + l q - 1 > -1 violated");
  const PolySpec spec = PolySpec::laguerre(n_r, alpha, Normalization::Orthonormal);
  const double qi = std::round(q);
  if (q == qi && qi <= 64) {
    const int iq = static_cast<int>(qi);
    const auto rule = gauss_rule(RuleFamily::GaussLaguerre, iq * n_r + 1, c);
    std::vector<double> terms;
    terms.reserve(rule->order);
    for (int i = 0; i < rule->order; ++i) {
      const auto lv = eval_poly_log(spec, rule->nodes[i] / q);
      if (lv.sign == 0) continue;
      terms.push_back(rule->log_weights[i] + 2.0 * q * lv.log_abs);
    }
    return {detail::log_sum_exp(terms) - (c + 1.0) * std::log(q), 0.0, 0};
  }
  auto log_integrand = [&](double x) {
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    const auto lv = eval_poly_log(spec, x);
    if (lv.sign == 0) return -std::numeric_limits<double>::infinity();
    return c * std::log(x) - q * x + 2.0 * q * lv.log_abs;
  };
  auto pts = detail::laguerre_breakpoints(n_r, alpha, c, q);
  double shift = -std::numeric_limits<double>::infinity();
  for (double x : pts) shift = std::max(shift, log_integrand(x));
  if (!std::isfinite(shift)) shift = 0.0;
  auto f = [&](double x) {
    const double v = log_integrand(x) - shift;
    return std::exp(v);
  };
  const auto est = integrate_adaptive(f, 0.0, std::numeric_limits<double>::infinity(), pts, tol);
  if (!(est.value > 0.0)) throw ConvergenceError("weighted_Lq_norm: non-positive integral", est.value, est.abs_error_estimate);
  return {shift + std::log(est.value), est.abs_error_estimate / est.value, est.subdivisions};
}

inline double weighted_Lq_norm(int n_r, int l, int D, double q, double tol = default_oracle_tol) {
  return std::exp(log_weighted_Lq_norm(n_r, l, D, q, tol).value);
}

// ---------------------------------------------------------------------------
// Polynomial entropies
// ---------------------------------------------------------------------------

namespace detail {

inline double log_weight(const PolySpec& s, double x) {
  switch (s.family) {
    case Family::Hermite: return -x * x;
    case Family::Laguerre: return s.parameter * std::log(x) - x;
    case Family::Gegenbauer: return (s.parameter - 0.5) * std::log1p(-x * x);
  }
  return 0.0;
}

}  // namespace detail

/**
 * @brief E_beta(y_n) = -int x^beta w(x) y_n(x)^2 ln y_n(x)^2 dx.
 *
 * beta = 0 gives the usual polynomial entropy. A shift is only meaningful on
 * the Laguerre half-line. Degree 0 is closed form.
 */
inline IntegralEstimate polynomial_entropy_estimate(const PolySpec& s, double beta_shift = 0.0,
                                                    double tol = default_oracle_tol) {
  if (beta_shift != 0.0 && s.family != Family::Laguerre)
    throw DomainError("polynomial_entropy: a shift is only defined for Laguerre polynomials");
  if (s.family == Family::Laguerre && !(s.parameter + beta_shift > -1.0))
    throw DomainError("polynomial_entropy: weight not integrable");
  const auto rec = detail::Recurrence::of(s);
  if (s.degree == 0) {
    // y_0^2 is constant; the integral is y_0^2 ln y_0^2 times the (shifted) mass.
    double ly;
    if (s.normalization == Normalization::Orthonormal) {
      ly = -rec.log_mass();
    } else {
      ly = 0.0;
    }
    double mass_ratio = 1.0;
    if (s.family == Family::Laguerre && beta_shift != 0.0)
      mass_ratio = std::exp(std::lgamma(s.parameter + beta_shift + 1.0) - std::lgamma(s.parameter + 1.0));
    const double mass = std::exp(rec.log_mass());
    return {-std::exp(ly) * mass * mass_ratio * ly, 0.0, 0};
  }
  std::vector<double> pts = poly_roots(s);
  double lo = -1.0, hi = 1.0;
  if (s.family == Family::Hermite) {
    lo = -std::numeric_limits<double>::infinity();
    hi = std::numeric_limits<double>::infinity();
  } else if (s.family == Family::Laguerre) {
    lo = 0.0;
    hi = std::numeric_limits<double>::infinity();
    const auto extra = detail::laguerre_breakpoints(s.degree, s.parameter, s.parameter + beta_shift, 1.0);
    pts.insert(pts.end(), extra.begin(), extra.end());
  }
  auto f = [&](double x) {
    if (s.family == Family::Laguerre && x <= 0.0) return 0.0;
    if (s.family == Family::Gegenbauer && (x <= -1.0 || x >= 1.0)) return 0.0;
    const auto lv = eval_poly_log(s, x);
    if (lv.sign == 0) return 0.0;
    const double ly = 2.0 * lv.log_abs;
    double lw = detail::log_weight(s, x) + ly;
    if (beta_shift != 0.0) lw += beta_shift * std::log(x);
    return -std::exp(lw) * ly;
  };
  return integrate_adaptive(f, lo, hi, pts, tol);
}

inline double polynomial_entropy(const PolySpec& s, double beta_shift = 0.0, double tol = default_oracle_tol) {
  return polynomial_entropy_estimate(s, beta_shift, tol).value;
}

}  // namespace hosc
