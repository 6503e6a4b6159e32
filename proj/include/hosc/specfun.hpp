#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "detail/sum.hpp"
#include "errors.hpp"

namespace hosc {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

inline bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

/// ln|Γ(x)|; the sign of Γ(x) is written to *sign when requested.
inline double ln_gamma(double x, int* sign = nullptr) {
  if (!std::isfinite(x)) throw DomainError("ln_gamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw DomainError("ln_gamma: pole at non-positive integer");
  int s = 1;
  double v = boost::math::lgamma(x, &s);
  if (sign) *sign = s;
  return v;
}

inline double digamma(double x) {
  if (!std::isfinite(x)) throw DomainError("digamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw DomainError("digamma: pole at non-positive integer");
  return boost::math::digamma(x);
}

/// Rising factorial (a)_j = Γ(a+j)/Γ(a).
inline double pochhammer(double a, int j) {
  if (j < 0) throw DomainError("pochhammer: negative length");
  if (j <= 256) {
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= a + i;
    return p;
  }
  if (is_nonpositive_integer(a) && -a < j) return 0.0;
  int s1 = 1, s2 = 1;
  double v = ln_gamma(a + j, &s1) - ln_gamma(a, &s2);
  return s1 * s2 * std::exp(v);
}

/// Generalized binomial coefficient C(a, m) for real a and integer m >= 0.
inline double binomial(double a, int m) {
  if (m < 0) return 0.0;
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= (a - i) / (i + 1);
  return p;
}

/// ln|C(a, m)| with sign, stable for large arguments.
inline detail::LogValue log_binomial(double a, int m) {
  detail::LogValue r;
  if (m < 0) return r;
  if (m <= 64) {
    double v = binomial(a, m);
    if (v != 0.0) {
      r.sign = v > 0 ? 1 : -1;
      r.log_abs = std::log(std::fabs(v));
    }
    return r;
  }
  // a - i vanishes for some i < m: exact zero.
  if (a >= 0 && a == std::floor(a) && a < m) return r;
  int s1 = 1, s2 = 1;
  r.log_abs = ln_gamma(a + 1.0, &s1) - ln_gamma(a - m + 1.0, &s2) - std::lgamma(m + 1.0);
  r.sign = s1 * s2;
  return r;
}

// ---------------------------------------------------------------------------
// Orthogonal polynomials
// ---------------------------------------------------------------------------

enum class Family { Hermite, Laguerre, Gegenbauer };
enum class Normalization { Orthogonal, Orthonormal };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Hermite: return "Hermite";
    case Family::Laguerre: return "Laguerre";
    case Family::Gegenbauer: return "Gegenbauer";
  }
  return "?";
}

/**
 * @brief A classical orthogonal polynomial of given degree.
 *
 * Weights: Hermite e^{-x^2} on R, Laguerre x^a e^{-x} on [0,inf),
 * Gegenbauer (1-x^2)^{l-1/2} on [-1,1]. Orthogonal normalization follows the
 * classical conventions (H_n with leading 2^n, L_n^{(a)}, C_n^{(l)}); the
 * orthonormal one has positive leading coefficient and unit norm.
 */
struct PolySpec {
  Family family;
  int degree;
  double parameter;
  Normalization normalization;

  PolySpec(Family f, int n, double param = 0.0, Normalization norm = Normalization::Orthonormal)
      : family(f), degree(n), parameter(param), normalization(norm) {
    if (n < 0) throw DomainError("PolySpec: negative degree");
    if (!std::isfinite(param)) throw DomainError("PolySpec: non-finite parameter");
    if (f == Family::Laguerre && !(param > -1.0))
      throw DomainError("PolySpec: Laguerre parameter must exceed -1");
    if (f == Family::Gegenbauer && !(param > -0.5))
      throw DomainError("PolySpec: Gegenbauer parameter must exceed -1/2");
    if (f == Family::Gegenbauer && param == 0.0 && n >= 1 && norm == Normalization::Orthogonal)
      throw DomainError("PolySpec: orthogonal Gegenbauer normalization undefined at lambda = 0");
  }
  static PolySpec hermite(int n, Normalization norm = Normalization::Orthogonal) {
    return PolySpec(Family::Hermite, n, 0.0, norm);
  }
  static PolySpec laguerre(int n, double a, Normalization norm = Normalization::Orthonormal) {
    return PolySpec(Family::Laguerre, n, a, norm);
  }
  static PolySpec gegenbauer(int n, double l, Normalization norm = Normalization::Orthonormal) {
    return PolySpec(Family::Gegenbauer, n, l, norm);
  }
};

namespace detail {

// Jacobi-matrix data of an orthonormal family: p_{k+1} b_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
struct Recurrence {
  enum class Kind { Hermite, Laguerre, Gegenbauer, Jacobi };
  Kind kind;
  double p1 = 0.0;  // Laguerre a, Gegenbauer lambda, Jacobi exponent of (1-x)
  double p2 = 0.0;  // Jacobi exponent of (1+x)

  static Recurrence of(const PolySpec& s) {
    switch (s.family) {
      case Family::Hermite: return {Kind::Hermite, 0.0, 0.0};
      case Family::Laguerre: return {Kind::Laguerre, s.parameter, 0.0};
      case Family::Gegenbauer: return {Kind::Gegenbauer, s.parameter, 0.0};
    }
    return {Kind::Hermite, 0.0, 0.0};
  }

  double diag(int n) const {
    switch (kind) {
      case Kind::Hermite:
      case Kind::Gegenbauer: return 0.0;
      case Kind::Laguerre: return 2.0 * n + p1 + 1.0;
      case Kind::Jacobi: {
        const double a = p1, b = p2, s = 2.0 * n + a + b;
        if (n == 0) return (b - a) / (a + b + 2.0);
        if (b * b - a * a == 0.0) return 0.0;
        return (b * b - a * a) / (s * (s + 2.0));
      }
    }
    return 0.0;
  }

  // Off-diagonal coupling between degrees n-1 and n (n >= 1).
  double off(int n) const {
    switch (kind) {
      case Kind::Hermite: return std::sqrt(0.5 * n);
      case Kind::Laguerre: return std::sqrt(n * (n + p1));
      case Kind::Gegenbauer: {
        const double l = p1;
        if (n == 1 && l == 0.0) return std::sqrt(0.5);
        return std::sqrt(n * (n + 2.0 * l - 1.0) / (4.0 * (n + l) * (n + l - 1.0)));
      }
      case Kind::Jacobi: {
        const double a = p1, b = p2, s = 2.0 * n + a + b;
        if (n == 1) return std::sqrt(4.0 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b)));
        return std::sqrt(4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
      }
    }
    return 0.0;
  }

  // ln of the total weight mass.
  double log_mass() const {
    switch (kind) {
      case Kind::Hermite: return 0.5 * std::log(M_PI);
      case Kind::Laguerre: return std::lgamma(p1 + 1.0);
      case Kind::Gegenbauer:
        return 0.5 * std::log(M_PI) + std::lgamma(p1 + 0.5) - std::lgamma(p1 + 1.0);
      case Kind::Jacobi:
        return (p1 + p2 + 1.0) * std::log(2.0) + std::lgamma(p1 + 1.0) + std::lgamma(p2 + 1.0) -
               std::lgamma(p1 + p2 + 2.0);
    }
    return 0.0;
  }
};

// Orthonormal p_n(x) and p_n'(x), both equal to (p, dp) * exp(log_scale).
struct ScaledEval {
  double p = 0.0;
  double dp = 0.0;
  double log_scale = 0.0;
};

inline ScaledEval eval_orthonormal(const Recurrence& r, int n, double x) {
  constexpr double big = 1e100, small = 1e-100;
  const double lbig = std::log(big);
  double pm = 0.0, p = 1.0, dm = 0.0, d = 0.0;
  double scale = -0.5 * r.log_mass();
  double boff = 0.0;
  for (int k = 0; k < n; ++k) {
    const double bn = r.off(k + 1);
    const double ak = r.diag(k);
    const double pn = ((x - ak) * p - boff * pm) / bn;
    const double dn = ((x - ak) * d + p - boff * dm) / bn;
    pm = p;
    p = pn;
    dm = d;
    d = dn;
    boff = bn;
    const double mag = std::max(std::fabs(p), std::fabs(pm));
    if (mag > big) {
      p *= small; pm *= small; d *= small; dm *= small;
      scale += lbig;
    } else if (mag < small && mag > 0.0) {
      p *= big; pm *= big; d *= big; dm *= big;
      scale -= lbig;
    }
  }
  return {p, d, scale};
}

// Sign and ln of the factor mapping orthonormal p_n onto the orthogonal classical polynomial.
inline void orthogonal_factor(const PolySpec& s, double& log_factor, int& sign) {
  const int n = s.degree;
  const double a = s.parameter;
  sign = 1;
  switch (s.family) {
    case Family::Hermite:
      log_factor = 0.5 * (0.5 * std::log(M_PI) + n * std::log(2.0) + std::lgamma(n + 1.0));
      break;
    case Family::Laguerre:
      log_factor = 0.5 * (std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0));
      sign = (n % 2) ? -1 : 1;
      break;
    case Family::Gegenbauer: {
      double lh;
      if (a == 0.0) {
        lh = std::log(M_PI);  // only n == 0 reaches here
      } else {
        int s1 = 1, s2 = 1;
        lh = std::log(M_PI) + (1.0 - 2.0 * a) * std::log(2.0) + ln_gamma(n + 2.0 * a, &s1) -
             std::lgamma(n + 1.0) - std::log(std::fabs(n + a)) - 2.0 * ln_gamma(a, &s2);
      }
      log_factor = 0.5 * lh;
      // sign of (lambda)_n
      for (int i = 0; i < n; ++i)
        if (a + i < 0) sign = -sign;
      break;
    }
  }
}

inline void check_domain(const PolySpec& s, double x) {
  if (!std::isfinite(x)) throw DomainError("eval_poly: non-finite abscissa");
  if (s.family == Family::Gegenbauer && (x < -1.0 || x > 1.0))
    throw DomainError("eval_poly: Gegenbauer abscissa outside [-1,1]");
  if (s.family == Family::Laguerre && x < 0.0) throw DomainError("eval_poly: Laguerre abscissa below 0");
}

}  // namespace detail

/// Polynomial value as sign * exp(log_abs); usable far beyond double range.
inline detail::LogValue eval_poly_log(const PolySpec& s, double x) {
  detail::check_domain(s, x);
  const auto e = detail::eval_orthonormal(detail::Recurrence::of(s), s.degree, x);
  detail::LogValue r;
  if (e.p == 0.0) return r;
  r.sign = e.p > 0 ? 1 : -1;
  r.log_abs = std::log(std::fabs(e.p)) + e.log_scale;
  if (s.normalization == Normalization::Orthogonal) {
    double lf = 0.0;
    int sg = 1;
    detail::orthogonal_factor(s, lf, sg);
    r.log_abs += lf;
    r.sign *= sg;
  }
  return r;
}

inline double eval_poly(const PolySpec& s, double x) { return eval_poly_log(s, x).value(); }

namespace detail {

// Eigenvalues of the n x n Jacobi matrix, each polished by two Newton steps.
inline std::vector<double> jacobi_roots(const Recurrence& r, int n) {
  std::vector<double> roots;
  if (n <= 0) return roots;
  Eigen::VectorXd d(n), e(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) d[k] = r.diag(k);
  for (int k = 1; k < n; ++k) e[k - 1] = r.off(k);
  if (n == 1) {
    roots.push_back(d[0]);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, e.head(n - 1), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("jacobi_roots: eigen solver failed", 0.0, 0.0);
    roots.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  }
  for (double& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const auto v = eval_orthonormal(r, n, x);
      if (v.dp != 0.0 && std::isfinite(v.p / v.dp)) x -= v.p / v.dp;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// All real roots of the polynomial, ascending.
inline std::vector<double> poly_roots(const PolySpec& s) {
  if (s.degree < 1) throw DomainError("poly_roots: degree must be at least 1");
  return detail::jacobi_roots(detail::Recurrence::of(s), s.degree);
}

// ---------------------------------------------------------------------------
// Hypergeometric sums
// ---------------------------------------------------------------------------

namespace detail {

using f50 = boost::multiprecision::cpp_bin_float_50;
using f100 = boost::multiprecision::cpp_bin_float_100;
using f200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

// Degree at which the series terminates, or -1.
inline int termination_degree(const std::vector<double>& a) {
  int n = -1;
  for (double v : a)
    if (is_nonpositive_integer(v)) {
      const int m = static_cast<int>(-v);
      n = (n < 0) ? m : std::min(n, m);
    }
  return n;
}

inline void check_denominators(const std::vector<double>& b, int terms) {
  for (double v : b)
    if (is_nonpositive_integer(v) && (terms < 0 || -v < terms))
      throw DomainError("hypergeometric: Pochhammer pole in a denominator parameter");
}

template <class T>
struct SeriesResult {
  T value;
  T abs_sum;
};

template <class T>
SeriesResult<T> pfq_sum(const std::vector<double>& a, const std::vector<double>& b, double z, int last) {
  Accumulator<T> acc;
  T term = 1;
  acc.add(term);
  const T zz = z;
  const T eps = std::numeric_limits<T>::epsilon();
  const int max_terms = last >= 0 ? last : 200000;
  int small_run = 0;
  for (int j = 0; j < max_terms; ++j) {
    T num = 1, den = 1;
    for (double v : a) num *= T(v) + j;
    for (double v : b) den *= T(v) + j;
    term = term * num / den * zz / (j + 1);
    acc.add(term);
    if (last < 0) {
      using std::abs;
      if (abs(term) <= eps * abs(acc.value()) && j > std::fabs(z)) {
        if (++small_run >= 2) return {acc.value(), acc.abs_sum()};
      } else {
        small_run = 0;
      }
    }
  }
  if (last < 0) throw UnsupportedError("hyp_pFq_series: series did not converge within the term budget");
  return {acc.value(), acc.abs_sum()};
}

template <class T>
double pfq_as_double(const std::vector<double>& a, const std::vector<double>& b, double z, int last) {
  return static_cast<double>(pfq_sum<T>(a, b, z, last).value);
}

}  // namespace detail

/**
 * @brief Generalized hypergeometric series pFq(a; b; z) for real parameters.
 *
 * Terminating series are summed exactly to their last term. Non-terminating
 * ones are summed in extended precision chosen from |z|; 1F1 at z < -30 goes
 * through Kummer's transformation first.
 */
inline double hyp_pFq_series(const std::vector<double>& a, const std::vector<double>& b, double z) {
  if (!std::isfinite(z)) throw DomainError("hyp_pFq_series: non-finite argument");
  const int last = detail::termination_degree(a);
  detail::check_denominators(b, last);
  if (z == 0.0) return 1.0;
  const std::size_t p = a.size(), q = b.size();
  if (last < 0) {
    if (p == 1 && q == 1 && z < -30.0)
      return std::exp(z) * hyp_pFq_series({b[0] - a[0]}, {b[0]}, -z);
    if (p > q + 1) throw UnsupportedError("hyp_pFq_series: divergent series (p > q + 1)");
    if (p == q + 1 && std::fabs(z) >= 1.0)
      throw UnsupportedError("hyp_pFq_series: non-terminating series outside |z| < 1");
  }
  const double az = std::fabs(z);
  if (last >= 0 || az <= 25.0) return detail::pfq_as_double<detail::f50>(a, b, z, last);
  if (az <= 120.0) return detail::pfq_as_double<detail::f100>(a, b, z, last);
  if (az <= 350.0) return detail::pfq_as_double<detail::f200>(a, b, z, last);
  throw UnsupportedError("hyp_pFq_series: |z| too large for the series engine");
}

/// Terminating 3F2 at unit argument with its cancellation condition number.
struct Hyp3F2Result {
  double value;
  double condition;  // sum |terms| / |sum|
};

inline Hyp3F2Result hyp_3F2_unit_detail(double a1, double a2, double a3, double b1, double b2) {
  const std::vector<double> a{a1, a2, a3}, b{b1, b2};
  const int last = detail::termination_degree(a);
  if (last < 0) throw UnsupportedError("hyp_3F2_unit: no non-positive integer numerator");
  detail::check_denominators(b, last);
  if (last == 0) return {1.0, 1.0};
  const auto r = detail::pfq_sum<detail::f50>(a, b, 1.0, last);
  const double v = static_cast<double>(r.value);
  const double c = v == 0.0 ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(r.abs_sum / abs(r.value));
  return {v, c};
}

/// Terminating 3F2(a1,a2,a3; b1,b2; 1).
inline double hyp_3F2_unit(double a1, double a2, double a3, double b1, double b2) {
  return hyp_3F2_unit_detail(a1, a2, a3, b1, b2).value;
}

/**
 * @brief The finite Lauricella sum F_q(n) entering the Cartesian Renyi entropy.
 *
 * 2q-fold sum over j_1..j_2q in [0, (n-nu)/2], visited in lexicographic order.
 */
inline double lauricella_FA_finite(int q, int nu, int n) {
  if (q < 1) throw DomainError("lauricella_FA_finite: q must be a positive integer");
  if (n < 0 || (nu != 0 && nu != 1)) throw DomainError("lauricella_FA_finite: bad n or nu");
  if ((n - nu) % 2 != 0) throw DomainError("lauricella_FA_finite: parity of n does not match nu");
  const int m = (n - nu) / 2;
  if (m == 0) return 1.0;
  const int dims = 2 * q;
  if (std::pow(m + 1.0, dims) > 2e9) throw UnsupportedError("lauricella_FA_finite: sum too large");
  std::vector<double> g(m + 1);
  for (int j = 0; j <= m; ++j)
    g[j] = pochhammer(-m, j) / pochhammer(nu + 0.5, j) * std::pow(1.0 / q, j) / std::tgamma(j + 1.0);
  std::vector<double> top(dims * m + 1);
  for (int s = 0; s <= dims * m; ++s) top[s] = pochhammer(q * nu + 0.5, s);
  std::vector<int> idx(dims, 0);
  detail::Accumulator<> acc;
  while (true) {
    int s = 0;
    double t = 1.0;
    for (int i = 0; i < dims; ++i) {
      s += idx[i];
      t *= g[idx[i]];
    }
    acc.add(top[s] * t);
    int k = dims - 1;
    while (k >= 0 && idx[k] == m) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return acc.value();
}

// ---------------------------------------------------------------------------
// Linearizations
// ---------------------------------------------------------------------------

/// sum_k coefficient_k * P_k(x) in a fixed target family (coefficient index = degree).
struct LinearizationExpansion {
  Family target_family;
  double target_parameter;
  Normalization target_normalization;
  std::vector<std::pair<int, double>> coefficients;

  double evaluate(double x) const {
    detail::Accumulator<> acc;
    for (const auto& [k, c] : coefficients)
      acc.add(c * eval_poly(PolySpec(target_family, k, target_parameter, target_normalization), x));
    return acc.value();
  }
};

/**
 * @brief |H_n(t / sqrt(q))|^{2q} = sum_j c_j H_{2j}(t), j = 0..qn.
 *
 * With t = sqrt(a' q) x this is the expansion of |H_n(sqrt(a') x)|^{2q}
 * in H_{2j}(sqrt(a' q) x). Coefficients come from the Lauricella form, with
 * the prefactor fixed so that the j = 0 term matches the weighted integral.
 */
inline LinearizationExpansion hermite_power_linearize(int n, int q) {
  if (n < 0 || q < 1) throw DomainError("hermite_power_linearize: need n >= 0, q >= 1");
  const int nu = n % 2, m = (n - nu) / 2, dims = 2 * q;
  LinearizationExpansion out{Family::Hermite, 0.0, Normalization::Orthogonal, {}};
  // g_j and its 2q-fold convolution power G(s).
  std::vector<double> g(m + 1);
  for (int j = 0; j <= m; ++j)
    g[j] = pochhammer(-m, j) / pochhammer(nu + 0.5, j) * std::pow(1.0 / q, j) / std::tgamma(j + 1.0);
  std::vector<double> G{1.0};
  for (int d = 0; d < dims; ++d) {
    std::vector<double> nxt(G.size() + m, 0.0);
    for (std::size_t s = 0; s < G.size(); ++s)
      for (int j = 0; j <= m; ++j) nxt[s + j] += G[s] * g[j];
    G.swap(nxt);
  }
  const double lead = std::pow(2.0, nu) * std::tgamma(n + 1.0) / std::tgamma(m + 1.0);
  const double pref = std::pow(lead, dims) * std::pow(q, -q * nu) * pochhammer(0.5, q * nu);
  for (int j = 0; j <= q * n; ++j) {
    detail::Accumulator<> acc;
    for (std::size_t s = 0; s < G.size(); ++s) {
      for (int t = 0; t <= j; ++t) {
        acc.add(G[s] * pochhammer(q * nu + 0.5, static_cast<int>(s) + t) * pochhammer(-j, t) /
                (pochhammer(0.5, t) * std::tgamma(t + 1.0)));
      }
    }
    const double sgn = (j % 2) ? -1.0 : 1.0;
    const double c = pref * sgn / (std::pow(4.0, j) * std::tgamma(j + 1.0)) * acc.value();
    out.coefficients.emplace_back(2 * j, c);
  }
  return out;
}

/// [L_n^{(a)}]^2 = sum_k c_k L_{2k}^{(2a)} (orthogonal Laguerre on both sides).
inline LinearizationExpansion laguerre_square_linearize(int n, double a) {
  if (n < 0) throw DomainError("laguerre_square_linearize: negative degree");
  if (!(a > -1.0)) throw DomainError("laguerre_square_linearize: parameter must exceed -1");
  LinearizationExpansion out{Family::Laguerre, 2.0 * a, Normalization::Orthogonal, {}};
  const double base = std::lgamma(a + 1.0 + n) - n * std::log(4.0) - std::lgamma(n + 1.0);
  for (int k = 0; k <= n; ++k) {
    const double lc = base + std::lgamma(2.0 * (n - k) + 1.0) - 2.0 * std::lgamma(n - k + 1.0) +
                      std::lgamma(2.0 * k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(a + 1.0 + k);
    out.coefficients.emplace_back(2 * k, std::exp(lc));
  }
  return out;
}

/// int_0^inf x^s e^{-x} L_n^{(a)}(x) L_m^{(b)}(x) dx as a finite binomial sum.
inline double laguerre_product_integral(double s, double a, double b, int n, int m) {
  if (!(s > -1.0)) throw DomainError("laguerre_product_integral: s must exceed -1");
  if (n < 0 || m < 0) throw DomainError("laguerre_product_integral: negative degree");
  detail::Accumulator<> acc;
  for (int r = 0; r <= std::min(n, m); ++r)
    acc.add(binomial(s - a, n - r) * binomial(s - b, m - r) * binomial(s + r, r));
  const double sign = ((n + m) % 2) ? -1.0 : 1.0;
  return sign * std::tgamma(s + 1.0) * acc.value();
}

/**
 * @brief Dougall linearization [C~_n^{(l)}]^2 = sum_k b_k C~_{2k}^{(l+mu)} of
 * orthonormal Gegenbauer polynomials, k = 0..n.
 */
inline LinearizationExpansion gegenbauer_square_linearize(int n, double lambda, int mu_next) {
  if (n < 0 || mu_next < 0) throw DomainError("gegenbauer_square_linearize: negative index");
  if (!(lambda > -0.5)) throw DomainError("gegenbauer_square_linearize: lambda must exceed -1/2");
  if (lambda <= 0.0) throw UnsupportedError("gegenbauer_square_linearize: lambda <= 0 not covered");
  const double l = lambda, lm = lambda + mu_next;
  LinearizationExpansion out{Family::Gegenbauer, lm, Normalization::Orthonormal, {}};
  for (int k = 0; k <= n; ++k) {
    const double lp = std::log(n + l) + std::lgamma(k + 0.5) + std::lgamma(k + l) +
                      std::lgamma(k + n + 2 * l) + std::lgamma(lm) - 0.5 * std::log(M_PI) -
                      std::lgamma(1.0 - k + n) - std::lgamma(k + l + 0.5) - std::lgamma(k + 2 * l) -
                      std::lgamma(2 * k + lm);
    const double lr = 0.5 * ((1 - 2 * lm) * std::log(2.0) + std::lgamma(2 * k + 2 * lm) -
                             std::log(2 * k + lm) - std::lgamma(2 * k + 1.0) - 2 * std::lgamma(lm));
    const double f = hyp_pFq_series({double(k - n), k + n + 2 * l, k + l, k + lm + 0.5},
                                    {2 * k + lm + 1, k + 2 * l, k + l + 0.5}, 1.0);
    out.coefficients.emplace_back(2 * k, std::exp(lp + lr) * f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bessel and 3j
// ---------------------------------------------------------------------------

inline double bessel_J(double nu, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_J: argument must be non-negative");
  return boost::math::cyl_bessel_j(nu, x);
}

/**
 * @brief Wigner 3j symbol via the Racah sum, factorials through ln Gamma.
 * Arguments may be integers or half-integers; selection-rule violations give 0.
 */
inline double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3) {
  auto twice = [](double v) -> long {
    const double t = 2.0 * v;
    if (std::fabs(t - std::round(t)) > 1e-9) throw DomainError("wigner_3j: arguments must be multiples of 1/2");
    return std::lround(t);
  };
  const long J1 = twice(j1), J2 = twice(j2), J3 = twice(j3);
  const long M1 = twice(m1), M2 = twice(m2), M3 = twice(m3);
  if (J1 < 0 || J2 < 0 || J3 < 0) return 0.0;
  if (M1 + M2 + M3 != 0) return 0.0;
  if (std::labs(M1) > J1 || std::labs(M2) > J2 || std::labs(M3) > J3) return 0.0;
  if ((J1 + M1) % 2 || (J2 + M2) % 2 || (J3 + M3) % 2) return 0.0;
  if (J3 > J1 + J2 || J3 < std::labs(J1 - J2) || (J1 + J2 + J3) % 2) return 0.0;
  auto lf = [](long twice_arg) { return std::lgamma(twice_arg / 2.0 + 1.0); };
  const double ldelta = lf(J1 + J2 - J3) + lf(J1 - J2 + J3) + lf(-J1 + J2 + J3) - lf(J1 + J2 + J3 + 2);
  const double lpre = 0.5 * (ldelta + lf(J1 + M1) + lf(J1 - M1) + lf(J2 + M2) + lf(J2 - M2) +
                             lf(J3 + M3) + lf(J3 - M3));
  // t ranges where all factorial arguments are non-negative (twice-units).
  const long tmin2 = std::max({0L, J2 - J3 - M1, J1 - J3 + M2});
  const long tmax2 = std::min({J1 + J2 - J3, J1 - M1, J2 + M2});
  detail::Accumulator<long double> acc;
  for (long t2 = tmin2; t2 <= tmax2; t2 += 2) {
    const double l = lf(t2) + lf(J3 - J2 + t2 + M1) + lf(J3 - J1 + t2 - M2) + lf(J1 + J2 - J3 - t2) +
                     lf(J1 - t2 - M1) + lf(J2 - t2 + M2);
    const long double term = std::exp(static_cast<long double>(lpre - l));
    acc.add(((t2 / 2) % 2) ? -term : term);
  }
  const long phase2 = J1 - J2 - M3;  // (-1)^{j1 - j2 - m3}
  const double sign = ((phase2 / 2) % 2) ? -1.0 : 1.0;
  return sign * static_cast<double>(acc.value());
}

}  // namespace hosc
