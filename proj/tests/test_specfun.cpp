#include <gtest/gtest.h>

#include <cmath>

#include "hosc/specfun.hpp"

using namespace hosc;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

TEST(Specfun, HermiteDegreeTwoRoots) {
  const auto roots = poly_roots(PolySpec::hermite(2));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(roots[1], 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Specfun, HermiteValuesMatchExplicitPolynomials) {
  for (double x : {-2.5, -0.3, 0.0, 0.7, 3.1}) {
    EXPECT_NEAR(eval_poly(PolySpec::hermite(3), x), 8 * x * x * x - 12 * x, 1e-12 * (1 + std::fabs(x * x * x)));
    EXPECT_NEAR(eval_poly(PolySpec::hermite(4), x), 16 * std::pow(x, 4) - 48 * x * x + 12, 1e-11 * (1 + std::pow(x, 4)));
  }
}

TEST(Specfun, LaguerreAtOrigin) {
  EXPECT_NEAR(eval_poly(PolySpec::laguerre(1, 0.5, Normalization::Orthogonal), 0.0), 1.5, 1e-15);
}

TEST(Specfun, LaguerreDegreeTwoRoots) {
  const auto roots = poly_roots(PolySpec::laguerre(2, 0.0));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(roots[1], 2.0 + std::sqrt(2.0), 1e-14);
}

TEST(Specfun, OrthonormalLaguerreHasUnitNorm) {
  // Gauss-Laguerre with 20 nodes integrates degree-8 squares exactly.
  const double a = 1.5;
  const auto nodes = poly_roots(PolySpec::laguerre(20, a));
  const PolySpec p = PolySpec::laguerre(4, a);
  // Christoffel weights of the order-20 rule from the orthonormal polynomials.
  double norm = 0.0;
  for (double x : nodes) {
    double christoffel = 0.0;
    for (int j = 0; j < 20; ++j) {
      const double v = eval_poly(PolySpec::laguerre(j, a), x);
      christoffel += v * v;
    }
    const double v = eval_poly(p, x);
    norm += v * v / christoffel;
  }
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(Specfun, GegenbauerRootsAreSymmetric) {
  const auto roots = poly_roots(PolySpec::gegenbauer(5, 1.5));
  ASSERT_EQ(roots.size(), 5u);
  for (size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], -roots[roots.size() - 1 - i], 1e-14);
  EXPECT_NEAR(roots[2], 0.0, 1e-15);
}

TEST(Specfun, GammaFamily) {
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-15);
  EXPECT_NEAR(ln_gamma(0.5), 0.5723649429247001, 1e-14);
  EXPECT_NEAR(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5, 1e-15);
  EXPECT_NEAR(binomial(5.0, 2), 10.0, 1e-13);
  EXPECT_NEAR(binomial(0.5, 2), -0.125, 1e-15);
}

TEST(Specfun, Hypergeometric3F2TrivialCases) {
  EXPECT_DOUBLE_EQ(hyp_3F2_unit(0.0, 1.3, 2.1, 0.7, 4.2), 1.0);
  EXPECT_NEAR(hyp_3F2_unit(-1.0, 1.3, 2.1, 0.7, 4.2), 1.0 - 1.3 * 2.1 / (0.7 * 4.2), 1e-15);
}

TEST(Specfun, Hypergeometric3F2Saalschutz) {
  // 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
  const int n = 6;
  const double a = 0.7, b = 2.3, c = 4.1;
  const double expected = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n));
  EXPECT_NEAR(hyp_3F2_unit(-n, a, b, c, 1.0 + a + b - c - n), expected, 1e-13 * std::fabs(expected));
}

TEST(Specfun, SeriesMatchesExponential) {
  EXPECT_NEAR(hyp_pFq_series({}, {}, -1.5), std::exp(-1.5), 1e-15);
}

TEST(Specfun, BesselHalfOrderZeroAtPi) {
  EXPECT_NEAR(bessel_J(0.5, kPi), 0.0, 1e-15);
  EXPECT_NEAR(bessel_J(0.5, 1.0), std::sqrt(2.0 / kPi) * std::sin(1.0), 1e-15);
}

TEST(Specfun, Wigner3jValues) {
  EXPECT_NEAR(wigner_3j(1, 1, 2, 0, 0, 0), std::sqrt(2.0 / 15.0), 1e-15);
  EXPECT_NEAR(wigner_3j(1, 1, 1, 0, 0, 0), 0.0, 1e-15);
  EXPECT_NEAR(wigner_3j(1, 1, 0, 1, -1, 0), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(Specfun, DomainErrors) {
  EXPECT_THROW(PolySpec::laguerre(2, -1.0), DomainError);
  EXPECT_THROW(PolySpec::gegenbauer(2, -0.5), DomainError);
  EXPECT_THROW(PolySpec::hermite(-1), DomainError);
}

}  // namespace
