#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracosc/grid.hpp"
#include "diracosc/specialfn.hpp"
#include "diracosc/tridiag.hpp"

using namespace diracosc;

namespace {

// Independent oracle: the finite binomial-coefficient sum
//   L_n^a(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!
// evaluated in quad precision to survive the cancellation at large n, x.
double laguerre_series(int n, double a, double x) {
  __float128 binom = 1.0q;  // C(n+a, n)
  for (int j = 1; j <= n; ++j)
    binom *= (static_cast<__float128>(a) + j) / j;
  __float128 sum = 0.0q;
  __float128 xpow = 1.0q, kfact = 1.0q;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      xpow *= x;
      kfact *= k;
      // C(n+a, n-k) = C(n+a, n-k+1) * (n-k+1) / (a+k)
      binom *= (static_cast<__float128>(n) - k + 1) /
               (static_cast<__float128>(a) + k);
    }
    const __float128 term = binom * xpow / kfact;
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  x.resize(m);
  w.resize(m);
  for (int i = 0; i < m; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = m * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        double q0 = 1.0, q1 = t;
        for (int k = 2; k <= m; ++k) {
          const double q2 = ((2 * k - 1) * t * q1 - (k - 1) * q0) / k;
          q0 = q1;
          q1 = q2;
        }
        const double d = m * (t * q1 - q0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * d * d);
        break;
      }
    }
  }
}

// composite Gauss-Legendre of f over [0, upper]
template <typename F>
double integrate(F&& f, double upper, int panels = 12, int order = 32) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = upper * p / panels, b = upper * (p + 1) / panels;
    for (int i = 0; i < order; ++i) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * x[i];
      acc += 0.5 * (b - a) * w[i] * f(t);
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("laguerre: closed-form low orders") {
  CHECK(laguerre(0, 0.5, 3.7) == 1.0);
  CHECK(laguerre(1, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  // L_2^a = x^2/2 - (a+2) x + (a+1)(a+2)/2
  CHECK(laguerre(2, 0.5, 1.0) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(laguerre(3, -0.5, 2.5) ==
        doctest::Approx(laguerre_series(3, -0.5, 2.5)).epsilon(1e-13));
}

TEST_CASE("laguerre: recurrence agrees with the series oracle") {
  for (int n : {0, 1, 2, 5, 13, 27, 50}) {
    for (double a : {-0.5, 0.0, 0.5, 2.0}) {
      for (double x = 0.0; x <= 60.0; x += 4.1) {
        const double ref = laguerre_series(n, a, x);
        const double got = laguerre(n, a, x);
        CHECK(std::abs(got - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("laguerre: domain rejections") {
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre(kLaguerreMaxDegree + 1, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre(2, 0.0, std::nan("")), std::domain_error);
}

TEST_CASE("laguerre: derivative identities") {
  const int n = 6;
  const double a = 0.5, x = 2.3, h = 1e-6;
  const double fd =
      (laguerre(n, a, x + h) - laguerre(n, a, x - h)) / (2.0 * h);
  CHECK(laguerre_deriv(n, a, x) == doctest::Approx(fd).epsilon(1e-8));
  const double fd2 = (laguerre(n, a, x + h) - 2.0 * laguerre(n, a, x) +
                      laguerre(n, a, x - h)) /
                     (h * h);
  CHECK(laguerre_deriv2(n, a, x) == doctest::Approx(fd2).epsilon(1e-3));
}

TEST_CASE("laguerre: weighted orthogonality by quadrature") {
  // substitute x = u^2 so the x^a weight is polynomial at the origin even for
  // the a = -1/2 case, then composite Gauss-Legendre converges fast
  for (double a : {-0.5, 0.5, 2.0}) {
    for (int n = 0; n <= 8; ++n) {
      for (int m = n; m <= 8; ++m) {
        const double val = integrate(
            [&](double u) {
              const double x = u * u;
              return 2.0 * std::pow(u, 2.0 * a + 1.0) * std::exp(-x) *
                     laguerre(n, a, x) * laguerre(m, a, x);
            },
            std::sqrt(140.0));
        const double expected =
            n == m ? std::exp(log_gamma(n + a + 1.0) - log_gamma(n + 1.0)) : 0.0;
        CHECK(std::abs(val - expected) <= 1e-8 * std::max(1.0, expected));
      }
    }
  }
}

TEST_CASE("log_gamma: pinned values") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_gamma: recursion identity and library cross-check") {
  for (double x = 0.1; x <= 100.0; x *= 1.37) {
    CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <= 1e-12);
    CHECK(std::abs(log_gamma(x) - std::lgamma(x)) <=
          1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("norm_const_oscillator: values and scaling") {
  // independent route through tgamma
  CHECK(norm_const_oscillator(0, 0.0, 1.0) ==
        doctest::Approx(std::sqrt(2.0 / std::tgamma(1.5))).epsilon(1e-13));
  CHECK(norm_const_oscillator(0, 1.0, 1.0) ==
        doctest::Approx(std::sqrt(2.0 / std::tgamma(2.5))).epsilon(1e-13));
  for (int n : {0, 3, 9}) {
    for (double kappa : {0.0, 1.0, 2.5}) {
      const double r = norm_const_oscillator(n, kappa, 2.37) /
                       norm_const_oscillator(n, kappa, 1.0);
      CHECK(r == doctest::Approx(std::sqrt(2.37)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(norm_const_oscillator(0, -2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(norm_const_oscillator(-1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("norm_const_oscillator: quadrature normalization oracle") {
  // phi_0(r) = a_0 (lambda r)^{kappa+1} e^{-lambda^2 r^2/2} must have unit norm
  for (double kappa : {0.0, 1.0}) {
    const double a0 = norm_const_oscillator(0, kappa, 1.0);
    auto grid = RadialGrid::uniform(14.0, 6000);
    std::vector<double> f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
      const double r = grid.r[i];
      f[i] = a0 * std::pow(r, kappa + 1.0) * std::exp(-r * r / 2.0);
    }
    CHECK(std::abs(quadrature_inner(f, f, grid) - 1.0) <= 1e-8);
  }
}
