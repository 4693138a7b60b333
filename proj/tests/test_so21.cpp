#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracosc/grid.hpp"
#include "diracosc/residuals.hpp"
#include "diracosc/so21.hpp"
#include "diracosc/tridiag.hpp"

using namespace diracosc;

TEST_CASE("representation coefficients") {
  CHECK(rep_action_coeff(0.7, 0, So21Generator::Lowering) == 0.0);
  CHECK(rep_action_coeff(0.0, 0, So21Generator::Raising) == doctest::Approx(1.0));
  CHECK(rep_action_coeff(0.3, 4, So21Generator::L3) == doctest::Approx(5.3));
  CHECK(rep_action_coeff(0.3, 0, So21Generator::Casimir) ==
        doctest::Approx(0.3 * 1.3));
  // ladder product consistency
  for (double gamma : {0.0, 0.25, 1.0}) {
    for (int n : {0, 1, 4}) {
      const double up = rep_action_coeff(gamma, n, So21Generator::Raising);
      const double down = rep_action_coeff(gamma, n + 1, So21Generator::Lowering);
      CHECK(up * down ==
            doctest::Approx((n + 1.0) * (n + 2.0 * gamma + 2.0) / 2.0));
    }
  }
  CHECK_THROWS_AS(rep_action_coeff(-0.8, 0, So21Generator::L3), std::domain_error);
  CHECK_THROWS_AS(So21Rep(-0.6), std::domain_error);
}

TEST_CASE("bound-state branch restriction on tau3") {
  CHECK_THROWS_WITH_AS(oscillator_strength_from_tau3(0.3),
                       doctest::Contains("tau3 > 1/2"), std::domain_error);
  CHECK(oscillator_strength_from_tau3(0.75) ==
        doctest::Approx(std::pow(0.5 / 16.0, 0.25)).epsilon(1e-14));
  // lambda^2 = 1/4 corresponds to tau3 = 1
  CHECK(oscillator_strength_from_tau3(1.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("oscillator states: norm, equation residual, small-x slope") {
  auto grid = RadialGrid::uniform(40.0, 6000);
  for (double gamma : {0.0, 0.25, 1.0}) {
    auto st = oscillator_state(gamma, 2, 0.5);
    std::vector<double> v(grid.n);
    for (int i = 0; i < grid.n; ++i) v[i] = st.phi(grid.r[i]);
    CHECK(std::abs(quadrature_inner(v, v, grid) - 1.0) <= 1e-8);

    auto F = [&](double x) {
      return (4.0 * gamma * (gamma + 1.0) + 0.75) / (x * x) +
             std::pow(0.5, 4) * x * x - 2.0 * st.energy;
    };
    CHECK(schrodinger_residual({st.phi, st.dphi, st.d2phi}, F, grid).value <=
          1e-10);

    // leading power x^{2 gamma + 3/2} at small x
    const double slope =
        std::log(st.phi(2e-3) / st.phi(1e-3)) / std::log(2.0);
    CHECK(slope == doctest::Approx(2.0 * gamma + 1.5).epsilon(1e-5));
  }
  CHECK(oscillator_state(0.25, 1, 0.5).energy ==
        doctest::Approx(2.0 * 0.25 * 2.25));
  CHECK_THROWS_AS(oscillator_wavefunction(0.0, 0, 0.5, -1.0), std::domain_error);
}

TEST_CASE("oscillator states: dilation bridge between strengths") {
  // Phi^lambda(x) = sqrt(2 lambda) Phi^{1/2}(2 lambda x)
  const double lambda = 1.3, gamma = 0.25;
  auto a = oscillator_state(gamma, 3, lambda);
  auto b = oscillator_state(gamma, 3, 0.5);
  for (double x : {0.3, 1.0, 2.1})
    CHECK(a.phi(x) ==
          doctest::Approx(std::sqrt(2.0 * lambda) * b.phi(2.0 * lambda * x))
              .epsilon(1e-12));
}

TEST_CASE("ladder overlaps against the representation coefficients") {
  auto grid = RadialGrid::uniform(40.0, 8000);
  for (double gamma : {0.0, 0.25}) {
    for (int n : {0, 1, 3}) {
      auto rep = ladder_overlap_check(gamma, n, 0.5, grid);
      CHECK(std::abs(std::abs(rep.raise_overlap) - rep.raise_expected_abs) <=
            1e-6);
      if (n >= 1)
        CHECK(std::abs(std::abs(rep.lower_overlap) - rep.lower_expected_abs) <=
              1e-6);
      CHECK(rep.selection_max <= 1e-8);
      CHECK(std::abs(rep.casimir - rep.casimir_expected) <= 1e-6);
    }
  }
  // the realization flips the ladder direction: the raising overlap is -c+
  auto rep = ladder_overlap_check(0.0, 0, 0.5, grid);
  CHECK(rep.raise_overlap == doctest::Approx(-1.0).epsilon(1e-8));
  // overlaps are dilation-invariant in the strength parameter
  auto rep2 = ladder_overlap_check(0.0, 0, 1.7, grid);
  CHECK(rep2.raise_overlap == doctest::Approx(rep.raise_overlap).epsilon(1e-13));
  CHECK_THROWS(ladder_overlap_check(0.0, 0, 0.5, RadialGrid::uniform(5.0, 64)));
}

TEST_CASE("tilting and commutator relations converge at second order") {
  auto g1 = RadialGrid::uniform(30.0, 128);
  auto g2 = g1.refined();
  auto r1 = tilting_infinitesimal_check(g1, 0.25);
  auto r2 = tilting_infinitesimal_check(g2, 0.25);
  CHECK(r1.tilt_plus / r2.tilt_plus == doctest::Approx(4.0).epsilon(0.13));
  CHECK(r1.tilt_minus / r2.tilt_minus == doctest::Approx(4.0).epsilon(0.13));
  CHECK(r1.commutator_pm / r2.commutator_pm == doctest::Approx(4.0).epsilon(0.13));
}

TEST_CASE("nonrelativistic transformations of the oscillator") {
  // q = x^2 gives a Coulomb-form f(r) = A/r^2 + B/r + C: fitting the three
  // coefficients from three samples must reproduce a fourth point exactly
  auto res = nonrelativistic_pct(PctFamily::Square, 0.25, 1, 0.5);
  {
    const double f1 = res.f_of_r(1.0), f2 = res.f_of_r(2.0), f3 = res.f_of_r(4.0);
    const double u1 = 1.0, u2 = 0.5, u3 = 0.25;  // u = 1/r
    const double A = ((f1 - f3) / (u1 - u3) - (f2 - f3) / (u2 - u3)) / (u1 - u2);
    const double B = (f1 - f3) / (u1 - u3) - A * (u1 + u3);
    const double C = f1 - A * u1 * u1 - B * u1;
    const double ut = 1.0 / 3.1;
    CHECK(res.f_of_r(3.1) ==
          doctest::Approx(A * ut * ut + B * ut + C).epsilon(1e-10));
  }

  struct Case { PctFamily fam; double mu; };
  for (auto c : {Case{PctFamily::Square, 0.0}, Case{PctFamily::NegLog, 0.0},
                 Case{PctFamily::Power, 1.0}}) {
    auto pr = nonrelativistic_pct(c.fam, 0.25, 1, 0.5, c.mu);
    auto grid = RadialGrid::uniform_interval(
        pr.r_lo + 1e-6 * (pr.r_hi - pr.r_lo), pr.r_hi, 3000);
    auto F = [&](double r) { return -pr.f_of_r(r); };
    CHECK(schrodinger_residual({pr.psi, pr.dpsi, pr.d2psi}, F, grid).value <=
          1e-8);
  }

  // q = -ln x: no centrifugal term survives (S-wave form):
  // f(r) = c0 + c1 e^{-2r} + c2 e^{-4r}
  auto m = nonrelativistic_pct(PctFamily::NegLog, 0.25, 0, 0.5);
  {
    const double y1 = std::exp(-2.0 * 0.7), y2 = std::exp(-2.0 * 1.1),
                 y3 = std::exp(-2.0 * 1.6);
    const double f1 = m.f_of_r(0.7), f2 = m.f_of_r(1.1), f3 = m.f_of_r(1.6);
    const double A2 = ((f1 - f3) / (y1 - y3) - (f2 - f3) / (y2 - y3)) / (y1 - y2);
    const double B2 = (f1 - f3) / (y1 - y3) - A2 * (y1 + y3);
    const double C2 = f1 - A2 * y1 * y1 - B2 * y1;
    const double rt = 1.35, yt = std::exp(-2.0 * rt);
    CHECK(m.f_of_r(rt) ==
          doctest::Approx(A2 * yt * yt + B2 * yt + C2).epsilon(1e-10));
  }

  CHECK_THROWS_AS(nonrelativistic_pct(PctFamily::Power, 0.25, 0, 0.5, 0.5),
                  std::domain_error);
}
