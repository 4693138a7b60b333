#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <vector>

#include "diracosc/grid.hpp"
#include "diracosc/residuals.hpp"
#include "diracosc/solutions.hpp"
#include "diracosc/tridiag.hpp"

using namespace diracosc;

TEST_CASE("grid: weights sum to the domain length") {
  auto g = RadialGrid::uniform(1.0, 128);
  const double sum = std::accumulate(g.w.begin(), g.w.end(), 0.0);
  // interior nodes carry n h; the two Dirichlet half-cells hold the rest
  CHECK(sum + g.step == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.r.front() > 0.0);
  CHECK(std::is_sorted(g.r.begin(), g.r.end()));
  CHECK_THROWS(RadialGrid::uniform(1.0, 8));  // too small
}

TEST_CASE("grid: refinement halves the step exactly") {
  auto g = RadialGrid::uniform(7.0, 100);
  auto f = g.refined();
  CHECK(f.n == 201);
  CHECK(f.step == doctest::Approx(0.5 * g.step).epsilon(1e-15));
  auto lg = RadialGrid::log_mapped(1e-4, 10.0, 64);
  auto lf = lg.refined();
  CHECK(lf.step == doctest::Approx(0.5 * lg.step).epsilon(1e-15));
}

TEST_CASE("quadrature: unit integral and smooth function") {
  auto g = RadialGrid::uniform(1.0, 400);
  std::vector<double> ones(g.n, 1.0);
  // the rule treats boundary samples as Dirichlet zeros, so a unit integrand
  // is short by exactly one step
  CHECK(quadrature_inner(ones, ones, g) ==
        doctest::Approx(1.0).epsilon(2.0 / g.n));
  CHECK(quadrature_inner(ones, ones, g) + g.step ==
        doctest::Approx(1.0).epsilon(1e-14));
  std::vector<double> s(g.n);
  for (int i = 0; i < g.n; ++i) s[i] = std::sin(M_PI * g.r[i]);
  CHECK(quadrature_inner(s, s, g) == doctest::Approx(0.5).epsilon(1e-5));
  std::vector<double> bad(g.n - 1, 0.0);
  CHECK_THROWS(quadrature_inner(bad, bad, g));
}

TEST_CASE("discretize: stencil and symmetry on a uniform grid") {
  auto g = RadialGrid::uniform(2.0, 32);
  auto op = discretize([](double r) { return 3.0 * r; }, g);
  const double h = g.step;
  for (int i = 0; i < op.size(); ++i)
    CHECK(op.diag()[i] == doctest::Approx(2.0 / (h * h) + 3.0 * g.r[i]));
  for (int i = 0; i + 1 < op.size(); ++i)
    CHECK(op.off()[i] == doctest::Approx(-1.0 / (h * h)));
  CHECK_FALSE(op.generalized());
  CHECK_THROWS(discretize([](double) { return std::nan(""); }, g));
}

TEST_CASE("eigenvalues: particle in a box") {
  auto g = RadialGrid::uniform(1.0, 1500);
  auto op = discretize([](double) { return 0.0; }, g);
  auto vals = eigenvalues_lowest(op, 2);
  CHECK(vals[0] == doctest::Approx(M_PI * M_PI).epsilon(2e-6));
  CHECK(vals[1] == doctest::Approx(4.0 * M_PI * M_PI).epsilon(2e-6));

  // against the exact discrete spectrum: within 1e-12 of the matrix scale
  const double h = g.step;
  for (int k : {1, 2}) {
    const double exact = 2.0 / (h * h) * (1.0 - std::cos(k * M_PI * h));
    CHECK(std::abs(vals[k - 1] - exact) <= 1e-12 * (4.0 / (h * h)));
  }

  auto fine = discretize([](double) { return 0.0; }, g.refined());
  auto vf = eigenvalues_lowest(fine, 2);
  const double rich = richardson(vals[0], vf[0], g.step, g.refined().step);
  CHECK(rich == doctest::Approx(M_PI * M_PI).epsilon(1e-8));
}

TEST_CASE("eigenvalues: analytic 2x2 and dense cross-check") {
  const std::vector<double> d2{2.0, 2.0}, o2{-1.0};
  auto v2 = sturm_eigenvalues(d2, o2, {}, 2);
  CHECK(v2[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(v2[1] == doctest::Approx(3.0).epsilon(1e-13));

  // N <= 12: agree with a dense solver to 1e-12
  const int n = 11;
  std::vector<double> d(n), o(n - 1);
  for (int i = 0; i < n; ++i) d[i] = 2.0 + 0.3 * std::sin(1.7 * i);
  for (int i = 0; i + 1 < n; ++i) o[i] = -0.8 + 0.1 * std::cos(2.3 * i);
  auto mine = sturm_eigenvalues(d, o, {}, n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    M(i, i) = d[i];
    if (i + 1 < n) M(i, i + 1) = M(i + 1, i) = o[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  for (int i = 0; i < n; ++i)
    CHECK(mine[i] == doctest::Approx(es.eigenvalues()[i]).epsilon(1e-12));
}

TEST_CASE("eigenvalues: Sturm count matches the computed spectrum") {
  auto g = RadialGrid::uniform(10.0, 800);
  auto op = discretize([](double r) { return r * r; }, g);
  auto vals = eigenvalues_lowest(op, 6);
  const double shift = 0.5 * (vals[3] + vals[4]);
  CHECK(sturm_count_below(op, shift) == 4);
}

TEST_CASE("eigenvalues: oscillator operator vs spectrum formula") {
  // kappa = 1, lambda = 1, alpha = 1: F = 2/r^2 + r^2 + 1, eigenvalues
  // 2(2n + 2 kappa + 1) = {6, 10, ...}
  auto F = [](double r) { return 2.0 / (r * r) + r * r + 1.0; };
  auto g = RadialGrid::uniform(12.0, 4000);
  auto vals = eigenvalues_lowest(discretize(F, g), 1);
  CHECK(std::abs(vals[0] / 6.0 - 1.0) <= 1e-4);
  auto gf = g.refined();
  auto vf = eigenvalues_lowest(discretize(F, gf), 1);
  CHECK(std::abs(richardson(vals[0], vf[0], g.step, gf.step) / 6.0 - 1.0) <= 1e-8);
}

TEST_CASE("eigenvalues: log-mapped grid leaves the spectrum in place") {
  // box on [r0, r1] computed through the log-mapped generalized pencil
  auto g = RadialGrid::log_mapped(0.5, 1.5, 3000);
  auto op = discretize([](double) { return 0.0; }, g);
  CHECK(op.generalized());
  auto vals = eigenvalues_lowest(op, 1);
  CHECK(vals[0] == doctest::Approx(M_PI * M_PI).epsilon(1e-5));
}

TEST_CASE("richardson: removes the leading h^2 error exactly") {
  auto e = [](double h) { return 3.7 + 0.21 * h * h; };
  CHECK(richardson(e(0.1), e(0.05), 0.1, 0.05) ==
        doctest::Approx(3.7).epsilon(1e-13));
}

TEST_CASE("schrodinger_residual: detects the right things") {
  auto sol = oscillator_solution(1, 1, 1.0, 1.0);
  auto grid = RadialGrid::uniform(12.0, 2000);
  auto F = [&](double r) { return sol.potential.effective_potential(sol.eps, r); };
  CHECK(schrodinger_residual({sol.phi, sol.dphi, sol.d2phi}, F, grid).value <= 1e-10);
  // FD fallback path
  CHECK(schrodinger_residual({sol.phi, {}, {}}, F, grid).value <= 1e-6);
  // constant shift moves the residual by ~ ||phi||
  auto Fs = [&](double r) { return F(r) + 1.0; };
  const double shifted =
      schrodinger_residual({sol.phi, sol.dphi, sol.d2phi}, Fs, grid).value;
  CHECK(shifted == doctest::Approx(1.0).epsilon(1e-6));
  // zero input is tagged degenerate
  auto zero = [](double) { return 0.0; };
  CHECK(schrodinger_residual({zero, zero, zero}, F, grid).degenerate);
}

TEST_CASE("dirac_residual: catalog state and detuned energy") {
  auto sol = oscillator_solution(0, 1, 1.0, 1.0);
  auto grid = RadialGrid::uniform(12.0, 2000);
  CHECK(dirac_residual(sol, sol.potential, grid).value <= 1e-10);
  auto detuned = sol;
  detuned.eps += 0.01;
  CHECK(dirac_residual(detuned, sol.potential, grid).value >= 1e-3);
}
