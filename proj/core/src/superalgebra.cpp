#include "diracosc/superalgebra.hpp"

#include <cmath>
#include <stdexcept>

#include "diracosc/tridiag.hpp"

namespace diracosc {

std::pair<double, double> Superpotential::partner_potentials(double r) const {
  if (kappa != 0.0 && r == 0.0)
    throw std::domain_error("partner_potentials: r must be nonzero");
  const double g = value(r), gp = deriv(r);
  return {g * g + gp, g * g - gp};
}

AlgebraRealization realize_algebra(const Superpotential& g,
                                   const RadialGrid& grid) {
  if (grid.mapping != RadialGrid::Mapping::Uniform)
    throw std::invalid_argument("realize_algebra: uniform grid required");
  if (grid.n < 16)
    throw std::invalid_argument("realize_algebra: grid too small (n >= 16)");

  const int n = grid.n;
  const double h = grid.step;

  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    D(i, i + 1) = 1.0 / (2.0 * h);
    D(i + 1, i) = -1.0 / (2.0 * h);
  }
  Eigen::MatrixXd Gd = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) Gd(i, i) = g.value(grid.r[i]);

  AlgebraRealization out{grid, g, Eigen::MatrixXd::Zero(2 * n, 2 * n),
                         Eigen::MatrixXd::Zero(2 * n, 2 * n),
                         Eigen::MatrixXd::Zero(2 * n, 2 * n),
                         Eigen::MatrixXd::Zero(2 * n, 2 * n)};
  out.Lp.topRightCorner(n, n) = Gd - D;
  out.Lm.bottomLeftCorner(n, n) = Gd + D;
  out.L3.topLeftCorner(n, n) = 0.5 * Eigen::MatrixXd::Identity(n, n);
  out.L3.bottomRightCorner(n, n) = -0.5 * Eigen::MatrixXd::Identity(n, n);
  out.L0 = out.Lp * out.Lm + out.Lm * out.Lp;
  return out;
}

Eigen::MatrixXd AlgebraRealization::l0_canonical() const {
  const int n = grid.n;
  const double h = grid.step;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = 2.0 / (h * h);
    if (i + 1 < n) {
      T(i, i + 1) = -1.0 / (h * h);
      T(i + 1, i) = -1.0 / (h * h);
    }
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = T;
  out.bottomRightCorner(n, n) = T;
  for (int i = 0; i < n; ++i) {
    auto [vp, vm] = g.partner_potentials(grid.r[i]);
    out(i, i) += vm;          // (G-D)(G+D) block tends to -d'' + V-
    out(n + i, n + i) += vp;  // (G+D)(G-D) block tends to -d'' + V+
  }
  return out;
}

Eigen::VectorXd AlgebraRealization::smooth_test_vector() const {
  const int n = grid.n;
  const double scale = 0.25 * (grid.lo + grid.hi) + 0.25 * (grid.hi - grid.lo);
  Eigen::VectorXd v(2 * n);
  for (int i = 0; i < n; ++i) {
    const double r = grid.r[i];
    const double e = std::exp(-r * r / (2.0 * scale * scale));
    v[i] = r * r * r * e;
    v[n + i] = r * r * r * r * e;
  }
  return v;
}

double AlgebraRealization::windowed_action_norm(const Eigen::MatrixXd& M,
                                                double window_lo,
                                                double window_hi) const {
  const int n = grid.n;
  const Eigen::VectorXd v = smooth_test_vector();
  const Eigen::VectorXd u = M * v;
  double acc = 0.0, ref = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = grid.r[i];
    if (r < window_lo || r > window_hi) continue;
    acc += u[i] * u[i] + u[n + i] * u[n + i];
    ref += v[i] * v[i] + v[n + i] * v[n + i];
  }
  if (ref <= 0.0) throw std::invalid_argument("windowed_action_norm: empty window");
  return std::sqrt(grid.step * acc) / std::sqrt(grid.step * ref);
}

Eigen::MatrixXd assemble_Q(double lambda_p, double lambda3,
                           const AlgebraRealization& realization) {
  if (lambda3 == 0.0)
    throw std::invalid_argument("assemble_Q: zero mass factor lambda3");
  const double a = 2.0 * lambda_p / lambda3;
  const int n2 = static_cast<int>(realization.Lp.rows());
  const int n = n2 / 2;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n2, n2);
  q.topLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  q.bottomRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  q += a * (realization.Lp + realization.Lm);
  return q;
}

SusyDegeneracyReport susy_degeneracy_check(const Superpotential& g,
                                           const RadialGrid& grid, int k) {
  if (k < 2) throw std::invalid_argument("susy_degeneracy_check: k >= 2 required");

  auto v_plus = [&g](double r) { return g.partner_potentials(r).first; };
  auto v_minus = [&g](double r) { return g.partner_potentials(r).second; };

  auto solve = [&](const RadialGrid& gr, auto&& V, int count) {
    return eigenvalues_lowest(discretize(V, gr), count);
  };
  const RadialGrid fine = grid.refined();
  const auto em_c = solve(grid, v_minus, k);
  const auto em_f = solve(fine, v_minus, k);
  const auto ep_c = solve(grid, v_plus, k - 1);
  const auto ep_f = solve(fine, v_plus, k - 1);

  SusyDegeneracyReport rep;
  rep.minus.resize(k);
  rep.plus.resize(k - 1);
  for (int i = 0; i < k; ++i)
    rep.minus[i] = richardson(em_c[i], em_f[i], grid.step, fine.step);
  for (int i = 0; i < k - 1; ++i)
    rep.plus[i] = richardson(ep_c[i], ep_f[i], grid.step, fine.step);

  for (int m = 1; m < k; ++m)
    rep.pair_rel_err.push_back(
        std::abs(rep.minus[m] / rep.plus[m - 1] - 1.0));

  rep.zero_mode = rep.minus[0];
  // Flag only when it is small against the resolved first excited level.
  const double scale = std::abs(rep.minus[1]);
  const double disc_err = std::abs(em_f[1] - em_c[1]) + 1e-12 * scale;
  rep.zero_mode_flagged = std::abs(rep.zero_mode) < 10.0 * disc_err;
  return rep;
}

}  // namespace diracosc
