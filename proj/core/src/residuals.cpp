#include "diracosc/residuals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace diracosc {

namespace {

// 4th-order stencils with a scale-aware step that backs off when the stencil
// leaves the evaluator's domain.
std::function<double(double)> fd_derivative(std::function<double(double)> f) {
  return [f = std::move(f)](double r) {
    double h = 1e-5 * (1.0 + std::abs(r));
    for (int attempt = 0; attempt < 8; ++attempt) {
      const double v = (f(r - 2 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) -
                        f(r + 2 * h)) /
                       (12.0 * h);
      if (std::isfinite(v)) return v;
      h *= 0.125;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
}

std::function<double(double)> fd_second_derivative(
    std::function<double(double)> f) {
  return [f = std::move(f)](double r) {
    double h = 2e-4 * (1.0 + std::abs(r));
    for (int attempt = 0; attempt < 8; ++attempt) {
      const double v = (-f(r - 2 * h) + 16.0 * f(r - h) - 30.0 * f(r) +
                        16.0 * f(r + h) - f(r + 2 * h)) /
                       (12.0 * h * h);
      if (std::isfinite(v)) return v;
      h *= 0.125;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
}

}  // namespace

ResidualReport schrodinger_residual(const ScalarField& phi,
                                    const std::function<double(double)>& F,
                                    const RadialGrid& grid) {
  if (!phi.f) throw std::invalid_argument("schrodinger_residual: missing phi");
  auto d2 = phi.d2f ? phi.d2f : fd_second_derivative(phi.f);
  double res2 = 0.0, norm2 = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r[i], w = grid.w[i];
    const double v = phi.f(r);
    const double rr = -d2(r) + F(r) * v;
    res2 += w * rr * rr;
    norm2 += w * v * v;
  }
  if (norm2 <= 0.0 || !std::isfinite(norm2)) return {0.0, true};
  if (!std::isfinite(res2))
    return {std::numeric_limits<double>::infinity(), false};
  return {std::sqrt(res2 / norm2), false};
}

ResidualReport dirac_residual(const SpinorSolution& solution,
                              const RelativisticPotential& pot,
                              const RadialGrid& grid) {
  const auto& phi = solution.phi;
  const auto& theta = solution.theta;
  if (!phi || !theta)
    throw std::invalid_argument("dirac_residual: solution lacks evaluators");
  auto dphi = solution.dphi ? solution.dphi : fd_derivative(phi);
  auto dtheta = solution.dtheta ? solution.dtheta : fd_derivative(theta);

  const double alpha = pot.alpha();
  const double S = pot.S(), C = pot.C(), kappa = pot.kappa();
  const double eps = solution.eps;
  const OddForm w = pot.w();

  double res2 = 0.0, norm2 = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r[i], wt = grid.w[i];
    const double g = w.value(r) + kappa / r;
    const double f = phi(r), th = theta(r);
    const double row1 = (C + 2.0 * alpha * S * g) * f +
                        alpha * (-S / alpha + C * g) * th - alpha * dtheta(r) -
                        eps * f;
    const double row2 = alpha * (-S / alpha + C * g) * f + alpha * dphi(r) -
                        C * th - eps * th;
    res2 += wt * (row1 * row1 + row2 * row2);
    norm2 += wt * (f * f + th * th);
  }
  if (norm2 <= 0.0 || !std::isfinite(norm2)) return {0.0, true};
  if (!std::isfinite(res2))
    return {std::numeric_limits<double>::infinity(), false};
  return {std::sqrt(res2 / norm2), false};
}

}  // namespace diracosc
