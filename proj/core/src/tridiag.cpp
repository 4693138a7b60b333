#include "diracosc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diracosc {

TridiagonalOperator::TridiagonalOperator(RadialGrid grid,
                                         std::vector<double> diag,
                                         std::vector<double> off,
                                         std::vector<double> weight)
    : grid_(std::move(grid)),
      diag_(std::move(diag)),
      off_(std::move(off)),
      weight_(std::move(weight)) {
  if (diag_.size() != static_cast<size_t>(grid_.n) ||
      off_.size() + 1 != diag_.size() || weight_.size() != diag_.size())
    throw std::invalid_argument("TridiagonalOperator: inconsistent sizes");
  for (double v : weight_)
    if (v != 1.0) { generalized_ = true; break; }
}

double TridiagonalOperator::to_physical(double u_i, int i) const {
  if (grid_.mapping == RadialGrid::Mapping::LogMapped)
    return std::sqrt(grid_.r[i]) * u_i;
  return u_i;
}

TridiagonalOperator discretize(const std::function<double(double)>& F,
                               const RadialGrid& grid) {
  const int n = grid.n;
  std::vector<double> diag(n), off(n - 1), weight(n, 1.0);
  const double h = grid.step;
  if (grid.mapping == RadialGrid::Mapping::Uniform) {
    for (int i = 0; i < n; ++i) {
      const double f = F(grid.r[i]);
      if (!std::isfinite(f))
        throw std::domain_error("discretize: F not finite at grid point");
      diag[i] = 2.0 / (h * h) + f;
    }
  } else {
    // -u'' + [1/4 + r^2 F(r)] u = E r^2 u  in s = ln r after phi = sqrt(r) u.
    for (int i = 0; i < n; ++i) {
      const double r = grid.r[i];
      const double f = F(r);
      if (!std::isfinite(f))
        throw std::domain_error("discretize: F not finite at grid point");
      diag[i] = 2.0 / (h * h) + 0.25 + r * r * f;
      weight[i] = r * r;
    }
  }
  std::fill(off.begin(), off.end(), -1.0 / (h * h));
  return TridiagonalOperator(grid, std::move(diag), std::move(off),
                             std::move(weight));
}

namespace {

int sturm_count(std::span<const double> diag, std::span<const double> off2,
                std::span<const double> weight, double lam) {
  constexpr double tiny = 1e-300;
  int count = 0;
  double d = diag[0] - lam * weight[0];
  if (d == 0.0) d = tiny;
  if (d < 0.0) ++count;
  for (size_t i = 1; i < diag.size(); ++i) {
    d = (diag[i] - lam * weight[i]) - off2[i - 1] / d;
    if (d == 0.0) d = tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

int sturm_count_below(const TridiagonalOperator& op, double lambda) {
  std::vector<double> off2(op.off().begin(), op.off().end());
  for (double& v : off2) v *= v;
  return sturm_count(op.diag(), off2, op.weight(), lambda);
}

std::vector<double> eigenvalues_lowest(const TridiagonalOperator& op, int k) {
  return sturm_eigenvalues(op.diag(), op.off(), op.weight(), k);
}

std::vector<double> sturm_eigenvalues(std::span<const double> diag,
                                      std::span<const double> off,
                                      std::span<const double> weight, int k) {
  const int n = static_cast<int>(diag.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("eigenvalues_lowest: k out of range");
  std::vector<double> unit;
  if (weight.empty()) {
    unit.assign(n, 1.0);
    weight = unit;
  }

  std::vector<double> off2(off.begin(), off.end());
  for (double& v : off2) v *= v;

  // Gershgorin bounds for the pencil (weights are positive).
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i < n - 1) radius += std::abs(off[i]);
    lo = std::min(lo, (diag[i] - radius) / weight[i]);
    hi = std::max(hi, (diag[i] + radius) / weight[i]);
  }

  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    // Bisect until the interval collapses in floating point; deterministic
    // and well under the 1e-12 relative contract.
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      if (sturm_count(diag, off2, weight, m) >= j + 1)
        b = m;
      else
        a = m;
    }
    out[j] = 0.5 * (a + b);
    lo = out[j];  // eigenvalues are ascending; reuse as lower bound
  }
  return out;
}

double quadrature_inner(std::span<const double> f, std::span<const double> g,
                        const RadialGrid& grid) {
  if (f.size() != g.size() || f.size() != grid.r.size())
    throw std::invalid_argument("quadrature_inner: grid mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < f.size(); ++i) acc += grid.w[i] * f[i] * g[i];
  return acc;
}

double richardson(double e_coarse, double e_fine, double h_coarse,
                  double h_fine) {
  const double rho2 = (h_coarse / h_fine) * (h_coarse / h_fine);
  return (rho2 * e_fine - e_coarse) / (rho2 - 1.0);
}

}  // namespace diracosc
