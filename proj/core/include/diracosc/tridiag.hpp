#pragma once

#include <functional>
#include <span>
#include <vector>

#include "diracosc/grid.hpp"

namespace diracosc {

/// Symmetric tridiagonal discretization of -d^2/dr^2 + F(r) with Dirichlet
/// boundaries, as the pencil A u = E W u. Uniform grids have W = 1. Log-mapped
/// grids carry the r = e^s change of variable with the symmetrizing half-power
/// substitution phi = sqrt(r) u, which leaves the eigenvalues unchanged and
/// puts the weight e^{2s} on the right-hand side.
class TridiagonalOperator {
 public:
  TridiagonalOperator(RadialGrid grid, std::vector<double> diag,
                      std::vector<double> off, std::vector<double> weight);

  int size() const { return static_cast<int>(diag_.size()); }
  const RadialGrid& grid() const { return grid_; }
  std::span<const double> diag() const { return diag_; }
  std::span<const double> off() const { return off_; }
  std::span<const double> weight() const { return weight_; }

  /// True when the weight is not identically one (log-mapped grids).
  bool generalized() const { return generalized_; }

  /// Maps a similarity-transformed eigenvector component back to the physical
  /// radial function value at grid point i (identity on uniform grids).
  double to_physical(double u_i, int i) const;

 private:
  RadialGrid grid_;
  std::vector<double> diag_, off_, weight_;
  bool generalized_ = false;
};

/// Central-difference discretization of [-d^2/dr^2 + F(r)] on the grid.
/// Throws if F is non-finite at any grid point.
TridiagonalOperator discretize(const std::function<double(double)>& F,
                               const RadialGrid& grid);

/// Number of pencil eigenvalues strictly below lambda (Sturm sequence count).
int sturm_count_below(const TridiagonalOperator& op, double lambda);

/// Lowest k eigenvalues in ascending order via Sturm-sequence bisection.
/// Deterministic: bisection runs to floating-point interval collapse.
std::vector<double> eigenvalues_lowest(const TridiagonalOperator& op, int k);

/// Same bisection kernel on raw pencil data (A, W), for callers without a
/// radial grid. weight may be empty (identity).
std::vector<double> sturm_eigenvalues(std::span<const double> diag,
                                      std::span<const double> off,
                                      std::span<const double> weight, int k);

/// Trapezoid inner product sum_i w_i f_i g_i on the grid.
double quadrature_inner(std::span<const double> f, std::span<const double> g,
                        const RadialGrid& grid);

/// Richardson extrapolation of a second-order-accurate quantity computed at
/// steps h_coarse and h_fine: (rho^2 e_fine - e_coarse)/(rho^2 - 1).
double richardson(double e_coarse, double e_fine, double h_coarse,
                  double h_fine);

}  // namespace diracosc
