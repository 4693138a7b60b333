#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "diracosc/dirac_core.hpp"
#include "diracosc/grid.hpp"

namespace diracosc {

/// Superpotential G(r) = kappa/r + W(r) with its analytic derivative. With
/// kappa = 0 the domain extends over the whole line.
struct Superpotential {
  double kappa = 0.0;
  OddForm w = OddForm::zero();

  double value(double r) const {
    return kappa == 0.0 ? w.value(r) : kappa / r + w.value(r);
  }
  double deriv(double r) const {
    return kappa == 0.0 ? w.deriv(r) : -kappa / (r * r) + w.deriv(r);
  }

  /// Partner potentials (V+, V-) = (G^2 + G', G^2 - G').
  /// Requires r != 0 when kappa != 0.
  std::pair<double, double> partner_potentials(double r) const;
};

/// Finite-matrix realization of the graded algebra on a uniform grid with
/// Dirichlet boundaries. D is the antisymmetric central-difference derivative,
/// so matrix transposition realizes the formal adjoint exactly:
///   L+ = [[0, G - D], [0, 0]],  L- = [[0, 0], [G + D, 0]],
///   L3 = 1/2 diag(I, -I),       L0 = {L+, L-}.
/// The nilpotent block structure makes [L3, L+-] = +-L+-, {L+,L-} = L0,
/// [L0, L3] = 0 and [L0, L+-] = 0 exact at any resolution. What is limited by
/// discretization is the agreement of L0's diagonal blocks with the canonical
/// three-point discretization of -d^2/dr^2 + V-+, exposed via l0_canonical().
struct AlgebraRealization {
  RadialGrid grid;
  Superpotential g;
  Eigen::MatrixXd Lp, Lm, L3, L0;

  /// Independent block-diagonal discretization diag(-d'' + V-, -d'' + V+)
  /// using the standard three-point Laplacian.
  Eigen::MatrixXd l0_canonical() const;

  /// Smooth two-component test vector (r^3, r^4) e^{-r^2/(2 s^2)} used by the
  /// windowed convergence functionals; s is the grid midpoint scale.
  Eigen::VectorXd smooth_test_vector() const;

  /// L2 norm of (M v) restricted to grid points with window_lo <= r <=
  /// window_hi, normalized by the L2 norm of v on the window. Measures
  /// operator identities on smooth functions away from the boundary layers.
  double windowed_action_norm(const Eigen::MatrixXd& M, double window_lo,
                              double window_hi) const;
};

/// Builds the realization; the grid must be uniform with at least 16 points.
AlgebraRealization realize_algebra(const Superpotential& g,
                                   const RadialGrid& grid);

/// Hermitian first-order element Q = [[1, a(G-D)], [a(G+D), -1]] with
/// a = 2 lambda_p / lambda3, after renormalization by the mass factor
/// lambda3/2. lambda3 must be nonzero; the lambda0 coefficient is forced to
/// zero by hermiticity plus first-order structure.
Eigen::MatrixXd assemble_Q(double lambda_p, double lambda3,
                           const AlgebraRealization& realization);

struct SusyDegeneracyReport {
  std::vector<double> minus;          ///< lowest eigenvalues of -d'' + V-
  std::vector<double> plus;           ///< lowest eigenvalues of -d'' + V+
  std::vector<double> pair_rel_err;   ///< |minus[m]/plus[m-1] - 1|, m >= 1
  double zero_mode = 0.0;             ///< smallest |eigenvalue| of V-
  bool zero_mode_flagged = false;     ///< true when it is resolvably zero
};

/// Computes the lowest k eigenvalues of the two partner operators with
/// Richardson extrapolation over the grid and its refinement, reports the
/// (m)-(m-1) pairing and the unpaired V- ground state.
SusyDegeneracyReport susy_degeneracy_check(const Superpotential& g,
                                           const RadialGrid& grid, int k);

}  // namespace diracosc
