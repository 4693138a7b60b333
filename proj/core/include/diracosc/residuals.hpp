#pragma once

#include <functional>

#include "diracosc/grid.hpp"
#include "diracosc/solutions.hpp"

namespace diracosc {

/// Scalar radial field with optional analytic derivatives; fourth-order
/// central differences stand in for whichever of df/d2f is absent.
struct ScalarField {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
};

struct ResidualReport {
  double value = 0.0;
  bool degenerate = false;  ///< set when the reference norm vanishes
};

/// Relative L2 residual of the scalar second-order form [-d^2/dr^2 + F] phi
/// on the grid: ||(-phi'' + F phi)||_2 / ||phi||_2.
ResidualReport schrodinger_residual(const ScalarField& phi,
                                    const std::function<double(double)>& F,
                                    const RadialGrid& grid);

/// Relative L2 residual of both rows of the first-order radial system applied
/// to (phi, theta) at energy solution.eps, using the solution's analytic
/// derivatives: || rows ||_2 / || (phi, theta) ||_2.
ResidualReport dirac_residual(const SpinorSolution& solution,
                              const RelativisticPotential& pot,
                              const RadialGrid& grid);

}  // namespace diracosc
