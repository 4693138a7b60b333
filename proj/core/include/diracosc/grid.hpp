#pragma once

#include <vector>

namespace diracosc {

/// Radial collocation grid with Dirichlet endpoints. Uniform grids live in r;
/// log-mapped grids are uniform in s = ln r, with the change of variable
/// recorded so discretized operators keep the spectrum of the r-space problem.
struct RadialGrid {
  enum class Mapping { Uniform, LogMapped };

  Mapping mapping = Mapping::Uniform;
  double lo = 0.0;   ///< left Dirichlet endpoint (in r)
  double hi = 0.0;   ///< right Dirichlet endpoint (in r)
  int n = 0;         ///< number of interior points
  double step = 0.0; ///< spacing: in r (Uniform) or in s = ln r (LogMapped)

  std::vector<double> r;  ///< interior abscissae, strictly increasing
  std::vector<double> w;  ///< trapezoid quadrature weights in r

  /// Uniform grid on [0, r_max] with n interior points r_i = i h.
  static RadialGrid uniform(double r_max, int n);

  /// Uniform grid on [r_lo, r_hi]; used for problems whose natural domain
  /// extends to negative coordinates (kappa = 0 exponential wells).
  static RadialGrid uniform_interval(double r_lo, double r_hi, int n);

  /// Log-mapped grid on [r_min, r_max], uniform in s = ln r.
  static RadialGrid log_mapped(double r_min, double r_max, int n);

  /// Same endpoints with the step exactly halved (n -> 2n + 1). The exact
  /// factor-2 ratio keeps Richardson extrapolation clean.
  RadialGrid refined() const;
};

}  // namespace diracosc
