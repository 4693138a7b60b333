#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diracosc/dirac_core.hpp"

namespace diracosc {

struct RadialGrid;

enum class SolutionClass { Oscillator, Coulomb, Morse, ZeroEnergy };

const char* to_string(SolutionClass cls);

/// Closed-form bound state of the transformed radial problem: energy eps and
/// analytic evaluators for the two spinor components and their derivatives.
/// phi/dphi/d2phi come from Laguerre differentiation identities; theta is the
/// exact lower component (which for rest-energy states vanishes identically).
struct SpinorSolution {
  SolutionClass cls;
  int n;
  double eps;
  RelativisticPotential potential;
  std::function<double(double)> phi, dphi, d2phi, theta, dtheta;
  std::map<std::string, double> params;  ///< class parameters for reporting
  bool normalizable = true;
  std::string note;
};

/// Oscillator bound state for integer spin-orbit kappa. kappa >= 0 is the
/// kappa = l branch; kappa <= -1 the kappa = -l-1 branch. Energy
/// eps_n = sqrt(1 + 2 alpha^2 lambda^2 (2n + l + kappa + 1)).
SpinorSolution oscillator_solution(int n, int kappa, double lambda,
                                   double alpha);

/// Oscillator solution continued to real kappa: the regular eigenfunction
/// with exponent p = 1/2 + |kappa + 1/2|. Used as the transformation
/// reference, where the parameter maps produce non-integer kappa.
SpinorSolution oscillator_reference(int n, double kappa, double lambda,
                                    double alpha);

/// Coulomb bound state, |alpha Z| < |kappa|, kappa nonzero integer. c_sign
/// selects the sign of C = +-sqrt(1 - S^2) (default C > 0). The radial
/// exponent uses the regular root sigma_eff = -1/2 + |sigma + 1/2|, which is
/// the branch the spectrum formula N = n + 1/2 + |sigma + 1/2| belongs to.
SpinorSolution coulomb_solution(int n, int kappa, double Z, double alpha,
                                int c_sign = +1);

/// Exponential-well bound state (kappa = 0 forced). Requires
/// n <= sqrt(1 + T^2)/(alpha tau) and v_n = T eps_n/(alpha tau) - n > 0.
SpinorSolution morse_solution(int n, double tau, double rho, double lambda,
                              double alpha);

/// Rest-energy (eps = 1) power-law state, n = 0. Branch rule: kappa = l for
/// beta < 0, kappa = -l-1 for beta > 0; beta must avoid {0, 1, 2}. The
/// normalization constant is computed by quadrature; the kappa = 0
/// configuration (l = 0, beta < 0) is constructible but not normalizable.
SpinorSolution zero_energy_solution(int l, double beta, double lambda,
                                    double alpha);

struct OscillatorParams {
  int kappa;
  double lambda;
  double alpha;
};
struct CoulombParams {
  int kappa;
  double Z;
  double alpha;
  int c_sign = +1;
};
struct MorseParams {
  double tau;
  double rho;
  double lambda;
  double alpha;
};
struct ZeroEnergyParams {
  int l;
  double beta;
  double lambda;
  double alpha;
};
using ClassParams = std::variant<OscillatorParams, CoulombParams, MorseParams,
                                 ZeroEnergyParams>;

struct SpectrumEntry {
  int n;
  std::optional<double> eps;  ///< empty when the level is inadmissible
  std::string skip_reason;    ///< nonempty for skipped levels
};

/// Batch spectrum evaluation over n in [n_from, n_to]; inadmissible levels
/// are reported with a reason tag instead of aborting.
std::vector<SpectrumEntry> spectrum_table(const ClassParams& params,
                                          int n_from, int n_to);

/// Largest admissible Morse level bound sqrt(1 + T^2)/(alpha tau).
double morse_n_max_bound(double tau, double rho, double alpha);

/// Fills in the exact lower component (and its derivative) from phi/dphi/d2phi
/// via theta = alpha/(C+eps)(B phi + phi'), keeping any theta already present.
/// Used by the catalog constructors and by the transformation engine.
void finalize_lower_component(SpinorSolution& s);

/// Diagnostic full-spinor norm integral of phi^2 + theta^2 over the grid.
/// The catalog normalizes the upper component alone, so this exceeds one by
/// the lower component's weight; it is reported, never constrained.
double full_spinor_norm(const SpinorSolution& s, const RadialGrid& grid);

}  // namespace diracosc
