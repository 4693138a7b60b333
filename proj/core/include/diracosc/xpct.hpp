#pragma once

#include <functional>
#include <span>
#include <vector>

#include "diracosc/solutions.hpp"

namespace diracosc {

/// Transformation families mapping the oscillator reference into the other
/// members of the class. The three families are hard-coded with analytic
/// q', q'', q''' and closed-form inverses.
enum class XpctFamily { Square, NegLog, Power };

const char* to_string(XpctFamily family);

/// A transformation instance: the family (with its parameter), the oscillator
/// reference data (kappa_hat may be real), and the target problem's angle
/// data where the family leaves it free.
struct TransformSpec {
  XpctFamily family = XpctFamily::Square;
  double tau = 1.0;  ///< NegLog rate parameter (> 0)
  double mu = 2.0;   ///< Power exponent parameter, excluded from {0, +-1/2}

  double kappa_hat = 1.0;  ///< reference spin-orbit parameter (real)
  double lambda = 1.0;     ///< reference oscillator strength
  double alpha = 1.0;

  double S_new = 0.0;  ///< target angle sine (Square: = alpha Z / kappa; NegLog: sin rho)
  int c_sign = +1;     ///< sign of C = +-sqrt(1 - S^2)

  double q(double x) const;
  double dq(double x) const;
  double d2q(double x) const;
  double d3q(double x) const;
  /// Closed-form inverse x(r); throws outside the family's domain.
  double x_of_r(double r) const;
};

/// Derived parameter map of the target problem.
struct XpctResult {
  SolutionClass identified;
  double kappa_new;  ///< target spin-orbit parameter (real in general)
  OddForm w_new;
  double S, C;   ///< target angle data (Power family forces S = 0, C = 1)
  double c33;    ///< analytic value of the pointwise-constant difference
  double Z;      ///< Square family: charge number S kappa / alpha
  double beta;   ///< Power family: 1/(mu + 1/2)
};

/// Applies the family's operator-matching relations and returns the target
/// parameter map. Throws on excluded mu and on the Power-family branch
/// compatibility failure (requires kappa_hat <= -1/2, i.e. n = 0 pairing).
XpctResult derive(const TransformSpec& spec);

struct Identity33Report {
  double constant;      ///< mean of the pointwise difference
  double max_deviation; ///< largest |difference - mean|
  double rel_spread;    ///< max_deviation / scale of the matched terms
  bool constant_ok;     ///< rel_spread <= 1e-8
};

/// Evaluates both sides of the first-order matching relation at the sample
/// points and checks that their difference is constant; the constant is the
/// piece the derivative term absorbs, and it feeds the parameter map.
/// Throws on a non-constant difference (a wrong derivation).
Identity33Report verify_identity_33(const TransformSpec& spec,
                                    const XpctResult& result,
                                    std::span<const double> xs);

/// Target spectrum produced by matching the second-order (determinant-level)
/// relation term by term in powers of x.
struct SpectrumRelation {
  SolutionClass cls;
  /// Closed-form target energy at level n.
  std::function<double(int)> eps_of_n;
  /// Level-dependent reference strength squared (Square: mu_n; others: lambda^2).
  std::function<double(int)> ref_strength2;
  /// Level-dependent reference spin-orbit parameter (NegLog: 2 v_n - 1/2).
  std::function<double(int)> ref_kappa_hat;
  /// Largest absolute defect of the term-matching identities at level n;
  /// exact arithmetic on the coefficients, so this is roundoff-sized.
  std::function<double(int)> coefficient_defect;
};

SpectrumRelation spectrum_from_34(const TransformSpec& spec,
                                  const XpctResult& result);

/// Maps a reference solution into the target problem:
/// phi(r) = sqrt(|q'|) phi_hat(x(r)), with the lower component reconstructed
/// through the target problem's first-order relation (the display-level
/// theta map is exact only when c33 vanishes). The reference solution must
/// already carry the level-mapped parameters (ref_strength2/ref_kappa_hat).
SpinorSolution map_wavefunctions(const TransformSpec& spec,
                                 const XpctResult& result,
                                 const SpinorSolution& reference);

/// Convenience: builds the level-n reference and maps it.
SpinorSolution mapped_solution(const TransformSpec& spec,
                               const XpctResult& result, int n);

/// xi = (eps_hat + C_hat)/(eps + C) for level n of the relation.
double xi_factor(const TransformSpec& spec, const XpctResult& result, int n);

/// Pointwise defect of the transformed second-row operator against the
/// reference row, which equals alpha * c33 * q'(x) * phi_hat(x) exactly;
/// returns the largest relative deviation from that identity over xs.
/// This is the precise sense in which xi closes the second row.
double row2_defect_identity(const TransformSpec& spec, const XpctResult& result,
                            int n, std::span<const double> xs);

}  // namespace diracosc
