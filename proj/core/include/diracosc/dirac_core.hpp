#pragma once

#include <functional>

namespace diracosc {

/// Odd radial component W(r) of the relativistic potential, restricted to the
/// forms the solvable class needs. Each form carries its analytic derivative.
class OddForm {
 public:
  enum class Kind { Zero, Linear, Exponential, PowerLaw };

  static OddForm zero();
  /// W(r) = strength * r (oscillator; strength = lambda^2).
  static OddForm linear(double strength);
  /// W(r) = coeff * exp(-rate * r).
  static OddForm exponential(double coeff, double rate);
  /// W(r) = coeff * r^exponent.
  static OddForm power_law(double coeff, double exponent);

  Kind kind() const { return kind_; }
  double coeff() const { return coeff_; }
  double rate() const { return rate_; }
  double exponent() const { return exponent_; }

  double value(double r) const;
  double deriv(double r) const;

 private:
  Kind kind_ = Kind::Zero;
  double coeff_ = 0.0;
  double rate_ = 0.0;      // Exponential
  double exponent_ = 0.0;  // PowerLaw
};

/// Parameters of the transformed radial problem: coupling alpha, spin-orbit
/// parameter kappa, rotation angle data (S, C) and the odd component W.
/// C = 0 is a singular configuration and is rejected. kappa is integer for
/// physical channels but real values are accepted (the transformation engine
/// produces real intermediates).
class RelativisticPotential {
 public:
  /// From the rotation angle rho in (-pi/2, pi/2); S = sin rho, C derived
  /// through sqrt(1 - S^2) so S^2 + C^2 = 1 holds by construction.
  static RelativisticPotential from_angle(double alpha, double kappa,
                                          double rho, OddForm w);

  /// From S directly with the sign of C chosen by c_sign (+1 or -1).
  static RelativisticPotential from_sine(double alpha, double kappa, double S,
                                         int c_sign, OddForm w);

  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  double S() const { return s_; }
  double C() const { return c_; }
  double T() const { return s_ / c_; }
  const OddForm& w() const { return w_; }

  /// Even component fixed by the gauge condition: V(r) = (S/alpha)(W + kappa/r).
  double gauge_fixed_even(double r) const;

  /// Full effective potential F(r) of the second-order reduction, including
  /// the -(eps^2 - 1)/alpha^2 energy term:
  ///   F = Ck(Ck+1)/r^2 + 2 kappa S eps/(alpha r) + C^2 W^2
  ///       + (2 S eps/alpha) W - C W' + 2 kappa C^2 W/r - (eps^2-1)/alpha^2.
  double effective_potential(double eps, double r) const;

 private:
  RelativisticPotential(double alpha, double kappa, double S, double C,
                        OddForm w);
  double alpha_, kappa_, s_, c_;
  OddForm w_;
};

/// The effective potential of the second-order reduction bound to a fixed
/// energy, as an evaluable F(r). Finite for every r in the problem's domain
/// given a valid potential.
struct EffectivePotential {
  RelativisticPotential pot;
  double eps;
  double operator()(double r) const { return pot.effective_potential(eps, r); }
};

/// Radial function with optional analytic derivative; operations fall back to
/// fourth-order central differences when df is absent.
struct RadialFn {
  std::function<double(double)> f;
  std::function<double(double)> df;  // may be empty
};

/// Lower spinor component from the upper:
///   theta(r) = alpha/(C+eps) [ -S/alpha + C (W + kappa/r) + d/dr ] phi(r).
/// Throws when |C + eps| < 1e-12 (singular configuration).
std::function<double(double)> lower_from_upper(const RelativisticPotential& pot,
                                               double eps, RadialFn phi);

}  // namespace diracosc
