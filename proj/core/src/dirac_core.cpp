#include "diracosc/dirac_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace diracosc {

OddForm OddForm::zero() { return OddForm{}; }

OddForm OddForm::linear(double strength) {
  OddForm w;
  w.kind_ = Kind::Linear;
  w.coeff_ = strength;
  return w;
}

OddForm OddForm::exponential(double coeff, double rate) {
  OddForm w;
  w.kind_ = Kind::Exponential;
  w.coeff_ = coeff;
  w.rate_ = rate;
  return w;
}

OddForm OddForm::power_law(double coeff, double exponent) {
  OddForm w;
  w.kind_ = Kind::PowerLaw;
  w.coeff_ = coeff;
  w.exponent_ = exponent;
  return w;
}

double OddForm::value(double r) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Linear: return coeff_ * r;
    case Kind::Exponential: return coeff_ * std::exp(-rate_ * r);
    case Kind::PowerLaw: return coeff_ * std::pow(r, exponent_);
  }
  return 0.0;
}

double OddForm::deriv(double r) const {
  switch (kind_) {
    case Kind::Zero: return 0.0;
    case Kind::Linear: return coeff_;
    case Kind::Exponential: return -rate_ * coeff_ * std::exp(-rate_ * r);
    case Kind::PowerLaw:
      return coeff_ * exponent_ * std::pow(r, exponent_ - 1.0);
  }
  return 0.0;
}

RelativisticPotential::RelativisticPotential(double alpha, double kappa,
                                             double S, double C, OddForm w)
    : alpha_(alpha), kappa_(kappa), s_(S), c_(C), w_(w) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("RelativisticPotential: alpha must be positive");
  if (!std::isfinite(kappa))
    throw std::invalid_argument("RelativisticPotential: kappa must be finite");
  if (std::abs(c_) < 1e-12)
    throw std::invalid_argument(
        "RelativisticPotential: C = 0 is a singular configuration");
}

RelativisticPotential RelativisticPotential::from_angle(double alpha,
                                                        double kappa,
                                                        double rho, OddForm w) {
  if (!(rho > -1.5707963267948966 && rho < 1.5707963267948966))
    throw std::invalid_argument(
        "RelativisticPotential: rho must lie strictly inside (-pi/2, pi/2)");
  const double S = std::sin(rho);
  const double C = std::sqrt(1.0 - S * S);  // rho interior => cos rho > 0
  return RelativisticPotential(alpha, kappa, S, C, w);
}

RelativisticPotential RelativisticPotential::from_sine(double alpha,
                                                       double kappa, double S,
                                                       int c_sign, OddForm w) {
  if (!(S > -1.0 && S < 1.0))
    throw std::invalid_argument("RelativisticPotential: need |S| < 1");
  if (c_sign != 1 && c_sign != -1)
    throw std::invalid_argument("RelativisticPotential: c_sign must be +-1");
  const double C = c_sign * std::sqrt(1.0 - S * S);
  return RelativisticPotential(alpha, kappa, S, C, w);
}

double RelativisticPotential::gauge_fixed_even(double r) const {
  if (!(r > 0.0))
    throw std::domain_error("gauge_fixed_even: r must be positive");
  return (s_ / alpha_) * (w_.value(r) + kappa_ / r);
}

double RelativisticPotential::effective_potential(double eps, double r) const {
  if (!(r != 0.0))
    throw std::domain_error("effective_potential: r must be nonzero");
  const double W = w_.value(r);
  const double dW = w_.deriv(r);
  const double ck = c_ * kappa_;
  return ck * (ck + 1.0) / (r * r) + 2.0 * kappa_ * s_ * eps / (alpha_ * r) +
         c_ * c_ * W * W + (2.0 * s_ * eps / alpha_) * W - c_ * dW +
         2.0 * kappa_ * c_ * c_ * W / r - (eps * eps - 1.0) / (alpha_ * alpha_);
}

std::function<double(double)> lower_from_upper(const RelativisticPotential& pot,
                                               double eps, RadialFn phi) {
  const double denom = pot.C() + eps;
  if (std::abs(denom) < 1e-12)
    throw std::domain_error("lower_from_upper: C + eps is singular");
  if (!phi.f) throw std::invalid_argument("lower_from_upper: missing phi");

  std::function<double(double)> dphi = phi.df;
  if (!dphi) {
    // 4th-order central differences with a scale-aware step; the step shrinks
    // when the stencil leaves the evaluator's domain (power-law functions are
    // undefined at r < 0).
    auto f = phi.f;
    dphi = [f](double r) {
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
  const double alpha = pot.alpha();
  const double S = pot.S(), C = pot.C(), kappa = pot.kappa();
  auto w = pot.w();
  auto f = phi.f;
  return [=](double r) {
    const double b = -S / alpha + C * (w.value(r) + kappa / r);
    return alpha / denom * (b * f(r) + dphi(r));
  };
}

}  // namespace diracosc
