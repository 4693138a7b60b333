#include "diracosc/xpct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diracosc {

namespace {

double sqr(double x) { return x * x; }

void check_power_mu(double mu) {
  if (!std::isfinite(mu) || mu == 0.0 || mu == 0.5 || mu == -0.5)
    throw std::domain_error("xpct: mu excluded from {0, +-1/2}");
}

// Reference energy of the regular oscillator eigenfunction at real kappa.
double reference_energy(double alpha, double lambda, double kappa, int n) {
  return std::sqrt(1.0 + sqr(alpha * lambda) *
                             (4.0 * n + 2.0 * std::abs(kappa + 0.5) +
                              2.0 * kappa + 1.0));
}

}  // namespace

const char* to_string(XpctFamily family) {
  switch (family) {
    case XpctFamily::Square: return "square";
    case XpctFamily::NegLog: return "neglog";
    case XpctFamily::Power: return "power";
  }
  return "?";
}

double TransformSpec::q(double x) const {
  switch (family) {
    case XpctFamily::Square: return x * x;
    case XpctFamily::NegLog: return -2.0 / tau * std::log(x);
    case XpctFamily::Power: return std::pow(x, 2.0 * mu + 1.0);
  }
  return 0.0;
}

double TransformSpec::dq(double x) const {
  switch (family) {
    case XpctFamily::Square: return 2.0 * x;
    case XpctFamily::NegLog: return -2.0 / (tau * x);
    case XpctFamily::Power: return (2.0 * mu + 1.0) * std::pow(x, 2.0 * mu);
  }
  return 0.0;
}

double TransformSpec::d2q(double x) const {
  switch (family) {
    case XpctFamily::Square: return 2.0;
    case XpctFamily::NegLog: return 2.0 / (tau * x * x);
    case XpctFamily::Power:
      return (2.0 * mu + 1.0) * 2.0 * mu * std::pow(x, 2.0 * mu - 1.0);
  }
  return 0.0;
}

double TransformSpec::d3q(double x) const {
  switch (family) {
    case XpctFamily::Square: return 0.0;
    case XpctFamily::NegLog: return -4.0 / (tau * x * x * x);
    case XpctFamily::Power:
      return (2.0 * mu + 1.0) * 2.0 * mu * (2.0 * mu - 1.0) *
             std::pow(x, 2.0 * mu - 2.0);
  }
  return 0.0;
}

double TransformSpec::x_of_r(double r) const {
  switch (family) {
    case XpctFamily::Square:
      if (!(r > 0.0)) throw std::domain_error("xpct: inversion requires r > 0");
      return std::sqrt(r);
    case XpctFamily::NegLog:
      return std::exp(-tau * r / 2.0);
    case XpctFamily::Power:
      if (!(r > 0.0)) throw std::domain_error("xpct: inversion requires r > 0");
      return std::pow(r, 1.0 / (2.0 * mu + 1.0));
  }
  return 0.0;
}

XpctResult derive(const TransformSpec& spec) {
  XpctResult out{};
  const double alpha = spec.alpha;
  const double lam2 = spec.lambda * spec.lambda;
  switch (spec.family) {
    case XpctFamily::Square: {
      if (!(std::abs(spec.S_new) < 1.0))
        throw std::domain_error("xpct: need |S| < 1");
      const double C = spec.c_sign * std::sqrt(1.0 - sqr(spec.S_new));
      out.identified = SolutionClass::Coulomb;
      out.S = spec.S_new;
      out.C = C;
      out.kappa_new = (spec.kappa_hat - 0.5) / (2.0 * C);
      out.w_new = OddForm::zero();
      out.Z = spec.S_new * out.kappa_new / alpha;
      out.c33 = -spec.S_new / alpha - lam2 / 2.0;
      break;
    }
    case XpctFamily::NegLog: {
      if (!(spec.tau > 0.0)) throw std::domain_error("xpct: tau must be positive");
      if (!(std::abs(spec.S_new) < 1.0))
        throw std::domain_error("xpct: need |S| < 1");
      const double C = spec.c_sign * std::sqrt(1.0 - sqr(spec.S_new));
      out.identified = SolutionClass::Morse;
      out.S = spec.S_new;
      out.C = C;
      out.kappa_new = 0.0;
      out.w_new = OddForm::exponential(-spec.tau * lam2 / (2.0 * C), spec.tau);
      out.c33 = -spec.S_new / alpha + spec.tau / 2.0 * (spec.kappa_hat + 0.5);
      break;
    }
    case XpctFamily::Power: {
      check_power_mu(spec.mu);
      if (!(spec.kappa_hat <= -0.5))
        throw std::domain_error(
            "xpct: branch compatibility requires kappa_hat <= -1/2 "
            "(only the n = 0 pairing survives the constant-term matching)");
      out.identified = SolutionClass::ZeroEnergy;
      out.S = 0.0;
      out.C = 1.0;
      const double m21 = 2.0 * spec.mu + 1.0;
      out.kappa_new = (spec.kappa_hat - spec.mu) / m21;
      out.w_new = OddForm::power_law(lam2 / m21, (0.5 - spec.mu) / (spec.mu + 0.5));
      out.beta = 1.0 / (spec.mu + 0.5);
      out.c33 = 0.0;
      break;
    }
  }
  return out;
}

Identity33Report verify_identity_33(const TransformSpec& spec,
                                    const XpctResult& result,
                                    std::span<const double> xs) {
  if (xs.empty())
    throw std::invalid_argument("verify_identity_33: need sample points");
  const double lam2 = spec.lambda * spec.lambda;
  std::vector<double> diff(xs.size());
  double scale = 1.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double r = spec.q(x);
    const double qp = spec.dq(x), qpp = spec.d2q(x);
    const double lhs = -result.S / spec.alpha +
                       result.C * (result.w_new.value(r) + result.kappa_new / r);
    const double rhs =
        (lam2 * x + spec.kappa_hat / x - 0.5 * qpp / qp) / qp;
    diff[i] = lhs - rhs;
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  double mean = 0.0;
  for (double d : diff) mean += d;
  mean /= static_cast<double>(diff.size());
  double maxdev = 0.0;
  for (double d : diff) maxdev = std::max(maxdev, std::abs(d - mean));

  Identity33Report rep{};
  rep.constant = mean;
  rep.max_deviation = maxdev;
  rep.rel_spread = maxdev / std::max(scale, std::abs(mean));
  rep.constant_ok = rep.rel_spread <= 1e-8;
  if (!rep.constant_ok)
    throw std::runtime_error(
        "verify_identity_33: pointwise difference is not constant "
        "(wrong derivation)");
  return rep;
}

SpectrumRelation spectrum_from_34(const TransformSpec& spec,
                                  const XpctResult& result) {
  SpectrumRelation rel;
  rel.cls = result.identified;
  const double alpha = spec.alpha;
  switch (result.identified) {
    case SolutionClass::Coulomb: {
      const double khat = spec.kappa_hat;
      const double Z = result.Z;
      auto bigN = [khat](int n) { return n + 0.5 + std::abs(khat + 0.5) / 2.0; };
      auto eps_of = [=](int n) {
        return 1.0 / std::sqrt(1.0 + sqr(alpha * Z / bigN(n)));
      };
      rel.eps_of_n = eps_of;
      rel.ref_strength2 = [=](int n) { return -2.0 * Z * eps_of(n) / bigN(n); };
      rel.ref_kappa_hat = [=](int) { return khat; };
      const double sigma = result.C * result.kappa_new;
      rel.coefficient_defect = [=](int n) {
        const double eps = 1.0 / std::sqrt(1.0 + sqr(alpha * Z / bigN(n)));
        const double mu_n = -2.0 * Z * eps / bigN(n);
        const double d1 =
            std::abs(4.0 * sigma * (sigma + 1.0) - khat * (khat + 1.0) + 0.75);
        const double d2 = std::abs(4.0 * (1.0 - eps * eps) / (alpha * alpha) -
                                   mu_n * mu_n);
        const double d3 = std::abs(8.0 * eps * Z +
                                   2.0 * mu_n * (2.0 * n + std::abs(2.0 * sigma + 1.0) + 1.0));
        return std::max({d1, d2, d3});
      };
      break;
    }
    case SolutionClass::Morse: {
      const double T = result.S / result.C;
      const double tau = spec.tau;
      const double rho = std::atan2(result.S, result.C);
      const double C = result.C;
      auto eps_of = [=](int n) {
        const double arg = n * alpha * tau * C;
        if (std::abs(arg) > 1.0)
          throw std::domain_error("xpct: level outside the spectrum bound");
        return std::cos(rho - std::asin(arg));
      };
      rel.eps_of_n = eps_of;
      const double lam2 = spec.lambda * spec.lambda;
      rel.ref_strength2 = [=](int) { return lam2; };
      rel.ref_kappa_hat = [=](int n) {
        const double v = T * eps_of(n) / (alpha * tau) - n;
        return 2.0 * v - 0.5;
      };
      rel.coefficient_defect = [=](int n) {
        const double eps = eps_of(n);
        const double v = T * eps / (alpha * tau) - n;
        const double d1 = std::abs(4.0 * v * v -
                                   4.0 * (1.0 - eps * eps) / sqr(alpha * tau));
        const double d2 = std::abs(eps * eps + sqr(alpha * tau * v) - 1.0);
        return std::max(d1, d2);
      };
      break;
    }
    case SolutionClass::ZeroEnergy: {
      const double khat = spec.kappa_hat;
      const double mu = spec.mu;
      const double sigma = result.kappa_new;  // C = 1
      rel.eps_of_n = [](int n) {
        if (n != 0)
          throw std::domain_error("xpct: zero-energy class admits only n = 0");
        return 1.0;
      };
      rel.ref_strength2 = [=](int) { return spec.lambda * spec.lambda; };
      rel.ref_kappa_hat = [=](int) { return khat; };
      rel.coefficient_defect = [=](int) {
        const double d1 =
            std::abs(sigma * (sigma + 1.0) * sqr(2.0 * mu + 1.0) -
                     khat * (khat + 1.0) + mu * (mu + 1.0));
        const double d2 = std::abs((khat + 0.5) + std::abs(khat + 0.5));
        return std::max(d1, d2);
      };
      break;
    }
    default:
      throw std::logic_error("spectrum_from_34: unexpected class");
  }
  return rel;
}

SpinorSolution map_wavefunctions(const TransformSpec& spec,
                                 const XpctResult& result,
                                 const SpinorSolution& reference) {
  const int n = reference.n;
  auto rel = spectrum_from_34(spec, result);
  const double eps_new = rel.eps_of_n(n);

  auto pot = RelativisticPotential::from_sine(
      spec.alpha, result.kappa_new, result.S, result.C > 0 ? +1 : -1,
      result.w_new);

  SpinorSolution s{result.identified, n, eps_new, pot,
                   {}, {}, {}, {}, {}, {}, true, {}};
  const TransformSpec tf = spec;
  auto rphi = reference.phi;
  auto rdphi = reference.dphi;
  auto rd2phi = reference.d2phi;
  s.phi = [=](double r) {
    const double x = tf.x_of_r(r);
    return std::sqrt(std::abs(tf.dq(x))) * rphi(x);
  };
  s.dphi = [=](double r) {
    const double x = tf.x_of_r(r);
    const double qp = tf.dq(x), qpp = tf.d2q(x);
    const double sgn = qp < 0 ? -1.0 : 1.0;
    const double root = std::sqrt(std::abs(qp));
    const double a1 = sgn * qpp / (2.0 * root) * rphi(x) + root * rdphi(x);
    return a1 / qp;
  };
  s.d2phi = [=](double r) {
    const double x = tf.x_of_r(r);
    const double qp = tf.dq(x), qpp = tf.d2q(x), qppp = tf.d3q(x);
    const double sgn = qp < 0 ? -1.0 : 1.0;
    const double root = std::sqrt(std::abs(qp));
    const double c = sgn * qpp / (2.0 * root);
    const double cp =
        sgn * qppp / (2.0 * root) - qpp * qpp / (4.0 * root * root * root);
    const double a1 = c * rphi(x) + root * rdphi(x);
    const double a2 = cp * rphi(x) + 2.0 * c * rdphi(x) + root * rd2phi(x);
    return a2 / (qp * qp) - a1 * qpp / (qp * qp * qp);
  };
  // The lower component comes from the target problem's own first-order
  // relation; the display-level theta map holds only when c33 = 0.
  finalize_lower_component(s);
  s.params = {{"kappa", result.kappa_new},
              {"xi", xi_factor(spec, result, n)},
              {"c33", result.c33}};
  return s;
}

SpinorSolution mapped_solution(const TransformSpec& spec,
                               const XpctResult& result, int n) {
  auto rel = spectrum_from_34(spec, result);
  const double lam2 = rel.ref_strength2(n);
  if (!(lam2 > 0.0))
    throw std::domain_error("mapped_solution: level has no positive reference strength");
  auto ref = oscillator_reference(n, rel.ref_kappa_hat(n), std::sqrt(lam2),
                                  spec.alpha);
  return map_wavefunctions(spec, result, ref);
}

double xi_factor(const TransformSpec& spec, const XpctResult& result, int n) {
  auto rel = spectrum_from_34(spec, result);
  const double lam2 = rel.ref_strength2(n);
  const double khat = rel.ref_kappa_hat(n);
  const double eps_hat =
      reference_energy(spec.alpha, std::sqrt(lam2), khat, n);
  return (eps_hat + 1.0) / (rel.eps_of_n(n) + result.C);
}

double row2_defect_identity(const TransformSpec& spec, const XpctResult& result,
                            int n, std::span<const double> xs) {
  auto rel = spectrum_from_34(spec, result);
  const double lam2 = rel.ref_strength2(n);
  const double khat = rel.ref_kappa_hat(n);
  const double lam = std::sqrt(lam2);
  auto ref = oscillator_reference(n, khat, lam, spec.alpha);
  const double eps_hat = ref.eps;
  const double alpha = spec.alpha;

  // level-mapped constant of the first-order matching
  double c33_level = 0.0;
  switch (spec.family) {
    case XpctFamily::Square:
      c33_level = -result.S / alpha - lam2 / 2.0;
      break;
    case XpctFamily::NegLog:
      c33_level = -result.S / alpha + spec.tau / 2.0 * (khat + 0.5);
      break;
    case XpctFamily::Power:
      c33_level = 0.0;
      break;
  }

  double worst = 0.0;
  for (double x : xs) {
    const double r = spec.q(x);
    const double qp = spec.dq(x), qpp = spec.d2q(x);
    const double row_coeff =
        qp * (-result.S / alpha +
              result.C * (result.w_new.value(r) + result.kappa_new / r)) +
        0.5 * qpp / qp;
    const double transformed =
        alpha * (row_coeff * ref.phi(x) + ref.dphi(x));
    const double reference_row = (1.0 + eps_hat) * ref.theta(x);
    const double predicted = alpha * c33_level * qp * ref.phi(x);
    const double defect = transformed - reference_row - predicted;
    const double scale = std::max({1.0, std::abs(transformed),
                                   std::abs(reference_row), std::abs(predicted)});
    worst = std::max(worst, std::abs(defect) / scale);
  }
  return worst;
}

}  // namespace diracosc
