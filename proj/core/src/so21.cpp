#include "diracosc/so21.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracosc/specialfn.hpp"

namespace diracosc {

So21Rep::So21Rep(double gamma_in) : gamma(gamma_in) {
  if (!(gamma >= -0.5))
    throw std::domain_error("So21Rep: lower-bounded series requires gamma >= -1/2");
}

double rep_action_coeff(double gamma, int n, So21Generator which) {
  if (n < 0) throw std::domain_error("rep_action_coeff: n must be nonnegative");
  if (!(gamma >= -0.5))
    throw std::domain_error("rep_action_coeff: gamma >= -1/2 required");
  switch (which) {
    case So21Generator::L3: return gamma + n + 1.0;
    case So21Generator::Casimir: return gamma * (gamma + 1.0);
    case So21Generator::Raising:
      return std::sqrt((n + 1.0) * (n + 2.0 * gamma + 2.0) / 2.0);
    case So21Generator::Lowering:
      return std::sqrt(n * (n + 2.0 * gamma + 1.0) / 2.0);
  }
  return 0.0;
}

double oscillator_strength_from_tau3(double tau3) {
  if (!(tau3 > 0.5))
    throw std::domain_error(
        "oscillator_strength_from_tau3: bound states require tau3 > 1/2 "
        "((2 tau3 - 1) e^{2 zeta} = 1); the tau3 < 1/2 scattering branch is "
        "not supported");
  return std::pow((2.0 * tau3 - 1.0) / 16.0, 0.25);
}

OscillatorState oscillator_state(double gamma, int n, double lambda) {
  So21Rep rep(gamma);
  if (n < 0) throw std::domain_error("oscillator_state: n must be nonnegative");
  if (!(lambda > 0.0))
    throw std::domain_error("oscillator_state: lambda must be positive");

  const double p = 2.0 * gamma + 1.5;
  const double a = 2.0 * gamma + 1.0;
  const double c = norm_const_oscillator(n, 2.0 * gamma + 0.5, lambda);

  OscillatorState s;
  s.gamma = gamma;
  s.n = n;
  s.lambda = lambda;
  s.energy = 2.0 * lambda * lambda * (gamma + n + 1.0);
  s.l = 2.0 * gamma + 0.5;
  const double lam = lambda;
  s.phi = [=](double x) {
    if (!(x > 0.0)) throw std::domain_error("oscillator_wavefunction: x > 0 required");
    const double u = lam * x, t = u * u;
    return c * std::pow(u, p) * std::exp(-t / 2) * laguerre(n, a, t);
  };
  s.dphi = [=](double x) {
    const double u = lam * x, t = u * u;
    const double P = laguerre(n, a, t), P1 = laguerre_deriv(n, a, t);
    return c * lam * std::exp(-t / 2) *
           ((p * std::pow(u, p - 1) - std::pow(u, p + 1)) * P +
            2.0 * std::pow(u, p + 1) * P1);
  };
  s.d2phi = [=](double x) {
    const double u = lam * x, t = u * u;
    const double P = laguerre(n, a, t), P1 = laguerre_deriv(n, a, t),
                 P2 = laguerre_deriv2(n, a, t);
    return c * lam * lam * std::exp(-t / 2) *
           ((p * (p - 1) * std::pow(u, p - 2) - (2 * p + 1) * std::pow(u, p) +
             std::pow(u, p + 2)) * P +
            ((4 * p + 2) * std::pow(u, p) - 4 * std::pow(u, p + 2)) * P1 +
            4.0 * std::pow(u, p + 2) * P2);
  };
  return s;
}

double oscillator_wavefunction(double gamma, int n, double lambda, double x) {
  return oscillator_state(gamma, n, lambda).phi(x);
}

double apply_compact(const OscillatorState& state, double x) {
  const double eta = -4.0 * state.gamma * (state.gamma + 1.0) - 0.75;
  return state.d2phi(x) + eta * state.phi(x) / (x * x) -
         x * x * state.phi(x) / 16.0;
}

double apply_ladder(const OscillatorState& state, int s, double x) {
  if (s != 1 && s != -1) throw std::invalid_argument("apply_ladder: s must be +-1");
  const double eta = -4.0 * state.gamma * (state.gamma + 1.0) - 0.75;
  const double f = state.phi(x);
  return (state.d2phi(x) + eta * f / (x * x) + x * x * f / 16.0 +
          s * 0.5 * (x * state.dphi(x) + 0.5 * f)) /
         std::sqrt(2.0);
}

LadderReport ladder_overlap_check(double gamma, int n, double lambda,
                                  const RadialGrid& grid) {
  if (!(lambda > 0.0))
    throw std::domain_error("ladder_overlap_check: lambda must be positive");
  // all overlaps are dilation-invariant, so evaluate in the frame the
  // realized operators fix (lambda^2 = 1/4)
  const double lam = 0.5;
  auto sn = oscillator_state(gamma, n, lam);
  auto snp = oscillator_state(gamma, n + 1, lam);

  // the grid must resolve the n+1 state out to its tail
  const double tail = std::abs(snp.phi(grid.r.back()));
  if (tail > 1e-10)
    throw std::invalid_argument("ladder_overlap_check: grid does not resolve the states");

  LadderReport rep{};
  rep.raise_expected_abs = rep_action_coeff(gamma, n, So21Generator::Raising);
  rep.lower_expected_abs = rep_action_coeff(gamma, n, So21Generator::Lowering);

  std::vector<double> raised(grid.n), lowered(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    raised[i] = apply_ladder(sn, -1, grid.r[i]);
    lowered[i] = apply_ladder(sn, +1, grid.r[i]);
  }
  auto overlap_with = [&](const OscillatorState& sm, const std::vector<double>& v) {
    double acc = 0.0;
    for (int i = 0; i < grid.n; ++i) acc += grid.w[i] * sm.phi(grid.r[i]) * v[i];
    return acc;
  };
  rep.raise_overlap = overlap_with(snp, raised);
  if (n >= 1) rep.lower_overlap = overlap_with(oscillator_state(gamma, n - 1, lam), lowered);

  rep.selection_max = 0.0;
  for (int m = 0; m <= n + 3; ++m) {
    if (m == n + 1) continue;
    rep.selection_max = std::max(
        rep.selection_max,
        std::abs(overlap_with(oscillator_state(gamma, m, lam), raised)));
  }

  // Casimir through the adjoint pair: <L- L+> on the realization equals
  // ||lowering Phi_n||^2, so gamma(gamma+1) = (g+n+1)(g+n) - 2 ||...||^2.
  double low2 = 0.0;
  for (int i = 0; i < grid.n; ++i) low2 += grid.w[i] * lowered[i] * lowered[i];
  rep.casimir = (gamma + n + 1.0) * (gamma + n) - 2.0 * low2;
  rep.casimir_expected = gamma * (gamma + 1.0);
  return rep;
}

TiltingReport tilting_infinitesimal_check(const RadialGrid& grid, double gamma) {
  if (grid.mapping != RadialGrid::Mapping::Uniform)
    throw std::invalid_argument("tilting_infinitesimal_check: uniform grid required");
  const int n = grid.n;
  if (n > 2048)
    throw std::invalid_argument("tilting_infinitesimal_check: dense check capped at n = 2048");
  const double h = grid.step;
  const double eta = -4.0 * gamma * (gamma + 1.0) - 0.75;

  Eigen::MatrixXd T2 = Eigen::MatrixXd::Zero(n, n);  // +d^2/dx^2
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T2(i, i) = -2.0 / (h * h);
    if (i + 1 < n) {
      T2(i, i + 1) = 1.0 / (h * h);
      T2(i + 1, i) = 1.0 / (h * h);
      D(i, i + 1) = 1.0 / (2.0 * h);
      D(i + 1, i) = -1.0 / (2.0 * h);
    }
  }
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(grid.r.data(), n);
  Eigen::MatrixXd X = x.asDiagonal();
  // x d/dx + 1/2 realized as the exactly antisymmetric (XD + DX)/2
  Eigen::MatrixXd O = 0.5 * (X * D + D * X);
  Eigen::MatrixXd E = T2;
  Eigen::MatrixXd L3m = T2;
  for (int i = 0; i < n; ++i) {
    const double r = grid.r[i];
    E(i, i) += eta / (r * r) + r * r / 16.0;
    L3m(i, i) += eta / (r * r) - r * r / 16.0;
  }
  Eigen::MatrixXd iL2 = 0.5 * O;

  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i)
    v[i] = std::pow(grid.r[i], 4) * std::exp(-grid.r[i] * grid.r[i] / 8.0);

  const double wlo = 0.15 * grid.hi, whi = 0.55 * grid.hi;
  auto wnorm = [&](const Eigen::VectorXd& u) {
    double acc = 0.0, ref = 0.0;
    for (int i = 0; i < n; ++i) {
      if (grid.r[i] < wlo || grid.r[i] > whi) continue;
      acc += u[i] * u[i];
      ref += v[i] * v[i];
    }
    return std::sqrt(acc / ref);
  };

  Eigen::MatrixXd Xp = L3m + E, Xm = L3m - E;
  TiltingReport rep{};
  rep.tilt_plus = wnorm((iL2 * Xp - Xp * iL2 + Xp) * v);
  rep.tilt_minus = wnorm((iL2 * Xm - Xm * iL2 - Xm) * v);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd Lp = inv_sqrt2 * (E + 0.5 * O);
  Eigen::MatrixXd Lm = inv_sqrt2 * (E - 0.5 * O);
  rep.commutator_pm = wnorm((Lp * Lm - Lm * Lp + L3m) * v);
  return rep;
}

PctResult nonrelativistic_pct(PctFamily family, double gamma, int n,
                              double lambda, double mu) {
  if (family == PctFamily::Power &&
      (mu == 0.0 || mu == 0.5 || mu == -0.5 || !std::isfinite(mu)))
    throw std::domain_error("nonrelativistic_pct: mu excluded from {0, +-1/2}");

  auto state = oscillator_state(gamma, n, lambda);

  std::function<double(double)> x_of_r, dq, d2q, d3q;
  switch (family) {
    case PctFamily::Square:
      x_of_r = [](double r) {
        if (!(r > 0.0)) throw std::domain_error("pct: r > 0 required");
        return std::sqrt(r);
      };
      dq = [](double x) { return 2.0 * x; };
      d2q = [](double) { return 2.0; };
      d3q = [](double) { return 0.0; };
      break;
    case PctFamily::NegLog:
      x_of_r = [](double r) { return std::exp(-r); };
      dq = [](double x) { return -1.0 / x; };
      d2q = [](double x) { return 1.0 / (x * x); };
      d3q = [](double x) { return -2.0 / (x * x * x); };
      break;
    case PctFamily::Power:
      x_of_r = [mu](double r) {
        if (!(r > 0.0)) throw std::domain_error("pct: r > 0 required");
        return std::pow(r, 1.0 / (2.0 * mu + 1.0));
      };
      dq = [mu](double x) { return (2.0 * mu + 1.0) * std::pow(x, 2.0 * mu); };
      d2q = [mu](double x) {
        return (2.0 * mu + 1.0) * 2.0 * mu * std::pow(x, 2.0 * mu - 1.0);
      };
      d3q = [mu](double x) {
        return (2.0 * mu + 1.0) * 2.0 * mu * (2.0 * mu - 1.0) *
               std::pow(x, 2.0 * mu - 2.0);
      };
      break;
  }

  const double eta_term = 4.0 * gamma * (gamma + 1.0) + 0.75;
  const double lam4 = std::pow(lambda, 4);
  const double e_term = 4.0 * lambda * lambda * (gamma + n + 1.0);

  PctResult out;
  out.f_of_r = [=](double r) {
    const double x = x_of_r(r);
    const double qp = dq(x), qpp = d2q(x), qppp = d3q(x);
    return (1.0 / (qp * qp)) *
           (-eta_term / (x * x) - lam4 * x * x + e_term -
            0.5 * qppp / qp + 0.75 * (qpp / qp) * (qpp / qp));
  };
  out.psi = [=](double r) {
    const double x = x_of_r(r);
    return std::sqrt(std::abs(dq(x))) * state.phi(x);
  };
  out.dpsi = [=](double r) {
    const double x = x_of_r(r);
    const double qp = dq(x), qpp = d2q(x);
    const double sgn = qp < 0 ? -1.0 : 1.0;
    const double root = std::sqrt(std::abs(qp));
    const double a1 = sgn * qpp / (2.0 * root) * state.phi(x) + root * state.dphi(x);
    return a1 / qp;
  };
  out.d2psi = [=](double r) {
    const double x = x_of_r(r);
    const double qp = dq(x), qpp = d2q(x), qppp = d3q(x);
    const double sgn = qp < 0 ? -1.0 : 1.0;
    const double root = std::sqrt(std::abs(qp));
    const double c = sgn * qpp / (2.0 * root);
    const double cp = sgn * qppp / (2.0 * root) -
                      qpp * qpp / (4.0 * root * root * root);
    const double a1 = c * state.phi(x) + root * state.dphi(x);
    const double a2 = cp * state.phi(x) + 2.0 * c * state.dphi(x) +
                      root * state.d2phi(x);
    return a2 / (qp * qp) - a1 * qpp / (qp * qp * qp);
  };

  // support of the state in x, mapped through q (monotone per family)
  const double x_lo = 1e-3, x_hi = std::sqrt(320.0) / lambda;
  double q_lo = 0.0, q_hi = 0.0;
  switch (family) {
    case PctFamily::Square: q_lo = x_lo * x_lo; q_hi = x_hi * x_hi; break;
    case PctFamily::NegLog: q_lo = -std::log(x_hi); q_hi = -std::log(x_lo); break;
    case PctFamily::Power: {
      const double a = std::pow(x_lo, 2.0 * mu + 1.0);
      const double b = std::pow(x_hi, 2.0 * mu + 1.0);
      q_lo = std::min(a, b);
      q_hi = std::max(a, b);
      break;
    }
  }
  out.r_lo = q_lo;
  out.r_hi = q_hi;
  return out;
}

}  // namespace diracosc
