#include "diracosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "diracosc/residuals.hpp"
#include "diracosc/so21.hpp"
#include "diracosc/solutions.hpp"
#include "diracosc/superalgebra.hpp"
#include "diracosc/tridiag.hpp"
#include "diracosc/xpct.hpp"

namespace diracosc {

namespace {

Check make_check(std::string name, std::string ref, double measured,
                 double threshold, const char* direction = "<=") {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(ref);
  c.measured = measured;
  c.threshold = threshold;
  c.direction = direction;
  c.pass = c.direction == "<=" ? (measured <= threshold) : (measured >= threshold);
  return c;
}

double sqr(double x) { return x * x; }

// Richardson-extrapolated lowest eigenvalues of -d''/dr^2 + F on a grid pair.
std::vector<double> fd_spectrum(const std::function<double(double)>& F,
                                const RadialGrid& grid, int k) {
  const RadialGrid fine = grid.refined();
  const auto coarse_vals = eigenvalues_lowest(discretize(F, grid), k);
  const auto fine_vals = eigenvalues_lowest(discretize(F, fine), k);
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i)
    out[i] = richardson(coarse_vals[i], fine_vals[i], grid.step, fine.step);
  return out;
}

// Relative L2 mismatch between the closed-form lower component and the one
// rebuilt from phi by the finite-difference first-order relation. Non-finite
// accumulations surface as +inf so they cannot hide in a max-reduction.
double lower_match_error(const SpinorSolution& s, const RadialGrid& grid) {
  auto rebuilt = lower_from_upper(s.potential, s.eps, RadialFn{s.phi, {}});
  double diff2 = 0.0, ref2 = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double r = grid.r[i];
    const double a = s.theta(r), b = rebuilt(r);
    diff2 += grid.w[i] * sqr(a - b);
    ref2 += grid.w[i] * (sqr(s.phi(r)) + sqr(a));
  }
  if (!std::isfinite(diff2) || !std::isfinite(ref2) || ref2 <= 0.0)
    return std::numeric_limits<double>::infinity();
  return std::sqrt(diff2 / ref2);
}

RadialGrid natural_grid(const SpinorSolution& s) {
  switch (s.cls) {
    case SolutionClass::Oscillator:
      return RadialGrid::uniform(12.0, 3000);
    case SolutionClass::Coulomb:
      return RadialGrid::log_mapped(1e-6, 400.0, 4000);
    case SolutionClass::Morse:
      return RadialGrid::uniform_interval(-60.0, 200.0, 4000);
    case SolutionClass::ZeroEnergy: {
      const double beta = s.params.at("beta");
      if (beta > 0.0) return RadialGrid::log_mapped(1e-6, 30.0, 4000);
      return RadialGrid::log_mapped(0.05, 1e4, 4000);
    }
  }
  throw std::logic_error("natural_grid: unknown class");
}

// ---------------------------------------------------------------- spectra --

void suite_spectra(std::vector<Check>& out) {
  const double alpha = 1.0, lambda = 1.0;

  // oscillator eigenvalues vs closed form, grid N = 4000 on [0, 12];
  // at eps = 1 the energy term of the effective potential vanishes
  for (int kappa : {1, 2}) {
    auto sol0 = oscillator_solution(0, kappa, lambda, alpha);
    const EffectivePotential F{sol0.potential, 1.0};
    auto grid = RadialGrid::uniform(12.0, 4000);
    auto eigs = fd_spectrum(F, grid, 5);
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
      const double target =
          (sqr(oscillator_solution(n, kappa, lambda, alpha).eps) - 1.0) /
          sqr(alpha);
      worst = std::max(worst, std::abs(eigs[n] / target - 1.0));
    }
    out.push_back(make_check(
        "spectra/oscillator_fd_kappa" + std::to_string(kappa),
        "oscillator spectrum formula vs discretized second-order operator",
        worst, 1e-6));
  }

  // Coulomb on a log-mapped grid, alpha Z = -0.5, kappa = -1, C > 0 branch
  {
    const double Z = -0.5;
    const int kappa = -1;
    auto grid = RadialGrid::log_mapped(1e-10, 250.0, 6000);
    double worst = 0.0;
    for (int n = 0; n <= 3; ++n) {
      auto sol = coulomb_solution(n, kappa, Z, alpha);
      auto F = [&](double r) {
        return sol.potential.effective_potential(sol.eps, r) +
               (sqr(sol.eps) - 1.0) / sqr(alpha);
      };
      const double target = (sqr(sol.eps) - 1.0) / sqr(alpha);
      auto eigs = fd_spectrum(F, grid, n + 1);
      worst = std::max(worst, std::abs(eigs[n] / target - 1.0));
    }
    out.push_back(make_check(
        "spectra/coulomb_fd_logmapped",
        "coulomb spectrum formula vs discretized second-order operator", worst,
        1e-5));
    const double eps0 = coulomb_solution(0, kappa, Z, alpha).eps;
    out.push_back(make_check(
        "spectra/coulomb_ground_state_algebraic",
        "ground state energy sqrt(1 - (alpha Z)^2)",
        std::abs(eps0 - std::sqrt(1.0 - sqr(alpha * Z))), 1e-10));
  }

  // Morse: quadratic identity, level count, eigenvalues
  {
    const double tau = 0.1, rho = 0.7853981633974483;
    const double T = std::tan(rho);
    int admitted = 0;
    double worst_id = 0.0, worst_fd = 0.0;
    auto grid = RadialGrid::uniform_interval(-60.0, 200.0, 8000);
    for (int n = 0; n <= 20; ++n) {
      try {
        auto sol = morse_solution(n, tau, rho, lambda, alpha);
        ++admitted;
        worst_id = std::max(
            worst_id,
            std::abs(sqr(sol.eps) + sqr(T * sol.eps - n * alpha * tau) - 1.0));
        auto F = [&](double r) {
          return sol.potential.effective_potential(sol.eps, r) +
                 (sqr(sol.eps) - 1.0) / sqr(alpha);
        };
        const double target = (sqr(sol.eps) - 1.0) / sqr(alpha);
        auto eigs = fd_spectrum(F, grid, n + 1);
        worst_fd = std::max(worst_fd, std::abs(eigs[n] / target - 1.0));
      } catch (const std::domain_error&) {
        continue;  // inadmissible level, counted on the expected side too
      }
    }
    out.push_back(make_check("spectra/morse_quadratic_identity",
                             "morse energy identity eps^2 + (T eps - n a tau)^2 = 1",
                             worst_id, 1e-12));
    out.push_back(make_check("spectra/morse_fd",
                             "morse energies vs discretized second-order operator",
                             worst_fd, 1e-4));
    int expected = 0;
    for (int n = 0; n <= 20; ++n) {
      if (n > morse_n_max_bound(tau, rho, alpha)) continue;
      const double eps = std::cos(rho - std::asin(n * alpha * tau * std::cos(rho)));
      if (T * eps / (alpha * tau) - n > 0.0) ++expected;
    }
    out.push_back(make_check("spectra/morse_level_count",
                             "bounded admitted level set",
                             std::abs(admitted - expected), 0.5));
  }

  // rest-energy class: the eps = 1 level is pinned by the equation residual
  // and by its sensitivity to an energy shift
  {
    double worst = 0.0, weakest_detuned = 1e300;
    for (double beta : {-2.0, 3.0}) {
      for (int l : {0, 1}) {
        auto s = zero_energy_solution(l, beta, lambda, alpha);
        auto grid = natural_grid(s);
        const EffectivePotential F{s.potential, 1.0};
        worst = std::max(
            worst,
            schrodinger_residual({s.phi, s.dphi, s.d2phi}, F, grid).value);
        const EffectivePotential F_detuned{s.potential, 1.01};
        weakest_detuned = std::min(
            weakest_detuned,
            schrodinger_residual({s.phi, s.dphi, s.d2phi}, F_detuned, grid).value);
      }
    }
    out.push_back(make_check("spectra/zero_energy_schrodinger",
                             "rest-energy power-law second-order equation",
                             worst, 1e-8));
    out.push_back(make_check("spectra/zero_energy_detuned",
                             "sensitivity of the residual to an energy shift",
                             weakest_detuned, 1e-3, ">="));
  }

  // nonrelativistic limit of the Coulomb spectrum
  {
    const double a_small = 1e-4, Z = -1.0;
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n) {
      auto sol = coulomb_solution(n, -1, Z, a_small);
      const double N = n + 0.5 + std::abs(sol.params.at("sigma") + 0.5);
      const double nonrel = -sqr(Z) / (2.0 * sqr(N));
      const double measured = (sol.eps - 1.0) / sqr(a_small);
      worst = std::max(worst, std::abs(measured / nonrel - 1.0));
    }
    out.push_back(make_check("spectra/coulomb_nonrel_limit",
                             "nonrelativistic limit -Z^2/(2 N^2)", worst, 1e-6));
  }
}

// -------------------------------------------------------------- residuals --

void suite_residuals(std::vector<Check>& out) {
  const double alpha = 1.0, lambda = 1.0;

  std::vector<std::pair<std::string, std::vector<SpinorSolution>>> classes;
  {
    std::vector<SpinorSolution> v;
    for (int n = 0; n <= 3; ++n) v.push_back(oscillator_solution(n, 1, lambda, alpha));
    for (int n = 0; n <= 3; ++n) v.push_back(oscillator_solution(n, -2, lambda, alpha));
    classes.emplace_back("oscillator", std::move(v));
  }
  {
    std::vector<SpinorSolution> v;
    for (int n = 0; n <= 3; ++n) v.push_back(coulomb_solution(n, -1, -0.5, alpha));
    classes.emplace_back("coulomb", std::move(v));
  }
  {
    std::vector<SpinorSolution> v;
    for (int n = 0; n <= 3; ++n)
      v.push_back(morse_solution(n, 0.1, 0.7853981633974483, lambda, alpha));
    classes.emplace_back("morse", std::move(v));
  }
  {
    std::vector<SpinorSolution> v;
    v.push_back(zero_energy_solution(1, -2.0, lambda, alpha));
    v.push_back(zero_energy_solution(0, 3.0, lambda, alpha));
    v.push_back(zero_energy_solution(1, 3.0, lambda, alpha));
    classes.emplace_back("zero_energy", std::move(v));
  }

  for (auto& [name, sols] : classes) {
    double worst_res = 0.0, worst_match = 0.0;
    for (const auto& s : sols) {
      auto grid = natural_grid(s);
      worst_res = std::max(worst_res, dirac_residual(s, s.potential, grid).value);
      // the FD rebuild is 4th-order only where the fifth derivative is
      // bounded; keep the comparison window away from the fractional-power
      // origin region (the analytic-route residual above covers it)
      auto match_grid = s.cls == SolutionClass::Coulomb
                            ? RadialGrid::log_mapped(1e-3, 400.0, 4000)
                            : grid;
      worst_match = std::max(worst_match, lower_match_error(s, match_grid));
    }
    out.push_back(make_check("residuals/dirac_system_" + name,
                             "first-order radial system rows", worst_res, 1e-8));
    out.push_back(make_check("residuals/lower_component_match_" + name,
                             "lower component from the first-order relation",
                             worst_match, 1e-6));
  }

}

// ---------------------------------------------------------------- algebra --

void suite_algebra(std::vector<Check>& out) {
  Superpotential g{-1.0, OddForm::linear(1.0)};

  double worst_exact = 0.0;
  double conv_comm = 0.0, conv_blocks = 0.0;
  {
    std::vector<double> comm_norms, block_norms;
    for (int n : {256, 513}) {
      auto grid = RadialGrid::uniform(12.0, n);
      auto alg = realize_algebra(g, grid);
      const double denom =
          (alg.L0 * alg.Lp).norm() + (alg.Lp * alg.L0).norm();
      const double e1 = ((alg.L3 * alg.Lp - alg.Lp * alg.L3) - alg.Lp).norm();
      const double e2 = ((alg.Lp * alg.Lm + alg.Lm * alg.Lp) - alg.L0).norm();
      const double e3 = (alg.L0 * alg.L3 - alg.L3 * alg.L0).norm();
      const double e4 = (alg.L0 * alg.Lp - alg.Lp * alg.L0).norm() / denom;
      worst_exact = std::max({worst_exact, e1, e2, e3, e4});

      auto l0c = alg.l0_canonical();
      comm_norms.push_back(
          alg.windowed_action_norm(l0c * alg.Lp - alg.Lp * l0c, 1.0, 8.0));
      block_norms.push_back(
          alg.windowed_action_norm(alg.L0 - l0c, 1.0, 8.0));
    }
    conv_comm = comm_norms[0] / comm_norms[1];
    conv_blocks = block_norms[0] / block_norms[1];
  }
  out.push_back(make_check("algebra/graded_exact_relations",
                           "graded commutation and anticommutation relations",
                           worst_exact, 1e-12));
  out.push_back(make_check("algebra/central_commutator_convergence",
                           "centrality of the even second-order element",
                           std::abs(conv_comm - 4.0), 0.5));
  out.push_back(make_check("algebra/l0_block_convergence",
                           "even element blocks vs partner-potential operators",
                           std::abs(conv_blocks - 4.0), 0.5));

  // SUSY degeneracy for G = -1/r + r
  {
    auto grid = RadialGrid::uniform(14.0, 3000);
    auto rep = susy_degeneracy_check(g, grid, 5);
    double worst_pair = 0.0;
    for (double e : rep.pair_rel_err) worst_pair = std::max(worst_pair, e);
    out.push_back(make_check("algebra/susy_pairing",
                             "partner spectra pair up to the ground state",
                             worst_pair, 1e-6));
    out.push_back(make_check("algebra/susy_zero_mode",
                             "unpaired normalizable zero mode of V-",
                             rep.zero_mode_flagged ? 0.0 : 1.0, 0.5));
  }
}

// ------------------------------------------------------------------- xpct --

void suite_xpct(std::vector<Check>& out) {
  std::vector<double> xs;
  for (int i = 0; i < 50; ++i) xs.push_back(0.5 + 4.5 * i / 49.0);

  // parameter maps: pinned closed-form values
  {
    double worst = 0.0;
    TransformSpec sq;
    sq.family = XpctFamily::Square;
    sq.kappa_hat = 2.0;
    auto r1 = derive(sq);
    worst = std::max(worst, std::abs(r1.kappa_new - 0.75));
    TransformSpec nl;
    nl.family = XpctFamily::NegLog;
    nl.tau = 1.0;
    auto r2 = derive(nl);
    worst = std::max(worst, std::abs(r2.kappa_new));
    worst = std::max(worst, std::abs(r2.w_new.coeff() + 0.5));
    TransformSpec pw;
    pw.family = XpctFamily::Power;
    pw.mu = -1.0;  // beta = -2
    pw.kappa_hat = -3.5;
    auto r3 = derive(pw);
    worst = std::max(worst, std::abs(r3.beta + 2.0));
    worst = std::max(worst, std::abs(r3.w_new.coeff() + 1.0));
    worst = std::max(worst, std::abs(r3.w_new.exponent() + 3.0));
    out.push_back(make_check("xpct/derive_parameter_maps",
                             "family parameter maps", worst, 1e-14));
  }

  struct FamilyCase {
    const char* name;
    TransformSpec spec;
    std::vector<int> levels;
  };
  std::vector<FamilyCase> cases;
  {
    TransformSpec sq;
    sq.family = XpctFamily::Square;
    sq.S_new = 0.5;       // alpha Z / kappa with Z = -0.5, kappa = -1
    sq.c_sign = +1;
    sq.kappa_hat = 2.0 * (-std::sqrt(1.0 - 0.25)) + 0.5;  // sigma = -sqrt(3)/2
    sq.lambda = 1.0;
    cases.push_back({"square", sq, {0, 1, 2}});
    TransformSpec nl;
    nl.family = XpctFamily::NegLog;
    nl.tau = 0.1;
    nl.S_new = std::sin(0.7853981633974483);
    cases.push_back({"neglog", nl, {0, 1, 3}});
    TransformSpec pw;
    pw.family = XpctFamily::Power;
    pw.mu = -1.0;
    pw.kappa_hat = -2.0;  // target kappa = l = 1 at beta = -2
    cases.push_back({"power", pw, {0}});
  }

  double worst_const = 0.0, worst_spec = 0.0, worst_map = 0.0, worst_row2 = 0.0;
  for (auto& fc : cases) {
    auto res = derive(fc.spec);
    auto rep = verify_identity_33(fc.spec, res, xs);
    worst_const = std::max(worst_const, rep.rel_spread);

    auto rel = spectrum_from_34(fc.spec, res);
    for (int n : fc.levels) {
      worst_spec = std::max(worst_spec, rel.coefficient_defect(n));
      // catalog comparison
      double eps_cat = 0.0;
      switch (res.identified) {
        case SolutionClass::Coulomb:
          eps_cat = coulomb_solution(n, -1, -0.5, fc.spec.alpha).eps;
          break;
        case SolutionClass::Morse:
          eps_cat = morse_solution(n, fc.spec.tau, 0.7853981633974483, 1.0,
                                   fc.spec.alpha).eps;
          break;
        case SolutionClass::ZeroEnergy:
          eps_cat = 1.0;
          break;
        default: break;
      }
      worst_spec = std::max(worst_spec, std::abs(rel.eps_of_n(n) - eps_cat));

      // mapped wavefunction vs catalog evaluator: single global ratio
      auto mapped = mapped_solution(fc.spec, res, n);
      SpinorSolution cat = [&]() {
        switch (res.identified) {
          case SolutionClass::Coulomb:
            return coulomb_solution(n, -1, -0.5, fc.spec.alpha);
          case SolutionClass::Morse:
            return morse_solution(n, fc.spec.tau, 0.7853981633974483, 1.0,
                                  fc.spec.alpha);
          default:
            return zero_energy_solution(1, -2.0, 1.0, fc.spec.alpha);
        }
      }();
      double lo = 0.8, hi = 6.0;
      if (res.identified == SolutionClass::Morse) { lo = -15.0; hi = 30.0; }
      double ratio0 = 0.0, dev = 0.0;
      for (int i = 0; i <= 40; ++i) {
        const double r = lo + (hi - lo) * i / 40.0;
        const double c = cat.phi(r);
        if (std::abs(c) < 1e-12) continue;
        const double ratio = mapped.phi(r) / c;
        if (ratio0 == 0.0) ratio0 = ratio;
        dev = std::max(dev, std::abs(ratio / ratio0 - 1.0));
      }
      worst_map = std::max(worst_map, dev);
      worst_row2 = std::max(worst_row2,
                            row2_defect_identity(fc.spec, res, n, xs));
    }
  }
  out.push_back(make_check("xpct/identity33_constancy",
                           "first-order matching difference is constant",
                           worst_const, 1e-10));
  out.push_back(make_check("xpct/spectrum34_term_matching",
                           "second-order coefficient matching and spectra",
                           worst_spec, 1e-12));
  out.push_back(make_check("xpct/map_wavefunctions_proportional",
                           "mapped states proportional to catalog states",
                           worst_map, 1e-10));
  out.push_back(make_check("xpct/row2_defect_identity",
                           "second-row defect equals the matching constant",
                           worst_row2, 1e-10));
}

// ------------------------------------------------------------------- so21 --

void suite_so21(std::vector<Check>& out) {
  // states: unit norm + second-order equation residual
  {
    auto grid = RadialGrid::uniform(40.0, 6000);
    double worst_res = 0.0, worst_norm = 0.0;
    for (double gamma : {0.0, 0.25, 1.0}) {
      for (int n : {0, 2, 5}) {
        auto st = oscillator_state(gamma, n, 0.5);
        auto F = [&](double x) {
          const double eta_term = 4.0 * gamma * (gamma + 1.0) + 0.75;
          return eta_term / (x * x) + std::pow(0.5, 4) * x * x -
                 2.0 * st.energy;
        };
        worst_res = std::max(
            worst_res,
            schrodinger_residual({st.phi, st.dphi, st.d2phi}, F, grid).value);
        std::vector<double> vals(grid.n);
        for (int i = 0; i < grid.n; ++i) vals[i] = st.phi(grid.r[i]);
        worst_norm = std::max(
            worst_norm, std::abs(quadrature_inner(vals, vals, grid) - 1.0));
      }
    }
    out.push_back(make_check("so21/state_equation_residual",
                             "oscillator states solve the radial equation",
                             worst_res, 1e-8));
    out.push_back(make_check("so21/state_unit_norm",
                             "oscillator states are normalized", worst_norm,
                             1e-8));
  }

  // ladder overlaps and Casimir
  {
    auto grid = RadialGrid::uniform(40.0, 8000);
    double worst_ladder = 0.0, worst_casimir = 0.0, worst_sel = 0.0;
    for (double gamma : {0.0, 0.25, 1.0}) {
      for (int n = 0; n <= 5; ++n) {
        auto rep = ladder_overlap_check(gamma, n, 0.5, grid);
        worst_ladder = std::max(
            worst_ladder,
            std::abs(std::abs(rep.raise_overlap) - rep.raise_expected_abs));
        if (n >= 1)
          worst_ladder = std::max(
              worst_ladder,
              std::abs(std::abs(rep.lower_overlap) - rep.lower_expected_abs));
        worst_sel = std::max(worst_sel, rep.selection_max);
        worst_casimir = std::max(
            worst_casimir, std::abs(rep.casimir - rep.casimir_expected));
      }
    }
    out.push_back(make_check("so21/ladder_overlaps",
                             "ladder action coefficients on the basis",
                             worst_ladder, 1e-6));
    out.push_back(make_check("so21/ladder_selection_rule",
                             "off-ladder overlaps vanish", worst_sel, 1e-8));
    out.push_back(make_check("so21/casimir",
                             "Casimir invariant on the basis", worst_casimir,
                             1e-6));
  }

  // commutator and tilting convergence
  {
    auto g1 = RadialGrid::uniform(30.0, 256);
    auto g2 = g1.refined();
    auto r1 = tilting_infinitesimal_check(g1, 0.25);
    auto r2 = tilting_infinitesimal_check(g2, 0.25);
    const double rat_pm = r1.commutator_pm / r2.commutator_pm;
    const double rat_tp = r1.tilt_plus / r2.tilt_plus;
    const double rat_tm = r1.tilt_minus / r2.tilt_minus;
    out.push_back(make_check("so21/commutator_pm_l3_convergence",
                             "[L+, L-] = -L3 at second order",
                             std::abs(rat_pm - 4.0), 0.5));
    out.push_back(make_check("so21/tilting_convergence",
                             "infinitesimal tilting relations at second order",
                             std::max(std::abs(rat_tp - 4.0), std::abs(rat_tm - 4.0)),
                             0.5));
  }

  // energies against the discretized operator
  {
    double worst = 0.0;
    auto grid = RadialGrid::uniform(40.0, 4000);
    for (double gamma : {0.0, 1.0}) {
      auto F = [&](double x) {
        return (4.0 * gamma * (gamma + 1.0) + 0.75) / (x * x) +
               std::pow(0.5, 4) * x * x;
      };
      auto eigs = fd_spectrum(F, grid, 3);
      for (int n = 0; n <= 2; ++n) {
        const double target = 4.0 * 0.25 * (gamma + n + 1.0);
        worst = std::max(worst, std::abs(eigs[n] / target - 1.0));
      }
    }
    out.push_back(make_check("so21/energy_fd",
                             "ladder energies vs discretized operator", worst,
                             1e-6));
  }

  // nonrelativistic coordinate transformations
  {
    double worst = 0.0;
    struct C { PctFamily fam; double mu; };
    for (auto c : {C{PctFamily::Square, 0.0}, C{PctFamily::NegLog, 0.0},
                   C{PctFamily::Power, 1.0}}) {
      auto res = nonrelativistic_pct(c.fam, 0.25, 1, 0.5, c.mu);
      auto grid = RadialGrid::uniform_interval(
          std::max(res.r_lo, res.r_lo + 1e-6 * (res.r_hi - res.r_lo)),
          res.r_hi, 4000);
      auto F = [&](double r) { return -res.f_of_r(r); };
      worst = std::max(
          worst,
          schrodinger_residual({res.psi, res.dpsi, res.d2psi}, F, grid).value);
    }
    out.push_back(make_check("so21/nonrel_pct_residuals",
                             "transformed states solve the transformed equation",
                             worst, 1e-8));
  }
}

}  // namespace

bool is_known_suite(const std::string& suite) {
  return suite == "residuals" || suite == "spectra" || suite == "algebra" ||
         suite == "xpct" || suite == "so21" || suite == "all";
}

std::vector<Check> run_suite(const std::string& suite) {
  if (!is_known_suite(suite))
    throw std::invalid_argument("unknown suite: " + suite);
  std::vector<Check> out;
  if (suite == "spectra" || suite == "all") suite_spectra(out);
  if (suite == "residuals" || suite == "all") suite_residuals(out);
  if (suite == "algebra" || suite == "all") suite_algebra(out);
  if (suite == "xpct" || suite == "all") suite_xpct(out);
  if (suite == "so21" || suite == "all") suite_so21(out);
  std::sort(out.begin(), out.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

}  // namespace diracosc
