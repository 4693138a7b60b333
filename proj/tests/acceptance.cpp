// Acceptance suite: runs every verification check and reports one line per
// criterion. Exit code is the number of failed criteria.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "diracosc/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1,
       "oscillator spectrum: FD eigenvalues match the closed form to 1e-6",
       {"spectra/oscillator_fd_kappa1", "spectra/oscillator_fd_kappa2"}},
      {2,
       "coulomb spectrum: log-mapped FD to 1e-5; ground state algebraic to 1e-10",
       {"spectra/coulomb_fd_logmapped", "spectra/coulomb_ground_state_algebraic"}},
      {3,
       "morse: energy identity to 1e-12, FD to 1e-4, admitted level count",
       {"spectra/morse_quadratic_identity", "spectra/morse_fd",
        "spectra/morse_level_count"}},
      {4,
       "zero-energy class: equation residual 1e-8; detuned residual >= 1e-3",
       {"spectra/zero_energy_schrodinger", "spectra/zero_energy_detuned"}},
      {5,
       "first-order system residual 1e-8 and lower-component match 1e-6",
       {"residuals/dirac_system_oscillator", "residuals/dirac_system_coulomb",
        "residuals/dirac_system_morse", "residuals/dirac_system_zero_energy",
        "residuals/lower_component_match_oscillator",
        "residuals/lower_component_match_coulomb",
        "residuals/lower_component_match_morse",
        "residuals/lower_component_match_zero_energy"}},
      {6,
       "graded relations exact at machine precision; centrality at O(h^2)",
       {"algebra/graded_exact_relations",
        "algebra/central_commutator_convergence",
        "algebra/l0_block_convergence"}},
      {7,
       "SUSY pairing to 1e-6 with one unpaired near-zero mode",
       {"algebra/susy_pairing", "algebra/susy_zero_mode"}},
      {8,
       "transformation engine: parameter maps, constancy 1e-10, spectra exact",
       {"xpct/derive_parameter_maps", "xpct/identity33_constancy",
        "xpct/spectrum34_term_matching", "xpct/map_wavefunctions_proportional",
        "xpct/row2_defect_identity"}},
      {9,
       "ladder-algebra layer: residual/norm 1e-8, overlaps 1e-6, O(h^2) closure",
       {"so21/state_equation_residual", "so21/state_unit_norm",
        "so21/ladder_overlaps", "so21/ladder_selection_rule", "so21/casimir",
        "so21/commutator_pm_l3_convergence"}},
      {10,
       "nonrelativistic limit of the coulomb spectrum to 1e-6",
       {"spectra/coulomb_nonrel_limit"}},
  };

  const auto checks = diracosc::run_suite("all");
  std::map<std::string, const diracosc::Check*> by_name;
  for (const auto& c : checks) by_name[c.name] = &c;

  int failures = 0;
  for (const auto& crit : criteria) {
    bool pass = true;
    std::string detail;
    for (const auto& name : crit.checks) {
      auto it = by_name.find(name);
      if (it == by_name.end()) {
        pass = false;
        detail += " [missing " + name + "]";
        continue;
      }
      const auto* c = it->second;
      if (!c->pass) pass = false;
      char buf[160];
      std::snprintf(buf, sizeof(buf), " %s=%.3e(%s%.1e)%s",
                    name.substr(name.find('/') + 1).c_str(), c->measured,
                    c->direction.c_str(), c->threshold,
                    c->pass ? "" : "<FAIL>");
      detail += buf;
    }
    std::printf("criterion %2d: %s  %s\n    %s\n", crit.id,
                pass ? "PASS" : "FAIL", crit.title, detail.c_str());
    if (!pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
