#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "grhyd/scenario.hpp"

namespace grhyd {

struct StepDiagnostics {
  long step = 0;
  double t = 0.0; // time at the end of the step
  double dt = 0.0;
  double dt1 = 0.0;
  double dt2 = 0.0;
  double theta = 0.0;
  int picard_iterations = 0;
  /// Audit residuals |delta(sum) - logged boundary terms| / scale.
  double mass_residual = 0.0;
  double momentum_residual = 0.0;
  double energy_residual = 0.0;
  /// Logged total-energy boundary account of this step (hyperbolic flux,
  /// boundary overwrites, Dirichlet radiation rows).
  double energy_influx = 0.0;
  double min_rho = 0.0, max_rho = 0.0;
  double min_t = 0.0, max_t = 0.0;
  double min_e_rad = 0.0, max_e_rad = 0.0;
};

struct TimeLoopOptions {
  int points = 0;                 // 0: scenario default
  std::optional<double> cfl;      // override
  std::optional<double> t_final;  // override
  double eps_picard = 1e-5;
  int max_picard = 200;
  bool check_idp = false;
  std::function<void(const StepDiagnostics&)> on_step;
};

struct RunResult {
  Mesh1D mesh;
  NodalField u;
  std::vector<double> t_material;
  long steps = 0;
  double time = 0.0;
  double max_mass_residual = 0.0;
  double max_momentum_residual = 0.0;
  double max_energy_residual = 0.0;
  long idp_violations = 0;
  std::vector<double> history_time;    // end-of-step times
  std::vector<double> history_rho_max; // max_i rho_i at those times
};

/// Runs {additive hyperbolic update -> parabolic update} until t_final, the
/// last step clipped to land exactly on it.  With hydro frozen only the
/// parabolic stage advances the state (the time step is still the hyperbolic
/// one).  Any stage error aborts with step context.
RunResult time_loop(const Scenario& scenario, const TimeLoopOptions& options);

} // namespace grhyd
