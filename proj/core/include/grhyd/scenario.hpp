#pragma once

#include <functional>
#include <memory>
#include <string>

#include "grhyd/parabolic.hpp"
#include "grhyd/reference_profile.hpp"
#include "grhyd/thermo.hpp"

namespace grhyd {

/// Hydrodynamic boundary treatment applied after each hyperbolic stage pair.
struct HydroBC {
  enum class Kind {
    None,           // leave the natural update in place
    DirichletState, // overwrite the full state
    Wall            // slip: zero the momentum, keep the internal energy
  } kind = Kind::None;
  FullState state{};

  static HydroBC none() { return {}; }
  static HydroBC dirichlet(const FullState& s) { return {Kind::DirichletState, s}; }
  static HydroBC wall() { return {Kind::Wall, {}}; }
};

struct Scenario {
  std::string name;
  double x_lo = 0.0, x_hi = 1.0;
  double t_final = 0.0;
  double cfl = 1.0;
  bool hydro_enabled = true;
  int default_points = 0;
  OracleParams params;
  HydroBC hydro_left, hydro_right;
  RadiationBC rad_left, rad_right;
  std::function<FullState(double)> initial;
  double sigma_a_ref = 1.0; // Newton tolerance reference scales
  double e_r_ref = 1.0;
  /// Reference profile for error measurement, when one backs the scenario.
  std::shared_ptr<const ReferenceProfile> reference;
};

/// Nonlinear-diffusion wave driven by a hot boundary; the hydrodynamics is
/// frozen and only the parabolic stage runs.
Scenario marshak_scenario(int n_points = 1025);

enum class ShockOpacity { Constant, RhoTemperaturePower };

/// Equilibrium end states of a steady radiative shock: mass, momentum and
/// energy fluxes (material + radiation) match across the front and both sides
/// satisfy E_r = a_r T^4.
struct ShockEndStates {
  FullState upstream;
  FullState downstream;
};
ShockEndStates radiative_shock_jump(double mach, const OracleParams& params,
                                    double rho0, double t0);

/// Steady radiative shock run.  With a reference profile the initial data and
/// the Dirichlet states interpolate it; without one the run starts from the
/// jump-condition step and measures errors by self-convergence.
/// Supported Mach numbers: 1.2, 3 (constant or variable opacity), 10, 30, 50.
Scenario radiative_shock_scenario(double mach, ShockOpacity law, int n_points = 101,
                                  std::shared_ptr<const ReferenceProfile> profile = {});

/// Three-region implosion-like robustness scenario on (-0.6, 0.6) cm with
/// slip walls and radiation-driven boundaries.
Scenario icf1d_scenario(int n_points = 4097);

/// Dispatch by scenario id: marshak, shock-mach1.2, shock-mach3,
/// shock-mach3-var, shock-mach10, shock-mach30, shock-mach50, icf1d.
Scenario make_scenario(const std::string& id, int n_points = 0,
                       std::shared_ptr<const ReferenceProfile> profile = {});

} // namespace grhyd
