#pragma once

#include <string>
#include <vector>

namespace grhyd {

/// Conserved unknowns per degree of freedom: density, momentum (1D),
/// total mechanical energy, radiation energy.  Units: g/cm^3,
/// g/(cm^2 sh), GJ/cm^3, GJ/cm^3.
struct FullState {
  double rho = 0.0;
  double mom = 0.0;
  double e_mech = 0.0;
  double e_rad = 0.0;
};

/// Reduced unknowns of the radiation-pressure stage: E_t = E_r + 1/2 rho v^2.
struct ReducedState {
  double rho = 0.0;
  double mom = 0.0;
  double e_t = 0.0;
};

enum class OpacityKind { Constant, PowerLaw };

/// sigma(rho, T) = sigma0 * (rho/rho_ref)^rho_exponent * (t_ref/T)^t_exponent.
/// Constant laws are the degenerate case with both exponents zero.
struct OpacityLaw {
  OpacityKind kind = OpacityKind::Constant;
  double sigma_a0 = 0.0;
  double sigma_t0 = 0.0;
  double rho_ref = 1.0;
  double t_ref = 1.0;
  double rho_exponent = 0.0;
  double t_exponent = 0.0;

  static OpacityLaw constant(double sigma_a, double sigma_t);
  static OpacityLaw power(double sigma0, double rho_exponent, double rho_ref,
                          double t_exponent, double t_ref);
};

/// Equation-of-state oracle parameters: ideal gas with covolume plus the
/// radiation constants and the opacity law.  The cold curve is identically
/// zero for every shipped configuration but is kept in the admissibility
/// inequalities.
struct OracleParams {
  double gamma = 5.0 / 3.0;      // heat capacity ratio, > 1
  double cv_tilde = 0.15;        // rescaled average heat capacity [GJ/(keV g)]
  double covolume = 0.0;         // b, maximum compressibility parameter [cm^3/g]
  double a_rad = 1.3720172e-2;   // rescaled radiation constant [GJ/(cm^3 keV^4)]
  double c_light = 2.99792458e2; // speed of light [cm/sh]
  OpacityLaw opacity;

  double e_cold(double /*rho*/) const { return 0.0; }
};

struct Opacities {
  double sigma_a = 0.0;
  double sigma_t = 0.0;
};

struct AdmissibilityReport {
  bool rho_positive = false;      // rho > 0
  bool compressible = false;      // 1 - b rho > 0
  bool energy_above_cold = false; // e(U) > e_cold(rho)
  bool e_rad_positive = false;    // E_r > 0

  bool in_B() const { return rho_positive && compressible && energy_above_cold; }
  bool in_A() const { return in_B() && e_rad_positive; }
  std::vector<std::string> violated() const;
};

double velocity(const FullState& u);
/// eps(U) = E_m - 1/2 rho v^2
double internal_energy_density(const FullState& u);
/// e(U) = eps(U)/rho
double specific_internal_energy(const FullState& u);

/// Mechanical pressure p = (gamma-1) rho e / (1 - b rho).
/// Throws std::domain_error outside B(b).
double pressure(const FullState& u, const OracleParams& params);

/// Material temperature T = (e - e_cold)/cv.  Throws outside B(b).
double temperature(const FullState& u, const OracleParams& params);

/// Covolume sound speed sqrt(gamma p / (rho (1 - b rho))).
double sound_speed(const FullState& u, const OracleParams& params);

/// Evaluates the configured opacity law at (rho, T).
/// Throws std::domain_error when T <= 0 under a singular power law.
Opacities opacities(double rho, double t, const OracleParams& params);

/// Strict-inequality membership tests for B(b) and A(b).  `slack` loosens
/// the checks for logging only; the default is exact.
AdmissibilityReport check_admissible(const FullState& u, const OracleParams& params,
                                     double slack = 0.0);

ReducedState reduce(const FullState& u);
/// Inverse of reduce given the frozen internal energy density eps0:
/// E_r = E_t - 1/2 rho v^2, E_m = eps0 + 1/2 rho v^2.
FullState expand(const ReducedState& w, double eps0);

/// Radiation pressure p_r(W) = (E_t - 1/2 rho v^2)/3.
double radiation_pressure(const ReducedState& w);

} // namespace grhyd
