#include "grhyd/thermo.hpp"

#include <cmath>
#include <stdexcept>

namespace grhyd {

OpacityLaw OpacityLaw::constant(double sigma_a, double sigma_t) {
  OpacityLaw law;
  law.kind = OpacityKind::Constant;
  law.sigma_a0 = sigma_a;
  law.sigma_t0 = sigma_t;
  return law;
}

OpacityLaw OpacityLaw::power(double sigma0, double rho_exponent, double rho_ref,
                             double t_exponent, double t_ref) {
  OpacityLaw law;
  law.kind = OpacityKind::PowerLaw;
  law.sigma_a0 = sigma0;
  law.sigma_t0 = sigma0;
  law.rho_ref = rho_ref;
  law.t_ref = t_ref;
  law.rho_exponent = rho_exponent;
  law.t_exponent = t_exponent;
  return law;
}

std::vector<std::string> AdmissibilityReport::violated() const {
  std::vector<std::string> v;
  if (!rho_positive) v.emplace_back("rho > 0");
  if (!compressible) v.emplace_back("1 - b rho > 0");
  if (!energy_above_cold) v.emplace_back("e(U) > e_cold(rho)");
  if (!e_rad_positive) v.emplace_back("E_r > 0");
  return v;
}

double velocity(const FullState& u) { return u.mom / u.rho; }

double internal_energy_density(const FullState& u) {
  const double v = u.mom / u.rho;
  return u.e_mech - 0.5 * u.rho * v * v;
}

double specific_internal_energy(const FullState& u) {
  return internal_energy_density(u) / u.rho;
}

namespace {

void require_in_B(const FullState& u, const OracleParams& params, const char* who) {
  const bool rho_ok = u.rho > 0.0;
  const bool comp_ok = rho_ok && (1.0 - params.covolume * u.rho > 0.0);
  if (!rho_ok || !comp_ok ||
      !(specific_internal_energy(u) > params.e_cold(u.rho))) {
    throw std::domain_error(std::string(who) + ": state outside B(b)");
  }
}

// Integer exponents are by far the common case in the shipped laws;
// avoid std::pow for them.
double pow_positive(double base, double expo) {
  if (expo == 0.0) return 1.0;
  if (expo == 1.0) return base;
  if (expo == 2.0) return base * base;
  if (expo == 3.0) return base * base * base;
  if (expo == 4.0) {
    const double b2 = base * base;
    return b2 * b2;
  }
  return std::pow(base, expo);
}

} // namespace

double pressure(const FullState& u, const OracleParams& params) {
  require_in_B(u, params, "pressure");
  const double e = specific_internal_energy(u);
  return (params.gamma - 1.0) * u.rho * e / (1.0 - params.covolume * u.rho);
}

double temperature(const FullState& u, const OracleParams& params) {
  require_in_B(u, params, "temperature");
  const double e = specific_internal_energy(u);
  return (e - params.e_cold(u.rho)) / params.cv_tilde;
}

double sound_speed(const FullState& u, const OracleParams& params) {
  const double p = pressure(u, params);
  const double x = 1.0 - params.covolume * u.rho;
  return std::sqrt(params.gamma * p / (u.rho * x));
}

Opacities opacities(double rho, double t, const OracleParams& params) {
  const OpacityLaw& law = params.opacity;
  if (rho <= 0.0) throw std::domain_error("opacities: rho <= 0");
  if (law.kind == OpacityKind::Constant) {
    return {law.sigma_a0, law.sigma_t0};
  }
  if (t <= 0.0 && law.t_exponent > 0.0) {
    throw std::domain_error("opacities: singular power law at T <= 0");
  }
  double factor = 1.0;
  if (law.rho_exponent != 0.0) factor *= pow_positive(rho / law.rho_ref, law.rho_exponent);
  if (law.t_exponent != 0.0) factor *= pow_positive(law.t_ref / t, law.t_exponent);
  return {law.sigma_a0 * factor, law.sigma_t0 * factor};
}

AdmissibilityReport check_admissible(const FullState& u, const OracleParams& params,
                                     double slack) {
  AdmissibilityReport r;
  r.rho_positive = u.rho > -slack;
  r.compressible = r.rho_positive && (1.0 - params.covolume * u.rho > -slack);
  if (r.rho_positive) {
    const double e = specific_internal_energy(u);
    r.energy_above_cold = e > params.e_cold(u.rho) - slack;
  }
  r.e_rad_positive = u.e_rad > -slack;
  return r;
}

ReducedState reduce(const FullState& u) {
  const double v = u.mom / u.rho;
  return {u.rho, u.mom, u.e_rad + 0.5 * u.rho * v * v};
}

FullState expand(const ReducedState& w, double eps0) {
  const double v = w.mom / w.rho;
  const double kinetic = 0.5 * w.rho * v * v;
  return {w.rho, w.mom, eps0 + kinetic, w.e_t - kinetic};
}

double radiation_pressure(const ReducedState& w) {
  const double v = w.mom / w.rho;
  return (w.e_t - 0.5 * w.rho * v * v) / 3.0;
}

} // namespace grhyd
