#include "grhyd/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace grhyd {

namespace {

FullState state_from_primitive(double rho, double v, double t, double e_rad,
                               const OracleParams& params) {
  const double e_mech =
      rho * (params.cv_tilde * t + params.e_cold(rho)) + 0.5 * rho * v * v;
  return {rho, rho * v, e_mech, e_rad};
}

double material_pressure(double rho, double t, const OracleParams& params) {
  return (params.gamma - 1.0) * rho * params.cv_tilde * t /
         (1.0 - params.covolume * rho);
}

struct Fluxes {
  double mass, momentum, energy;
};

Fluxes steady_fluxes(double rho, double v, double t, const OracleParams& params) {
  const double p = material_pressure(rho, t, params);
  const double e_r = params.a_rad * t * t * t * t;
  Fluxes f;
  f.mass = rho * v;
  f.momentum = rho * v * v + p + e_r / 3.0;
  f.energy = v * (0.5 * rho * v * v + params.gamma / (params.gamma - 1.0) * p +
                  4.0 / 3.0 * e_r);
  return f;
}

// Downstream temperature from the momentum flux at a given compression ratio;
// the left side is strictly increasing in T.
double downstream_temperature(double r, double rho0, double v0, double mom_flux,
                              const OracleParams& params) {
  const double rho1 = r * rho0;
  const double v1 = v0 / r;
  const double target = mom_flux - rho1 * v1 * v1;
  if (!(target > 0.0)) {
    throw std::runtime_error("radiative_shock_jump: momentum flux exhausted");
  }
  const auto value = [&](double t) {
    return material_pressure(rho1, t, params) + params.a_rad * t * t * t * t / 3.0;
  };
  double hi = 1.0;
  while (value(hi) < target) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

ShockEndStates radiative_shock_jump(double mach, const OracleParams& params,
                                    double rho0, double t0) {
  const double p0 = material_pressure(rho0, t0, params);
  const double a0 = std::sqrt(params.gamma * p0 / rho0);
  const double v0 = mach * a0;
  const Fluxes f0 = steady_fluxes(rho0, v0, t0, params);

  const auto energy_residual = [&](double r) {
    const double t1 = downstream_temperature(r, rho0, v0, f0.momentum, params);
    const Fluxes f1 = steady_fluxes(r * rho0, v0 / r, t1, params);
    return f0.energy - f1.energy;
  };

  // The residual vanishes at r = 1 and at the shock compression; scan past
  // the trivial root for the sign change and bisect.
  const double r_start = 1.02;
  const double r_stop = 60.0;
  const int n_scan = 4000;
  double r_lo = r_start;
  double f_lo = energy_residual(r_lo);
  double r_hi = 0.0;
  bool bracketed = false;
  for (int k = 1; k <= n_scan; ++k) {
    const double r = r_start * std::pow(r_stop / r_start, static_cast<double>(k) / n_scan);
    const double f = energy_residual(r);
    if (f == 0.0 || (f_lo < 0.0) != (f < 0.0)) {
      r_hi = r;
      bracketed = true;
      break;
    }
    r_lo = r;
    f_lo = f;
  }
  if (!bracketed) {
    throw std::runtime_error("radiative_shock_jump: no downstream state found");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (r_lo + r_hi);
    const double f = energy_residual(mid);
    if ((f < 0.0) == (f_lo < 0.0)) {
      r_lo = mid;
      f_lo = f;
    } else {
      r_hi = mid;
    }
  }
  const double r = 0.5 * (r_lo + r_hi);
  const double t1 = downstream_temperature(r, rho0, v0, f0.momentum, params);

  ShockEndStates out;
  out.upstream = state_from_primitive(rho0, v0, t0, params.a_rad * t0 * t0 * t0 * t0,
                                      params);
  out.downstream = state_from_primitive(r * rho0, v0 / r, t1,
                                        params.a_rad * t1 * t1 * t1 * t1, params);
  return out;
}

Scenario marshak_scenario(int n_points) {
  if (n_points < 3) throw std::invalid_argument("marshak_scenario: n_points >= 3");
  Scenario s;
  s.name = "marshak";
  s.x_lo = 0.0;
  s.x_hi = 0.025;
  s.t_final = 0.02;
  s.cfl = 0.25;
  s.hydro_enabled = false;
  s.default_points = n_points;

  s.params.gamma = 5.0 / 3.0;
  s.params.cv_tilde = 0.15;
  s.params.opacity = OpacityLaw::power(300.0, 0.0, 1.0, 3.0, 1.0);

  const double t_ref = 1.0;
  const double t0 = 0.01;
  const double rho = 2.0;
  const double e_r0 = s.params.a_rad * t0 * t0 * t0 * t0;
  const OracleParams params = s.params;
  s.initial = [rho, t0, e_r0, params](double) {
    return state_from_primitive(rho, 0.0, t0, e_r0, params);
  };
  s.rad_left = RadiationBC::dirichlet(s.params.a_rad * t_ref * t_ref * t_ref * t_ref);
  s.rad_right = RadiationBC::natural();
  s.sigma_a_ref = 300.0;
  s.e_r_ref = s.rad_left.e_rad;
  return s;
}

Scenario radiative_shock_scenario(double mach, ShockOpacity law, int n_points,
                                  std::shared_ptr<const ReferenceProfile> profile) {
  Scenario s;
  s.cfl = 1.0;
  s.default_points = n_points;
  s.params.cv_tilde = 0.15;
  s.params.gamma = (mach == 50.0) ? 1.2 : 5.0 / 3.0;

  const double rho_ref = 1.0;
  const double t_ref = 0.1;
  if (law == ShockOpacity::Constant) {
    s.params.opacity = OpacityLaw::constant(500.0, 500.0);
  } else {
    s.params.opacity = OpacityLaw::power(500.0, 1.0, rho_ref, 3.5, t_ref);
  }

  if (mach == 1.2 && law == ShockOpacity::Constant) {
    s.name = "shock-mach1.2";
    s.x_lo = -0.02;
    s.x_hi = 0.02;
    s.t_final = 1.0;
  } else if (mach == 3.0 && law == ShockOpacity::Constant) {
    s.name = "shock-mach3";
    s.x_lo = -0.02;
    s.x_hi = 0.02;
    s.t_final = 1.0;
  } else if (mach == 3.0 && law == ShockOpacity::RhoTemperaturePower) {
    s.name = "shock-mach3-var";
    s.x_lo = -0.3;
    s.x_hi = 0.3;
    s.t_final = 10.0;
  } else if (mach == 10.0 && law == ShockOpacity::RhoTemperaturePower) {
    s.name = "shock-mach10";
    s.x_lo = -2.0;
    s.x_hi = 5.0;
    s.t_final = 50.0;
  } else if (mach == 30.0 && law == ShockOpacity::Constant) {
    s.name = "shock-mach30";
    s.x_lo = -0.1;
    s.x_hi = 0.4;
    s.t_final = 1.0;
  } else if (mach == 50.0 && law == ShockOpacity::Constant) {
    s.name = "shock-mach50";
    s.x_lo = -0.1;
    s.x_hi = 0.6;
    s.t_final = 10.0;
  } else {
    throw std::invalid_argument("radiative_shock_scenario: unsupported (mach, law)");
  }

  FullState left_state, right_state;
  if (profile) {
    profile->validate();
    left_state = profile->state_at(s.x_lo, s.params);
    right_state = profile->state_at(s.x_hi, s.params);
    const OracleParams params = s.params;
    const std::shared_ptr<const ReferenceProfile> p = profile;
    s.initial = [p, params](double x) { return p->state_at(x, params); };
    s.reference = std::move(profile);
  } else {
    const ShockEndStates ends = radiative_shock_jump(mach, s.params, rho_ref, t_ref);
    left_state = ends.upstream;
    right_state = ends.downstream;
    s.initial = [left_state, right_state](double x) {
      return x < 0.0 ? left_state : right_state;
    };
  }
  s.hydro_left = HydroBC::dirichlet(left_state);
  s.hydro_right = HydroBC::dirichlet(right_state);
  s.rad_left = RadiationBC::dirichlet(left_state.e_rad);
  s.rad_right = RadiationBC::dirichlet(right_state.e_rad);
  s.sigma_a_ref = 500.0;
  s.e_r_ref = std::max(left_state.e_rad, right_state.e_rad);
  return s;
}

Scenario icf1d_scenario(int n_points) {
  if (n_points < 3) throw std::invalid_argument("icf1d_scenario: n_points >= 3");
  Scenario s;
  s.name = "icf1d";
  s.x_lo = -0.6;
  s.x_hi = 0.6;
  s.t_final = 4.0;
  s.cfl = 1.0;
  s.default_points = n_points;

  s.params.gamma = 5.0 / 3.0;
  s.params.cv_tilde = 0.15;
  s.params.opacity = OpacityLaw::power(5.0e3, 1.0, 1.0, 0.0, 1.0);

  const double r_int = 0.13;
  const double r_sh = 0.15;
  const double rho_int = 5.0e-4;
  const double rho_sh = 3.5;
  const double rho_ext = 1.0e-4;
  const double t_int = 2.6e-6;
  const double t_ref = 0.25;
  const double a_r = s.params.a_rad;
  const OracleParams params = s.params;

  s.initial = [=](double x) {
    const double r = std::abs(x);
    if (r < r_int) {
      return state_from_primitive(rho_int, 0.0, t_int, a_r * std::pow(t_int, 4), params);
    }
    if (r < r_sh) {
      const double t = rho_int / rho_sh * t_int;
      return state_from_primitive(rho_sh, 0.0, t, a_r * std::pow(t, 4), params);
    }
    const double t = rho_int / rho_ext * t_int;
    return state_from_primitive(rho_ext, 0.0, t, a_r * std::pow(t_ref, 4), params);
  };

  s.hydro_left = HydroBC::wall();
  s.hydro_right = HydroBC::wall();
  const double boundary_e_r = a_r * std::pow(t_ref, 4);
  s.rad_left = RadiationBC::dirichlet(boundary_e_r);
  s.rad_right = RadiationBC::dirichlet(boundary_e_r);
  s.sigma_a_ref = 5.0e3;
  s.e_r_ref = boundary_e_r;
  return s;
}

Scenario make_scenario(const std::string& id, int n_points,
                       std::shared_ptr<const ReferenceProfile> profile) {
  const auto pts = [n_points](int fallback) { return n_points > 0 ? n_points : fallback; };
  if (id == "marshak") return marshak_scenario(pts(1025));
  if (id == "shock-mach1.2")
    return radiative_shock_scenario(1.2, ShockOpacity::Constant, pts(101), std::move(profile));
  if (id == "shock-mach3")
    return radiative_shock_scenario(3.0, ShockOpacity::Constant, pts(101), std::move(profile));
  if (id == "shock-mach3-var")
    return radiative_shock_scenario(3.0, ShockOpacity::RhoTemperaturePower, pts(101),
                                    std::move(profile));
  if (id == "shock-mach10")
    return radiative_shock_scenario(10.0, ShockOpacity::RhoTemperaturePower, pts(101),
                                    std::move(profile));
  if (id == "shock-mach30")
    return radiative_shock_scenario(30.0, ShockOpacity::Constant, pts(101), std::move(profile));
  if (id == "shock-mach50")
    return radiative_shock_scenario(50.0, ShockOpacity::Constant, pts(101), std::move(profile));
  if (id == "icf1d") return icf1d_scenario(pts(4097));
  throw std::invalid_argument("make_scenario: unknown scenario id '" + id + "'");
}

} // namespace grhyd
