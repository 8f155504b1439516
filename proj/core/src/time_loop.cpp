#include "grhyd/time_loop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grhyd {

namespace {

struct Sums {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

Sums weighted_sums(const NodalField& u, const DiscreteOps& ops) {
  Sums s;
  for (int i = 0; i < ops.n(); ++i) {
    s.mass += ops.mass[i] * u[i].rho;
    s.momentum += ops.mass[i] * u[i].mom;
    s.energy += ops.mass[i] * (u[i].e_mech + u[i].e_rad);
  }
  return s;
}

long count_inadmissible(const NodalField& u, const OracleParams& params) {
  long bad = 0;
  for (const FullState& s : u) {
    if (!check_admissible(s, params).in_A()) ++bad;
  }
  return bad;
}

// Overwrites one boundary node per its hydro BC and returns the m-weighted
// state change so the conservation audit can absorb it.
BoundaryFluxAccount enforce_hydro_bc(FullState& s, const HydroBC& bc, double m_i) {
  BoundaryFluxAccount delta;
  if (bc.kind == HydroBC::Kind::None) return delta;
  const FullState before = s;
  if (bc.kind == HydroBC::Kind::DirichletState) {
    s = bc.state;
  } else { // Wall: strip the kinetic energy along with the momentum
    const double v = s.mom / s.rho;
    s.e_mech -= 0.5 * s.rho * v * v;
    s.mom = 0.0;
  }
  delta.mass = m_i * (s.rho - before.rho);
  delta.momentum = m_i * (s.mom - before.mom);
  delta.energy_total = m_i * ((s.e_mech + s.e_rad) - (before.e_mech + before.e_rad));
  return delta;
}

} // namespace

RunResult time_loop(const Scenario& scenario, const TimeLoopOptions& options) {
  const int points = options.points > 0 ? options.points : scenario.default_points;
  if (points < 3) throw std::invalid_argument("time_loop: need at least 3 points");
  const double cfl = options.cfl.value_or(scenario.cfl);
  const double t_final = options.t_final.value_or(scenario.t_final);
  if (!(cfl > 0.0) || cfl > 1.0) throw std::invalid_argument("time_loop: cfl in (0,1]");
  if (t_final < 0.0) throw std::invalid_argument("time_loop: negative final time");

  RunResult res{Mesh1D::uniform(scenario.x_lo, scenario.x_hi, points)};
  const DiscreteOps ops = build_ops(res.mesh);
  const OracleParams& params = scenario.params;

  res.u.resize(points);
  res.t_material.resize(points);
  for (int i = 0; i < points; ++i) {
    res.u[i] = scenario.initial(res.mesh.node(i));
    res.t_material[i] = temperature(res.u[i], params);
  }

  ParabolicConfig pcfg;
  pcfg.eps_picard = options.eps_picard;
  pcfg.max_picard = options.max_picard;
  pcfg.sigma_a_ref = scenario.sigma_a_ref;
  pcfg.e_r_ref = scenario.e_r_ref;

  const double t_eps = 1e-12 * std::max(t_final, 1.0);
  double t = 0.0;
  while (t < t_final - t_eps) {
    const Sums before = weighted_sums(res.u, ops);
    BoundaryFluxAccount logged;

    ViscosityPair visc;
    StepSizes steps;
    int picard = 0;
    double dt = 0.0;
    try {
      visc = compute_viscosities(res.u, ops, params);
      steps = compute_dt(visc, ops, cfl);
      dt = std::min(steps.dt, t_final - t);

      if (scenario.hydro_enabled) {
        CombineResult comb =
            additive_combine_clipped(res.u, ops, visc, params, steps, dt);
        if (options.check_idp) {
          res.idp_violations += count_inadmissible(comb.stage1, params);
          res.idp_violations += count_inadmissible(comb.stage2, params);
          res.idp_violations += count_inadmissible(comb.u, params);
        }
        res.u = std::move(comb.u);
        logged = comb.boundary;

        const auto absorb = [&logged](const BoundaryFluxAccount& d) {
          logged.mass += d.mass;
          logged.momentum += d.momentum;
          logged.energy_total += d.energy_total;
        };
        absorb(enforce_hydro_bc(res.u.front(), scenario.hydro_left, ops.mass.front()));
        absorb(enforce_hydro_bc(res.u.back(), scenario.hydro_right, ops.mass.back()));
      } else {
        // Frozen hydrodynamics: u^{h,n} = (rho, 0, E_m, E_r).
        for (FullState& s : res.u) s.mom = 0.0;
      }

      const ParabolicResult pres =
          parabolic_step(res.u, res.t_material, res.t_material, res.mesh, ops,
                         params, dt, pcfg, scenario.rad_left, scenario.rad_right);
      picard = pres.picard_iterations;
      logged.energy_total += pres.boundary_influx;
      if (options.check_idp) {
        res.idp_violations += count_inadmissible(res.u, params);
      }

      t += dt;
      ++res.steps;
    } catch (const std::exception& e) {
      throw std::runtime_error("time_loop: step " + std::to_string(res.steps + 1) +
                               " at t = " + std::to_string(t) + ": " + e.what());
    }

    const Sums after = weighted_sums(res.u, ops);
    const double mass_scale = std::max(std::abs(after.mass), 1e-300);
    double mom_scale = 0.0;
    for (int i = 0; i < points; ++i) mom_scale += ops.mass[i] * std::abs(res.u[i].mom);
    mom_scale = std::max({mom_scale, std::sqrt(std::abs(after.mass * after.energy)),
                          1e-300});
    const double energy_scale = std::max(std::abs(after.energy), 1e-300);

    StepDiagnostics d;
    d.step = res.steps;
    d.t = t;
    d.dt = dt;
    d.dt1 = steps.dt1;
    d.dt2 = steps.dt2;
    d.theta = steps.theta;
    d.picard_iterations = picard;
    d.mass_residual = std::abs(after.mass - before.mass - logged.mass) / mass_scale;
    d.momentum_residual =
        std::abs(after.momentum - before.momentum - logged.momentum) / mom_scale;
    d.energy_residual =
        std::abs(after.energy - before.energy - logged.energy_total) / energy_scale;
    d.energy_influx = logged.energy_total;
    d.min_rho = res.u[0].rho;
    d.max_rho = res.u[0].rho;
    d.min_t = res.t_material[0];
    d.max_t = res.t_material[0];
    d.min_e_rad = res.u[0].e_rad;
    d.max_e_rad = res.u[0].e_rad;
    for (int i = 1; i < points; ++i) {
      d.min_rho = std::min(d.min_rho, res.u[i].rho);
      d.max_rho = std::max(d.max_rho, res.u[i].rho);
      d.min_t = std::min(d.min_t, res.t_material[i]);
      d.max_t = std::max(d.max_t, res.t_material[i]);
      d.min_e_rad = std::min(d.min_e_rad, res.u[i].e_rad);
      d.max_e_rad = std::max(d.max_e_rad, res.u[i].e_rad);
    }

    res.max_mass_residual = std::max(res.max_mass_residual, d.mass_residual);
    res.max_momentum_residual = std::max(res.max_momentum_residual, d.momentum_residual);
    res.max_energy_residual = std::max(res.max_energy_residual, d.energy_residual);
    res.history_time.push_back(t);
    res.history_rho_max.push_back(d.max_rho);
    if (options.on_step) options.on_step(d);
  }

  res.time = t;
  return res;
}

} // namespace grhyd
