#include "grhyd/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "grhyd/riemann_euler.hpp"
#include "grhyd/riemann_rad.hpp"

namespace grhyd {

namespace {

// Keeps the convex-combination coefficients of the bar-state identity
// nonnegative under round-off.
constexpr double kDtSafety = 1.0 - 1e-13;

struct Flux4 {
  double rho, mom, e_mech, e_rad;
};

Flux4 euler_flux(const FullState& u, double p) {
  const double v = u.mom / u.rho;
  return {u.mom, u.mom * v + p, v * (u.e_mech + p), v * u.e_rad};
}

struct Flux3 {
  double rho, mom, e_t;
};

Flux3 rad_flux(double v, double p_r) { return {0.0, p_r, v * p_r}; }

} // namespace

ViscosityPair compute_viscosities(const NodalField& u, const DiscreteOps& ops,
                                  const OracleParams& params) {
  const int n = ops.n();
  if (static_cast<int>(u.size()) != n) {
    throw std::invalid_argument("compute_viscosities: field size mismatch");
  }

  std::vector<GammaLawSide> euler_side(n);
  std::vector<RadSide> rad_side(n);
  for (int i = 0; i < n; ++i) {
    const FullState& s = u[i];
    const double eps = s.rho > 0.0 ? internal_energy_density(s) : -1.0;
    if (!(s.rho > 0.0) || !(1.0 - params.covolume * s.rho > 0.0) ||
        !(eps / s.rho > params.e_cold(s.rho)) || !(s.e_rad > 0.0)) {
      throw std::domain_error("compute_viscosities: node " + std::to_string(i) +
                              " outside A(b)");
    }
    const double p = (params.gamma - 1.0) * eps / (1.0 - params.covolume * s.rho);
    const double v = s.mom / s.rho;
    euler_side[i] = {s.rho, v, p, 1.0 + p * (1.0 - params.covolume * s.rho) / eps,
                     params.covolume};
    rad_side[i] = {s.rho, v, s.e_rad / 3.0};
  }

  ViscosityPair visc;
  visc.d1.resize(ops.n_edges());
  visc.d2.resize(ops.n_edges());
  for (int e = 0; e < ops.n_edges(); ++e) {
    const double norm = std::abs(ops.c_edge[e]);
    // n_ij = c_ij/||c_ij||; the mirrored problem (n_ji with swapped sides)
    // has identical wave speeds in 1D, so one solve covers the max.
    GammaLawSide sl = euler_side[e];
    GammaLawSide sr = euler_side[e + 1];
    RadSide rl = rad_side[e];
    RadSide rr = rad_side[e + 1];
    if (ops.c_edge[e] < 0.0) {
      std::swap(sl, sr);
      std::swap(rl, rr);
      sl.v = -sl.v;
      sr.v = -sr.v;
      rl.v = -rl.v;
      rr.v = -rr.v;
    }
    visc.d1[e] = lambda_max_two_gamma(sl, sr).lambda_max * norm;
    visc.d2[e] = rad_wave_speed_bound({rl, rr}) * norm;
  }
  return visc;
}

StepSizes compute_dt(const ViscosityPair& visc, const DiscreteOps& ops, double cfl) {
  const int n = ops.n();
  double rate1 = 0.0, rate2 = 0.0; // max_i (2/m_i) sum_j d_ij
  for (int i = 0; i < n; ++i) {
    double s1 = 0.0, s2 = 0.0;
    if (i > 0) {
      s1 += visc.d1[i - 1];
      s2 += visc.d2[i - 1];
    }
    if (i + 1 < n) {
      s1 += visc.d1[i];
      s2 += visc.d2[i];
    }
    rate1 = std::max(rate1, 2.0 * s1 / ops.mass[i]);
    rate2 = std::max(rate2, 2.0 * s2 / ops.mass[i]);
  }
  if (rate1 + rate2 <= 0.0) {
    throw std::runtime_error("compute_dt: all graph viscosities vanish");
  }
  StepSizes s;
  s.dt1 = kDtSafety / rate1; // +inf when rate1 == 0
  s.dt2 = kDtSafety / rate2;
  s.theta = rate1 / (rate1 + rate2);
  s.dt = cfl * kDtSafety / (rate1 + rate2);
  return s;
}

NodalField stage1_update(const NodalField& u, const DiscreteOps& ops,
                         const ViscosityPair& visc, const OracleParams& params,
                         double dt_eff) {
  const int n = ops.n();
  std::vector<Flux4> g(n);
  for (int i = 0; i < n; ++i) g[i] = euler_flux(u[i], pressure(u[i], params));

  std::vector<Flux4> f(n, Flux4{0.0, 0.0, 0.0, 0.0});
  for (int e = 0; e + 1 < n; ++e) {
    const int i = e, j = e + 1;
    const double c = ops.c_edge[e];
    const double d = visc.d1[e];
    const double frho = -(g[j].rho + g[i].rho) * c + d * (u[j].rho - u[i].rho);
    const double fmom = -(g[j].mom + g[i].mom) * c + d * (u[j].mom - u[i].mom);
    const double fem = -(g[j].e_mech + g[i].e_mech) * c + d * (u[j].e_mech - u[i].e_mech);
    const double fer = -(g[j].e_rad + g[i].e_rad) * c + d * (u[j].e_rad - u[i].e_rad);
    f[i].rho += frho;
    f[i].mom += fmom;
    f[i].e_mech += fem;
    f[i].e_rad += fer;
    f[j].rho -= frho;
    f[j].mom -= fmom;
    f[j].e_mech -= fem;
    f[j].e_rad -= fer;
  }
  for (int i = 0; i < n; ++i) {
    const double cd = ops.c_diag[i];
    if (cd != 0.0) {
      f[i].rho -= 2.0 * g[i].rho * cd;
      f[i].mom -= 2.0 * g[i].mom * cd;
      f[i].e_mech -= 2.0 * g[i].e_mech * cd;
      f[i].e_rad -= 2.0 * g[i].e_rad * cd;
    }
  }

  NodalField out(n);
  for (int i = 0; i < n; ++i) {
    const double w = dt_eff / ops.mass[i];
    out[i] = {u[i].rho + w * f[i].rho, u[i].mom + w * f[i].mom,
              u[i].e_mech + w * f[i].e_mech, u[i].e_rad + w * f[i].e_rad};
  }
  return out;
}

NodalField stage2_update(const NodalField& u, const DiscreteOps& ops,
                         const ViscosityPair& visc, double dt_eff) {
  const int n = ops.n();
  std::vector<ReducedState> w(n);
  std::vector<Flux3> k(n);
  std::vector<double> eps(n);
  for (int i = 0; i < n; ++i) {
    w[i] = reduce(u[i]);
    eps[i] = internal_energy_density(u[i]);
    // p_r = E_r/3 of the underlying full state; algebraically identical to
    // radiation_pressure(w) and free of the kinetic-energy cancellation.
    k[i] = rad_flux(u[i].mom / u[i].rho, u[i].e_rad / 3.0);
  }

  std::vector<Flux3> f(n, Flux3{0.0, 0.0, 0.0});
  for (int e = 0; e + 1 < n; ++e) {
    const int i = e, j = e + 1;
    const double c = ops.c_edge[e];
    const double d = visc.d2[e];
    const double frho = d * (w[j].rho - w[i].rho);
    const double fmom = -(k[j].mom + k[i].mom) * c + d * (w[j].mom - w[i].mom);
    const double fet = -(k[j].e_t + k[i].e_t) * c + d * (w[j].e_t - w[i].e_t);
    f[i].rho += frho;
    f[i].mom += fmom;
    f[i].e_t += fet;
    f[j].rho -= frho;
    f[j].mom -= fmom;
    f[j].e_t -= fet;
  }
  for (int i = 0; i < n; ++i) {
    const double cd = ops.c_diag[i];
    if (cd != 0.0) {
      f[i].mom -= 2.0 * k[i].mom * cd;
      f[i].e_t -= 2.0 * k[i].e_t * cd;
    }
  }

  NodalField out(n);
  for (int i = 0; i < n; ++i) {
    const double scale = dt_eff / ops.mass[i];
    const double rho2 = w[i].rho + scale * f[i].rho;
    const double mom2 = w[i].mom + scale * f[i].mom;
    const double et2 = w[i].e_t + scale * f[i].e_t;
    const double v2 = mom2 / rho2;
    const double kin2 = 0.5 * rho2 * v2 * v2;
    out[i] = {rho2, mom2, eps[i] + kin2, et2 - kin2};
  }
  return out;
}

CombineResult additive_combine_clipped(const NodalField& u, const DiscreteOps& ops,
                                       const ViscosityPair& visc,
                                       const OracleParams& params,
                                       const StepSizes& steps, double dt_used) {
  const int n = ops.n();
  CombineResult res;
  res.steps = steps;
  const double theta = steps.theta;

  const double dt1_eff =
      theta > 0.0 ? std::min(dt_used / theta, steps.dt1) : 0.0;
  const double dt2_eff =
      theta < 1.0 ? std::min(dt_used / (1.0 - theta), steps.dt2) : 0.0;

  res.stage1 = theta > 0.0 ? stage1_update(u, ops, visc, params, dt1_eff) : u;
  res.stage2 = theta < 1.0 ? stage2_update(u, ops, visc, dt2_eff) : u;

  res.u.resize(n);
  for (int i = 0; i < n; ++i) {
    res.u[i] = {theta * res.stage1[i].rho + (1.0 - theta) * res.stage2[i].rho,
                theta * res.stage1[i].mom + (1.0 - theta) * res.stage2[i].mom,
                theta * res.stage1[i].e_mech + (1.0 - theta) * res.stage2[i].e_mech,
                theta * res.stage1[i].e_rad + (1.0 - theta) * res.stage2[i].e_rad};
  }

  // Boundary rows are the only non-cancelling terms of the interior sums:
  // sum_i F_i = g(u_0) - g(u_last) and likewise for the reduced flux.
  const Flux4 g0 = euler_flux(u.front(), pressure(u.front(), params));
  const Flux4 gl = euler_flux(u.back(), pressure(u.back(), params));
  const double pr0 = u.front().e_rad / 3.0;
  const double prl = u.back().e_rad / 3.0;
  const double v0 = u.front().mom / u.front().rho;
  const double vl = u.back().mom / u.back().rho;
  res.boundary.mass = dt_used * (g0.rho - gl.rho);
  res.boundary.momentum = dt_used * ((g0.mom - gl.mom) + (pr0 - prl));
  res.boundary.energy_total =
      dt_used * ((g0.e_mech + g0.e_rad - gl.e_mech - gl.e_rad) + (v0 * pr0 - vl * prl));
  return res;
}

CombineResult additive_combine(const NodalField& u, const DiscreteOps& ops,
                               const OracleParams& params, double cfl) {
  const ViscosityPair visc = compute_viscosities(u, ops, params);
  const StepSizes steps = compute_dt(visc, ops, cfl);
  return additive_combine_clipped(u, ops, visc, params, steps, steps.dt);
}

} // namespace grhyd
