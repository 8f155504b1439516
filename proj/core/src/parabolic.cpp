#include "grhyd/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace grhyd {

namespace {

double sigma_a_at(double rho, double t, const OracleParams& params) {
  return opacities(rho, t, params).sigma_a;
}

// d sigma_a / dT for the power law sigma0 (rho/rho_ref)^pr (t_ref/T)^alpha.
double sigma_a_derivative(double rho, double t, double sigma_a,
                          const OracleParams& params) {
  (void)rho;
  const OpacityLaw& law = params.opacity;
  if (law.kind == OpacityKind::Constant || law.t_exponent == 0.0) return 0.0;
  return -law.t_exponent * sigma_a / t;
}

struct Tridiagonal {
  std::vector<double> sub, dia, sup, rhs;
};

// Thomas elimination; the assembled matrix is an M-matrix, so the pivots
// stay positive and no pivoting is needed.
std::vector<double> solve_tridiagonal(Tridiagonal& m) {
  const int n = static_cast<int>(m.dia.size());
  for (int i = 1; i < n; ++i) {
    if (!(m.dia[i - 1] > 0.0)) {
      throw std::runtime_error("parabolic: nonpositive pivot in radiation solve");
    }
    const double w = m.sub[i] / m.dia[i - 1];
    m.dia[i] -= w * m.sup[i - 1];
    m.rhs[i] -= w * m.rhs[i - 1];
  }
  if (!(m.dia[n - 1] > 0.0)) {
    throw std::runtime_error("parabolic: nonpositive pivot in radiation solve");
  }
  std::vector<double> x(n);
  x[n - 1] = m.rhs[n - 1] / m.dia[n - 1];
  for (int i = n - 2; i >= 0; --i) {
    x[i] = (m.rhs[i] - m.sup[i] * x[i + 1]) / m.dia[i];
  }
  return x;
}

} // namespace

std::vector<double> solve_radiation_system(const NodalField& u_h,
                                           std::span<const double> t_h,
                                           std::span<const double> t_star,
                                           const DiscreteOps& ops,
                                           const StiffnessMatrix& stiffness,
                                           const OracleParams& params, double dt,
                                           RadiationBC left, RadiationBC right) {
  const int n = ops.n();
  Tridiagonal m;
  m.sub.assign(n, 0.0);
  m.dia.assign(n, 0.0);
  m.sup.assign(n, 0.0);
  m.rhs.assign(n, 0.0);

  const double c = params.c_light;
  for (int i = 0; i < n; ++i) {
    const double rho = u_h[i].rho;
    const double ts = t_star[i];
    const double sigma = sigma_a_at(rho, ts, params);
    const double rho_cv = rho * params.cv_tilde;
    const double emission = params.a_rad * ts * ts * ts; // a_r T*^3
    const double denom = rho_cv + dt * sigma * c * emission;
    const double q = dt * sigma * c * rho_cv / denom;
    m.dia[i] = ops.mass[i] * (1.0 + q) + dt * stiffness.diag[i];
    m.rhs[i] = ops.mass[i] * (u_h[i].e_rad + q * emission * t_h[i]);
  }
  for (int e = 0; e + 1 < n; ++e) {
    m.sup[e] = dt * stiffness.off[e];
    m.sub[e + 1] = dt * stiffness.off[e];
  }

  if (left.kind == RadiationBC::Kind::Dirichlet) {
    m.dia[0] = 1.0;
    m.sup[0] = 0.0;
    m.rhs[0] = left.e_rad;
  }
  if (right.kind == RadiationBC::Kind::Dirichlet) {
    m.dia[n - 1] = 1.0;
    m.sub[n - 1] = 0.0;
    m.rhs[n - 1] = right.e_rad;
  }
  return solve_tridiagonal(m);
}

double newton_t_star(double t_init, double e_r_new, double rho, double t_h,
                     const OracleParams& params, double dt, double tol,
                     int max_iterations, int node_index) {
  const double c = params.c_light;
  const double a_r = params.a_rad;
  const double rho_cv = rho * params.cv_tilde;

  const auto residual = [&](double t) {
    const double sigma = sigma_a_at(rho, t, params);
    return rho_cv * (t - t_h) + dt * sigma * c * (a_r * t * t * t * t - e_r_new);
  };
  const auto derivative = [&](double t) {
    const double sigma = sigma_a_at(rho, t, params);
    const double dsigma = sigma_a_derivative(rho, t, sigma, params);
    return rho_cv +
           dt * c * (dsigma * (a_r * t * t * t * t - e_r_new) + 4.0 * sigma * a_r * t * t * t);
  };

  double lo = std::min(1e-14, 0.5 * t_h);
  double hi = 2.0 * std::max(t_h, std::pow(std::max(e_r_new, 0.0) / a_r, 0.25));
  double x = std::clamp(t_init, lo, hi);

  for (int it = 0; it < max_iterations; ++it) {
    const double fx = residual(x);
    if (std::abs(fx) <= tol) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return x;
    const double dfx = derivative(x);
    double next = dfx > 0.0 ? x - fx / dfx : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  throw std::runtime_error("newton_t_star: budget exhausted at node " +
                           std::to_string(node_index) +
                           ", residual = " + std::to_string(residual(x)));
}

double temperature_closure(double t_star_old, double e_r_new, double rho, double t_h,
                           const OracleParams& params, double dt) {
  const double c = params.c_light;
  const double sigma = sigma_a_at(rho, t_star_old, params);
  const double rho_cv = rho * params.cv_tilde;
  const double emission = params.a_rad * t_star_old * t_star_old * t_star_old;
  return (rho_cv * t_h + dt * sigma * c * e_r_new) / (rho_cv + dt * sigma * c * emission);
}

ParabolicResult parabolic_step(NodalField& u, std::vector<double>& t,
                               std::span<const double> t_prev, const Mesh1D& mesh,
                               const DiscreteOps& ops, const OracleParams& params,
                               double dt, const ParabolicConfig& cfg,
                               RadiationBC left, RadiationBC right) {
  const int n = ops.n();
  if (!(dt > 0.0)) throw std::invalid_argument("parabolic_step: dt must be positive");

  std::vector<double> rho_h(n), t_h(n);
  for (int i = 0; i < n; ++i) {
    rho_h[i] = u[i].rho;
    t_h[i] = temperature(u[i], params);
  }

  std::vector<double> t_star(t_prev.begin(), t_prev.end());
  for (int i = 0; i < n; ++i) {
    if (!(t_star[i] > 0.0)) {
      throw std::domain_error("parabolic_step: nonpositive initial T* at node " +
                              std::to_string(i));
    }
  }

  const double tol_newton =
      cfg.eps_picard * dt * cfg.sigma_a_ref * params.c_light * cfg.e_r_ref;

  std::vector<double> e_r_new, t_star_old;
  StiffnessMatrix stiffness;
  bool converged = false;
  int sweeps = 0;
  double err = std::numeric_limits<double>::infinity();
  while (sweeps < cfg.max_picard) {
    ++sweeps;
    stiffness = assemble_stiffness(mesh, rho_h, t_star, params);
    e_r_new = solve_radiation_system(u, t_h, t_star, ops, stiffness, params, dt,
                                     left, right);
    t_star_old = t_star;
    double change = 0.0, norm = 0.0;
    for (int i = 0; i < n; ++i) {
      t_star[i] = newton_t_star(t_star[i], e_r_new[i], rho_h[i], t_h[i], params, dt,
                                tol_newton, cfg.max_newton, i);
      change += std::abs(t_star[i] - t_star_old[i]);
      norm += std::abs(t_star_old[i]);
    }
    err = change / norm;
    if (err <= cfg.eps_picard) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("parabolic_step: Picard budget exhausted, err = " +
                             std::to_string(err));
  }

  // Closure with the penultimate iterate keeps the total energy exactly
  // conserved no matter where the loop stopped.
  std::vector<double> t_new(n);
  for (int i = 0; i < n; ++i) {
    t_new[i] = temperature_closure(t_star_old[i], e_r_new[i], rho_h[i], t_h[i],
                                   params, dt);
  }

  ParabolicResult res;
  res.picard_iterations = sweeps;
  const auto dirichlet_influx = [&](int b, double prescribed) {
    const double ke_b = stiffness.diag[b] * e_r_new[b] +
                        (b > 0 ? stiffness.off[b - 1] * e_r_new[b - 1] : 0.0) +
                        (b + 1 < n ? stiffness.off[b] * e_r_new[b + 1] : 0.0);
    const double sigma = sigma_a_at(rho_h[b], t_star_old[b], params);
    const double emission = params.a_rad * t_star_old[b] * t_star_old[b] * t_star_old[b];
    return ops.mass[b] * (prescribed - u[b].e_rad) + dt * ke_b -
           dt * ops.mass[b] * sigma * params.c_light *
               (emission * t_new[b] - prescribed);
  };
  if (left.kind == RadiationBC::Kind::Dirichlet) {
    res.boundary_influx += dirichlet_influx(0, left.e_rad);
  }
  if (right.kind == RadiationBC::Kind::Dirichlet) {
    res.boundary_influx += dirichlet_influx(n - 1, right.e_rad);
  }

  for (int i = 0; i < n; ++i) {
    const double v = u[i].mom / u[i].rho;
    const double e = params.cv_tilde * t_new[i] + params.e_cold(rho_h[i]);
    u[i].e_mech = rho_h[i] * e + 0.5 * rho_h[i] * v * v;
    u[i].e_rad = e_r_new[i];
  }
  t = std::move(t_new);
  return res;
}

} // namespace grhyd
