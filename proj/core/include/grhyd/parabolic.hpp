#pragma once

#include <span>
#include <vector>

#include "grhyd/grid1d.hpp"
#include "grhyd/hyperbolic.hpp"
#include "grhyd/thermo.hpp"

namespace grhyd {

/// Radiation boundary treatment of the backward-Euler solve.  Natural leaves
/// the assembled row untouched (homogeneous Neumann); Dirichlet replaces the
/// row by identity with the prescribed radiation energy.
struct RadiationBC {
  enum class Kind { Natural, Dirichlet } kind = Kind::Natural;
  double e_rad = 0.0;

  static RadiationBC natural() { return {}; }
  static RadiationBC dirichlet(double value) { return {Kind::Dirichlet, value}; }
};

struct ParabolicConfig {
  double eps_picard = 1e-5;  // relative l1 exit tolerance of the outer loop
  int max_picard = 200;
  int max_newton = 50;
  double sigma_a_ref = 1.0;  // reference scales entering the Newton tolerance
  double e_r_ref = 1.0;      //   eps_newton = eps_picard * dt * sigma_ref * c * E_ref
};

struct ParabolicResult {
  int picard_iterations = 0;
  /// m-weighted total-energy change attributable to the boundary rows
  /// (diffusive flux through Dirichlet nodes plus their row replacement).
  double boundary_influx = 0.0;
};

/// Solves the linearized radiation system G E = rhs for the given temperature
/// iterate T_star; G is an M-matrix, so the solution is strictly positive.
std::vector<double> solve_radiation_system(const NodalField& u_h,
                                           std::span<const double> t_h,
                                           std::span<const double> t_star,
                                           const DiscreteOps& ops,
                                           const StiffnessMatrix& stiffness,
                                           const OracleParams& params, double dt,
                                           RadiationBC left, RadiationBC right);

/// Safeguarded Newton for the nonlinear per-node temperature equation
///   rho cv (T - T_h) + dt sigma_a(rho,T) c (a_r T^4 - E_r) = 0.
/// Throws std::runtime_error carrying the node context on budget exhaustion.
double newton_t_star(double t_init, double e_r_new, double rho, double t_h,
                     const OracleParams& params, double dt, double tol,
                     int max_iterations, int node_index = -1);

/// Conservative temperature closure evaluated with the penultimate iterate.
double temperature_closure(double t_star_old, double e_r_new, double rho, double t_h,
                           const OracleParams& params, double dt);

/// Full parabolic update u^{h,n} -> u^{n+1}: Picard outer loop, linear solve,
/// per-node Newton, closure, and energy-conservative reassembly.  t_prev is
/// the pre-hyperbolic temperature used to initialize T*.  On success u and t
/// hold the new state; on failure they are left untouched.
ParabolicResult parabolic_step(NodalField& u, std::vector<double>& t,
                               std::span<const double> t_prev, const Mesh1D& mesh,
                               const DiscreteOps& ops, const OracleParams& params,
                               double dt, const ParabolicConfig& cfg,
                               RadiationBC left, RadiationBC right);

} // namespace grhyd
