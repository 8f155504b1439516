#pragma once

#include "grhyd/thermo.hpp"

namespace grhyd {

/// One side of the radiation-pressure Riemann problem: p is the radiation
/// pressure E_r/3 seen by the reduced system.
struct RadSide {
  double rho = 0.0;
  double v = 0.0;
  double p = 0.0;
};

struct RadRiemannInput {
  RadSide left;
  RadSide right;
};

enum class RadRiemannCase { Vacuum, TwoExpansion, Mixed, TwoShock };

struct RadRiemannSolution {
  double p_star = 0.0;
  RadRiemannCase case_tag = RadRiemannCase::Mixed;
  double lambda_l_minus = 0.0; // <= 0
  double lambda_r_plus = 0.0;  // >= 0
  double mu_max = 0.0;         // max(-lambda_l_minus, lambda_r_plus)
};

/// Normal projection of a reduced state: (rho, rho v.n, E_r + 1/2 rho (v.n)^2),
/// returned as (rho, v_n, p_r) with p_r = E_r/3.
RadSide project_pi2(const ReducedState& w, double n);

/// Velocity increment across one wave: shock branch for p >= p_Z, expansion
/// branch for p <= p_Z; both vanish at p = p_Z.
double rad_wave_function(double p, const RadSide& side);

/// phi(p) = f_L(p) + f_R(p) + v_R - v_L: strictly increasing and concave.
double rad_phi(double p, const RadRiemannInput& in);

/// Contact pressure and guaranteed wave-speed bound; total for all valid
/// inputs (rho > 0, p >= 0 per side).
RadRiemannSolution solve_p_star(const RadRiemannInput& in);

/// Upper bound on the maximum wave speed only; takes a certified cheap path
/// for nearly equal sides, otherwise defers to solve_p_star.
double rad_wave_speed_bound(const RadRiemannInput& in);

} // namespace grhyd
