#pragma once

#include "grhyd/thermo.hpp"

namespace grhyd {

/// Extended state of the surrogate Riemann problem: the conserved tuple plus
/// Gamma = rho + p(U)(1 - b rho)/e(U), advected as a passive scalar so the
/// effective heat-capacity ratio Gamma/rho is constant on each side of the
/// contact.
struct ExtendedState {
  double rho = 0.0;
  double mom_n = 0.0;
  double e_mech = 0.0;
  double e_rad = 0.0;
  double big_gamma = 0.0;
};

ExtendedState extend_theta(const FullState& u, const OracleParams& params);
FullState reduce_pi(const ExtendedState& w);

/// pi^1 projection: removes tangential kinetic energy and keeps the normal
/// momentum. In 1D with n = +-1 this is the identity up to the momentum sign.
FullState project_pi1(const FullState& u, double n);

enum class EulerWaveType { Rarefaction, Shock, Vacuum };

struct EulerWaveSpeedBound {
  double lambda_max = 0.0;
  double p_star = 0.0; // certified upper estimate of the contact pressure
  EulerWaveType left = EulerWaveType::Rarefaction;
  EulerWaveType right = EulerWaveType::Rarefaction;
};

/// One side of the two-gamma covolume Riemann problem in primitive form.
struct GammaLawSide {
  double rho = 0.0;
  double v = 0.0;
  double p = 0.0;
  double gamma = 0.0;
  double covolume = 0.0;
};

/// Guaranteed upper bound on the maximum wave speed of the surrogate Riemann
/// problem with per-side gamma-law covolume gas. The pressure iteration stops
/// at a point where phi >= 0, so the returned speeds bound the exact ones.
EulerWaveSpeedBound lambda_max_two_gamma(const GammaLawSide& left,
                                         const GammaLawSide& right);

/// Wave-speed bound for projected full states; the oracle is consulted only
/// for the two pressures. E_r is passive and never affects the result.
EulerWaveSpeedBound lambda_max_euler(const FullState& u_left, const FullState& u_right,
                                     const OracleParams& params);

} // namespace grhyd
