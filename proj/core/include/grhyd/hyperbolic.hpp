#pragma once

#include <vector>

#include "grhyd/grid1d.hpp"
#include "grhyd/thermo.hpp"

namespace grhyd {

using NodalField = std::vector<FullState>;

/// Symmetric graph-viscosity coefficients per stencil edge, one pair per
/// hyperbolic stage: d_ij = wave-speed bound times ||c_ij||.
struct ViscosityPair {
  std::vector<double> d1; // size I-1
  std::vector<double> d2; // size I-1
};

/// dt1, dt2 are the stage-wise limits min_i m_i / (2 sum_j d_ij);
/// theta = dt2/(dt1+dt2) and dt = cfl dt1 dt2/(dt1+dt2).
struct StepSizes {
  double dt1 = 0.0;
  double dt2 = 0.0;
  double theta = 0.0;
  double dt = 0.0;
};

/// Net rate-of-change of the interior sums contributed by the boundary rows,
/// already multiplied by the time step actually taken. Subtracting these from
/// the discrete sums closes the conservation audit to round-off.
struct BoundaryFluxAccount {
  double mass = 0.0;
  double momentum = 0.0;
  double energy_total = 0.0; // E_m + E_r
};

/// Requires every node in A(b); throws std::domain_error naming the first
/// offending index otherwise.
ViscosityPair compute_viscosities(const NodalField& u, const DiscreteOps& ops,
                                  const OracleParams& params);

/// Throws std::runtime_error when every viscosity vanishes.
StepSizes compute_dt(const ViscosityPair& visc, const DiscreteOps& ops, double cfl);

/// Forward-Euler update of the Euler-plus-passive-radiation stage.
NodalField stage1_update(const NodalField& u, const DiscreteOps& ops,
                         const ViscosityPair& visc, const OracleParams& params,
                         double dt_eff);

/// Forward-Euler update of the radiation-pressure stage in the reduced
/// variables followed by the change of variables that freezes the internal
/// energy pointwise.
NodalField stage2_update(const NodalField& u, const DiscreteOps& ops,
                         const ViscosityPair& visc, double dt_eff);

struct CombineResult {
  NodalField u;        // theta u1 + (1-theta) u2
  NodalField stage1;   // u^{n,1}
  NodalField stage2;   // u^{n,2}
  StepSizes steps;
  BoundaryFluxAccount boundary;
};

/// Runs both stages from the same state with their full stage steps
/// cfl*dt1 and cfl*dt2 and blends with theta.
CombineResult additive_combine(const NodalField& u, const DiscreteOps& ops,
                               const OracleParams& params, double cfl);

/// Same, but advancing only dt_used <= steps.dt (the last step of a run is
/// clipped to land on the final time).
CombineResult additive_combine_clipped(const NodalField& u, const DiscreteOps& ops,
                                       const ViscosityPair& visc,
                                       const OracleParams& params,
                                       const StepSizes& steps, double dt_used);

} // namespace grhyd
