#pragma once

#include <vector>

#include "grhyd/grid1d.hpp"
#include "grhyd/hyperbolic.hpp"
#include "grhyd/reference_profile.hpp"

namespace grhyd {

/// Composite relative L1 error: sum over (rho, m, E_m, E_r) of
/// ||q_h - q||_L1 / ||q||_L1, trapezoidal quadrature of nodal values, with
/// the reference interpolated to the run's nodes.  A component whose
/// reference norm vanishes contributes zero when its error also vanishes and
/// raises std::runtime_error otherwise.
double composite_l1_error(const Mesh1D& mesh, const NodalField& u,
                          const ReferenceProfile& reference,
                          const OracleParams& params);

struct ConvergenceRow {
  int points = 0;
  double error = 0.0;
  double rate = 0.0; // vs the previous row; 0 for the first row
};

/// Rates between consecutive entries: log(e_prev/e_cur)/log(h_prev/h_cur),
/// i.e. per-halving rates for arbitrary refinement ratios.
std::vector<ConvergenceRow> convergence_rates(const std::vector<int>& points,
                                              const std::vector<double>& errors);

} // namespace grhyd
