#pragma once

#include <span>
#include <vector>

#include "grhyd/thermo.hpp"

namespace grhyd {

/// Continuous piecewise-linear (P1) discretization on a 1D node set.
/// Boundary degrees of freedom are the two end nodes.
class Mesh1D {
public:
  explicit Mesh1D(std::vector<double> nodes);
  static Mesh1D uniform(double x_lo, double x_hi, int n_points);

  int n() const { return static_cast<int>(nodes_.size()); }
  double node(int i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }
  /// h_k = x_{k+1} - x_k for cell k in [0, n-2].
  double cell_size(int k) const { return nodes_[k + 1] - nodes_[k]; }
  bool is_boundary(int i) const { return i == 0 || i == n() - 1; }
  double length() const { return nodes_.back() - nodes_.front(); }

private:
  std::vector<double> nodes_;
};

/// Lumped masses and gradient coefficients of the P1 discretization.
/// The 1D stencil is tridiagonal: edge e couples nodes e and e+1.
/// c_edge[e] = c_{e,e+1} (= -c_{e+1,e}); c_diag[i] = c_ii closes the row sums.
struct DiscreteOps {
  std::vector<double> mass;   // m_i > 0, size I
  std::vector<double> c_edge; // c_{i,i+1}, size I-1
  std::vector<double> c_diag; // c_ii, nonzero only at the two boundary rows

  int n() const { return static_cast<int>(mass.size()); }
  int n_edges() const { return static_cast<int>(c_edge.size()); }
};

DiscreteOps build_ops(const Mesh1D& mesh);

/// Symmetric stiffness approximating E_r -> -d/dx(c/(3 sigma_t) dE_r/dx).
/// off[e] = k_{e,e+1} <= 0; diag closes every row sum to zero.
struct StiffnessMatrix {
  std::vector<double> off;  // size I-1
  std::vector<double> diag; // size I

  /// y = K x
  void apply(std::span<const double> x, std::span<double> y) const;
};

/// Assembles K with the per-cell coefficient c/(3 sigma_t) evaluated from the
/// arithmetic averages of the two nodal (rho, T) values.
StiffnessMatrix assemble_stiffness(const Mesh1D& mesh, std::span<const double> rho,
                                   std::span<const double> t,
                                   const OracleParams& params);

} // namespace grhyd
