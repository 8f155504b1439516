#include "grhyd/grid1d.hpp"

#include <stdexcept>
#include <utility>

namespace grhyd {

Mesh1D::Mesh1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 3) {
    throw std::invalid_argument("Mesh1D: at least 3 nodes required");
  }
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
    if (!(nodes_[k] < nodes_[k + 1])) {
      throw std::invalid_argument("Mesh1D: nodes must be strictly increasing");
    }
  }
}

Mesh1D Mesh1D::uniform(double x_lo, double x_hi, int n_points) {
  if (n_points < 3) throw std::invalid_argument("Mesh1D: at least 3 nodes required");
  if (!(x_lo < x_hi)) throw std::invalid_argument("Mesh1D: empty domain");
  std::vector<double> x(n_points);
  const double h = (x_hi - x_lo) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) x[i] = x_lo + h * i;
  x.back() = x_hi;
  return Mesh1D(std::move(x));
}

DiscreteOps build_ops(const Mesh1D& mesh) {
  const int n = mesh.n();
  DiscreteOps ops;
  ops.mass.assign(n, 0.0);
  ops.c_edge.assign(n - 1, 0.0);
  ops.c_diag.assign(n, 0.0);

  // Per-cell assembly: m gets h/2 per end node; the local gradient matrix
  // int phi_i phi_j' over one cell is [[-1/2, 1/2], [-1/2, 1/2]].
  for (int k = 0; k + 1 < n; ++k) {
    const double h = mesh.cell_size(k);
    ops.mass[k] += 0.5 * h;
    ops.mass[k + 1] += 0.5 * h;
    ops.c_diag[k] += -0.5;
    ops.c_diag[k + 1] += 0.5;
    ops.c_edge[k] += 0.5; // c_{k,k+1}; c_{k+1,k} accumulates -0.5 implicitly
  }
  return ops;
}

void StiffnessMatrix::apply(std::span<const double> x, std::span<double> y) const {
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) y[i] = diag[i] * x[i];
  for (int e = 0; e + 1 < n; ++e) {
    y[e] += off[e] * x[e + 1];
    y[e + 1] += off[e] * x[e];
  }
}

StiffnessMatrix assemble_stiffness(const Mesh1D& mesh, std::span<const double> rho,
                                   std::span<const double> t,
                                   const OracleParams& params) {
  const int n = mesh.n();
  if (static_cast<int>(rho.size()) != n || static_cast<int>(t.size()) != n) {
    throw std::invalid_argument("assemble_stiffness: field size mismatch");
  }
  StiffnessMatrix k;
  k.off.assign(n - 1, 0.0);
  k.diag.assign(n, 0.0);
  for (int e = 0; e + 1 < n; ++e) {
    const double rho_mid = 0.5 * (rho[e] + rho[e + 1]);
    const double t_mid = 0.5 * (t[e] + t[e + 1]);
    const double sigma_t = opacities(rho_mid, t_mid, params).sigma_t;
    if (!(sigma_t > 0.0)) {
      throw std::runtime_error("assemble_stiffness: sigma_t <= 0");
    }
    const double diffusivity = params.c_light / (3.0 * sigma_t);
    const double w = diffusivity / mesh.cell_size(e);
    k.off[e] += -w;
    k.diag[e] += w;
    k.diag[e + 1] += w;
  }
  return k;
}

} // namespace grhyd
