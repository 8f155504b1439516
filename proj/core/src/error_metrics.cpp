#include "grhyd/error_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace grhyd {

namespace {

double trapezoid_abs(const Mesh1D& mesh, const std::vector<double>& f) {
  double total = 0.0;
  for (int k = 0; k + 1 < mesh.n(); ++k) {
    total += 0.5 * mesh.cell_size(k) * (std::abs(f[k]) + std::abs(f[k + 1]));
  }
  return total;
}

} // namespace

double composite_l1_error(const Mesh1D& mesh, const NodalField& u,
                          const ReferenceProfile& reference,
                          const OracleParams& params) {
  const int n = mesh.n();
  std::vector<double> diff(n), ref(n);
  double total = 0.0;

  const auto accumulate = [&](auto&& value_h, auto&& value_ref) {
    for (int i = 0; i < n; ++i) {
      const double qr = value_ref(i);
      ref[i] = qr;
      diff[i] = value_h(i) - qr;
    }
    const double num = trapezoid_abs(mesh, diff);
    const double den = trapezoid_abs(mesh, ref);
    if (den == 0.0) {
      if (num == 0.0) return;
      throw std::runtime_error("composite_l1_error: zero reference norm");
    }
    total += num / den;
  };

  std::vector<FullState> u_ref(n);
  for (int i = 0; i < n; ++i) {
    u_ref[i] = reference.state_at(mesh.node(i), params);
  }

  accumulate([&](int i) { return u[i].rho; }, [&](int i) { return u_ref[i].rho; });
  accumulate([&](int i) { return u[i].mom; }, [&](int i) { return u_ref[i].mom; });
  accumulate([&](int i) { return u[i].e_mech; }, [&](int i) { return u_ref[i].e_mech; });
  accumulate([&](int i) { return u[i].e_rad; }, [&](int i) { return u_ref[i].e_rad; });
  return total;
}

std::vector<ConvergenceRow> convergence_rates(const std::vector<int>& points,
                                              const std::vector<double>& errors) {
  if (points.size() != errors.size() || points.size() < 2) {
    throw std::invalid_argument("convergence_rates: need >= 2 (points, error) pairs");
  }
  std::vector<ConvergenceRow> rows(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    rows[k] = {points[k], errors[k], 0.0};
    if (k > 0) {
      const double h_ratio =
          static_cast<double>(points[k] - 1) / static_cast<double>(points[k - 1] - 1);
      rows[k].rate = std::log(errors[k - 1] / errors[k]) / std::log(h_ratio);
    }
  }
  return rows;
}

} // namespace grhyd
