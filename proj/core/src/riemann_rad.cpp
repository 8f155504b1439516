#include "grhyd/riemann_rad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace grhyd {

RadSide project_pi2(const ReducedState& w, double n) {
  const double v = w.mom / w.rho;
  const double vn = v * n;
  // In 1D the tangential kinetic energy vanishes, so p_r is just
  // (E_t - 1/2 rho v^2)/3 with the normal velocity vn.
  const double e_r = w.e_t - 0.5 * w.rho * v * v;
  return {w.rho, vn, e_r / 3.0};
}

double rad_wave_function(double p, const RadSide& side) {
  if (p >= side.p) { // shock
    if (p == side.p) return 0.0;
    return std::sqrt(6.0 / side.rho) * (p - side.p) / std::sqrt(p + side.p);
  }
  // expansion
  return std::sqrt(12.0 / side.rho) * (std::sqrt(p) - std::sqrt(side.p));
}

double rad_phi(double p, const RadRiemannInput& in) {
  return rad_wave_function(p, in.left) + rad_wave_function(p, in.right) +
         in.right.v - in.left.v;
}

namespace {

double rad_wave_function_derivative(double p, const RadSide& side) {
  if (p >= side.p) {
    const double s = p + side.p;
    // d/dp [(p - pz)/sqrt(p + pz)] = (p + 3 pz) / (2 (p+pz)^{3/2})
    return std::sqrt(6.0 / side.rho) * (p + 3.0 * side.p) / (2.0 * s * std::sqrt(s));
  }
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(12.0 / side.rho) * 0.5 / std::sqrt(p);
}

void check_input(const RadRiemannInput& in) {
  if (!(in.left.rho > 0.0) || !(in.right.rho > 0.0)) {
    throw std::domain_error("riemann_rad: nonpositive density");
  }
  if (in.left.p < 0.0 || in.right.p < 0.0) {
    throw std::domain_error("riemann_rad: negative radiation pressure");
  }
}

// Extreme wave speeds per side evaluated at a pressure >= p_star, which can
// only enlarge them; phi is increasing so any p with phi(p) >= 0 works.
void fill_wave_speeds(RadRiemannSolution& sol, const RadRiemannInput& in, double p) {
  sol.lambda_l_minus =
      -std::sqrt((in.left.p + std::max(p, in.left.p)) / (6.0 * in.left.rho));
  sol.lambda_r_plus =
      std::sqrt((in.right.p + std::max(p, in.right.p)) / (6.0 * in.right.rho));
  sol.mu_max = std::max(-sol.lambda_l_minus, sol.lambda_r_plus);
}

// Safeguarded root find on [lo, hi] with phi(lo) <= 0 <= phi(hi); returns the
// final bracket. Bisection with Newton acceleration from the upper end; the
// concavity of phi keeps Newton-from-above iterates above the root, so hi is
// always a certified upper bound.
std::pair<double, double> bracketed_root(const RadRiemannInput& in, double lo,
                                         double hi) {
  // Round-off can push an analytic upper estimate marginally below the root.
  for (int it = 0; it < 64 && rad_phi(hi, in) < 0.0; ++it) {
    lo = hi;
    hi = 2.0 * std::max(hi, 1e-300);
  }
  const double width_tol = 1e-14 * std::max(1.0, hi);
  double x = hi;
  for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
    const double fx = rad_phi(x, in);
    if (fx >= 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double dfx = rad_wave_function_derivative(x, in.left) +
                       rad_wave_function_derivative(x, in.right);
    double next = x - fx / dfx;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return {lo, hi};
}

} // namespace

RadRiemannSolution solve_p_star(const RadRiemannInput& in) {
  check_input(in);
  const RadSide& l = in.left;
  const RadSide& r = in.right;
  RadRiemannSolution sol;

  const double cl = std::sqrt(12.0 * l.p / l.rho);
  const double cr = std::sqrt(12.0 * r.p / r.rho);
  const double dv = r.v - l.v;

  // Case 0: vacuum forms between the extreme waves.
  if (dv > cl + cr) {
    sol.case_tag = RadRiemannCase::Vacuum;
    sol.p_star = 0.0;
    fill_wave_speeds(sol, in, 0.0);
    return sol;
  }

  const double p_min = std::min(l.p, r.p);
  const double p_max = std::max(l.p, r.p);

  // Case 1: both waves are expansions; closed form.
  if (rad_phi(p_min, in) > 0.0) {
    const double root = (-dv + cl + cr) / (std::sqrt(12.0 / l.rho) + std::sqrt(12.0 / r.rho));
    sol.case_tag = RadRiemannCase::TwoExpansion;
    sol.p_star = root * root;
    fill_wave_speeds(sol, in, sol.p_star);
    return sol;
  }

  const double phi_max = rad_phi(p_max, in);
  if (phi_max >= 0.0) {
    // Case 2: one expansion, one shock; root in [p_min, p_max].
    sol.case_tag = RadRiemannCase::Mixed;
    const auto [lo, hi] = bracketed_root(in, p_min, p_max);
    (void)lo;
    sol.p_star = hi;
    fill_wave_speeds(sol, in, hi);
    return sol;
  }

  // Case 3: two shocks; the quadratic majorant gives an upper bracket.
  const double a = std::sqrt(3.0 / l.rho) + std::sqrt(3.0 / r.rho);
  const double b = dv;
  const double c = -std::sqrt(3.0 / l.rho) * l.p - std::sqrt(3.0 / r.rho) * r.p;
  const double x_plus = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
  const double p_tilde = x_plus * x_plus;
  sol.case_tag = RadRiemannCase::TwoShock;
  const auto [lo, hi] = bracketed_root(in, p_max, std::max(p_tilde, p_max));
  (void)lo;
  sol.p_star = hi;
  fill_wave_speeds(sol, in, hi);
  return sol;
}

double rad_wave_speed_bound(const RadRiemannInput& in) {
  const RadSide& l = in.left;
  const RadSide& r = in.right;
  if (l.v == r.v && l.p == r.p) {
    return std::max(std::sqrt(2.0 * l.p / (6.0 * l.rho)),
                    std::sqrt(2.0 * r.p / (6.0 * r.rho)));
  }
  const double p_min = std::min(l.p, r.p);
  const double p_max = std::max(l.p, r.p);
  // Nearly equal sides: p_star <= p_max once phi(p_max) >= 0, and the speeds
  // evaluated at p_max overshoot by less than the acceptance margin.
  if (p_max <= 1.02 * p_min && p_min > 0.0) {
    const double c_scale = std::sqrt(l.p / (3.0 * l.rho)) + std::sqrt(r.p / (3.0 * r.rho));
    if (std::abs(r.v - l.v) <= 0.01 * c_scale && rad_phi(p_max, in) >= 0.0) {
      return std::max(std::sqrt((l.p + p_max) / (6.0 * l.rho)),
                      std::sqrt((r.p + p_max) / (6.0 * r.rho)));
    }
  }
  return solve_p_star(in).mu_max;
}

} // namespace grhyd
