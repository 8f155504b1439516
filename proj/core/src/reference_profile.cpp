#include "grhyd/reference_profile.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace grhyd {

ReferenceProfile::Sample ReferenceProfile::interpolate(double x_query) const {
  if (x_query <= x.front()) {
    return {rho.front(), v.front(), t.front(), e_rad.front()};
  }
  if (x_query >= x.back()) {
    return {rho.back(), v.back(), t.back(), e_rad.back()};
  }
  const auto it = std::upper_bound(x.begin(), x.end(), x_query);
  const std::size_t j = static_cast<std::size_t>(it - x.begin());
  const std::size_t i = j - 1;
  const double w = (x_query - x[i]) / (x[j] - x[i]);
  const auto lerp = [w](double a, double b) { return a + w * (b - a); };
  return {lerp(rho[i], rho[j]), lerp(v[i], v[j]), lerp(t[i], t[j]),
          lerp(e_rad[i], e_rad[j])};
}

FullState ReferenceProfile::state_at(double x_query, const OracleParams& params) const {
  const Sample s = interpolate(x_query);
  const double e_mech = s.rho * (params.cv_tilde * s.t + params.e_cold(s.rho)) +
                        0.5 * s.rho * s.v * s.v;
  return {s.rho, s.rho * s.v, e_mech, s.e_rad};
}

void ReferenceProfile::validate() const {
  if (x.size() < 2) throw std::runtime_error("reference profile: fewer than 2 samples");
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    if (!(x[k] < x[k + 1])) {
      throw std::runtime_error("reference profile: x not strictly increasing at row " +
                               std::to_string(k + 2));
    }
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(rho[k] > 0.0) || !(t[k] > 0.0) || e_rad[k] < 0.0) {
      throw std::runtime_error("reference profile: inadmissible sample at row " +
                               std::to_string(k + 1));
    }
  }
}

ReferenceProfile load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_reference: cannot open " + path);

  ReferenceProfile p;
  std::string line;
  long line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("x,rho,v,T,Er", 0) != 0) {
        throw std::runtime_error("load_reference: line " + std::to_string(line_no) +
                                 ": expected header x,rho,v,T,Er");
      }
      header_seen = true;
      continue;
    }
    std::array<double, 5> col{};
    std::size_t pos = 0;
    for (int c = 0; c < 5; ++c) {
      const std::size_t next = line.find(',', pos);
      const std::string tok = line.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
      char* end = nullptr;
      col[c] = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str()) {
        throw std::runtime_error("load_reference: line " + std::to_string(line_no) +
                                 ": malformed number in column " + std::to_string(c + 1));
      }
      if (next == std::string::npos) {
        if (c < 4) {
          throw std::runtime_error("load_reference: line " + std::to_string(line_no) +
                                   ": expected 5 comma-separated columns");
        }
        pos = line.size();
      } else {
        pos = next + 1;
      }
    }
    p.x.push_back(col[0]);
    p.rho.push_back(col[1]);
    p.v.push_back(col[2]);
    p.t.push_back(col[3]);
    p.e_rad.push_back(col[4]);
    if (p.x.size() >= 2 && !(p.x[p.x.size() - 2] < p.x.back())) {
      throw std::runtime_error("load_reference: line " + std::to_string(line_no) +
                               ": x not strictly increasing");
    }
  }
  if (!header_seen) throw std::runtime_error("load_reference: missing header in " + path);
  p.validate();
  return p;
}

ReferenceProfile profile_from_fields(const Mesh1D& mesh, const NodalField& u,
                                     const OracleParams& params) {
  ReferenceProfile p;
  const int n = mesh.n();
  p.x.resize(n);
  p.rho.resize(n);
  p.v.resize(n);
  p.t.resize(n);
  p.e_rad.resize(n);
  for (int i = 0; i < n; ++i) {
    p.x[i] = mesh.node(i);
    p.rho[i] = u[i].rho;
    p.v[i] = velocity(u[i]);
    p.t[i] = temperature(u[i], params);
    p.e_rad[i] = u[i].e_rad;
  }
  return p;
}

} // namespace grhyd
