#include "grhyd/field_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace grhyd {

void dump_fields(const Mesh1D& mesh, const NodalField& u, const OracleParams& params,
                 const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("dump_fields: cannot open " + path);
  std::fputs("x,rho,v,T,Er,Em,p\n", f);
  for (int i = 0; i < mesh.n(); ++i) {
    const FullState& s = u[i];
    const double v = velocity(s);
    const double t = temperature(s, params);
    const double p = pressure(s, params);
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", mesh.node(i),
                 s.rho, v, t, s.e_rad, s.e_mech, p);
  }
  if (std::fclose(f) != 0) {
    throw std::runtime_error("dump_fields: write failure on " + path);
  }
}

} // namespace grhyd
