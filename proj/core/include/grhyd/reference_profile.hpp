#pragma once

#include <string>
#include <vector>

#include "grhyd/grid1d.hpp"
#include "grhyd/hyperbolic.hpp"
#include "grhyd/thermo.hpp"

namespace grhyd {

/// Sampled (x, rho, v, T, Er) columns on a strictly increasing grid, used for
/// initialization and error measurement.  Queries are piecewise linear and
/// clamped at the ends.
struct ReferenceProfile {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> v;
  std::vector<double> t;
  std::vector<double> e_rad;

  struct Sample {
    double rho, v, t, e_rad;
  };
  Sample interpolate(double x_query) const;
  FullState state_at(double x_query, const OracleParams& params) const;

  std::size_t size() const { return x.size(); }
  void validate() const; // monotone x, positive rho/T, nonnegative Er
};

/// Parses the reference CSV: optional '#' comment lines, then a header line
/// starting with `x,rho,v,T,Er` (extra columns are ignored), one sample per
/// line.  Throws std::runtime_error carrying the offending line number.
ReferenceProfile load_reference(const std::string& path);

/// Builds a profile from a finished run, the in-memory counterpart of
/// dumping the fields and loading them back.
ReferenceProfile profile_from_fields(const Mesh1D& mesh, const NodalField& u,
                                     const OracleParams& params);

} // namespace grhyd
