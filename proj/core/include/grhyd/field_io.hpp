#pragma once

#include <string>

#include "grhyd/grid1d.hpp"
#include "grhyd/hyperbolic.hpp"

namespace grhyd {

/// Writes `x,rho,v,T,Er,Em,p`, one row per node, full double precision
/// (17 significant digits), LF line endings.  load_reference() consumes the
/// leading five columns.
void dump_fields(const Mesh1D& mesh, const NodalField& u, const OracleParams& params,
                 const std::string& path);

} // namespace grhyd
