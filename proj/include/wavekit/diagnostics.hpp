#pragma once

#include "wavekit/elliptic.hpp"
#include "wavekit/structure.hpp"

namespace wavekit {

struct DiagnosticsOptions {
  double delta = 1.0;      ///< velocity threshold
  double r_outer = 0.2;    ///< outer probe radius r
  double r_inner = 0.05;   ///< inner probe radius epsilon
  int quad_level = 4;      ///< each triangle split into quad_level^2 sub-triangles
  int curve_samples = 4000;
};

/// Integral identity around the corner on the sector D = {r_inner < |x| < r_outer}
/// of the mixed problem, with u = psi_xi + xi, v = psi_eta + eta and
/// f = min(u - delta, 0). Boundary terms are integrals of f dv along the
/// counter-clockwise boundary of D.
struct CornerDiagnostics {
  double delta = 0.0;
  double r_outer = 0.0;
  double r_inner = 0.0;
  double N_value = 0.0;
  double term_gamma_minus = 0.0;  ///< along the lower wall, toward O
  double term_gamma_plus = 0.0;   ///< along the upper wall, away from O
  double term_inner_arc = 0.0;    ///< |x| = r_inner, clockwise
  double term_outer_arc = 0.0;    ///< |x| = r_outer, counter-clockwise
  double ibp_residual = 0.0;      ///< |N + sum of all boundary terms|
  double u_min_interior = 0.0;
  std::size_t active_elements = 0;
};

/// Throws StructureError unless the structure is SubsonicCorner and the field
/// was solved on its mixed corner domain.
CornerDiagnostics corner_diagnostics(const PseudoPotentialField& field, const WaveStructure& ws,
                                     const DiagnosticsOptions& opt = {});

}  // namespace wavekit
