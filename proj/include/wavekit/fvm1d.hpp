#pragma once

#include <string>
#include <vector>

#include "wavekit/gaslaw.hpp"
#include "wavekit/riemann1d.hpp"

namespace wavekit {

struct Grid1D {
  double x_min = -1.0;
  double x_max = 1.0;
  int n = 400;
  double cfl = 0.5;

  /// Throws DomainError unless n >= 8, 0 < cfl <= 0.9 and x_min < x_max.
  void validate() const;
  double h() const { return (x_max - x_min) / n; }
  double center(int i) const { return x_min + (i + 0.5) * h(); }
};

struct ConservedCell {
  double rho = 1.0;
  double m = 0.0;
};

struct Flux {
  double mass = 0.0;
  double momentum = 0.0;
};

ConservedCell to_conserved(const FlowState1D& s, const GasConstants& k);
FlowState1D to_primitive(const ConservedCell& q, const GasConstants& k);

/// Physical flux (rho u, rho u^2 + p) of the exact Riemann solution sampled
/// at x/t = 0. Throws UnsolvableError for delta-wave interface data.
Flux godunov_flux(const ConservedCell& left, const ConservedCell& right, const GasConstants& k);

struct FvmResult {
  Grid1D grid;
  double t_end = 0.0;
  std::vector<double> x;
  std::vector<ConservedCell> cells;
  int steps = 0;
  int rejected_steps = 0;
  std::vector<std::string> log;
  double l1_error = 0.0;  ///< sum h (|rho - rho_e| + |m - m_e|) against the exact sampler
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double momentum_initial = 0.0;
  double momentum_final = 0.0;
  /// Time integrals of the boundary fluxes (inflow at x_min minus outflow at x_max).
  double boundary_mass = 0.0;
  double boundary_momentum = 0.0;

  double mass_defect() const { return mass_final - mass_initial - boundary_mass; }
  double momentum_defect() const { return momentum_final - momentum_initial - boundary_momentum; }
};

/// First-order Godunov scheme with forward Euler steps dt = cfl h / max(|u| + c)
/// and zero-gradient outflow boundaries; the discontinuity sits at x = 0.
/// A step producing rho <= 0 is rejected and retried with half the step.
FvmResult run(const Grid1D& grid, const RiemannData& initial, double t_end, const GasConstants& k = {});

}  // namespace wavekit
