#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wavekit/domain.hpp"
#include "wavekit/gaslaw.hpp"
#include "wavekit/mesh.hpp"

namespace wavekit {

struct EllipticOptions {
  MeshOptions mesh;
  /// Lower clip for the sound speed; <= 0 selects 1e-3 * c0 with c0 = sqrt(-2 B0).
  double eps = 0.0;
  double tol_picard = 1e-8;
  int max_iter = 500;
  /// Under-relaxation factor of the Picard update, in (0, 1].
  double relax = 1.0;
  /// Shrink the domain by a boundary layer of width eps in addition to clipping.
  bool shrink = false;
  /// Dirichlet datum for psi; empty means psi = B0 on every degenerate piece.
  std::function<double(const Vec2&)> dirichlet;
};

struct IterationRecord {
  int iteration = 0;
  double residual = 0.0;   ///< sup-norm of the discrete residual at the previous iterate
  double increment = 0.0;  ///< sup-norm of the Picard update
};

/// Converged solution of div(rho grad psi) + 2 rho = 0 with
/// c^2 = |grad psi|^2 + 2 (psi - B0) and rho = sqrt(A) / max(c, eps).
struct PseudoPotentialField {
  SubsonicDomain domain;
  Mesh mesh;
  GasConstants k;
  double B0 = 0.0;
  double eps = 0.0;
  std::vector<double> psi;
  std::vector<Vec2> grad;   ///< recovered nodal gradient of psi
  std::vector<double> c2;   ///< unclipped |grad psi|^2 + 2 (psi - B0)
  std::vector<double> rho;
  std::vector<IterationRecord> history;
  std::size_t clipped_nodes = 0;
  double final_residual = 0.0;

  /// Velocity (u, v) = grad psi + (xi, eta) at node i.
  Vec2 velocity(std::size_t i) const { return grad[i] + mesh.nodes[i]; }
  double sound_speed(std::size_t i) const;
  /// Interpolated psi at an arbitrary point, if inside the mesh.
  std::optional<double> probe(const Vec2& p) const;
  /// Smallest psi - B0 over interior nodes.
  double min_interior_excess() const;
  /// Largest |grad psi|^2 - c^2 over interior nodes farther than `margin`
  /// from every degenerate piece (negative means strictly elliptic there).
  double max_ellipticity_defect(double margin) const;
};

/// Picard iteration: freeze rho, solve the linear P1 finite-element problem
/// with a sparse LDL^T factorization, update rho from the recovered gradient.
/// Throws ConvergenceError after max_iter and DegeneracyError when
/// c^2 < 0 on more than 1% of the nodes.
PseudoPotentialField solve(const SubsonicDomain& domain, const GasConstants& k, const EllipticOptions& opt);

/// Area-weighted nodal recovery of grad psi. On slip walls the normal
/// component is removed; where two slip walls meet the gradient is zero.
std::vector<Vec2> recover_gradient(const Mesh& mesh, const SubsonicDomain& domain, const std::vector<double>& psi);

}  // namespace wavekit
