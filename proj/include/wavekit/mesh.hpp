#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wavekit/domain.hpp"

namespace wavekit {

struct MeshOptions {
  double h = 0.05;            ///< target edge length away from the fan corner
  /// Local size h_loc(r) = min(h, grade * r) near a fan corner; <= 0 selects
  /// grade = min(0.5, 4 h / R) with R the largest center-boundary distance, so
  /// that the corner region refines together with h.
  double grade = 0.0;
  double min_radius = 1e-3;   ///< innermost fan ring radius, relative to h
  double max_dtheta = 0.3927; ///< largest angular step of any ring (pi / 8)
  double shrink = 0.0;        ///< pull degenerate boundary nodes inward by this distance
};

/// Triangulation produced by ring_mesh. Triangles are counter-clockwise.
struct Mesh {
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> triangles;
  /// Up to two boundary pieces a node belongs to (-1 when unused).
  std::vector<std::array<int, 2>> pieces;
  std::vector<char> dirichlet;
  double h = 0.0;

  std::size_t size() const { return nodes.size(); }
  double area(std::size_t t) const;
  bool on_boundary(std::size_t i) const { return pieces[i][0] >= 0; }
  double min_angle() const;
  double max_edge() const;
};

/// Ring-structured triangulation of a star-shaped domain. Boundary nodes are
/// placed on the pieces at spacing about h; interior rings are scaled copies
/// of the boundary polygon toward the star center, with angular counts halved
/// inward in 2:1 transition strips. A center on the boundary gives a fan with
/// geometric grading toward it. Throws StructureError when the boundary is not
/// star-shaped from the center.
Mesh ring_mesh(const SubsonicDomain& domain, const MeshOptions& opt);

/// Uniform-bucket point location with barycentric interpolation.
class MeshLocator {
 public:
  explicit MeshLocator(const Mesh& mesh, int buckets_per_side = 0);

  struct Hit {
    std::size_t triangle;
    std::array<double, 3> bary;
  };
  std::optional<Hit> locate(const Vec2& p, double tol = 1e-10) const;
  std::optional<double> interpolate(const std::vector<double>& nodal, const Vec2& p) const;

 private:
  const Mesh* mesh_;
  Vec2 lo_, hi_;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace wavekit
