#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wavekit/geometry.hpp"
#include "wavekit/structure.hpp"

namespace wavekit {

enum class BoundaryTag { DirichletDegenerate, Slip };

std::string to_string(BoundaryTag t);

/// Straight segment a -> b or counter-clockwise arc of `circle` from
/// start_angle to end_angle.
struct BoundaryPiece {
  enum class Kind { Segment, Arc };

  std::string name;
  BoundaryTag tag = BoundaryTag::Slip;
  Kind kind = Kind::Segment;
  Vec2 a;
  Vec2 b;
  Circle circle;
  double start_angle = 0.0;
  double end_angle = 0.0;
  /// Uniform state whose sonic circle carries an arc piece (empty for segments).
  std::string state;

  static BoundaryPiece segment(std::string name, BoundaryTag tag, const Vec2& a, const Vec2& b);
  static BoundaryPiece arc(std::string name, BoundaryTag tag, const Circle& c, double start_angle, double end_angle,
                           std::string state = {});

  /// Point at parameter t in [0, 1] along the traversal direction.
  Vec2 at(double t) const;
  Vec2 start() const { return at(0.0); }
  Vec2 end() const { return at(1.0); }
  /// Unit tangent in traversal direction.
  Vec2 tangent(double t) const;
  double length() const;
};

struct Corner {
  Vec2 point;
  double interior_angle = 0.0;
  std::size_t incoming = 0;  ///< index of the piece ending here
  std::size_t outgoing = 0;  ///< index of the piece starting here
};

/// Closed counter-clockwise boundary of a subsonic region, star-shaped with
/// respect to `center`. When `center_on_boundary` is set the center is a
/// corner of the loop and the region is the fan between the two pieces
/// meeting there.
struct SubsonicDomain {
  std::vector<BoundaryPiece> boundary;
  std::vector<Corner> corners;
  Vec2 center;
  bool center_on_boundary = false;
  double B0 = -0.5;
  bool reflected = false;
  double wall_angle = 0.0;  ///< direction of the reflection line through the origin

  void compute_corners();
  /// Throws StructureError when the loop is open or self-intersecting as seen
  /// from `center`.
  void validate() const;
};

double bernoulli_constant(const WaveStructure& ws);

/// Pseudo-potential Dirichlet datum of a degenerate piece together with the
/// matching velocity-potential datum of the adjacent uniform state.
struct DirichletDatum {
  std::function<double(const Vec2&)> psi;
  std::function<double(const Vec2&)> phi;
};

/// phi_s = U_s . x + B0 - (|U_s|^2 - c_s^2) / 2; equals (|x|^2)/2 + B0 on the
/// sonic circle of s.
double uniform_potential(const FlowState& s, double B0, const Vec2& x);

/// Throws std::invalid_argument for Slip pieces.
DirichletDatum dirichlet_data(const WaveStructure& ws, const BoundaryPiece& piece);

/// Mixed problem around the corner: degenerate arcs plus slip walls, fan-shaped
/// from the origin. Requires the SubsonicCorner regime.
SubsonicDomain mixed_domain(const WaveStructure& ws);

/// Supersonic subsonic region united with its mirror image across the wall:
/// a closed loop of degenerate arcs.
SubsonicDomain reflected_domain(const WaveStructure& ws);

/// mixed_domain or reflected_domain by regime; Critical and Unsolvable throw
/// StructureError.
SubsonicDomain subsonic_domain(const WaveStructure& ws);

/// Axis-aligned square [lo, hi] and disk, both fully Dirichlet (used for
/// manufactured solutions).
SubsonicDomain square_domain(const Vec2& lo, const Vec2& hi, double B0);
SubsonicDomain disk_domain(const Vec2& center, double radius, double B0);

/// Mirror image of a piece across the line through the origin at `angle`;
/// the traversal direction is reversed so that loops stay counter-clockwise.
BoundaryPiece reflect(const BoundaryPiece& p, double angle);

/// Euclidean distance from x to the piece.
double distance_to(const BoundaryPiece& p, const Vec2& x);

/// Outward unit normal of a straight piece of a counter-clockwise loop.
Vec2 outward_normal(const BoundaryPiece& p);

}  // namespace wavekit
