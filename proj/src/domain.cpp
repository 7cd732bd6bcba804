#include "wavekit/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wavekit/errors.hpp"

namespace wavekit {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string to_string(BoundaryTag t) { return t == BoundaryTag::DirichletDegenerate ? "DirichletDegenerate" : "Slip"; }

BoundaryPiece BoundaryPiece::segment(std::string name, BoundaryTag tag, const Vec2& a, const Vec2& b) {
  BoundaryPiece p;
  p.name = std::move(name);
  p.tag = tag;
  p.kind = Kind::Segment;
  p.a = a;
  p.b = b;
  return p;
}

BoundaryPiece BoundaryPiece::arc(std::string name, BoundaryTag tag, const Circle& c, double start_angle,
                                 double end_angle, std::string state) {
  BoundaryPiece p;
  p.name = std::move(name);
  p.tag = tag;
  p.kind = Kind::Arc;
  p.circle = c;
  p.start_angle = start_angle;
  p.end_angle = end_angle;
  p.state = std::move(state);
  p.a = c.at(start_angle);
  p.b = c.at(end_angle);
  return p;
}

Vec2 BoundaryPiece::at(double t) const {
  if (kind == Kind::Segment) return a + t * (b - a);
  return circle.at(start_angle + t * (end_angle - start_angle));
}

Vec2 BoundaryPiece::tangent(double t) const {
  if (kind == Kind::Segment) {
    const Vec2 d = b - a;
    return (1.0 / norm(d)) * d;
  }
  return perp(unit(start_angle + t * (end_angle - start_angle)));
}

double BoundaryPiece::length() const {
  if (kind == Kind::Segment) return distance(a, b);
  return circle.radius * (end_angle - start_angle);
}

void SubsonicDomain::compute_corners() {
  corners.clear();
  const std::size_t n = boundary.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vec2 t_in = boundary[i].tangent(1.0);
    const Vec2 t_out = boundary[j].tangent(0.0);
    const double turn = std::atan2(cross(t_in, t_out), dot(t_in, t_out));
    if (std::abs(turn) < 1e-9) continue;  // tangent-continuous junction
    corners.push_back({boundary[j].start(), kPi - turn, i, j});
  }
}

void SubsonicDomain::validate() const {
  if (boundary.empty()) throw StructureError("empty domain boundary");
  const std::size_t n = boundary.size();
  double scale = 0.0;
  for (const auto& p : boundary) scale = std::max(scale, p.length());
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = boundary[i].end();
    const Vec2 s = boundary[(i + 1) % n].start();
    if (distance(e, s) > 1e-9 * std::max(1.0, scale)) {
      std::ostringstream os;
      os << "boundary not closed between '" << boundary[i].name << "' and '" << boundary[(i + 1) % n].name
         << "' (gap " << distance(e, s) << ")";
      throw StructureError(os.str());
    }
  }
}

double bernoulli_constant(const WaveStructure& ws) {
  const FlowState& U0 = ws.state("U_0");
  return -0.5 * U0.c * U0.c;
}

double uniform_potential(const FlowState& s, double B0, const Vec2& x) {
  return s.u * x.xi + s.v * x.eta + B0 - 0.5 * (s.u * s.u + s.v * s.v - s.c * s.c);
}

DirichletDatum dirichlet_data(const WaveStructure& ws, const BoundaryPiece& piece) {
  if (piece.tag != BoundaryTag::DirichletDegenerate)
    throw std::invalid_argument("piece '" + piece.name + "' is not a degenerate Dirichlet piece");
  const double B0 = bernoulli_constant(ws);
  DirichletDatum d;
  d.psi = [B0](const Vec2&) { return B0; };
  if (!piece.state.empty()) {
    const FlowState s = ws.state(piece.state);
    d.phi = [s, B0](const Vec2& x) { return uniform_potential(s, B0, x); };
  } else {
    d.phi = [B0](const Vec2& x) { return B0 + 0.5 * dot(x, x); };
  }
  return d;
}

BoundaryPiece reflect(const BoundaryPiece& p, double angle) {
  const std::string name = p.name + "_ref";
  if (p.kind == BoundaryPiece::Kind::Segment)
    return BoundaryPiece::segment(name, p.tag, reflect_through_origin_line(p.b, angle),
                                  reflect_through_origin_line(p.a, angle));
  const Circle c{reflect_through_origin_line(p.circle.center, angle), p.circle.radius};
  BoundaryPiece r = BoundaryPiece::arc(name, p.tag, c, 2.0 * angle - p.end_angle, 2.0 * angle - p.start_angle,
                                       p.state.empty() ? "" : p.state + "_ref");
  return r;
}

double distance_to(const BoundaryPiece& p, const Vec2& x) {
  if (p.kind == BoundaryPiece::Kind::Segment) {
    const Vec2 d = p.b - p.a;
    const double t = std::clamp(dot(x - p.a, d) / dot(d, d), 0.0, 1.0);
    return distance(x, p.a + t * d);
  }
  const double ang = angle_of(x - p.circle.center);
  if (angle_in_arc(ang, p.start_angle, p.end_angle, 0.0)) return p.circle.residual(x);
  return std::min(distance(x, p.start()), distance(x, p.end()));
}

Vec2 outward_normal(const BoundaryPiece& p) {
  const Vec2 t = p.tangent(0.0);
  return {t.eta, -t.xi};
}

namespace {

BoundaryPiece arc_piece(const WaveStructure& ws, const ArcSegment& a) {
  const SonicCircle& c = ws.circle(a.circle);
  BoundaryPiece p = BoundaryPiece::arc(a.name, BoundaryTag::DirichletDegenerate, c.circle(), a.start_angle,
                                       a.end_angle, c.state);
  // Snap endpoints onto the named construction points.
  p.a = ws.point(a.start_point);
  p.b = ws.point(a.end_point);
  return p;
}

const ArcSegment& arc_named(const WaveStructure& ws, const std::string& name) {
  if (const auto* a = ws.find_arc(name)) return *a;
  throw StructureError("structure has no arc '" + name + "'");
}

}  // namespace

SubsonicDomain mixed_domain(const WaveStructure& ws) {
  if (ws.regime != Regime::SubsonicCorner)
    throw StructureError("mixed corner problem requires the SubsonicCorner regime, got " + to_string(ws.regime));
  SubsonicDomain d;
  d.B0 = bernoulli_constant(ws);
  d.center = ws.point("O");
  d.center_on_boundary = true;
  d.wall_angle = -ws.input.theta0;
  d.boundary.push_back(
      BoundaryPiece::segment("Gamma_plus", BoundaryTag::Slip, ws.point("O"), ws.point("P_3")));
  d.boundary.push_back(arc_piece(ws, arc_named(ws, "Gamma_shock")));
  d.boundary.push_back(arc_piece(ws, arc_named(ws, "Gamma_sonic")));
  d.boundary.push_back(
      BoundaryPiece::segment("Gamma_minus", BoundaryTag::Slip, ws.point("P_1"), ws.point("O")));
  d.validate();
  d.compute_corners();
  return d;
}

SubsonicDomain reflected_domain(const WaveStructure& ws) {
  if (ws.regime != Regime::SupersonicCorner)
    throw StructureError("reflected Dirichlet problem requires the SupersonicCorner regime, got " +
                         to_string(ws.regime));
  SubsonicDomain d;
  d.B0 = bernoulli_constant(ws);
  d.reflected = true;
  d.wall_angle = -ws.input.theta0;
  // Counter-clockwise from P_3 back to P_1 along the degenerate arcs, then
  // the mirrored arcs in reverse order from P_1 back to P_3.
  std::vector<BoundaryPiece> upper;
  for (const auto& a : ws.arcs) upper.push_back(arc_piece(ws, a));
  d.boundary = upper;
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
    BoundaryPiece m = reflect(*it, d.wall_angle);
    d.boundary.push_back(m);
  }
  // Mirrored endpoints of the wall points are the points themselves.
  d.boundary[upper.size()].a = upper.back().b;
  d.boundary.back().b = upper.front().a;
  d.center = 0.5 * (ws.point("P_1") + ws.point("P_3"));
  d.validate();
  d.compute_corners();
  return d;
}

SubsonicDomain subsonic_domain(const WaveStructure& ws) {
  switch (ws.regime) {
    case Regime::SubsonicCorner: return mixed_domain(ws);
    case Regime::SupersonicCorner: return reflected_domain(ws);
    case Regime::Critical:
      throw StructureError("the Critical regime has no solvable subsonic problem (left open)");
    case Regime::Unsolvable: break;
  }
  throw StructureError("no subsonic region for an Unsolvable configuration");
}

SubsonicDomain square_domain(const Vec2& lo, const Vec2& hi, double B0) {
  SubsonicDomain d;
  d.B0 = B0;
  const Vec2 a = lo, b{hi.xi, lo.eta}, c = hi, e{lo.xi, hi.eta};
  d.boundary.push_back(BoundaryPiece::segment("bottom", BoundaryTag::DirichletDegenerate, a, b));
  d.boundary.push_back(BoundaryPiece::segment("right", BoundaryTag::DirichletDegenerate, b, c));
  d.boundary.push_back(BoundaryPiece::segment("top", BoundaryTag::DirichletDegenerate, c, e));
  d.boundary.push_back(BoundaryPiece::segment("left", BoundaryTag::DirichletDegenerate, e, a));
  d.center = 0.5 * (lo + hi);
  d.validate();
  d.compute_corners();
  return d;
}

SubsonicDomain disk_domain(const Vec2& center, double radius, double B0) {
  SubsonicDomain d;
  d.B0 = B0;
  d.boundary.push_back(
      BoundaryPiece::arc("circle", BoundaryTag::DirichletDegenerate, {center, radius}, -kPi, kPi));
  d.center = center;
  d.validate();
  d.compute_corners();
  return d;
}

}  // namespace wavekit
