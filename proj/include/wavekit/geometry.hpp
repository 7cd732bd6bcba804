#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace wavekit {

/// Point or vector in the self-similar (xi, eta) plane.
struct Vec2 {
  double xi = 0.0;
  double eta = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) { xi += o.xi; eta += o.eta; return *this; }
  constexpr Vec2& operator-=(const Vec2& o) { xi -= o.xi; eta -= o.eta; return *this; }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator-(const Vec2& a) { return {-a.xi, -a.eta}; }
  friend constexpr Vec2 operator*(double s, const Vec2& a) { return {s * a.xi, s * a.eta}; }
  friend constexpr Vec2 operator*(const Vec2& a, double s) { return {s * a.xi, s * a.eta}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.xi * b.xi + a.eta * b.eta; }
constexpr double cross(const Vec2& a, const Vec2& b) { return a.xi * b.eta - a.eta * b.xi; }
inline double norm(const Vec2& a) { return std::hypot(a.xi, a.eta); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double angle_of(const Vec2& a) { return std::atan2(a.eta, a.xi); }
/// Counter-clockwise rotation by 90 degrees.
constexpr Vec2 perp(const Vec2& a) { return {-a.eta, a.xi}; }

/// Infinite line through `origin` with unit direction `dir`.
struct Line {
  Vec2 origin;
  Vec2 dir;

  static Line through(const Vec2& a, const Vec2& b);
  static Line from_angle(const Vec2& origin, double angle) { return {origin, unit(angle)}; }

  /// Unit normal on the left of `dir`.
  Vec2 normal() const { return perp(dir); }
  /// Signed offset d = x . n shared by all points x on the line.
  double offset() const { return dot(origin, normal()); }
  Vec2 at(double t) const { return origin + t * dir; }
  double parameter_of(const Vec2& p) const { return dot(p - origin, dir); }
  Vec2 foot(const Vec2& p) const { return at(parameter_of(p)); }
  double signed_distance(const Vec2& p) const { return dot(p - origin, normal()); }
};

struct Circle {
  Vec2 center;
  double radius = 0.0;

  Vec2 at(double angle) const { return center + radius * unit(angle); }
  double residual(const Vec2& p) const { return std::abs(distance(p, center) - radius); }
};

/// Reflection across the line through the origin with direction angle `angle`.
Vec2 reflect_through_origin_line(const Vec2& p, double angle);

/// Parameter t >= t_min of the first intersection of the ray origin + t*dir
/// with the circle, if any.
std::optional<double> ray_circle(const Vec2& origin, const Vec2& dir, const Circle& c, double t_min = 0.0);

/// Parameter t of the intersection of the ray with the segment [a, b].
std::optional<double> ray_segment(const Vec2& origin, const Vec2& dir, const Vec2& a, const Vec2& b,
                                  double t_min = 0.0);

/// Normalizes an angle into [base, base + 2 pi).
double wrap_angle(double angle, double base = 0.0);

/// Whether `angle` lies on the counter-clockwise arc from `start` to `end`
/// (end expected in (start, start + 2 pi]).
bool angle_in_arc(double angle, double start, double end, double tol = 1e-12);

}  // namespace wavekit
