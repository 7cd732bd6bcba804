#include "wavekit/geometry.hpp"

#include <numbers>

namespace wavekit {

Line Line::through(const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len = norm(d);
  return {a, (1.0 / len) * d};
}

Vec2 reflect_through_origin_line(const Vec2& p, double angle) {
  const double c2 = std::cos(2.0 * angle);
  const double s2 = std::sin(2.0 * angle);
  return {c2 * p.xi + s2 * p.eta, s2 * p.xi - c2 * p.eta};
}

std::optional<double> ray_circle(const Vec2& origin, const Vec2& dir, const Circle& c, double t_min) {
  // |origin + t dir - center|^2 = r^2 with |dir| = 1
  const Vec2 w = origin - c.center;
  const double b = dot(w, dir);
  const double q = dot(w, w) - c.radius * c.radius;
  const double disc = b * b - q;
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  // Stable pair of roots.
  const double t_far = -b + s;
  const double t_near = -b - s;
  if (t_near >= t_min) return t_near;
  if (t_far >= t_min) return t_far;
  return std::nullopt;
}

std::optional<double> ray_segment(const Vec2& origin, const Vec2& dir, const Vec2& a, const Vec2& b,
                                  double t_min) {
  const Vec2 e = b - a;
  const double den = cross(dir, e);
  if (den == 0.0) return std::nullopt;
  const Vec2 w = a - origin;
  const double t = cross(w, e) / den;
  const double s = cross(w, dir) / den;
  constexpr double slack = 1e-12;
  if (s < -slack || s > 1.0 + slack || t < t_min) return std::nullopt;
  return t;
}

double wrap_angle(double angle, double base) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle - base, two_pi);
  if (a < 0.0) a += two_pi;
  return base + a;
}

bool angle_in_arc(double angle, double start, double end, double tol) {
  const double a = wrap_angle(angle, start - tol);
  return a <= end + tol;
}

}  // namespace wavekit
