#include "wavekit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "wavekit/domain.hpp"
#include "wavekit/errors.hpp"

namespace wavekit {

namespace {

constexpr double kPi = std::numbers::pi;

/// Trapezoidal integral of f dv along a sampled curve.
double curve_term(const MeshLocator& loc, const std::vector<double>& u, const std::vector<double>& v, double delta,
                  const std::function<Vec2(double)>& curve, int samples) {
  double sum = 0.0;
  double f_prev = 0.0, v_prev = 0.0;
  for (int k = 0; k <= samples; ++k) {
    const Vec2 p = curve(static_cast<double>(k) / samples);
    const auto hit = loc.locate(p, 1e-8);
    if (!hit) throw StructureError("diagnostic curve leaves the mesh");
    const double uu = *loc.interpolate(u, p);
    const double vv = *loc.interpolate(v, p);
    const double f = std::min(uu - delta, 0.0);
    if (k > 0) sum += 0.5 * (f + f_prev) * (vv - v_prev);
    f_prev = f;
    v_prev = vv;
  }
  return sum;
}

}  // namespace

CornerDiagnostics corner_diagnostics(const PseudoPotentialField& field, const WaveStructure& ws,
                                     const DiagnosticsOptions& opt) {
  if (ws.regime != Regime::SubsonicCorner)
    throw StructureError("corner diagnostics require the SubsonicCorner regime");
  const SubsonicDomain expected = mixed_domain(ws);
  bool same = std::abs(field.B0 - expected.B0) <= 1e-12 * std::abs(expected.B0) &&
              field.domain.center_on_boundary && field.domain.boundary.size() == expected.boundary.size();
  for (std::size_t i = 0; same && i < expected.boundary.size(); ++i)
    same = distance(field.domain.boundary[i].start(), expected.boundary[i].start()) <= 1e-12 &&
           distance(field.domain.boundary[i].end(), expected.boundary[i].end()) <= 1e-12;
  if (!same) throw StructureError("field was not solved on the corner problem of this structure");
  const double reach = std::min({distance(ws.point("O"), ws.point("P_1")), ws.input.c0});
  if (!(opt.r_inner > 0.0 && opt.r_inner < opt.r_outer && opt.r_outer < reach))
    throw DomainError("probe radii must satisfy 0 < r_inner < r_outer < |OP_1|");
  if (opt.quad_level < 1 || opt.curve_samples < 2) throw DomainError("invalid quadrature resolution");

  const Mesh& m = field.mesh;
  const std::size_t n = m.size();
  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 vel = field.velocity(i);
    u[i] = vel.xi;
    v[i] = vel.eta;
  }

  // Second derivatives enter through nodally recovered gradients of u and v.
  std::vector<Vec2> gu(n), gv(n);
  {
    std::vector<double> w(n, 0.0);
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      const auto& tr = m.triangles[t];
      const Vec2& a = m.nodes[tr[0]];
      const Vec2& b = m.nodes[tr[1]];
      const Vec2& c = m.nodes[tr[2]];
      const double twice = cross(b - a, c - a);
      const Vec2 g0{(b.eta - c.eta) / twice, (c.xi - b.xi) / twice};
      const Vec2 g1{(c.eta - a.eta) / twice, (a.xi - c.xi) / twice};
      const Vec2 g2{(a.eta - b.eta) / twice, (b.xi - a.xi) / twice};
      const Vec2 eu = u[tr[0]] * g0 + u[tr[1]] * g1 + u[tr[2]] * g2;
      const Vec2 ev = v[tr[0]] * g0 + v[tr[1]] * g1 + v[tr[2]] * g2;
      for (int k = 0; k < 3; ++k) {
        gu[tr[k]] += 0.5 * twice * eu;
        gv[tr[k]] += 0.5 * twice * ev;
        w[tr[k]] += 0.5 * twice;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      gu[i] = (1.0 / w[i]) * gu[i];
      gv[i] = (1.0 / w[i]) * gv[i];
    }
  }

  CornerDiagnostics out;
  out.delta = opt.delta;
  out.r_outer = opt.r_outer;
  out.r_inner = opt.r_inner;
  out.u_min_interior = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = norm(m.nodes[i]);
    if (!m.on_boundary(i) && r > opt.r_inner && r < opt.r_outer) out.u_min_interior = std::min(out.u_min_interior, u[i]);
  }

  // Quadratic-form integral over D intersected with {u < delta}.
  const int L = opt.quad_level;
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    const auto& tr = m.triangles[t];
    const Vec2& a = m.nodes[tr[0]];
    const Vec2& b = m.nodes[tr[1]];
    const Vec2& c = m.nodes[tr[2]];
    const double rmin = std::min({norm(a), norm(b), norm(c)});
    const double rmax = std::max({norm(a), norm(b), norm(c)});
    if (rmax < opt.r_inner || rmin > opt.r_outer + m.h) continue;
    if (std::min({u[tr[0]], u[tr[1]], u[tr[2]]}) >= opt.delta) continue;
    const double twice = cross(b - a, c - a);
    const double sub_area = 0.5 * twice / (L * L);
    bool used = false;
    // Sub-triangle centroids of the uniform level-L split in barycentric coordinates.
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L - i; ++j)
        for (int up = 0; up < 2; ++up) {
          if (up == 1 && i + j >= L - 1) continue;
          const double l1 = up == 0 ? (i + 1.0 / 3.0) / L : (i + 2.0 / 3.0) / L;
          const double l2 = up == 0 ? (j + 1.0 / 3.0) / L : (j + 2.0 / 3.0) / L;
          const double l0 = 1.0 - l1 - l2;
          const Vec2 x = l0 * a + l1 * b + l2 * c;
          const double r = norm(x);
          if (r <= opt.r_inner || r >= opt.r_outer) continue;
          const double uu = l0 * u[tr[0]] + l1 * u[tr[1]] + l2 * u[tr[2]];
          if (uu >= opt.delta) continue;
          const Vec2 du = l0 * gu[tr[0]] + l1 * gu[tr[1]] + l2 * gu[tr[2]];
          const Vec2 gp = l0 * field.grad[tr[0]] + l1 * field.grad[tr[1]] + l2 * field.grad[tr[2]];
          const double cc = l0 * std::pow(field.sound_speed(tr[0]), 2) + l1 * std::pow(field.sound_speed(tr[1]), 2) +
                            l2 * std::pow(field.sound_speed(tr[2]), 2);
          const double a11 = cc - gp.xi * gp.xi;
          const double a12 = -gp.xi * gp.eta;
          const double a22 = cc - gp.eta * gp.eta;
          out.N_value += sub_area * ((a11 / a22) * du.xi * du.xi + 2.0 * (a12 / a22) * du.xi * du.eta + du.eta * du.eta);
          used = true;
        }
    if (used) ++out.active_elements;
  }

  const MeshLocator loc(m);
  const double th = ws.input.theta0;
  const Vec2 w = unit(-th);
  const int ns = opt.curve_samples;
  const double ri = opt.r_inner, ro = opt.r_outer;
  out.term_gamma_plus = curve_term(loc, u, v, opt.delta, [&](double s) { return (ri + s * (ro - ri)) * w; }, ns);
  out.term_outer_arc = curve_term(loc, u, v, opt.delta, [&](double s) { return ro * unit(-th + s * (kPi + th)); }, ns);
  out.term_gamma_minus =
      curve_term(loc, u, v, opt.delta, [&](double s) { return Vec2{-ro + s * (ro - ri), 0.0}; }, ns);
  out.term_inner_arc = curve_term(loc, u, v, opt.delta, [&](double s) { return ri * unit(kPi - s * (kPi + th)); }, ns);
  out.ibp_residual =
      std::abs(out.N_value + out.term_gamma_plus + out.term_outer_arc + out.term_gamma_minus + out.term_inner_arc);
  return out;
}

}  // namespace wavekit
