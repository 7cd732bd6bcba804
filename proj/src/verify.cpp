#include <algorithm>
#include <cmath>
#include <string>

#include "wavekit/structure.hpp"

namespace wavekit {

const VerificationCheck* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

FluxJump rankine_hugoniot_jump(const FlowState& a, const FlowState& b, const Vec2& n, double d, const GasConstants& k) {
  auto flux = [&](const FlowState& s, double& mass, Vec2& mom) {
    const double rho = density(s.c, k);
    const Vec2 U{s.u, s.v};
    const double rel = dot(U, n) - d;
    mass = rho * rel;
    mom = (rho * rel) * U + pressure(rho, k) * n;
  };
  double ma = 0.0, mb = 0.0;
  Vec2 pa, pb;
  flux(a, ma, pa);
  flux(b, mb, pb);
  return {std::abs(ma - mb), norm(pa - pb)};
}

namespace {

class Checker {
 public:
  explicit Checker(double tol) : tol_(tol) {}

  void add(std::string name, double residual) {
    const bool ok = std::isfinite(residual) && residual <= tol_;
    report_.checks.push_back({std::move(name), residual, ok});
    report_.passed = report_.passed && ok;
  }

  VerificationReport take() { return std::move(report_); }

 private:
  double tol_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify(const WaveStructure& ws, const GasConstants& k, double tol) {
  Checker chk(tol);

  for (const auto& w : ws.waves) {
    const Line line = w.line();
    const Vec2 n = line.normal();
    const auto* left = ws.states.find(w.left_state);
    const auto* right = ws.states.find(w.right_state);
    if (!left || !right) {
      chk.add("states:" + w.name, INFINITY);
      continue;
    }
    for (const auto* s : {left, right}) {
      const std::string flank = s == left ? w.left_state : w.right_state;
      double res = 0.0;
      for (const Vec2& e : {w.start, w.end}) {
        const double d = dot(e, n);
        res = std::max(res, std::abs(std::abs(dot(Vec2{s->u, s->v}, n) - d) - s->c));
      }
      chk.add("characteristic:" + w.name + ":" + flank, res);
    }
    const FluxJump jump = rankine_hugoniot_jump(*left, *right, n, line.offset(), k);
    chk.add("rh_mass:" + w.name, jump.mass);
    chk.add("rh_momentum:" + w.name, jump.momentum);

    for (const auto& c : ws.circles) {
      if (c.state != w.left_state && c.state != w.right_state) continue;
      chk.add("tangency:" + w.name + ":" + c.label, std::abs(std::abs(line.signed_distance(c.center)) - c.radius));
    }
  }

  for (const auto& wall : ws.walls) {
    if (wall.state.empty()) continue;
    const auto* s = ws.states.find(wall.state);
    chk.add("slip:" + wall.name + ":" + wall.state, s ? std::abs(dot(Vec2{s->u, s->v}, wall.normal)) : INFINITY);
  }

  for (const auto& a : ws.arcs) {
    const SonicCircle* c = ws.find_circle(a.circle);
    const Vec2* p = ws.points.find(a.start_point);
    const Vec2* q = ws.points.find(a.end_point);
    if (!c || !p || !q) {
      chk.add("arc:" + a.name, INFINITY);
      continue;
    }
    const Circle circ = c->circle();
    const double on_circle = std::max(circ.residual(*p), circ.residual(*q));
    const double angles = std::max(distance(circ.at(a.start_angle), *p), distance(circ.at(a.end_angle), *q));
    chk.add("arc:" + a.name, std::max(on_circle, angles));
  }

  return chk.take();
}

}  // namespace wavekit
