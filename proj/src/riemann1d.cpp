#include "wavekit/riemann1d.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "wavekit/errors.hpp"

namespace wavekit {

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::Solvable: return "Solvable";
    case Solvability::Critical: return "Critical";
    case Solvability::DeltaWave: return "DeltaWave";
  }
  return "?";
}

std::string to_string(WaveFamily f) { return f == WaveFamily::One ? "One" : "Two"; }

std::string to_string(WaveKind k) {
  switch (k) {
    case WaveKind::Shock: return "Shock";
    case WaveKind::Rarefaction: return "Rarefaction";
    case WaveKind::Null: return "Null";
  }
  return "?";
}

std::string to_string(const WaveLabel& label) {
  const char kind = label.kind == WaveKind::Shock ? 'S' : label.kind == WaveKind::Rarefaction ? 'R' : 'N';
  return std::string(1, kind) + (label.family == WaveFamily::One ? "1" : "2");
}

Solvability is_solvable(const RiemannData& d, double tol) {
  validate(d.left);
  validate(d.right);
  const double gap = (d.left.c + d.right.c) - (d.left.u - d.right.u);
  if (gap > tol) return Solvability::Solvable;
  if (gap >= -tol) return Solvability::Critical;
  return Solvability::DeltaWave;
}

namespace {

void require_solvable(const RiemannData& d, double tol) {
  const Solvability s = is_solvable(d, tol);
  if (s != Solvability::Solvable) {
    std::ostringstream os;
    os << "Riemann data (u_l=" << d.left.u << ", c_l=" << d.left.c << "; u_r=" << d.right.u
       << ", c_r=" << d.right.c << ") is " << to_string(s)
       << ": u_l - u_r < c_l + c_r is required";
    throw UnsolvableError(os.str());
  }
}

FlowState1D middle_unchecked(const RiemannData& d) {
  const auto& l = d.left;
  const auto& r = d.right;
  return {0.5 * (r.u + l.u + r.c - l.c), 0.5 * (r.c + r.u - l.u + l.c)};
}

WaveKind kind_from_jump(double upstream_c, double downstream_c, double tol) {
  // Density rises (sound speed drops) across a compressive wave.
  if (downstream_c < upstream_c - tol) return WaveKind::Shock;
  if (downstream_c > upstream_c + tol) return WaveKind::Rarefaction;
  return WaveKind::Null;
}

}  // namespace

FlowState1D middle_state(const RiemannData& d, double tol) {
  require_solvable(d, tol);
  return middle_unchecked(d);
}

std::pair<WaveLabel, WaveLabel> classify(const RiemannData& d, double tol) {
  const FlowState1D m = middle_state(d, tol);
  return {WaveLabel{WaveFamily::One, kind_from_jump(d.left.c, m.c, tol)},
          WaveLabel{WaveFamily::Two, kind_from_jump(d.right.c, m.c, tol)}};
}

RiemannSolution1D solve(const RiemannData& d, double tol) {
  RiemannSolution1D sol;
  sol.middle = middle_state(d, tol);
  sol.speed1 = d.left.u - d.left.c;
  sol.speed2 = d.right.u + d.right.c;
  std::tie(sol.label1, sol.label2) = classify(d, tol);
  return sol;
}

FlowState1D sample(const RiemannSolution1D& sol, const RiemannData& d, double xi) {
  if (xi < sol.speed1) return d.left;
  if (xi > sol.speed2) return d.right;
  return sol.middle;
}

FlowState1D sample(const RiemannData& d, double xi, double tol) {
  return sample(solve(d, tol), d, xi);
}

InteractionResult interact_detailed(double c_a, double c_b, double ell, double alpha) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  if (!(c_a > 0.0) || !(c_b > 0.0)) throw DomainError("interaction requires positive sound speeds");
  if (!(ell > 0.0)) throw DomainError("interaction length must be positive");
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    throw DomainError("interaction angle must lie in (0, pi)");

  const double angle = std::atan(c_a / ell) + std::atan(c_b / ell) - 0.5 * alpha;
  if (!(angle > 0.0)) {
    std::ostringstream os;
    os << "interaction undefined: generated sound speed is not positive (arctan(c_a/l)+arctan(c_b/l)-alpha/2 = "
       << angle << ")";
    throw InteractionError(os.str());
  }
  if (!(angle < half_pi)) {
    std::ostringstream os;
    os << "interaction undefined: arctan(c_a/l)+arctan(c_b/l)-alpha/2 = " << angle << " >= pi/2";
    throw InteractionError(os.str());
  }

  InteractionResult r;
  r.c_out = ell * std::tan(angle);
  r.arctan_sum = std::atan(c_a / ell) + std::atan(c_b / ell) - std::atan(r.c_out / ell);
  if (!(r.arctan_sum < half_pi)) {
    std::ostringstream os;
    os << "interaction undefined: arctan sum condition violated (" << r.arctan_sum << " >= pi/2)";
    throw InteractionError(os.str());
  }
  r.sum_inequality = c_a + c_b > r.c_out;
  return r;
}

double interact(double c_a, double c_b, double ell, double alpha) {
  return interact_detailed(c_a, c_b, ell, alpha).c_out;
}

}  // namespace wavekit
