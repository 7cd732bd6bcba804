#include "wavekit/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

namespace {

constexpr double kPi = std::numbers::pi;

double scale_of(const ProblemInput& in) { return std::max({1.0, std::abs(in.u1), in.c0, in.c1}); }

/// Length used for the upper ends of the semi-infinite far-field waves and walls.
double far_extent(const ProblemInput& in) { return 1.25 * (in.c0 + in.c1 + std::abs(in.u1)); }

Vec2 wall_dir(const ProblemInput& in) { return unit(-in.theta0); }
Vec2 wall_plus_normal(const ProblemInput& in) { return {-std::sin(in.theta0), -std::cos(in.theta0)}; }
constexpr Vec2 kWallMinusNormal{0.0, -1.0};

SonicCircle circle_of(const std::string& label, const std::string& state, const FlowState& s) {
  return {label, state, {s.u, s.v}, s.c};
}

ArcSegment make_arc(const WaveStructure& ws, std::string name, const std::string& circle,
                    const std::string& from, const std::string& to) {
  const SonicCircle& c = ws.circle(circle);
  ArcSegment a;
  a.name = std::move(name);
  a.circle = circle;
  a.start_point = from;
  a.end_point = to;
  a.start_angle = angle_of(ws.point(from) - c.center);
  a.end_angle = wrap_angle(angle_of(ws.point(to) - c.center), a.start_angle);
  if (a.end_angle <= a.start_angle) a.end_angle += 2.0 * kPi;
  return a;
}

StraightWave make_wave(std::string name, const Vec2& a, const Vec2& b, std::string left, std::string right) {
  StraightWave w;
  w.name = std::move(name);
  w.start = a;
  w.end = b;
  w.left_state = std::move(left);
  w.right_state = std::move(right);
  return w;
}

void label_all(WaveStructure& ws, double tol) {
  for (auto& w : ws.waves) w.label = label_wave(w, ws, tol);
}

void require_regime(const ProblemInput& in, Regime expected, double tol, const char* builder) {
  const Regime r = classify_regime(in, tol);
  if (r != expected) {
    std::ostringstream os;
    os << builder << " requires regime " << to_string(expected) << " but input (u1=" << in.u1
       << ", c0=" << in.c0 << ", c1=" << in.c1 << ") is " << to_string(r);
    throw StructureError(os.str());
  }
}

/// Perpendicular foot of the circle center on the line, asserted to lie on the circle.
Vec2 tangency_foot(const Line& line, const FlowState& s, double tol, const std::string& what) {
  const Vec2 center{s.u, s.v};
  const Vec2 foot = line.foot(center);
  const double residual = std::abs(distance(foot, center) - s.c);
  if (residual > tol) {
    std::ostringstream os;
    os << "tangency assertion failed for " << what << ": |dist(center, line) - radius| = " << residual;
    throw StructureError(os.str());
  }
  return foot;
}

void require_same_point(const Vec2& a, const Vec2& b, double tol, const std::string& what) {
  if (distance(a, b) > tol) {
    std::ostringstream os;
    os << "tangency points disagree for " << what << " (distance " << distance(a, b) << ")";
    throw StructureError(os.str());
  }
}

void add_initial_states(WaveStructure& ws) {
  ws.states.set("U_0", FlowState{0.0, 0.0, ws.input.c0});
  ws.states.set("U_1", FlowState{ws.input.u1, 0.0, ws.input.c1});
}

/// Shared construction for the subsonic and critical regimes: two vertical
/// waves, the bent shock along C_0 and the sonic semicircle of C_m.
WaveStructure build_far_field_pair(const ProblemInput& in, Regime regime, double tol) {
  const auto [U0, U1, Um] = far_field_states(in, tol);
  const double H = far_extent(in);

  WaveStructure ws;
  ws.input = in;
  ws.regime = regime;
  ws.verdict = verdict_for(regime);
  ws.states.set("U_0", U0);
  ws.states.set("U_1", U1);
  ws.states.set("U_m", Um);

  const Vec2 O{0.0, 0.0};
  const Vec2 P1 = regime == Regime::Critical ? O : Vec2{in.u1 - in.c1, 0.0};
  const Vec2 P2{in.c0, 0.0};
  const Vec2 P3 = in.c0 * wall_dir(in);
  ws.points.set("O", O);
  ws.points.set("O_m", {Um.u, Um.v});
  ws.points.set("O_1", {U1.u, U1.v});
  ws.points.set("P_1", P1);
  ws.points.set("P_2", P2);
  ws.points.set("P_3", P3);

  ws.circles.push_back(circle_of("C_0", "U_0", U0));
  ws.circles.push_back(circle_of("C_1", "U_1", U1));
  ws.circles.push_back(circle_of("C_m", "U_m", Um));

  ws.waves.push_back(make_wave("L_1m", P1, {P1.xi, H}, "U_1", "U_m"));
  ws.waves.push_back(make_wave("L_m0", P2, {P2.xi, H}, "U_m", "U_0"));
  label_all(ws, tol);

  // Counter-clockwise traversal of the subsonic boundary: O -> P_3 -> P_2 -> P_1 -> O.
  ws.arcs.push_back(make_arc(ws, "Gamma_shock", "C_0", "P_3", "P_2"));
  ArcSegment sonic = make_arc(ws, "Gamma_sonic", "C_m", "P_2", "P_1");
  // P_1 and P_2 are antipodal on C_m; take the upper semicircle.
  sonic.start_angle = 0.0;
  sonic.end_angle = kPi;
  ws.arcs.push_back(sonic);

  ws.walls.push_back({"W_minus", {-H, 0.0}, P1, kWallMinusNormal, "U_1"});
  if (regime != Regime::Critical) ws.walls.push_back({"Gamma_minus", P1, O, kWallMinusNormal, ""});
  ws.walls.push_back({"Gamma_plus", O, P3, wall_plus_normal(in), ""});
  ws.walls.push_back({"W_plus", P3, H * wall_dir(in), wall_plus_normal(in), "U_0"});
  return ws;
}

/// Quantities of the supersonic construction that do not depend on the
/// admissibility of the subsonic region.
struct SupersonicCore {
  double beta = 0.0;
  double xi_p = 0.0;
  double eta_p = 0.0;
  double alpha = 0.0;
  double beta_m = 0.0;
  double beta_3 = 0.0;
  FlowState U2;
  FlowState U3;
  bool sum_inequality = true;
};

SupersonicCore supersonic_core(const ProblemInput& in, const FlowState& Um) {
  SupersonicCore core;
  core.beta = std::asin(in.c1 / in.u1);
  if (!(core.beta + in.theta0 < 0.5 * kPi)) {
    std::ostringstream os;
    os << "corner wave undefined: arcsin(c1/u1) + theta0 = " << core.beta + in.theta0 << " >= pi/2";
    throw StructureError(os.str());
  }
  core.xi_p = in.u1 - in.c1;
  core.eta_p = core.xi_p * std::tan(core.beta);
  const double ell = core.eta_p;
  // Angle at P between L_1m and OP enclosing C_1; equals beta + pi/2.
  core.alpha = 2.0 * std::atan(in.c1 / ell);

  const double sb = std::sin(core.beta);
  const double cb = std::cos(core.beta);
  const double c2 = in.c1 * (cb / sb) * std::tan(core.beta + in.theta0);
  core.U2 = {in.u1 + (c2 - in.c1) * sb, (in.c1 - c2) * cb, c2};

  InteractionResult ir;
  try {
    ir = interact_detailed(Um.c, c2, ell, core.alpha);
  } catch (const InteractionError& e) {
    throw StructureError(std::string("wedge angle too large: ") + e.what());
  }
  core.sum_inequality = ir.sum_inequality;
  const double c3 = ir.c_out;
  core.beta_m = 2.0 * std::atan(Um.c / ell);
  core.beta_3 = 2.0 * std::atan(c3 / ell);
  const double bisector = 0.5 * kPi + core.beta_m - 0.5 * core.beta_3;
  const double to_center = c3 / std::sin(0.5 * core.beta_3);
  core.U3 = {core.xi_p - to_center * std::cos(bisector), core.eta_p - to_center * std::sin(bisector), c3};
  return core;
}

void store_core_parameters(WaveStructure& ws, const SupersonicCore& core) {
  ws.parameters.set("beta", core.beta);
  ws.parameters.set("ell", core.eta_p);
  ws.parameters.set("alpha", core.alpha);
  ws.parameters.set("beta_m", core.beta_m);
  ws.parameters.set("beta_3", core.beta_3);
  ws.parameters.set("sum_inequality", core.sum_inequality ? 1.0 : 0.0);
}

/// Upstream intersection of C_2 with the wall; C_2 is centred on the wall line.
Vec2 wall_foot_of_c2(const ProblemInput& in, const FlowState& U2, double tol) {
  const Vec2 w = wall_dir(in);
  const Vec2 O2{U2.u, U2.v};
  const double off_wall = std::abs(cross(w, O2));
  if (off_wall > tol) {
    std::ostringstream os;
    os << "center of C_2 is off the wall line by " << off_wall;
    throw StructureError(os.str());
  }
  const Vec2 P1 = O2 - U2.c * w;
  const double along = dot(P1, w);
  if (!(along > tol)) throw StructureError("C_2 does not meet the wall downstream of the corner");
  if (!(along < in.c0 - tol)) {
    std::ostringstream os;
    os << "wedge angle too large: P_1 lies beyond P_3 on the wall (|OP_1| = " << along << ", c0 = " << in.c0
       << ")";
    throw StructureError(os.str());
  }
  return P1;
}

}  // namespace

void ProblemInput::validate() const {
  k.validate();
  if (!std::isfinite(u1) || !std::isfinite(c0) || !std::isfinite(c1) || !std::isfinite(theta0))
    throw DomainError("problem parameters must be finite");
  if (!(c0 > 0.0)) throw DomainError("c0 must be positive");
  if (!(c1 > 0.0)) throw DomainError("c1 must be positive");
  if (!(theta0 > 0.0 && theta0 < 0.5 * kPi)) throw DomainError("theta0 must lie in (0, pi/2)");
  if (u1 < 0.0) throw DomainError("u1 < 0 is not supported (only u1 >= 0)");
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::SubsonicCorner: return "SubsonicCorner";
    case Regime::Critical: return "Critical";
    case Regime::SupersonicCorner: return "SupersonicCorner";
    case Regime::Unsolvable: return "Unsolvable";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Nonexistence: return "Nonexistence";
    case Verdict::Exists: return "Exists";
    case Verdict::Open: return "Open";
    case Verdict::NoSolution: return "NoSolution";
  }
  return "?";
}

Regime regime_from_string(std::string_view s) {
  for (Regime r : {Regime::SubsonicCorner, Regime::Critical, Regime::SupersonicCorner, Regime::Unsolvable})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown regime '" + std::string(s) + "'");
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::Nonexistence, Verdict::Exists, Verdict::Open, Verdict::NoSolution})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

const SonicCircle* WaveStructure::find_circle(std::string_view label) const {
  for (const auto& c : circles)
    if (c.label == label) return &c;
  return nullptr;
}

const SonicCircle& WaveStructure::circle(std::string_view label) const {
  if (const auto* c = find_circle(label)) return *c;
  throw std::out_of_range("no circle labelled '" + std::string(label) + "'");
}

const StraightWave* WaveStructure::find_wave(std::string_view name) const {
  for (const auto& w : waves)
    if (w.name == name) return &w;
  return nullptr;
}

const ArcSegment* WaveStructure::find_arc(std::string_view name) const {
  for (const auto& a : arcs)
    if (a.name == name) return &a;
  return nullptr;
}

Verdict verdict_for(Regime r) {
  switch (r) {
    case Regime::SubsonicCorner: return Verdict::Nonexistence;
    case Regime::Critical: return Verdict::Open;
    case Regime::SupersonicCorner: return Verdict::Exists;
    case Regime::Unsolvable: return Verdict::NoSolution;
  }
  return Verdict::NoSolution;
}

Regime classify_regime(const ProblemInput& in, double tol) {
  in.validate();
  const double band = tol * scale_of(in);
  if (in.u1 < in.c1 - band) return Regime::SubsonicCorner;
  if (std::abs(in.u1 - in.c1) <= band) return Regime::Critical;
  if (in.u1 >= in.c0 + in.c1 - band) return Regime::Unsolvable;
  return Regime::SupersonicCorner;
}

std::tuple<FlowState, FlowState, FlowState> far_field_states(const ProblemInput& in, double tol) {
  if (classify_regime(in, tol) == Regime::Unsolvable) {
    std::ostringstream os;
    os << "no far-field solution: u1 = " << in.u1 << " >= c0 + c1 = " << in.c0 + in.c1;
    throw StructureError(os.str());
  }
  const FlowState U0{0.0, 0.0, in.c0};
  const FlowState U1{in.u1, 0.0, in.c1};
  const FlowState Um{0.5 * (in.u1 - in.c1 + in.c0), 0.0, 0.5 * (in.c0 - in.u1 + in.c1)};
  return {U0, U1, Um};
}

WaveStructure build_subsonic(const ProblemInput& in, double tol) {
  require_regime(in, Regime::SubsonicCorner, tol, "build_subsonic");
  return build_far_field_pair(in, Regime::SubsonicCorner, tol);
}

WaveStructure build_critical(const ProblemInput& in, double tol) {
  require_regime(in, Regime::Critical, tol, "build_critical");
  return build_far_field_pair(in, Regime::Critical, tol);
}

WaveStructure build_supersonic(const ProblemInput& in, double tol) {
  require_regime(in, Regime::SupersonicCorner, tol, "build_supersonic");
  const auto [U0, U1, Um] = far_field_states(in, tol);
  const SupersonicCore core = supersonic_core(in, Um);
  const FlowState& U2 = core.U2;
  const FlowState& U3 = core.U3;
  const double geo_tol = tol * scale_of(in);
  const double H = far_extent(in);

  WaveStructure ws;
  ws.input = in;
  ws.regime = Regime::SupersonicCorner;
  ws.verdict = Verdict::Exists;
  ws.states.set("U_0", U0);
  ws.states.set("U_1", U1);
  ws.states.set("U_m", Um);
  ws.states.set("U_2", U2);
  ws.states.set("U_3", U3);
  store_core_parameters(ws, core);

  const Vec2 O{0.0, 0.0};
  const Vec2 P{core.xi_p, core.eta_p};
  const Vec2 P0{core.xi_p, 0.0};
  const Vec2 P2{in.c0, 0.0};
  const Vec2 P3 = in.c0 * wall_dir(in);

  const Line L1m{P, {0.0, -1.0}};
  const Line OP = Line::from_angle(O, core.beta);
  const Line PTm = Line::from_angle(P, core.beta_m - 0.5 * kPi);
  const Line PT2 = Line::from_angle(P, core.beta_m - 0.5 * kPi - core.beta_3);

  require_same_point(tangency_foot(L1m, U1, geo_tol, "L_1m on C_1"), P0, geo_tol, "L_1m / C_1");
  require_same_point(tangency_foot(L1m, Um, geo_tol, "L_1m on C_m"), P0, geo_tol, "L_1m / C_m");
  const Vec2 T1 = tangency_foot(OP, U1, geo_tol, "OP on C_1");
  require_same_point(tangency_foot(OP, U2, geo_tol, "OP on C_2"), T1, geo_tol, "OP / C_2");
  const Vec2 Tm = tangency_foot(PTm, Um, geo_tol, "PT_m on C_m");
  require_same_point(tangency_foot(PTm, U3, geo_tol, "PT_m on C_3"), Tm, geo_tol, "PT_m / C_3");
  const Vec2 T2 = tangency_foot(PT2, U3, geo_tol, "PT_2 on C_3");
  require_same_point(tangency_foot(PT2, U2, geo_tol, "PT_2 on C_2"), T2, geo_tol, "PT_2 / C_2");

  if (!(PTm.parameter_of(Tm) > geo_tol) || !(PT2.parameter_of(T2) > geo_tol))
    throw StructureError("tangency points lie behind the interaction point");
  if (!(OP.parameter_of(T1) > OP.parameter_of(P)))
    throw StructureError("tangency point T_1 does not lie beyond P on OP");

  const Vec2 flow_side = perp(wall_dir(in));
  if (!(dot(T2, flow_side) > geo_tol)) {
    std::ostringstream os;
    os << "wedge angle too large: T_2 is not above the wall (offset " << dot(T2, flow_side) << ")";
    throw StructureError(os.str());
  }
  const Vec2 P1 = wall_foot_of_c2(in, U2, geo_tol);

  ws.points.set("O", O);
  ws.points.set("P", P);
  ws.points.set("P_0", P0);
  ws.points.set("P_1", P1);
  ws.points.set("P_2", P2);
  ws.points.set("P_3", P3);
  ws.points.set("T_1", T1);
  ws.points.set("T_2", T2);
  ws.points.set("T_m", Tm);
  ws.points.set("O_1", {U1.u, U1.v});
  ws.points.set("O_m", {Um.u, Um.v});
  ws.points.set("O_2", {U2.u, U2.v});
  ws.points.set("O_3", {U3.u, U3.v});

  ws.circles.push_back(circle_of("C_0", "U_0", U0));
  ws.circles.push_back(circle_of("C_1", "U_1", U1));
  ws.circles.push_back(circle_of("C_m", "U_m", Um));
  ws.circles.push_back(circle_of("C_2", "U_2", U2));
  ws.circles.push_back(circle_of("C_3", "U_3", U3));

  ws.waves.push_back(make_wave("L_1m", P, {P.xi, H}, "U_1", "U_m"));
  ws.waves.push_back(make_wave("L_m0", P2, {P2.xi, H}, "U_m", "U_0"));
  ws.waves.push_back(make_wave("OP", O, P, "U_1", "U_2"));
  ws.waves.push_back(make_wave("PT_m", P, Tm, "U_m", "U_3"));
  ws.waves.push_back(make_wave("PT_2", P, T2, "U_3", "U_2"));
  label_all(ws, tol);

  // Counter-clockwise traversal: P_1 -> P_3 (wall) -> P_2 -> T_m -> T_2 -> P_1.
  ws.arcs.push_back(make_arc(ws, "P_2P_3", "C_0", "P_3", "P_2"));
  ws.arcs.push_back(make_arc(ws, "P_2T_m", "C_m", "P_2", "T_m"));
  ws.arcs.push_back(make_arc(ws, "T_2T_m", "C_3", "T_m", "T_2"));
  ws.arcs.push_back(make_arc(ws, "P_1T_2", "C_2", "T_2", "P_1"));
  for (const auto& a : ws.arcs)
    if (!(a.end_angle - a.start_angle < kPi))
      throw StructureError("arc " + a.name + " spans more than a half circle; construction inadmissible");

  ws.walls.push_back({"W_minus", {-H, 0.0}, O, kWallMinusNormal, "U_1"});
  ws.walls.push_back({"Gamma_2", O, P1, wall_plus_normal(in), "U_2"});
  ws.walls.push_back({"Gamma_plus", P1, P3, wall_plus_normal(in), ""});
  ws.walls.push_back({"W_plus", P3, H * wall_dir(in), wall_plus_normal(in), "U_0"});
  return ws;
}

WaveStructure build_structure(const ProblemInput& in, double tol) {
  switch (classify_regime(in, tol)) {
    case Regime::SubsonicCorner: return build_subsonic(in, tol);
    case Regime::Critical: return build_critical(in, tol);
    case Regime::SupersonicCorner: return build_supersonic(in, tol);
    case Regime::Unsolvable: break;
  }
  WaveStructure ws;
  ws.input = in;
  ws.regime = Regime::Unsolvable;
  ws.verdict = Verdict::NoSolution;
  add_initial_states(ws);
  ws.points.set("O", {0.0, 0.0});
  const double H = far_extent(in);
  ws.walls.push_back({"W_minus", {-H, 0.0}, {0.0, 0.0}, kWallMinusNormal, "U_1"});
  ws.walls.push_back({"W_plus", {0.0, 0.0}, H * wall_dir(in), wall_plus_normal(in), "U_0"});
  return ws;
}

WaveStructure build_shock_diffraction(double u1, double c1, double theta0, const GasConstants& k, double tol) {
  if (!(u1 > 0.0)) throw DomainError("shock diffraction requires u1 > 0");
  ProblemInput in{u1, u1 + c1, c1, theta0, k};
  const Regime regime = classify_regime(in, tol);
  if (regime != Regime::SupersonicCorner) return build_structure(in, tol);

  const double beta = std::asin(c1 / u1);
  if (!(theta0 < beta)) {
    std::ostringstream os;
    os << "shock cannot intersect the wedge: theta0 = " << theta0 << " >= arcsin(c1/u1) = " << beta;
    throw StructureError(os.str());
  }

  // U_m equals U_1; the interaction at P is degenerate and P, T_1,
  // T_2 collapse onto T_m, O_1 onto O_m and U_3 onto U_2.
  const auto [U0, U1, Um] = far_field_states(in, tol);
  const SupersonicCore core = supersonic_core(in, Um);
  const double geo_tol = tol * scale_of(in);
  const double state_gap =
      std::max({std::abs(core.U3.u - core.U2.u), std::abs(core.U3.v - core.U2.v), std::abs(core.U3.c - core.U2.c)});
  if (state_gap > geo_tol) {
    std::ostringstream os;
    os << "degenerate interaction did not reproduce U_2 (gap " << state_gap << ")";
    throw StructureError(os.str());
  }

  const FlowState& U2 = core.U2;
  const double H = far_extent(in);
  WaveStructure ws;
  ws.input = in;
  ws.regime = Regime::SupersonicCorner;
  ws.verdict = Verdict::Exists;
  ws.states.set("U_0", U0);
  ws.states.set("U_1", U1);
  ws.states.set("U_m", Um);
  ws.states.set("U_2", U2);
  ws.states.set("U_3", U2);
  store_core_parameters(ws, core);

  const Vec2 O{0.0, 0.0};
  const Line OP = Line::from_angle(O, beta);
  const Vec2 Tm = tangency_foot(OP, Um, geo_tol, "OT_m on C_m");
  require_same_point(tangency_foot(OP, U2, geo_tol, "OT_m on C_2"), Tm, geo_tol, "OT_m / C_2");
  if (!(dot(Tm, perp(wall_dir(in))) > geo_tol)) throw StructureError("T_m is not above the wall");
  const Vec2 P1 = wall_foot_of_c2(in, U2, geo_tol);
  const Vec2 P2{in.c0, 0.0};
  const Vec2 P3 = in.c0 * wall_dir(in);

  ws.points.set("O", O);
  ws.points.set("P", Tm);
  ws.points.set("P_1", P1);
  ws.points.set("P_2", P2);
  ws.points.set("P_3", P3);
  ws.points.set("T_1", Tm);
  ws.points.set("T_2", Tm);
  ws.points.set("T_m", Tm);
  ws.points.set("O_1", {Um.u, Um.v});
  ws.points.set("O_m", {Um.u, Um.v});
  ws.points.set("O_2", {U2.u, U2.v});
  ws.points.set("O_3", {U2.u, U2.v});

  ws.circles.push_back(circle_of("C_0", "U_0", U0));
  ws.circles.push_back(circle_of("C_m", "U_m", Um));
  ws.circles.push_back(circle_of("C_2", "U_2", U2));

  ws.waves.push_back(make_wave("L_m0", P2, {P2.xi, H}, "U_m", "U_0"));
  ws.waves.push_back(make_wave("OP", O, Tm, "U_1", "U_2"));
  label_all(ws, tol);

  ws.arcs.push_back(make_arc(ws, "P_2P_3", "C_0", "P_3", "P_2"));
  ws.arcs.push_back(make_arc(ws, "P_2T_m", "C_m", "P_2", "T_m"));
  ws.arcs.push_back(make_arc(ws, "P_1T_2", "C_2", "T_2", "P_1"));
  for (const auto& a : ws.arcs)
    if (!(a.end_angle - a.start_angle < kPi))
      throw StructureError("arc " + a.name + " spans more than a half circle; construction inadmissible");

  ws.walls.push_back({"W_minus", {-H, 0.0}, O, kWallMinusNormal, "U_1"});
  ws.walls.push_back({"Gamma_2", O, P1, wall_plus_normal(in), "U_2"});
  ws.walls.push_back({"Gamma_plus", P1, P3, wall_plus_normal(in), ""});
  ws.walls.push_back({"W_plus", P3, H * wall_dir(in), wall_plus_normal(in), "U_0"});
  return ws;
}

WaveLabel label_wave(const StraightWave& w, const WaveStructure& ws, double tol) {
  const Line line = w.line();
  const Vec2 n = line.normal();  // points into the left flank
  const double d = line.offset();
  const FlowState& L = ws.state(w.left_state);
  const FlowState& R = ws.state(w.right_state);
  // Relative normal pseudo-velocity; both flanks share its sign on a characteristic.
  const double rel = dot(Vec2{L.u, L.v}, n) - d + dot(Vec2{R.u, R.v}, n) - d;
  const Vec2 crossing = rel >= 0.0 ? n : -n;
  const FlowState& up = rel >= 0.0 ? R : L;
  const FlowState& down = rel >= 0.0 ? L : R;

  WaveLabel label;
  const double lead = std::abs(crossing.xi) > tol ? crossing.xi : crossing.eta;
  label.family = lead > 0.0 ? WaveFamily::One : WaveFamily::Two;
  if (down.c < up.c - tol)
    label.kind = WaveKind::Shock;
  else if (down.c > up.c + tol)
    label.kind = WaveKind::Rarefaction;
  else
    label.kind = WaveKind::Null;
  return label;
}

}  // namespace wavekit
