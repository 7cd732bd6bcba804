#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "wavekit/gaslaw.hpp"
#include "wavekit/geometry.hpp"
#include "wavekit/riemann1d.hpp"

namespace wavekit {

/// Initial data: U_1 = (u1, 0, c1) left of the eta-axis, U_0 = (0, 0, c0)
/// right of it, wedge corner at the origin with half-opening theta0.
struct ProblemInput {
  double u1 = 0.0;
  double c0 = 1.0;
  double c1 = 1.0;
  double theta0 = 0.1;
  GasConstants k;

  void validate() const;
};

enum class Regime { SubsonicCorner, Critical, SupersonicCorner, Unsolvable };
enum class Verdict { Nonexistence, Exists, Open, NoSolution };

std::string to_string(Regime r);
std::string to_string(Verdict v);
Regime regime_from_string(std::string_view s);
Verdict verdict_from_string(std::string_view s);

/// Insertion-ordered name -> value table.
template <class T>
class NamedList {
 public:
  using value_type = std::pair<std::string, T>;

  void set(const std::string& name, const T& value) {
    for (auto& [n, v] : items_)
      if (n == name) {
        v = value;
        return;
      }
    items_.emplace_back(name, value);
  }
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const T* find(std::string_view name) const {
    for (const auto& [n, v] : items_)
      if (n == name) return &v;
    return nullptr;
  }
  T* find(std::string_view name) {
    for (auto& [n, v] : items_)
      if (n == name) return &v;
    return nullptr;
  }
  const T& at(std::string_view name) const;
  T& at(std::string_view name);

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

 private:
  std::vector<value_type> items_;
};

struct SonicCircle {
  std::string label;  ///< C_0, C_1, C_m, C_2, C_3
  std::string state;  ///< U_0, ...
  Vec2 center;
  double radius = 0.0;

  Circle circle() const { return {center, radius}; }
};

/// Straight characteristic wave between two uniform states. `left_state`
/// occupies the side to the left of the direction start -> end.
struct StraightWave {
  std::string name;
  Vec2 start;
  Vec2 end;
  std::string left_state;
  std::string right_state;
  WaveLabel label;

  Line line() const { return Line::through(start, end); }
};

/// Counter-clockwise arc of a sonic circle from start_angle to end_angle,
/// end_angle in (start_angle, start_angle + 2 pi].
struct ArcSegment {
  std::string name;
  std::string circle;
  double start_angle = 0.0;
  double end_angle = 0.0;
  std::string start_point;
  std::string end_point;
};

/// Piece of the wedge boundary. `state` is the uniform state in contact with
/// it, or empty where the wall bounds the subsonic region.
struct WallSegment {
  std::string name;
  Vec2 start;
  Vec2 end;
  Vec2 normal;  ///< exterior unit normal of the flow domain (points into the wedge)
  std::string state;
};

struct WaveStructure {
  ProblemInput input;
  Regime regime = Regime::Unsolvable;
  Verdict verdict = Verdict::NoSolution;
  NamedList<FlowState> states;
  NamedList<Vec2> points;
  std::vector<SonicCircle> circles;
  std::vector<StraightWave> waves;
  std::vector<ArcSegment> arcs;
  std::vector<WallSegment> walls;
  /// Auxiliary construction angles and lengths (beta, beta_m, ...).
  NamedList<double> parameters;

  const FlowState& state(std::string_view name) const { return states.at(name); }
  const Vec2& point(std::string_view name) const { return points.at(name); }
  const SonicCircle& circle(std::string_view label) const;
  const SonicCircle* find_circle(std::string_view label) const;
  const StraightWave* find_wave(std::string_view name) const;
  const ArcSegment* find_arc(std::string_view name) const;
};

Verdict verdict_for(Regime r);

Regime classify_regime(const ProblemInput& in, double tol = kDefaultTol);

/// Far-field states U_0, U_1 and the intermediate state U_m of the 1-D
/// Riemann problem across the eta-axis. Throws StructureError when Unsolvable.
std::tuple<FlowState, FlowState, FlowState> far_field_states(const ProblemInput& in,
                                                             double tol = kDefaultTol);

WaveStructure build_subsonic(const ProblemInput& in, double tol = kDefaultTol);
WaveStructure build_supersonic(const ProblemInput& in, double tol = kDefaultTol);
WaveStructure build_critical(const ProblemInput& in, double tol = kDefaultTol);
/// Dispatches on the regime; Unsolvable input yields a structure holding only
/// the initial data.
WaveStructure build_structure(const ProblemInput& in, double tol = kDefaultTol);
/// Problem with c0 = u1 + c1 (a single incident shock).
WaveStructure build_shock_diffraction(double u1, double c1, double theta0, const GasConstants& k = {},
                                      double tol = kDefaultTol);

/// Label of a wave from the geometry of its sonic circles: the pseudo-flow
/// crosses from the side away from the tangent circles (upstream) to the side
/// containing them. Kind compares downstream and upstream sound speeds; the
/// family is One when the crossing direction has a positive xi-component
/// (positive eta-component for a horizontal crossing).
WaveLabel label_wave(const StraightWave& w, const WaveStructure& ws, double tol = kDefaultTol);

struct VerificationCheck {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool passed = true;

  const VerificationCheck* find(std::string_view name) const;
  std::size_t failures() const;
};

/// Characteristic, Rankine-Hugoniot, tangency, slip and arc checks.
VerificationReport verify(const WaveStructure& ws, const GasConstants& k = {}, double tol = kDefaultTol);

/// Jumps of the self-similar mass and momentum fluxes across a line with unit
/// normal n and offset d between two states.
struct FluxJump {
  double mass = 0.0;
  double momentum = 0.0;  ///< Euclidean norm of the vector jump
};
FluxJump rankine_hugoniot_jump(const FlowState& a, const FlowState& b, const Vec2& n, double d,
                               const GasConstants& k = {});

template <class T>
const T& NamedList<T>::at(std::string_view name) const {
  if (const T* v = find(name)) return *v;
  throw std::out_of_range("no entry named '" + std::string(name) + "'");
}

template <class T>
T& NamedList<T>::at(std::string_view name) {
  if (T* v = find(name)) return *v;
  throw std::out_of_range("no entry named '" + std::string(name) + "'");
}

}  // namespace wavekit
