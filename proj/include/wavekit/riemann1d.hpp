#pragma once

#include <string>
#include <utility>

#include "wavekit/gaslaw.hpp"

namespace wavekit {

inline constexpr double kDefaultTol = 1e-9;

enum class Solvability { Solvable, Critical, DeltaWave };
enum class WaveFamily { One, Two };
enum class WaveKind { Shock, Rarefaction, Null };

struct WaveLabel {
  WaveFamily family = WaveFamily::One;
  WaveKind kind = WaveKind::Null;
  friend bool operator==(const WaveLabel&, const WaveLabel&) = default;
};

std::string to_string(Solvability s);
std::string to_string(WaveFamily f);
std::string to_string(WaveKind k);
/// Short form used in figures and logs: "S1", "R2", "N1", ...
std::string to_string(const WaveLabel& label);

struct RiemannData {
  FlowState1D left;
  FlowState1D right;
};

struct RiemannSolution1D {
  FlowState1D middle;
  double speed1 = 0.0;  ///< u_l - c_l
  double speed2 = 0.0;  ///< u_r + c_r
  WaveLabel label1;
  WaveLabel label2;
};

/// Classifies the data against u_l - u_r < c_l + c_r with an absolute band
/// of width tol around equality reported as Critical.
Solvability is_solvable(const RiemannData& d, double tol = kDefaultTol);

/// Intermediate state between the two characteristic waves.
/// Throws UnsolvableError unless the data is Solvable.
FlowState1D middle_state(const RiemannData& d, double tol = kDefaultTol);

std::pair<WaveLabel, WaveLabel> classify(const RiemannData& d, double tol = kDefaultTol);

RiemannSolution1D solve(const RiemannData& d, double tol = kDefaultTol);

/// Piecewise-constant self-similar solution at xi = x/t. On a wave line the
/// middle state is returned.
FlowState1D sample(const RiemannData& d, double xi, double tol = kDefaultTol);
FlowState1D sample(const RiemannSolution1D& sol, const RiemannData& d, double xi);

struct InteractionResult {
  double c_out = 0.0;
  /// Value of arctan(c_a/l) + arctan(c_b/l) - arctan(c_out/l); must stay below pi/2.
  double arctan_sum = 0.0;
  /// Whether c_a + c_b > c_out holds. Reported only, never enforced.
  bool sum_inequality = true;
};

/// Sound speed of the state generated where two characteristic waves cross.
///
/// `ell` is the common tangent length from the crossing point to the sonic
/// circles and `alpha` the angle between the incoming waves that encloses the
/// sonic circle of the state between them. The result is
/// ell * tan(arctan(c_a/ell) + arctan(c_b/ell) - alpha/2).
/// Throws InteractionError when the result is not positive or the arctan
/// condition fails.
InteractionResult interact_detailed(double c_a, double c_b, double ell, double alpha);
double interact(double c_a, double c_b, double ell, double alpha);

}  // namespace wavekit
