#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wavekit/errors.hpp"
#include "wavekit/structure.hpp"

using namespace wavekit;

namespace {

constexpr double kPi = std::numbers::pi;

double circle_residual(const WaveStructure& ws, const std::string& circle, const std::string& point) {
  return ws.circle(circle).circle().residual(ws.point(point));
}

double wall_residual(const Vec2& p, double theta0) { return std::abs(p.xi * std::sin(theta0) + p.eta * std::cos(theta0)); }

ProblemInput random_input(std::mt19937_64& rng, Regime want) {
  std::uniform_real_distribution<double> C(0.3, 3.0), T(0.02, 1.4), F(0.02, 0.98);
  for (;;) {
    const double c0 = C(rng), c1 = C(rng), theta0 = T(rng);
    double u1 = 0.0;
    if (want == Regime::SubsonicCorner) u1 = c1 * F(rng);
    else u1 = c1 + (c0) * F(rng);
    ProblemInput in{u1, c0, c1, theta0, {}};
    if (classify_regime(in) == want) return in;
  }
}

}  // namespace

TEST(ClassifyRegime, Examples) {
  EXPECT_EQ(classify_regime({0.5, 2, 1, 0.3, {}}), Regime::SubsonicCorner);
  EXPECT_EQ(classify_regime({1.5, 1, 1, 0.3, {}}), Regime::SupersonicCorner);
  EXPECT_EQ(classify_regime({3, 1, 1, 0.3, {}}), Regime::Unsolvable);
  EXPECT_EQ(classify_regime({1, 2, 1, 0.3, {}}), Regime::Critical);
}

TEST(ClassifyRegime, VerdictsFollowRegimes) {
  EXPECT_EQ(verdict_for(Regime::SubsonicCorner), Verdict::Nonexistence);
  EXPECT_EQ(verdict_for(Regime::SupersonicCorner), Verdict::Exists);
  EXPECT_EQ(verdict_for(Regime::Critical), Verdict::Open);
  EXPECT_EQ(verdict_for(Regime::Unsolvable), Verdict::NoSolution);
}

TEST(ProblemInput, Validation) {
  EXPECT_THROW((ProblemInput{0.5, 0, 1, 0.3, {}}.validate()), DomainError);
  EXPECT_THROW((ProblemInput{0.5, 1, 1, 0.0, {}}.validate()), DomainError);
  EXPECT_THROW((ProblemInput{0.5, 1, 1, kPi / 2, {}}.validate()), DomainError);
  EXPECT_THROW((ProblemInput{-0.5, 1, 1, 0.3, {}}.validate()), DomainError);
}

TEST(FarFieldStates, Examples) {
  auto [U0, U1, Um] = far_field_states({0.5, 2, 1, 0.3, {}});
  EXPECT_EQ(U0, (FlowState{0, 0, 2}));
  EXPECT_EQ(U1, (FlowState{0.5, 0, 1}));
  EXPECT_DOUBLE_EQ(Um.u, 0.75);
  EXPECT_DOUBLE_EQ(Um.c, 1.25);

  auto [V0, V1, Vm] = far_field_states({1, 3, 2, 0.3, {}});
  EXPECT_EQ(Vm, V1);

  auto [W0, W1, Wm] = far_field_states({0, 1, 1, 0.3, {}});
  EXPECT_EQ(Wm, W0);
  EXPECT_EQ(Wm, W1);

  EXPECT_THROW(far_field_states({3, 1, 1, 0.3, {}}), StructureError);
}

TEST(BuildSubsonic, Example) {
  const WaveStructure ws = build_subsonic({0.5, 2, 1, kPi / 6, {}});
  EXPECT_EQ(ws.regime, Regime::SubsonicCorner);
  EXPECT_EQ(ws.verdict, Verdict::Nonexistence);
  EXPECT_NEAR(ws.point("P_1").xi, -0.5, 1e-15);
  EXPECT_NEAR(ws.point("P_1").eta, 0.0, 1e-15);
  EXPECT_NEAR(ws.point("P_2").xi, 2.0, 1e-15);
  EXPECT_NEAR(ws.point("P_3").xi, std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(ws.point("P_3").eta, -1.0, 1e-12);
  const SonicCircle& Cm = ws.circle("C_m");
  EXPECT_NEAR(Cm.center.xi, 0.75, 1e-15);
  EXPECT_NEAR(Cm.radius, 1.25, 1e-15);
  EXPECT_EQ(ws.circles.size(), 3u);
  EXPECT_EQ(ws.waves.size(), 2u);
  EXPECT_EQ(ws.arcs.size(), 2u);
  EXPECT_NE(ws.find_arc("Gamma_sonic"), nullptr);
  EXPECT_NE(ws.find_arc("Gamma_shock"), nullptr);
  // Vertical waves at xi = u1 - c1 and xi = c0.
  EXPECT_DOUBLE_EQ(ws.find_wave("L_1m")->start.xi, ws.find_wave("L_1m")->end.xi);
  EXPECT_DOUBLE_EQ(ws.find_wave("L_m0")->start.xi, 2.0);
}

TEST(BuildSubsonic, SonicArcIsUpperSemicircle) {
  const WaveStructure ws = build_subsonic({0.5, 2, 1, kPi / 6, {}});
  const ArcSegment* a = ws.find_arc("Gamma_sonic");
  ASSERT_NE(a, nullptr);
  EXPECT_NEAR(a->start_angle, 0.0, 1e-12);
  EXPECT_NEAR(a->end_angle, kPi, 1e-12);
  const ArcSegment* s = ws.find_arc("Gamma_shock");
  ASSERT_NE(s, nullptr);
  EXPECT_NEAR(s->start_angle, -kPi / 6, 1e-12);
  EXPECT_NEAR(s->end_angle, 0.0, 1e-12);
}

TEST(BuildSubsonic, RejectsOtherRegimes) {
  EXPECT_THROW(build_subsonic({1.5, 1, 1, 0.1, {}}), StructureError);
  EXPECT_THROW(build_supersonic({0.5, 2, 1, 0.1, {}}), StructureError);
  EXPECT_THROW(build_critical({0.5, 2, 1, 0.1, {}}), StructureError);
}

TEST(BuildSupersonic, Example) {
  const WaveStructure ws = build_supersonic({1.5, 1, 1, 0.1, {}});
  EXPECT_EQ(ws.regime, Regime::SupersonicCorner);
  EXPECT_EQ(ws.verdict, Verdict::Exists);
  EXPECT_NEAR(ws.parameters.at("beta"), 0.729728, 1e-4);
  EXPECT_NEAR(ws.point("P").xi, 0.5, 1e-4);
  EXPECT_NEAR(ws.point("P").eta, 0.447214, 1e-4);
  const FlowState& U2 = ws.state("U_2");
  EXPECT_NEAR(U2.c, 1.22184, 1e-4);
  EXPECT_NEAR(U2.u, 1.64789, 1e-4);
  EXPECT_NEAR(U2.v, -0.16535, 1e-4);
  EXPECT_NEAR(U2.v, -U2.u * std::tan(0.1), 1e-10);
  EXPECT_EQ(ws.waves.size(), 5u);
  EXPECT_EQ(ws.arcs.size(), 4u);
  EXPECT_EQ(ws.circles.size(), 5u);
}

TEST(BuildSupersonic, SmallWedgeLimit) {
  const WaveStructure ws = build_supersonic({1.5, 1, 1, 1e-7, {}});
  const FlowState& U2 = ws.state("U_2");
  EXPECT_NEAR(U2.c, 1.0, 1e-5);
  EXPECT_NEAR(U2.u, 1.5, 1e-5);
  EXPECT_NEAR(U2.v, 0.0, 1e-5);
}

TEST(BuildSupersonic, WideWedgeIsRejected) {
  // beta + theta0 >= pi/2 leaves no admissible construction.
  EXPECT_THROW(build_supersonic({1.5, 1, 1, 0.9, {}}), StructureError);
}

TEST(BuildSupersonic, WaveLabelsAgreeWithOneDimensionalSolver) {
  const WaveStructure ws = build_supersonic({1.5, 1, 1, 0.1, {}});
  EXPECT_EQ(to_string(ws.find_wave("L_1m")->label), "S1");
  EXPECT_EQ(to_string(ws.find_wave("L_m0")->label), "S2");
  EXPECT_EQ(to_string(ws.find_wave("OP")->label), "R1");
  for (const auto& w : ws.waves) EXPECT_EQ(label_wave(w, ws), w.label) << w.name;
}

TEST(BuildCritical, Example) {
  const WaveStructure ws = build_critical({1, 2, 1, 0.3, {}});
  EXPECT_EQ(ws.verdict, Verdict::Open);
  EXPECT_NEAR(norm(ws.point("P_1")), 0.0, 1e-15);
  const FlowState& Um = ws.state("U_m");
  EXPECT_EQ(Um, (FlowState{1, 0, 1}));
  EXPECT_NEAR(ws.circle("C_m").circle().residual({0, 0}), 0.0, 1e-15);
  const ArcSegment* a = ws.find_arc("Gamma_sonic");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->end_point, "P_1");
}

TEST(BuildStructure, UnsolvableHoldsInitialDataOnly) {
  const WaveStructure ws = build_structure({3, 1, 1, 0.3, {}});
  EXPECT_EQ(ws.verdict, Verdict::NoSolution);
  EXPECT_TRUE(ws.waves.empty());
  EXPECT_TRUE(ws.circles.empty());
  EXPECT_TRUE(ws.states.contains("U_0"));
  EXPECT_TRUE(ws.states.contains("U_1"));
}

TEST(ShockDiffraction, SubsonicSubcase) {
  const WaveStructure ws = build_shock_diffraction(1, 2, 0.3);
  EXPECT_DOUBLE_EQ(ws.input.c0, 3.0);
  EXPECT_EQ(ws.regime, Regime::SubsonicCorner);
  EXPECT_EQ(ws.verdict, Verdict::Nonexistence);
  EXPECT_EQ(ws.state("U_m"), ws.state("U_1"));
}

TEST(ShockDiffraction, SupersonicCollapse) {
  const WaveStructure ws = build_shock_diffraction(1.5, 1, 0.1);
  EXPECT_DOUBLE_EQ(ws.input.c0, 2.5);
  EXPECT_EQ(ws.regime, Regime::SupersonicCorner);
  EXPECT_LT(distance(ws.point("T_m"), ws.point("P")), 1e-10);
  const FlowState& U2 = ws.state("U_2");
  const FlowState& U3 = ws.state("U_3");
  EXPECT_NEAR(U3.u, U2.u, 1e-10);
  EXPECT_NEAR(U3.v, U2.v, 1e-10);
  EXPECT_NEAR(U3.c, U2.c, 1e-10);
}

TEST(ShockDiffraction, AngleBound) {
  try {
    build_shock_diffraction(1.5, 1, 0.8);
    FAIL() << "expected StructureError";
  } catch (const StructureError& e) {
    EXPECT_NE(std::string(e.what()).find("arcsin(c1/u1)"), std::string::npos);
  }
}

TEST(Verify, SubsonicPasses) {
  const WaveStructure ws = build_subsonic({0.5, 2, 1, kPi / 6, {}});
  const VerificationReport rep = verify(ws, {}, 1e-9);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.failures(), 0u);
  EXPECT_NE(rep.find("rh_mass:L_m0"), nullptr);
}

TEST(Verify, PerturbedMiddleStateFails) {
  WaveStructure ws = build_subsonic({0.5, 2, 1, kPi / 6, {}});
  ws.states.at("U_m").c += 1e-3;
  const VerificationReport rep = verify(ws, {}, 1e-9);
  EXPECT_FALSE(rep.passed);
  ASSERT_NE(rep.find("rh_mass:L_m0"), nullptr);
  EXPECT_FALSE(rep.find("rh_mass:L_m0")->passed);
}

TEST(Verify, DiffractionSlipOnWall) {
  const WaveStructure ws = build_shock_diffraction(1.5, 1, 0.1);
  const VerificationReport rep = verify(ws, {}, 1e-9);
  EXPECT_TRUE(rep.passed);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name.rfind("slip:", 0) == 0 && c.name.find("U_2") != std::string::npos) {
      found = true;
      EXPECT_TRUE(c.passed) << c.name;
    }
  EXPECT_TRUE(found);
}

TEST(StructureProperty, SubsonicGeometry) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const ProblemInput in = random_input(rng, Regime::SubsonicCorner);
    const WaveStructure ws = build_structure(in);
    const SonicCircle& Cm = ws.circle("C_m");
    EXPECT_NEAR(distance(ws.point("P_1"), ws.point("P_2")), 2.0 * Cm.radius, 1e-12);
    EXPECT_LT(circle_residual(ws, "C_m", "P_1"), 1e-12);
    EXPECT_LT(circle_residual(ws, "C_m", "P_2"), 1e-12);
    EXPECT_LT(circle_residual(ws, "C_0", "P_3"), 1e-12);
    EXPECT_LT(wall_residual(ws.point("P_3"), in.theta0), 1e-12);
    EXPECT_LT(norm(Cm.center), Cm.radius);
    const FlowState& Um = ws.state("U_m");
    EXPECT_NEAR(Um.u - Um.c, in.u1 - in.c1, 1e-12);
    EXPECT_NEAR(Um.u + Um.c, in.c0, 1e-12);
    EXPECT_TRUE(verify(ws).passed);
  }
}

TEST(StructureProperty, CriticalOriginOnSonicCircle) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> C(0.3, 3.0), T(0.05, 1.4);
  for (int i = 0; i < 100; ++i) {
    const double c1 = C(rng);
    const WaveStructure ws = build_structure({c1, C(rng), c1, T(rng), {}});
    ASSERT_EQ(ws.regime, Regime::Critical);
    EXPECT_LT(ws.circle("C_m").circle().residual({0, 0}), 1e-12);
    EXPECT_TRUE(verify(ws).passed);
  }
}

TEST(StructureProperty, SupersonicSlipAndTangency) {
  std::mt19937_64 rng(33);
  int built = 0;
  for (int i = 0; i < 600 && built < 200; ++i) {
    const ProblemInput in = random_input(rng, Regime::SupersonicCorner);
    WaveStructure ws;
    try {
      ws = build_supersonic(in);
    } catch (const StructureError&) {
      continue;
    }
    ++built;
    const FlowState& U2 = ws.state("U_2");
    EXPECT_NEAR(U2.v, -U2.u * std::tan(in.theta0), 1e-10 * std::max(1.0, std::abs(U2.u)));
    EXPECT_LT(wall_residual(ws.circle("C_2").center, in.theta0), 1e-10 * std::max(1.0, norm(ws.circle("C_2").center)));
    const VerificationReport rep = verify(ws);
    for (const auto& c : rep.checks)
      if (c.name.rfind("tangency:", 0) == 0) EXPECT_LE(c.residual, 1e-9) << c.name;
    EXPECT_TRUE(rep.passed);
  }
  EXPECT_GE(built, 100);
}

TEST(StructureProperty, ArcEndpointsMeetNamedPoints) {
  for (const WaveStructure& ws : {build_structure({0.5, 2, 1, 0.5, {}}), build_structure({1.5, 1, 1, 0.1, {}}),
                                  build_structure({1, 2, 1, 0.3, {}}), build_shock_diffraction(1.5, 1, 0.1)}) {
    for (const auto& a : ws.arcs) {
      const Circle c = ws.circle(a.circle).circle();
      EXPECT_LT(distance(c.at(a.start_angle), ws.point(a.start_point)), 1e-10) << a.name;
      EXPECT_LT(distance(c.at(a.end_angle), ws.point(a.end_point)), 1e-10) << a.name;
    }
  }
}

TEST(StructureProperty, DiffractionReductionKeepsIncomingState) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> C(0.1, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double u1 = C(rng), c1 = C(rng);
    auto [U0, U1, Um] = far_field_states({u1, u1 + c1, c1, 0.2, {}});
    EXPECT_NEAR(Um.u, U1.u, 1e-12);
    EXPECT_NEAR(Um.c, U1.c, 1e-12);
  }
}

TEST(StructureProperty, NamesReferencedByWavesAndArcsExist) {
  for (const WaveStructure& ws : {build_structure({0.5, 2, 1, 0.5, {}}), build_structure({1.5, 1, 1, 0.1, {}})}) {
    for (const auto& w : ws.waves) {
      EXPECT_TRUE(ws.states.contains(w.left_state));
      EXPECT_TRUE(ws.states.contains(w.right_state));
    }
    for (const auto& a : ws.arcs) {
      EXPECT_TRUE(ws.points.contains(a.start_point));
      EXPECT_TRUE(ws.points.contains(a.end_point));
      EXPECT_NE(ws.find_circle(a.circle), nullptr);
    }
  }
}
