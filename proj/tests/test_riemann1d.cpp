#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wavekit/errors.hpp"
#include "wavekit/riemann1d.hpp"

using namespace wavekit;

namespace {

const WaveLabel S1{WaveFamily::One, WaveKind::Shock};
const WaveLabel R1{WaveFamily::One, WaveKind::Rarefaction};
const WaveLabel N1{WaveFamily::One, WaveKind::Null};
const WaveLabel S2{WaveFamily::Two, WaveKind::Shock};
const WaveLabel R2{WaveFamily::Two, WaveKind::Rarefaction};
const WaveLabel N2{WaveFamily::Two, WaveKind::Null};

RiemannData data(double ul, double cl, double ur, double cr) { return {{ul, cl}, {ur, cr}}; }

RiemannData random_solvable(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-3.0, 3.0), C(0.05, 3.0);
  for (;;) {
    RiemannData d = data(U(rng), C(rng), U(rng), C(rng));
    if (d.left.u - d.right.u < d.left.c + d.right.c - 1e-6) return d;
  }
}

}  // namespace

TEST(IsSolvable, Examples) {
  EXPECT_EQ(is_solvable(data(0, 2, 0, 1)), Solvability::Solvable);
  EXPECT_EQ(is_solvable(data(3, 1, -3, 1)), Solvability::DeltaWave);
  EXPECT_EQ(is_solvable(data(2, 1, 0, 1)), Solvability::Critical);
}

TEST(MiddleState, Examples) {
  const FlowState1D a = middle_state(data(0, 2, 0, 1));
  EXPECT_DOUBLE_EQ(a.u, -0.5);
  EXPECT_DOUBLE_EQ(a.c, 1.5);
  const FlowState1D b = middle_state(data(1, 1, 1, 1));
  EXPECT_DOUBLE_EQ(b.u, 1.0);
  EXPECT_DOUBLE_EQ(b.c, 1.0);
  const FlowState1D c = middle_state(data(0, 1, 0, 2));
  EXPECT_DOUBLE_EQ(c.u, 0.5);
  EXPECT_DOUBLE_EQ(c.c, 1.5);
}

TEST(MiddleState, RejectsUnsolvable) {
  EXPECT_THROW(middle_state(data(3, 1, -3, 1)), UnsolvableError);
  EXPECT_THROW(middle_state(data(2, 1, 0, 1)), UnsolvableError);
  EXPECT_THROW(solve(data(2, 1, 0, 1)), UnsolvableError);
}

TEST(Classify, Examples) {
  // (0,2;0,1): c_m = 1.5 < c_l and c_r < c_m, so the second wave is a rarefaction.
  EXPECT_EQ(classify(data(0, 2, 0, 1)), std::make_pair(S1, R2));
  EXPECT_EQ(classify(data(0, 1, 0, 2)), std::make_pair(R1, S2));
  EXPECT_EQ(classify(data(1, 1, 1, 1)), std::make_pair(N1, N2));
  EXPECT_THROW(classify(data(3, 1, -3, 1)), UnsolvableError);
}

TEST(Classify, ShortLabels) {
  EXPECT_EQ(to_string(S1), "S1");
  EXPECT_EQ(to_string(R2), "R2");
  EXPECT_EQ(to_string(N1), "N1");
}

TEST(Sample, Examples) {
  const RiemannData d = data(0, 2, 0, 1);
  EXPECT_EQ(sample(d, -3.0), (FlowState1D{0.0, 2.0}));
  EXPECT_EQ(sample(d, 0.0), (FlowState1D{-0.5, 1.5}));
  EXPECT_EQ(sample(d, 2.0), (FlowState1D{0.0, 1.0}));
}

TEST(Sample, WaveLinesGiveMiddleState) {
  const RiemannData d = data(0, 2, 0, 1);
  EXPECT_EQ(sample(d, -2.0), (FlowState1D{-0.5, 1.5}));
  EXPECT_EQ(sample(d, 1.0), (FlowState1D{-0.5, 1.5}));
}

TEST(Solve, SpeedsAndLabels) {
  const RiemannSolution1D s = solve(data(0, 2, 0, 1));
  EXPECT_DOUBLE_EQ(s.speed1, -2.0);
  EXPECT_DOUBLE_EQ(s.speed2, 1.0);
  EXPECT_EQ(s.label1, S1);
  EXPECT_EQ(s.label2, R2);
}

TEST(Interact, Examples) {
  EXPECT_NEAR(interact(0.5, 1.0, 1.0, std::numbers::pi / 2), 0.5, 1e-14);
  EXPECT_NEAR(interact(1.0, 1.0, 1.0, std::numbers::pi / 2), 1.0, 1e-14);
  EXPECT_NEAR(interact(1.0, 1.0, 2.0, 0.6), 1.4500, 1e-3);
}

TEST(Interact, RejectsInadmissible) {
  // Opening angle so wide that the result is non-positive.
  EXPECT_THROW(interact(0.1, 0.1, 1.0, 3.0), InteractionError);
  EXPECT_THROW(interact(1.0, 1.0, -1.0, 1.0), std::exception);
  EXPECT_THROW(interact(1.0, 1.0, 1.0, 0.0), std::exception);
}

TEST(Interact, FlagsSumInequalityWithoutEnforcing) {
  const InteractionResult r = interact_detailed(1.0, 1.0, 2.0, 0.6);
  EXPECT_TRUE(r.sum_inequality);
  EXPECT_LT(r.arctan_sum, std::numbers::pi / 2);
}

TEST(RiemannProperty, CharacteristicIdentities) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 5000; ++i) {
    const RiemannData d = random_solvable(rng);
    const RiemannSolution1D s = solve(d);
    EXPECT_NEAR(s.middle.u - s.middle.c, d.left.u - d.left.c, 1e-12);
    EXPECT_NEAR(s.middle.u + s.middle.c, d.right.u + d.right.c, 1e-12);
    EXPECT_GT(s.middle.c, 0.0);
    EXPECT_LE(s.speed1, s.speed2);
    EXPECT_DOUBLE_EQ(s.speed1, d.left.u - d.left.c);
    EXPECT_DOUBLE_EQ(s.speed2, d.right.u + d.right.c);
  }
}

TEST(RiemannProperty, RankineHugoniotOnBothWaves) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 2000; ++i) {
    const RiemannData d = random_solvable(rng);
    const RiemannSolution1D s = solve(d);
    const auto l = oracle::jump_flux(d.left, s.speed1), m1 = oracle::jump_flux(s.middle, s.speed1);
    const auto m2 = oracle::jump_flux(s.middle, s.speed2), r = oracle::jump_flux(d.right, s.speed2);
    for (int k = 0; k < 2; ++k) {
      EXPECT_NEAR(l[k], m1[k], 1e-10);
      EXPECT_NEAR(m2[k], r[k], 1e-10);
    }
  }
}

TEST(RiemannProperty, ClassificationMatchesPlaneRegions) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> U(-3.0, 3.0), C(0.05, 3.0);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const RiemannData d = data(U(rng), C(rng), U(rng), C(rng));
    if (oracle::line_distance(d.left, d.right) < 1e-6) continue;
    const oracle::Region expected = oracle::region(d.left, d.right);
    if (expected == oracle::Region::Delta) {
      EXPECT_EQ(is_solvable(d), Solvability::DeltaWave);
    } else {
      ASSERT_EQ(is_solvable(d), Solvability::Solvable);
      EXPECT_EQ(oracle::region_of(classify(d)), expected);
    }
    ++checked;
  }
  EXPECT_GT(checked, 4900);
}

TEST(RiemannProperty, ReflectionSwapsFamilies) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 2000; ++i) {
    const RiemannData d = random_solvable(rng);
    const RiemannData m = data(-d.right.u, d.right.c, -d.left.u, d.left.c);
    const auto [a1, a2] = classify(d);
    const auto [b1, b2] = classify(m);
    EXPECT_EQ(a1.kind, b2.kind);
    EXPECT_EQ(a2.kind, b1.kind);
    const FlowState1D mid = middle_state(d), mirrored = middle_state(m);
    EXPECT_NEAR(mid.u, -mirrored.u, 1e-12);
    EXPECT_NEAR(mid.c, mirrored.c, 1e-12);
  }
}

TEST(RiemannProperty, SampleIsPiecewiseConstant) {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> X(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    const RiemannData d = random_solvable(rng);
    const RiemannSolution1D s = solve(d);
    const double xi = X(rng);
    const FlowState1D got = sample(d, xi);
    if (xi < s.speed1) EXPECT_EQ(got, d.left);
    else if (xi > s.speed2) EXPECT_EQ(got, d.right);
    else EXPECT_EQ(got, s.middle);
  }
}

TEST(InteractProperty, MonotoneInInputsAndAngle) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> C(0.2, 2.0), L(0.5, 3.0), Al(0.3, 1.2);
  int tested = 0;
  for (int i = 0; i < 3000; ++i) {
    const double ca = C(rng), cb = C(rng), ell = L(rng), alpha = Al(rng), d = 1e-3;
    try {
      const double base = interact(ca, cb, ell, alpha);
      const double up_a = interact(ca + d, cb, ell, alpha);
      const double up_b = interact(ca, cb + d, ell, alpha);
      const double wider = interact(ca, cb, ell, alpha + d);
      EXPECT_GT(up_a, base);
      EXPECT_GT(up_b, base);
      EXPECT_LT(wider, base);
      // Lipschitz bound of ell tan(angle) in c_a: d (1 + (c/ell)^2) at the larger value.
      EXPECT_LE(up_a - base, d * (1.0 + std::pow(up_a / ell, 2)) * (1.0 + 1e-9));
      ++tested;
    } catch (const InteractionError&) {
    }
  }
  EXPECT_GT(tested, 1000);
}
