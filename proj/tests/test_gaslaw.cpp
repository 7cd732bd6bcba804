#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wavekit/errors.hpp"
#include "wavekit/gaslaw.hpp"

using namespace wavekit;

TEST(Density, Examples) {
  EXPECT_DOUBLE_EQ(density(1.0, {1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(density(2.0, {1.0, 1.0}), 0.5);
  EXPECT_DOUBLE_EQ(density(0.5, {4.0, 1.0}), 4.0);
}

TEST(Density, RejectsNonPositiveSoundSpeed) {
  EXPECT_THROW(density(0.0), DomainError);
  EXPECT_THROW(density(-1.0), DomainError);
}

TEST(Pressure, Examples) {
  EXPECT_DOUBLE_EQ(pressure(1.0, {1.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(pressure(2.0, {1.0, 1.0}), 0.5);
  EXPECT_DOUBLE_EQ(pressure(0.5, {1.0, 1.0}), -1.0);
  EXPECT_THROW(pressure(0.0), DomainError);
}

TEST(MassFluxConstant, Examples) {
  EXPECT_DOUBLE_EQ(mass_flux_constant({0, 0, 3.0}, {1.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(mass_flux_constant({0, 0, 0.1}, {4.0, 1.0}), 2.0);
  EXPECT_DOUBLE_EQ(mass_flux_constant({0, 0, 1.0}, {1.0, 1.0}), 1.0);
}

TEST(GasConstants, Validation) {
  EXPECT_THROW((GasConstants{0.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((GasConstants{1.0, -1.0}.validate()), DomainError);
  EXPECT_NO_THROW((GasConstants{2.0, 0.5}.validate()));
  EXPECT_THROW(validate(FlowState{0, 0, 0}), DomainError);
  EXPECT_THROW(validate(FlowState1D{0, -1}), DomainError);
}

TEST(GaslawProperty, RhoTimesCIsSqrtA) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logc(-3.0, 3.0), logA(-2.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const double c = std::exp(logc(rng));
    const GasConstants k{std::exp(logA(rng)), 1.0};
    EXPECT_NEAR(density(c, k) * c, std::sqrt(k.A), 2e-15 * std::sqrt(k.A));
  }
}

TEST(GaslawProperty, PressureIncreasingAndZeroAtReference) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> U(0.01, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const GasConstants k{U(rng), U(rng)};
    EXPECT_NEAR(pressure(k.rho_star, k), 0.0, 1e-12 * k.A / k.rho_star);
    const double a = U(rng), b = U(rng);
    if (a < b) EXPECT_LT(pressure(a, k), pressure(b, k));
    if (a > b) EXPECT_GT(pressure(a, k), pressure(b, k));
  }
}

TEST(GaslawProperty, DensityInvertsSoundSpeed) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> U(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const GasConstants k{U(rng), 1.0};
    const double rho = U(rng);
    EXPECT_NEAR(density(sound_speed(rho, k), k), rho, 1e-13 * rho);
  }
}
