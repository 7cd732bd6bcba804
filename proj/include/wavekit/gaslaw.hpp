#pragma once

// Chaplygin gas: p(rho) = A (1/rho_* - 1/rho), c(rho) = sqrt(A) / rho.
//
// States are carried as (u, v, c); density and pressure are derived on demand.

namespace wavekit {

struct GasConstants {
  double A = 1.0;
  double rho_star = 1.0;

  /// Throws DomainError unless A > 0 and rho_star > 0.
  void validate() const;
};

struct FlowState {
  double u = 0.0;
  double v = 0.0;
  double c = 1.0;
};

struct FlowState1D {
  double u = 0.0;
  double c = 1.0;
};

bool operator==(const FlowState& a, const FlowState& b);
bool operator==(const FlowState1D& a, const FlowState1D& b);

double density(double c, const GasConstants& k = {});
double pressure(double rho, const GasConstants& k = {});
double sound_speed(double rho, const GasConstants& k = {});

/// rho * c, which for this equation of state is sqrt(A) for every state.
double mass_flux_constant(const FlowState& state, const GasConstants& k = {});

void validate(const FlowState& s);
void validate(const FlowState1D& s);

}  // namespace wavekit
