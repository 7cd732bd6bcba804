#include "wavekit/gaslaw.hpp"

#include <cmath>
#include <string>

#include "wavekit/errors.hpp"

namespace wavekit {

void GasConstants::validate() const {
  if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("gas constant A must be positive");
  if (!(rho_star > 0.0) || !std::isfinite(rho_star))
    throw DomainError("reference density rho_star must be positive");
}

bool operator==(const FlowState& a, const FlowState& b) {
  return a.u == b.u && a.v == b.v && a.c == b.c;
}

bool operator==(const FlowState1D& a, const FlowState1D& b) { return a.u == b.u && a.c == b.c; }

double density(double c, const GasConstants& k) {
  if (!(c > 0.0)) throw DomainError("sound speed must be positive, got " + std::to_string(c));
  k.validate();
  return std::sqrt(k.A) / c;
}

double pressure(double rho, const GasConstants& k) {
  if (!(rho > 0.0)) throw DomainError("density must be positive, got " + std::to_string(rho));
  k.validate();
  return k.A * (1.0 / k.rho_star - 1.0 / rho);
}

double sound_speed(double rho, const GasConstants& k) {
  if (!(rho > 0.0)) throw DomainError("density must be positive, got " + std::to_string(rho));
  k.validate();
  return std::sqrt(k.A) / rho;
}

double mass_flux_constant(const FlowState& state, const GasConstants& k) {
  validate(state);
  return density(state.c, k) * state.c;
}

void validate(const FlowState& s) {
  if (!std::isfinite(s.u) || !std::isfinite(s.v)) throw DomainError("non-finite velocity");
  if (!(s.c > 0.0) || !std::isfinite(s.c)) throw DomainError("sound speed must be positive");
}

void validate(const FlowState1D& s) {
  if (!std::isfinite(s.u)) throw DomainError("non-finite velocity");
  if (!(s.c > 0.0) || !std::isfinite(s.c)) throw DomainError("sound speed must be positive");
}

}  // namespace wavekit
