#include "wavekit/fvm1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

void Grid1D::validate() const {
  if (n < 8) throw DomainError("grid needs at least 8 cells");
  if (!(cfl > 0.0 && cfl <= 0.9)) throw DomainError("cfl must lie in (0, 0.9]");
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max))
    throw DomainError("grid bounds must be finite with x_min < x_max");
}

ConservedCell to_conserved(const FlowState1D& s, const GasConstants& k) {
  const double rho = density(s.c, k);
  return {rho, rho * s.u};
}

FlowState1D to_primitive(const ConservedCell& q, const GasConstants& k) {
  if (!(q.rho > 0.0)) throw DomainError("non-positive density in a cell");
  return {q.m / q.rho, sound_speed(q.rho, k)};
}

namespace {

Flux physical_flux(const FlowState1D& s, const GasConstants& k) {
  const double rho = density(s.c, k);
  return {rho * s.u, rho * s.u * s.u + pressure(rho, k)};
}

}  // namespace

Flux godunov_flux(const ConservedCell& left, const ConservedCell& right, const GasConstants& k) {
  const RiemannData d{to_primitive(left, k), to_primitive(right, k)};
  return physical_flux(sample(d, 0.0), k);
}

FvmResult run(const Grid1D& grid, const RiemannData& initial, double t_end, const GasConstants& k) {
  grid.validate();
  k.validate();
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be positive");
  const RiemannSolution1D exact = solve(initial);

  FvmResult r;
  r.grid = grid;
  r.t_end = t_end;
  const int n = grid.n;
  const double h = grid.h();
  r.x.resize(static_cast<std::size_t>(n));
  r.cells.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r.x[i] = grid.center(i);
    r.cells[i] = to_conserved(r.x[i] < 0.0 ? initial.left : initial.right, k);
  }
  for (const auto& q : r.cells) {
    r.mass_initial += h * q.rho;
    r.momentum_initial += h * q.m;
  }

  std::vector<Flux> flux(static_cast<std::size_t>(n + 1));
  std::vector<ConservedCell> next(r.cells.size());
  double t = 0.0;
  while (t < t_end) {
    double smax = 0.0;
    for (const auto& q : r.cells) {
      const FlowState1D s = to_primitive(q, k);
      smax = std::max(smax, std::abs(s.u) + s.c);
    }
    double dt = std::min(grid.cfl * h / smax, t_end - t);

    for (int f = 0; f <= n; ++f) {
      // Outflow ghosts copy the boundary cells.
      const ConservedCell& L = r.cells[static_cast<std::size_t>(std::max(f - 1, 0))];
      const ConservedCell& R = r.cells[static_cast<std::size_t>(std::min(f, n - 1))];
      try {
        flux[f] = godunov_flux(L, R, k);
      } catch (const UnsolvableError& e) {
        std::ostringstream os;
        os << "interface " << f << " (x = " << grid.x_min + f * h << ", t = " << t << "): " << e.what();
        throw UnsolvableError(os.str());
      }
    }

    for (int attempt = 0;; ++attempt) {
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        next[i].rho = r.cells[i].rho - dt / h * (flux[i + 1].mass - flux[i].mass);
        next[i].m = r.cells[i].m - dt / h * (flux[i + 1].momentum - flux[i].momentum);
        if (!(next[i].rho > 0.0)) ok = false;
      }
      if (ok) break;
      ++r.rejected_steps;
      std::ostringstream os;
      os << "step at t = " << t << " with dt = " << dt << " produced rho <= 0; halving";
      r.log.push_back(os.str());
      if (attempt > 40) throw DomainError("time step collapsed while keeping rho > 0");
      dt *= 0.5;
    }
    r.boundary_mass += dt * (flux[0].mass - flux[n].mass);
    r.boundary_momentum += dt * (flux[0].momentum - flux[n].momentum);
    r.cells.swap(next);
    t += dt;
    ++r.steps;
  }

  for (int i = 0; i < n; ++i) {
    const auto& q = r.cells[i];
    r.mass_final += h * q.rho;
    r.momentum_final += h * q.m;
    const ConservedCell e = to_conserved(sample(exact, initial, r.x[i] / t_end), k);
    r.l1_error += h * (std::abs(q.rho - e.rho) + std::abs(q.m - e.m));
  }
  return r;
}

}  // namespace wavekit
