#include "wavekit/field_io.hpp"

#include <sstream>

#include "wavekit/json_io.hpp"

namespace wavekit {

namespace {

template <class... T>
void row(std::ostringstream& os, double first, T... rest) {
  os << format_double(first);
  ((os << ',' << format_double(rest)), ...);
  os << '\n';
}

}  // namespace

std::string field_csv(const PseudoPotentialField& f) {
  std::ostringstream os;
  os << "xi,eta,psi,u,v,c,rho\n";
  for (std::size_t i = 0; i < f.mesh.nodes.size(); ++i) {
    const Vec2& x = f.mesh.nodes[i];
    const Vec2 U = f.velocity(i);
    row(os, x.xi, x.eta, f.psi[i], U.xi, U.eta, f.sound_speed(i), f.rho[i]);
  }
  return os.str();
}

std::string convergence_csv(const PseudoPotentialField& f) {
  std::ostringstream os;
  os << "iteration,residual,increment\n";
  for (const auto& r : f.history) os << r.iteration << ',' << format_double(r.residual) << ',' << format_double(r.increment) << '\n';
  return os.str();
}

std::string fvm_csv(const FvmResult& r, const GasConstants& k) {
  std::ostringstream os;
  os << "x,rho,u,p,c\n";
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const auto& q = r.cells[i];
    const FlowState1D s = to_primitive(q, k);
    row(os, r.x[i], q.rho, s.u, pressure(q.rho, k), s.c);
  }
  return os.str();
}

}  // namespace wavekit
