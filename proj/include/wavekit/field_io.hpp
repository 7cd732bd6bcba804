#pragma once

#include <string>

#include "wavekit/elliptic.hpp"
#include "wavekit/fvm1d.hpp"

namespace wavekit {

/// Columns xi,eta,psi,u,v,c,rho; one row per mesh node.
std::string field_csv(const PseudoPotentialField& field);
/// Columns iteration,residual,increment.
std::string convergence_csv(const PseudoPotentialField& field);
/// Columns x,rho,u,p,c; one row per cell.
std::string fvm_csv(const FvmResult& result, const GasConstants& k);

}  // namespace wavekit
