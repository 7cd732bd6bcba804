#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wavekit {

/// Invalid argument outside the domain of a physical relation (c <= 0, rho <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Riemann data violates the solvability condition (critical or delta-wave data).
class UnsolvableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-wave interaction formula evaluated outside its admissible set.
class InteractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A wave-structure builder was called in the wrong regime or an
/// admissibility / tangency condition of the construction failed.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outer (Picard) iteration of the elliptic solver did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

/// Discrete problem lost ellipticity on too many nodes.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed command line or configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavekit
