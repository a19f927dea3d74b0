#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pingpong {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A complex rate (wat or wct) is exactly zero where a formula divides by it.
struct SingularRatesError : Error {
  using Error::Error;
};

// A state construction hit a pole of its family, e.g. |1 - nu| below the
// configured guard. Scans record these points instead of crashing.
struct SingularStateError : Error {
  using Error::Error;
};

// Division by a quantity that must be nonzero (kappa*gamma, friction G, ...).
struct DomainError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct CutoffRecord {
  int n_max = 0;
  double photon_number = 0.0;
  double top_level_population = 0.0;
};

// Adaptive Fock truncation failed to converge below the cutoff ceiling.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, std::vector<CutoffRecord> steps)
      : Error(what), trajectory(std::move(steps)) {}
  std::vector<CutoffRecord> trajectory;
};

// A linear solve on the Liouvillian did not reach the residual contract.
struct SolveError : Error {
  using Error::Error;
};

// The friction sign calibration regime produced an ambiguous value.
struct CalibrationError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct PresetError : Error {
  using Error::Error;
};

struct ColumnError : Error {
  using Error::Error;
};

}  // namespace pingpong
