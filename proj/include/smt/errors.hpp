#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smt {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejected argument to a numeric operation (bad grid, bad mode, out-of-range point).
struct InputError : Error {
  using Error::Error;
};

// Bad or inconsistent run configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Annulus geometry violation or an empty admissible sample set.
struct GeometryError : Error {
  using Error::Error;
};

// Malformed input file; carries the offending 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

// Numerical blow-up detected while stepping; carries the step index.
struct InstabilityError : Error {
  InstabilityError(const std::string& msg, std::size_t step_no)
      : Error(msg + " (step " + std::to_string(step_no) + ")"), step(step_no) {}
  std::size_t step;
};

// Reconstruction pipeline failure.
struct ReconstructError : Error {
  using Error::Error;
};

}  // namespace smt
