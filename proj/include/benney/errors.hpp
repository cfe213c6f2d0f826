#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace benney {

enum class ErrorKind {
  RootFinding,       // root finder failed to converge; carries residuals
  AmbiguousMatch,    // branch matching has two near-equal assignments
  SingularJacobian,  // continuation system degenerate on this stratum
  RegimeChange,      // diagnostic path left its consistent-regime region
  DichotomyRefusal,  // traveling-wave constraint forces constant profiles
  Unsupported,       // construction not defined for these parameters
  Config,            // bad configuration or input file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Root-finder diagnostics: per-root residual magnitudes at the last iterate.
class RootFindingError : public Error {
 public:
  RootFindingError(std::string msg, std::vector<double> residuals)
      : Error(ErrorKind::RootFinding, std::move(msg)),
        residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace benney
