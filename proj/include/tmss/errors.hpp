/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tmss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach its tolerance within the subdivision budget.
class NonConvergentQuadrature : public Error {
 public:
  NonConvergentQuadrature(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

/// Eigen-solve, factorization or discriminant failure on a matrix.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// An assembled covariance matrix violates the uncertainty principle.
/// Signals an internal inconsistency, never a user error.
class UnphysicalState : public Error {
 public:
  UnphysicalState(const std::string& what, double min_symplectic)
      : Error(what), min_symplectic_(min_symplectic) {}
  double min_symplectic() const noexcept { return min_symplectic_; }

 private:
  double min_symplectic_;
};

class ConfigError : public Error {
 public:
  struct Violation {
    std::string field;
    std::string reason;
  };

  explicit ConfigError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace tmss
