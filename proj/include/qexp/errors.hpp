#pragma once

#include <stdexcept>
#include <string>

namespace qexp {

/// Iterative solver exhausted its iteration budget above tolerance.
class NoConvergenceError : public std::runtime_error {
 public:
  NoConvergenceError(const std::string& what, double residual, long iterations)
      : std::runtime_error(what), residual(residual), iterations(iterations) {}
  double residual;
  long iterations;
};

/// Gap computation requested on a space whose deflated complement is empty.
class DegenerateDimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonInvertibleGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotTransitiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SetSizeExceededError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qexp
