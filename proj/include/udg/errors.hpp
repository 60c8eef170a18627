#pragma once

#include <stdexcept>
#include <string>

namespace udg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, parameters out of range. CLI exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exact solver was asked to run above its configured vertex budget. CLI exit code 3.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DegenerateDiameter : public Error {
 public:
  using Error::Error;
};

class GeometryInfeasible : public Error {
 public:
  using Error::Error;
};

class InadmissibleColoring : public Error {
 public:
  using Error::Error;
};

// Probability estimates along a bisection inverted beyond their confidence intervals.
class NonMonotoneSignal : public Error {
 public:
  using Error::Error;
};

}  // namespace udg
