#pragma once

#include <stdexcept>
#include <string>

namespace bqsim {

// A query beyond the finite prefix of the subset oracle. Never defaulted.
class OutOfPrefixError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Head-discipline or bounds violation: an implementation bug, not a rejection.
class SimulatorFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bqsim
