#pragma once

#include <cstdint>

namespace bqsim::harness {

struct Interval {
  double low = 0.0;
  double high = 1.0;

  bool operator==(const Interval&) const = default;
};

/// Wilson score interval for `successes` out of `trials` at two-sided `confidence`.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

}  // namespace bqsim::harness
