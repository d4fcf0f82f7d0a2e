#pragma once

#include <cstdint>

#include "bqsim/core/tape.hpp"

namespace bqsim::classical {

enum class RoundMode { Auto, Literal, SkipAhead };

struct FreivaldsParams {
  std::uint64_t decisive_target = 512;  // K
  double threshold = 0.6;               // tau: unequal when max(cA, cB) > tau * K
  std::uint64_t max_rounds = 1ULL << 26;
  RoundMode mode = RoundMode::Auto;
};

struct RecognizerParams {
  unsigned repetitions = 5;  // forced odd
  std::uint64_t max_steps = 0;  // 0: unlimited
  TapeRepresentation representation = TapeRepresentation::Auto;
  FreivaldsParams freivalds;
};

}  // namespace bqsim::classical
