#pragma once

#include <cstdint>

#include "bqsim/bigint.hpp"
#include "bqsim/classical/params.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::classical {

/// F(n) = min{ i : i does not divide n } with the cost of computing it on a
/// sweeping machine that keeps candidate and remainder on a two-track work tape.
struct FValue {
  BigInt n;
  std::uint64_t f = 0;
  std::uint64_t work_cells = 0;
  BigInt steps = 0;
};

FValue f_of_n(const BigInt& n);

bool am75_member(const BigInt& n);
bool am75p_member(const BigInt& n);

/// Sweeping unary PTM for AM75'(I): deterministic F(n) screening, then a
/// majority of `repetitions` coin-bit extractions of x_m where F(n) = 64^m.
/// Input must be a^n. Throws OutOfPrefixError when m exceeds the oracle.
RunStats ptm_am75p_I(const Word& input, const SubsetOracle& oracle, const RecognizerParams& params,
                     RandomSource& rng);
RunStats ptm_am75p_I(const BigInt& n, const SubsetOracle& oracle, const RecognizerParams& params,
                     RandomSource& rng);

/// Work-space budget c1 * log2(log2 n) + c2 (n clamped to >= 4), frozen at c1 = 1, c2 = 4.
double am75p_space_budget(const BigInt& n);

}  // namespace bqsim::classical
