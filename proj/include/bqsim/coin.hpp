#pragma once

#include <cstdint>

#include "bqsim/bigint.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/subset_oracle.hpp"

namespace bqsim::coin {

/// Default cap on tosses per campaign (64^4).
inline constexpr std::uint64_t kDefaultMaxTosses = 1ULL << 24;
/// Default cap on tosses for exact error computation (64^2).
inline constexpr std::uint64_t kDefaultMaxExactTosses = 4096;

/// Outcome of tossing the p_I coin 64^k times.
struct CoinTally {
  unsigned k = 1;
  std::uint64_t tosses = 0;
  std::uint64_t heads = 0;
};

std::uint64_t tosses_for(unsigned k);

/// Tosses the p_I coin 64^k times. Requires k <= oracle size, so that the
/// extracted bit is one the oracle actually fixes.
CoinTally toss_campaign(const SubsetOracle& oracle, unsigned k, RandomSource& rng,
                        std::uint64_t max_tosses = kDefaultMaxTosses);
CoinTally toss_campaign(const BinaryExpansion& bias, unsigned k, RandomSource& rng,
                        std::uint64_t max_tosses = kDefaultMaxTosses);

/// Bit of weight 2^(3k+2) in the head count: the (3k-2)-th of 6k bits from the top.
int extract_bit(const CoinTally& tally);
int extract_bit(std::uint64_t heads, unsigned k);

/// Exact probability that extract_bit differs from x_k, as a rational.
Rational exact_error_probability(const SubsetOracle& oracle, unsigned k,
                                 std::uint64_t max_exact_tosses = kDefaultMaxExactTosses);
/// Same for an arbitrary bias p, measured against `expected_bit`.
Rational exact_error_probability(const Rational& p, unsigned k, int expected_bit,
                                 std::uint64_t max_exact_tosses = kDefaultMaxExactTosses);

/// Majority vote over an odd number r of independent extractions.
int amplified_extract(const SubsetOracle& oracle, unsigned k, unsigned repetitions, RandomSource& rng);
int amplified_extract(const BinaryExpansion& bias, unsigned k, unsigned repetitions, RandomSource& rng);

/// P(majority of r trials wrong) when each trial errs independently with `per_trial`.
Rational majority_error(const Rational& per_trial, unsigned repetitions);

/// Chebyshev bound p(1-p) used to bound the single-extraction error.
Rational chebyshev_bound(const Rational& p);

}  // namespace bqsim::coin
