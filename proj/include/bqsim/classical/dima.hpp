#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/classical/params.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::classical {

/// Parsed member of DIMA: 6k+1 zero-blocks of lengths 2^0..2^(6k), single-1
/// separators except the two "11" around block index 3k+2 (0-based).
struct DimaShape {
  unsigned k = 0;
  std::vector<BigInt> blocks;
  std::size_t first_marker_block = 0;   // the first "11" follows this block
  std::size_t second_marker_block = 0;  // the second "11" follows this block

  const BigInt& middle_block() const { return blocks[first_marker_block + 1]; }
  const BigInt& final_block() const { return blocks.back(); }
};

/// Direct structural parse of the DIMA definition.
std::optional<DimaShape> parse_dima(const Word& w);
bool dima_member(const Word& w);

/// The unique DIMA member with parameter k.
Word dima_word(unsigned k);

/// Deterministic two-way counter automaton for DIMA: one finite-state pass
/// (form, block count 6k+1, "before first 11" = "after first 11" + 3 on the
/// counter), then pairwise doubling checks. Linear time, counter <= |w|.
RunStats dca2_dima(const Word& w, const RecognizerParams& params = {});

/// Two-way PCA for DIMA(I): dca2_dima, then per repetition one p_I toss per
/// symbol of the final block counted on the counter and the subtraction walk
/// over the middle block. Majority of `repetitions` walk outcomes.
RunStats pca2_dima_I(const Word& w, const SubsetOracle& oracle, const RecognizerParams& params, RandomSource& rng);

/// Sweeping PCA for DIMA(I): three deterministic passes, then the same toss
/// count and walk performed with end-marker to end-marker sweeps.
RunStats pca_sweeping_dima_I(const Word& w, const SubsetOracle& oracle, const RecognizerParams& params,
                             RandomSource& rng);

/// Outcome of the subtraction walk for a head count C and middle block
/// length L: 1 iff the counter first hits zero at or after the end of an odd
/// traversal, i.e. iff bit log2(L) of C is set when L is a power of two.
int walk_outcome(std::uint64_t heads, std::uint64_t middle_length);

/// Runs the two-way walk on a DIMA member with the counter preset to `heads`
/// (no tossing). Returns the walk's bit.
int dima_forced_walk(const Word& w, std::uint64_t heads);

/// Frozen budgets.
double dca2_step_budget(const BigInt& length);               // 8 |w|
double pca2_step_budget_per_repetition(const BigInt& length);  // 6 |w|
double sweeping_step_budget(const BigInt& length, unsigned repetitions);  // 2 r |w|^1.5 + 8 |w|

}  // namespace bqsim::classical
