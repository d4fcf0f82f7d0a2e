#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/classical/params.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::classical {

/// 0 (1 w_1) 0^2 (1 w_2) 0^4 ... (1 w_m) 0^(2^m). Throws domain_error on the
/// empty word or a non-binary symbol.
Word log_transform(const Word& w);

/// Exact length of log_transform(w) for |w| = m: 2^(m+1) + 2m - 1.
BigInt log_transform_length(std::uint64_t m);

enum class Comparison { Equal, Unequal, Inconclusive };
std::string_view to_string(Comparison c);

struct FreivaldsResult {
  Comparison verdict = Comparison::Inconclusive;
  std::uint64_t wins_a = 0;
  std::uint64_t wins_b = 0;
  std::uint64_t rounds = 0;            // rounds simulated one by one (0 when skipped)
  bool skipped = false;                // decisive rounds sampled directly
  double log2_expected_rounds = 0.0;   // log2(K / P(decisive))
};

/// Unary equality test on two blocks of zeros. A round tosses a fair coin
/// once per zero of each block; it is decisive when exactly one block comes
/// up all heads. After K decisive rounds the blocks are declared unequal when
/// one side won more than tau*K of them.
FreivaldsResult freivalds_compare(const BigInt& len_a, const BigInt& len_b, const FreivaldsParams& params,
                                  RandomSource& rng);

/// P(block A wins | decisive) = (2^b - 1) / (2^a + 2^b - 2).
Rational decisive_bias(std::uint64_t len_a, std::uint64_t len_b);

/// Exact probability that freivalds_compare returns Equal (no round cap).
Rational freivalds_equal_probability(std::uint64_t len_a, std::uint64_t len_b, const FreivaldsParams& params);

/// log2 of the expected number of rounds to collect K decisive rounds.
double freivalds_log2_expected_rounds(const BigInt& len_a, const BigInt& len_b, std::uint64_t decisive_target);

enum class LogInner { DimaI, Am75pI };

/// Parsed skeleton of a LOG image: the encoded word and the zero-block
/// lengths (first block included).
struct LogSkeleton {
  std::vector<int> bits;
  std::vector<BigInt> blocks;
};

/// Finite-state check of 0 (1{0,1} 0^+)^+ with a single leading 0. Doubling is
/// not checked here.
bool parse_log_skeleton(const Word& x, LogSkeleton& out);

/// Recognizer for LOG(L): skeleton check, Freivalds doubling checks of
/// (2 len_i, len_(i+1)) using no counter, then the inner machine on the
/// decoded word. For LogInner::Am75pI the unary letter is 0; any 1 rejects.
RunStats ptm_log_recognizer(const Word& x, LogInner inner, const SubsetOracle& oracle,
                            const RecognizerParams& params, RandomSource& rng);

}  // namespace bqsim::classical
