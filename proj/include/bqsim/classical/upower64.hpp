#pragma once

#include "bqsim/bigint.hpp"
#include "bqsim/classical/params.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::classical {

/// |w| = 64^k for some k >= 1, w over {0}.
bool upower64_member(const Word& w);

/// One-way unary PTM for UPOWER64(I). Two binary counters on the work tape
/// (symbols read, heads of one p_I toss per symbol); after the right
/// end-marker, the symbol counter must be 64^m and the decision is the bit of
/// weight 2^(3m+2) of the heads counter.
RunStats ptm1_upower64_I(const Word& input, const SubsetOracle& oracle, const RecognizerParams& params,
                         RandomSource& rng);

/// Frozen budgets: steps <= 8 n max(1, log2 n) and work cells <= 2 max(1, log2 n) + 2.
double upower64_step_budget(const BigInt& n);
double upower64_space_budget(const BigInt& n);

}  // namespace bqsim::classical
