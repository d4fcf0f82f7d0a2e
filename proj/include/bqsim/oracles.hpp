#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::oracles {

enum class LanguageId {
  AM75,
  AM75P,
  AM75P_I,
  UPOWER64,
  UPOWER64_I,
  DIMA,
  DIMA_I,
  LOG_DIMA_I,
  POWER_EQ,
  POWER_EQ_I,
  UPOWER8_I,
};

std::string_view to_string(LanguageId id);
std::optional<LanguageId> parse_language(std::string_view name);
const std::vector<LanguageId>& all_languages();

bool requires_oracle(LanguageId id);
/// Letters of the language's alphabet.
std::string_view alphabet(LanguageId id);

/// F(n) through the prime factorization: min over primes p of p^(v_p(n)+1).
BigInt least_non_divisor(const BigInt& n);

/// Membership by definition. I-parameterized languages need `oracle` and
/// throw OutOfPrefixError when the decisive index lies beyond its prefix.
bool oracle_membership(LanguageId id, const Word& input, const SubsetOracle* oracle = nullptr);

/// Members up to `bound`: input length for the unary languages, family
/// parameter (k or n) for DIMA*, LOG_DIMA_I and POWER_EQ*. Throws CapExceeded
/// when more than `cap` candidates would have to be examined.
std::vector<Word> enumerate_members(LanguageId id, const BigInt& bound, const SubsetOracle* oracle = nullptr,
                                    std::uint64_t cap = 1000000);

/// Single-edit variants of `member` (delete, insert, flip one symbol; block
/// lengths off by one) that are non-members, at most `budget` of them.
std::vector<Word> mutate_near_members(LanguageId id, const Word& member, std::size_t budget,
                                      const SubsetOracle* oracle = nullptr);

}  // namespace bqsim::oracles
