#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bqsim/bigint.hpp"

namespace bqsim {

struct Run {
  char symbol;
  BigInt count;  // > 0

  bool operator==(const Run& other) const { return symbol == other.symbol && count == other.count; }
};

/// An input word stored as maximal runs. Explicit strings, run-length
/// literals and bare unary lengths all normalize to the same value, so two
/// representations of one string compare equal.
class Word {
 public:
  Word() = default;

  static Word from_string(std::string_view symbols);
  /// Parses the literal form "0^64 1 0^128": space-separated tokens, each a
  /// plain symbol string ("11") or a single symbol with an exponent ("0^64").
  static Word parse_rle(std::string_view literal);
  static Word unary(char symbol, const BigInt& length);

  Word& append(char symbol, const BigInt& count = 1);
  Word& append(const Word& other);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  BigInt length() const;

  /// Expands to an explicit string; throws CapExceeded beyond `cap` symbols.
  std::string expand(std::uint64_t cap = 1ULL << 26) const;
  std::string to_rle() const;

  /// Symbol at 0-based position.
  char at(const BigInt& position) const;
  /// True when every symbol is `symbol` (the empty word qualifies).
  bool is_unary_over(char symbol) const;
  BigInt count_of(char symbol) const;

  bool operator==(const Word& other) const { return runs_ == other.runs_; }

 private:
  std::vector<Run> runs_;
};

}  // namespace bqsim
