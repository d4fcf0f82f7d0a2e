#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bqsim/bigint.hpp"

namespace bqsim {

/// Binary expansion of a rational in [0, 1], computed once up to a fixed
/// depth and continued on demand. Immutable after construction, so one
/// instance can be shared by concurrent runs.
class BinaryExpansion {
 public:
  explicit BinaryExpansion(const Rational& value, std::size_t cached_bits = 512);

  const Rational& value() const { return value_; }
  bool is_one() const { return is_one_; }

  /// Bit at position i >= 1 (weight 2^-i).
  int bit(std::size_t i) const;

 private:
  Rational value_;
  bool is_one_ = false;
  std::vector<std::uint8_t> bits_;
  BigInt remainder_;  // numerator remainder after bits_.size() doublings
};

/// Seeded source of fair bits. Identical seeds give identical bit streams.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t bits_consumed() const { return consumed_; }

  bool fair_bit() {
    if (available_ == 0) refill();
    const bool b = (buffer_ & 1u) != 0;
    buffer_ >>= 1;
    --available_;
    ++consumed_;
    return b;
  }

  std::uint64_t next_u64();

  /// Exact Bernoulli(p): fair bits are compared against p's expansion until
  /// the first difference, so no floating point enters the bias.
  bool bernoulli(const BinaryExpansion& p);

  /// Number of consecutive 1-bits drawn before the first 0-bit, i.e. the
  /// run of heads of a fair coin. P(result >= n) = 2^-n.
  std::uint64_t leading_heads();

  /// True with probability 2^-length: all of `length` fair tosses land heads.
  bool all_heads(const BigInt& length);
  bool all_heads(std::uint64_t length);

  /// Uniform double in (0, 1), used only by log-domain samplers.
  double open_unit();

 private:
  void refill() {
    buffer_ = engine_();
    available_ = 64;
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
  std::uint64_t consumed_ = 0;
};

/// Derives a per-trial seed from a base seed and stream indices (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace bqsim
