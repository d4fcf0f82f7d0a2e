#include "bqsim/core/random.hpp"

#include <bit>
#include <stdexcept>

namespace bqsim {

BinaryExpansion::BinaryExpansion(const Rational& value, std::size_t cached_bits) : value_(value) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) throw std::domain_error("probability outside [0,1]: " + to_string(value_));
  is_one_ = value_ == 1;
  const BigInt& den = value_.get_den();
  BigInt rem = is_one_ ? BigInt(0) : value_.get_num();
  bits_.reserve(cached_bits);
  for (std::size_t i = 0; i < cached_bits; ++i) {
    rem *= 2;
    if (rem >= den) {
      bits_.push_back(1);
      rem -= den;
    } else {
      bits_.push_back(0);
    }
  }
  remainder_ = rem;
}

int BinaryExpansion::bit(std::size_t i) const {
  if (i == 0) throw std::out_of_range("binary expansion positions start at 1");
  if (is_one_) return 1;
  if (i <= bits_.size()) return bits_[i - 1];
  BigInt rem = remainder_;
  const BigInt& den = value_.get_den();
  int b = 0;
  for (std::size_t k = bits_.size(); k < i; ++k) {
    rem *= 2;
    if (rem >= den) {
      b = 1;
      rem -= den;
    } else {
      b = 0;
    }
  }
  return b;
}

std::uint64_t RandomSource::next_u64() {
  std::uint64_t out = 0;
  for (int i = 0; i < 64; ++i) out |= static_cast<std::uint64_t>(fair_bit()) << i;
  return out;
}

bool RandomSource::bernoulli(const BinaryExpansion& p) {
  if (p.is_one()) return true;
  for (std::size_t i = 1;; ++i) {
    const int c = p.bit(i);
    const int b = fair_bit() ? 1 : 0;
    if (b != c) return c == 1;  // uniform draw fell below p exactly when p has the 1
  }
}

std::uint64_t RandomSource::leading_heads() {
  std::uint64_t count = 0;
  for (;;) {
    if (available_ == 0) refill();
    const auto ones = static_cast<unsigned>(std::countr_one(buffer_));
    if (ones < available_) {
      count += ones;
      buffer_ >>= ones + 1;
      available_ -= ones + 1;
      consumed_ += ones + 1;
      return count;
    }
    count += available_;
    consumed_ += available_;
    available_ = 0;
  }
}

bool RandomSource::all_heads(std::uint64_t length) {
  if (length == 0) return true;
  // Only the first `length` tosses matter; a tail among them ends the event.
  std::uint64_t seen = 0;
  while (seen < length) {
    if (!fair_bit()) return false;
    ++seen;
  }
  return true;
}

bool RandomSource::all_heads(const BigInt& length) {
  if (fits_u64(length)) return all_heads(to_u64(length));
  BigInt seen = 0;
  while (seen < length) {
    if (!fair_bit()) return false;
    ++seen;
  }
  return true;
}

double RandomSource::open_unit() {
  for (;;) {
    const std::uint64_t v = next_u64() >> 11;
    if (v != 0) return static_cast<double>(v) * 0x1.0p-53;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

}  // namespace bqsim
