#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bqsim {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt pow2(unsigned long exponent);
BigInt ipow(const BigInt& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

// Number of bits in the binary representation; 0 for zero.
unsigned long bit_length(const BigInt& value);

// Returns e such that value == base^e, or -1 when value is not a positive power of base.
long exact_log(const BigInt& value, unsigned long base);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);  // "num/den", or "num" when den == 1
Rational parse_rational(const std::string& text);

// log2 of a positive rational, finite even when the value underflows double.
double log2_of(const Rational& value);
double to_double(const Rational& value);

bool fits_u64(const BigInt& value);
std::uint64_t to_u64(const BigInt& value);
BigInt from_u64(std::uint64_t value);

}  // namespace bqsim
