#include "bqsim/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace bqsim {

BigInt pow2(unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

unsigned long bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

long exact_log(const BigInt& value, unsigned long base) {
  if (value <= 0 || base < 2) return -1;
  BigInt v = value;
  long e = 0;
  while (v > 1) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), base) == 0) return -1;
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), base);
    ++e;
  }
  return e;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  r.canonicalize();
  return r;
}

namespace {
double log2_abs(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}
}  // namespace

double log2_of(const Rational& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive rational");
  return log2_abs(value.get_num()) - log2_abs(value.get_den());
}

double to_double(const Rational& value) {
  if (value == 0) return 0.0;
  const double l = log2_of(value >= 0 ? Rational(value) : Rational(-value));
  if (l < -1000.0) return 0.0;
  return value.get_d();
}

bool fits_u64(const BigInt& value) { return value >= 0 && bit_length(value) <= 64; }

std::uint64_t to_u64(const BigInt& value) {
  if (!fits_u64(value)) throw std::overflow_error("value does not fit in 64 bits: " + value.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t value) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return r;
}

}  // namespace bqsim
