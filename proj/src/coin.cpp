#include "bqsim/coin.hpp"

#include <stdexcept>
#include <string>

#include "bqsim/core/errors.hpp"

namespace bqsim::coin {

std::uint64_t tosses_for(unsigned k) {
  if (k == 0) throw std::domain_error("coin campaign needs k >= 1");
  if (k > 10) throw CapExceeded("64^" + std::to_string(k) + " tosses exceed 64-bit range");
  return 1ULL << (6 * k);
}

CoinTally toss_campaign(const BinaryExpansion& bias, unsigned k, RandomSource& rng, std::uint64_t max_tosses) {
  const std::uint64_t n = tosses_for(k);
  if (n > max_tosses) throw CapExceeded("64^" + std::to_string(k) + " tosses exceed the toss cap");
  CoinTally t{k, n, 0};
  for (std::uint64_t i = 0; i < n; ++i) {
    if (rng.bernoulli(bias)) ++t.heads;
  }
  return t;
}

CoinTally toss_campaign(const SubsetOracle& oracle, unsigned k, RandomSource& rng, std::uint64_t max_tosses) {
  oracle.query(static_cast<std::int64_t>(k));
  const BinaryExpansion bias(oracle.coin_bias());
  return toss_campaign(bias, k, rng, max_tosses);
}

int extract_bit(std::uint64_t heads, unsigned k) {
  return static_cast<int>((heads >> (3 * k + 2)) & 1u);
}

int extract_bit(const CoinTally& tally) { return extract_bit(tally.heads, tally.k); }

Rational exact_error_probability(const Rational& p, unsigned k, int expected_bit, std::uint64_t max_exact_tosses) {
  const std::uint64_t n = tosses_for(k);
  if (n > max_exact_tosses) {
    throw CapExceeded("exact binomial summation over 64^" + std::to_string(k) + " tosses exceeds the exact-mode cap");
  }
  if (p < 0 || p > 1) throw std::domain_error("bias outside [0,1]");
  // P(X = x) = C(n,x) a^x b^(n-x) / d^n with p = a/d, b = d - a; every term is an integer over d^n.
  const BigInt a = p.get_num();
  const BigInt d = p.get_den();
  const BigInt b = d - a;
  BigInt term = ipow(b, n);  // x = 0
  BigInt wrong = 0;
  for (std::uint64_t x = 0;; ++x) {
    if (extract_bit(x, k) != expected_bit) wrong += term;
    if (x == n) break;
    if (b == 0) {
      term = x + 1 == n ? ipow(a, n) : BigInt(0);
      continue;
    }
    // term(x+1) = term(x) * (n-x)/(x+1) * a/b
    term *= static_cast<unsigned long>(n - x);
    term *= a;
    BigInt divisor = b * static_cast<unsigned long>(x + 1);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), divisor.get_mpz_t());
  }
  Rational r(wrong, ipow(d, n));
  r.canonicalize();
  return r;
}

Rational exact_error_probability(const SubsetOracle& oracle, unsigned k, std::uint64_t max_exact_tosses) {
  const int bit = oracle.query(static_cast<std::int64_t>(k));
  return exact_error_probability(oracle.coin_bias(), k, bit, max_exact_tosses);
}

int amplified_extract(const BinaryExpansion& bias, unsigned k, unsigned repetitions, RandomSource& rng) {
  if (repetitions == 0 || repetitions % 2 == 0) throw std::invalid_argument("repetition count must be odd");
  unsigned ones = 0;
  for (unsigned i = 0; i < repetitions; ++i) ones += static_cast<unsigned>(extract_bit(toss_campaign(bias, k, rng)));
  return 2 * ones > repetitions ? 1 : 0;
}

int amplified_extract(const SubsetOracle& oracle, unsigned k, unsigned repetitions, RandomSource& rng) {
  oracle.query(static_cast<std::int64_t>(k));
  const BinaryExpansion bias(oracle.coin_bias());
  return amplified_extract(bias, k, repetitions, rng);
}

Rational majority_error(const Rational& per_trial, unsigned repetitions) {
  if (repetitions == 0 || repetitions % 2 == 0) throw std::invalid_argument("repetition count must be odd");
  Rational total = 0;
  BigInt binom = 1;  // C(r, j)
  for (unsigned j = 0; j <= repetitions; ++j) {
    if (j > 0) {
      binom *= repetitions - j + 1;
      binom /= j;
    }
    if (2 * j > repetitions) {
      total += Rational(binom) * rpow(per_trial, j) * rpow(1 - per_trial, repetitions - j);
    }
  }
  total.canonicalize();
  return total;
}

Rational chebyshev_bound(const Rational& p) {
  Rational r = p * (1 - p);
  r.canonicalize();
  return r;
}

}  // namespace bqsim::coin
