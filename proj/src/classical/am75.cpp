#include "bqsim/classical/am75.hpp"

#include <cmath>
#include <stdexcept>

#include "bqsim/coin.hpp"
#include "bqsim/core/errors.hpp"
#include "track_arith.hpp"

namespace bqsim::classical {

namespace {

constexpr int kCandidate = 0;
constexpr int kRemainder = 1;
constexpr int kTosses = 2;
constexpr int kHeads = 3;

// Leaves F(n) on the candidate track. The input head sweeps the unary input
// once per candidate, alternating direction at the end-markers; the
// per-symbol remainder update (increment, compare with k, reset) is metered
// logically rather than replayed cell by cell.
std::uint64_t compute_f(Machine& m, const BigInt& n) {
  detail::write_value(m, kCandidate, 1);
  Move dir = Move::Right;
  for (std::uint64_t k = 2;; ++k) {
    detail::increment(m, kCandidate);
    m.sweep(dir);
    dir = dir == Move::Right ? Move::Left : Move::Right;
    const unsigned long cost = 2 * bit_length(BigInt(static_cast<unsigned long>(k))) + 2;
    m.add_steps(n * cost);
    const BigInt kk(static_cast<unsigned long>(k));
    const BigInt peak = n < kk - 1 ? n : BigInt(kk - 1);
    const BigInt rem = n % kk;
    detail::write_value(m, kRemainder, peak);
    detail::write_value(m, kRemainder, rem, bit_length(peak));
    if (rem != 0) return k;
  }
}

}  // namespace

FValue f_of_n(const BigInt& n) {
  if (n < 1) throw std::domain_error("F(n) needs n >= 1");
  Machine m(Word::unary('a', n), HeadDiscipline::Sweeping, 0, TapeRepresentation::RunLength);
  FValue out;
  out.n = n;
  out.f = compute_f(m, n);
  out.work_cells = m.work().space();
  out.steps = m.steps();
  return out;
}

bool am75_member(const BigInt& n) {
  if (n < 1) return false;
  const std::uint64_t f = f_of_n(n).f;
  return (f & (f - 1)) == 0;
}

bool am75p_member(const BigInt& n) {
  if (n < 1) return false;
  Machine m(Word::unary('a', n), HeadDiscipline::Sweeping, 0, TapeRepresentation::RunLength);
  compute_f(m, n);
  return detail::power_exponent(m, kCandidate, 6) > 0;
}

double am75p_space_budget(const BigInt& n) {
  const double log2n = n < 4 ? 2.0 : log2_of(Rational(n));
  return 1.0 * std::log2(log2n) + 4.0;
}

RunStats ptm_am75p_I(const Word& input, const SubsetOracle& oracle, const RecognizerParams& params,
                     RandomSource& rng) {
  if (params.repetitions % 2 == 0) throw std::invalid_argument("repetition count must be odd");
  Machine m(input, HeadDiscipline::Sweeping, params.max_steps, params.representation);
  try {
    // The first sweep also checks the alphabet; a non-unary or empty input never enters the loop.
    if (input.empty() || !input.is_unary_over('a')) {
      m.sweep(Move::Right);
      return m.finish(Decision::Reject);
    }
    const BigInt n = input.length();
    compute_f(m, n);
    const std::uint64_t exponent = detail::power_exponent(m, kCandidate, 6);
    if (exponent == 0) return m.finish(Decision::Reject);

    oracle.query(static_cast<std::int64_t>(exponent));
    const BinaryExpansion bias(oracle.coin_bias());
    const std::uint64_t bit_cell = 3 * exponent + 2;
    unsigned ones = 0;
    for (unsigned rep = 0; rep < params.repetitions; ++rep) {
      // Toss until the toss counter equals F(n) = 64^m, counting heads.
      do {
        if (rng.bernoulli(bias)) detail::increment(m, kHeads);
        detail::increment(m, kTosses);
      } while (!detail::equal(m, kTosses, kCandidate));
      ones += static_cast<unsigned>(detail::read_bit(m, kHeads, bit_cell));
      detail::clear(m, kTosses);
      detail::clear(m, kHeads);
    }
    return m.finish(2 * ones > params.repetitions ? Decision::Accept : Decision::Reject);
  } catch (const Machine::CapExceededSignal&) {
    return m.finish(Decision::CapExceeded);
  }
}

RunStats ptm_am75p_I(const BigInt& n, const SubsetOracle& oracle, const RecognizerParams& params,
                     RandomSource& rng) {
  return ptm_am75p_I(Word::unary('a', n), oracle, params, rng);
}

}  // namespace bqsim::classical
