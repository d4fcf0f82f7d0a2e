#include "bqsim/classical/upower64.hpp"

#include <algorithm>

#include "bqsim/core/errors.hpp"
#include "track_arith.hpp"

namespace bqsim::classical {

namespace {
constexpr int kSymbols = 0;
constexpr int kHeads = 1;

double log2_at_least_one(const BigInt& n) {
  if (n < 2) return 1.0;
  return std::max(1.0, log2_of(Rational(n)));
}
}  // namespace

bool upower64_member(const Word& w) {
  if (w.empty() || !w.is_unary_over('0')) return false;
  return exact_log(w.length(), 64) >= 1;
}

double upower64_step_budget(const BigInt& n) {
  return 8.0 * n.get_d() * log2_at_least_one(n);
}

double upower64_space_budget(const BigInt& n) { return 2.0 * log2_at_least_one(n) + 2.0; }

RunStats ptm1_upower64_I(const Word& input, const SubsetOracle& oracle, const RecognizerParams& params,
                         RandomSource& rng) {
  Machine m(input, HeadDiscipline::OneWay, params.max_steps, params.representation);
  try {
    const BinaryExpansion bias(oracle.coin_bias());
    bool unary = true;
    m.step(Move::Right);
    while (!m.input().at_right_end()) {
      if (m.read() != '0') unary = false;
      if (rng.bernoulli(bias)) detail::increment(m, kHeads);
      detail::increment(m, kSymbols);
      m.step(Move::Right);
    }
    if (!unary) return m.finish(Decision::Reject);
    const std::uint64_t exponent = detail::power_exponent(m, kSymbols, 6);
    if (exponent == 0) return m.finish(Decision::Reject);
    const int bit = detail::read_bit(m, kHeads, 3 * exponent + 2);
    // Membership index is read only for inputs that reach the decision.
    oracle.query(static_cast<std::int64_t>(exponent));
    return m.finish(bit == 1 ? Decision::Accept : Decision::Reject);
  } catch (const Machine::CapExceededSignal&) {
    return m.finish(Decision::CapExceeded);
  }
}

}  // namespace bqsim::classical
