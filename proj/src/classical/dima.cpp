#include "bqsim/classical/dima.hpp"

#include <cmath>
#include <stdexcept>

#include "bqsim/core/errors.hpp"

namespace bqsim::classical {

std::optional<DimaShape> parse_dima(const Word& w) {
  const auto& runs = w.runs();
  if (runs.empty() || runs.front().symbol != '0' || runs.back().symbol != '0') return std::nullopt;
  DimaShape shape;
  std::vector<std::size_t> doubles;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Run& r = runs[i];
    if (i % 2 == 0) {
      if (r.symbol != '0') return std::nullopt;
      shape.blocks.push_back(r.count);
    } else {
      if (r.symbol != '1' || r.count > 2) return std::nullopt;
      if (r.count == 2) doubles.push_back(shape.blocks.size() - 1);
    }
  }
  const std::size_t b = shape.blocks.size();
  if (b < 7 || (b - 1) % 6 != 0 || doubles.size() != 2) return std::nullopt;
  shape.k = static_cast<unsigned>((b - 1) / 6);
  shape.first_marker_block = doubles[0];
  shape.second_marker_block = doubles[1];
  if (shape.first_marker_block != 3 * shape.k + 1 || shape.second_marker_block != 3 * shape.k + 2) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < b; ++i) {
    if (shape.blocks[i] != pow2(i)) return std::nullopt;
  }
  return shape;
}

bool dima_member(const Word& w) { return parse_dima(w).has_value(); }

Word dima_word(unsigned k) {
  if (k == 0) throw std::domain_error("DIMA needs k >= 1");
  Word w;
  for (unsigned i = 0; i <= 6 * k; ++i) {
    if (i > 0) w.append('1', (i == 3 * k + 2 || i == 3 * k + 3) ? 2 : 1);
    w.append('0', pow2(i));
  }
  return w;
}

int walk_outcome(std::uint64_t heads, std::uint64_t middle_length) {
  if (middle_length == 0) throw std::domain_error("empty middle block");
  const std::uint64_t rem = heads % (2 * middle_length);
  if (rem == 0) return 0;
  return rem >= middle_length ? 1 : 0;
}

double dca2_step_budget(const BigInt& length) { return 8.0 * length.get_d(); }
double pca2_step_budget_per_repetition(const BigInt& length) { return 6.0 * length.get_d(); }
double sweeping_step_budget(const BigInt& length, unsigned repetitions) {
  const double n = length.get_d();
  return 2.0 * repetitions * n * std::sqrt(n) + 8.0 * n;
}

namespace {

// Outcome of one walk event. The counter hitting zero on a middle zero
// during an odd traversal (or at the start of one) means the low part C'
// was below L: bit 0. Hitting zero at the end of an odd traversal or inside
// an even one means C' >= L: bit 1.
struct WalkRule {
  bool odd = true;
  static constexpr int kContinue = -1;

  int on_middle_zero(Counter& c) const {
    if (c.is_zero()) return odd ? 0 : 1;
    c.decrement();
    return kContinue;
  }
  int on_traversal_end(const Counter& c) {
    if (c.is_zero()) return odd ? 1 : 0;
    odd = !odd;
    return kContinue;
  }
};

// Finite-state scan of a maximal run of 1s; returns its length (saturating at 3).
int skip_ones(Machine& m, Move d) {
  int ones = 0;
  while (m.read() == '1') {
    if (ones < 3) ++ones;
    m.step(d);
  }
  return ones;
}

// Left-to-right finite-state form check shared by the deterministic screens.
// Counter use: +1 per block in `count_before` region, -1 per block in the
// `count_after` region, then `offset` further decrements must succeed and
// leave zero.
// Region 0: blocks before the first "11"; 1: between the two; 2: after the second.
bool form_pass(Machine& m, bool after_includes_middle, int offset) {
  m.step(Move::Right);
  if (m.read() != '0') return false;
  int doubles = 0;
  int between = 0;
  unsigned blocks_mod6 = 0;
  bool at_least_seven = false;
  unsigned block_index = 0;
  bool first_block_single = false;
  for (;;) {
    unsigned len = 0;
    while (m.read() == '0') {
      if (len < 2) ++len;
      m.step(Move::Right);
    }
    if (block_index == 0) first_block_single = len == 1;
    if (block_index < 7) ++block_index;
    blocks_mod6 = (blocks_mod6 + 1) % 6;
    if (block_index >= 7) at_least_seven = true;
    const bool counts_after = doubles == 2 || (doubles == 1 && after_includes_middle);
    if (doubles == 0) {
      m.counter().increment();
    } else if (counts_after) {
      if (m.counter().is_zero()) return false;
      m.counter().decrement();
    }
    if (doubles == 1) ++between;
    if (m.input().at_right_end()) break;
    const int ones = skip_ones(m, Move::Right);
    if (ones >= 3) return false;
    if (ones == 2) {
      ++doubles;
      if (doubles > 2) return false;
      if (doubles == 2 && between != 1) return false;
    }
    if (m.read() != '0') return false;
  }
  if (doubles != 2 || !first_block_single || !at_least_seven || blocks_mod6 != 1) return false;
  for (int i = 0; i < offset; ++i) {
    if (m.counter().is_zero()) return false;
    m.counter().decrement();
    m.step();
  }
  return m.counter().is_zero();
}

// Two-way deterministic screen; on success the head rests on the right end-marker.
bool dca2_screen(Machine& m) {
  if (!form_pass(m, true, 3)) return false;
  m.sweep(Move::Left);
  m.step(Move::Right);
  for (;;) {
    while (m.read() == '0') {
      m.counter().increment();
      m.step(Move::Right);
    }
    skip_ones(m, Move::Right);
    // next block must have exactly twice the zeros: one decrement per two zeros
    bool odd_zero = true;
    while (m.read() == '0') {
      if (odd_zero) {
        if (m.counter().is_zero()) return false;
        m.counter().decrement();
      }
      odd_zero = !odd_zero;
      m.step(Move::Right);
    }
    if (!odd_zero || !m.counter().is_zero()) return false;
    if (m.input().at_right_end()) return true;
    do {
      m.step(Move::Left);
    } while (m.read() == '0');
    m.step(Move::Right);
  }
}

}  // namespace

RunStats dca2_dima(const Word& w, const RecognizerParams& params) {
  Machine m(w, HeadDiscipline::TwoWay, params.max_steps, params.representation);
  try {
    return m.finish(dca2_screen(m) ? Decision::Accept : Decision::Reject);
  } catch (const Machine::CapExceededSignal&) {
    return m.finish(Decision::CapExceeded);
  }
}

namespace {

unsigned dima_parameter_from_final(const Machine& m, const BigInt& final_len) {
  (void)m;
  const long e = exact_log(final_len, 64);
  if (e < 1) throw SimulatorFault("screened DIMA input has a final block that is not a power of 64");
  return static_cast<unsigned>(e);
}

// From the right end-marker: toss over the final block, leaving the head on the
// separator before it. Returns the final block length (instrumentation only).
BigInt toss_final_block(Machine& m, const BinaryExpansion& bias, RandomSource& rng) {
  BigInt len = 0;
  m.step(Move::Left);
  while (m.read() == '0') {
    if (rng.bernoulli(bias)) m.counter().increment();
    ++len;
    m.step(Move::Left);
  }
  return len;
}


// From inside the final-block separator: left until a "11" has been crossed,
// then over the middle block to the anchor, the second symbol of the first "11".
void move_to_anchor(Machine& m) {
  bool prev_one = false;
  for (;;) {
    const bool one = m.read() == '1';
    if (one && prev_one) break;
    prev_one = one;
    m.step(Move::Left);
  }
  m.step(Move::Left);
  while (m.read() == '0') m.step(Move::Left);
}

// Walk from the anchor: forth and back over the middle block, one decrement
// per middle zero, until the counter is observed zero.
int two_way_walk(Machine& m) {
  WalkRule rule;
  int bit = WalkRule::kContinue;
  while (bit == WalkRule::kContinue) {
    const Move d = rule.odd ? Move::Right : Move::Left;
    m.step(d);
    while (bit == WalkRule::kContinue && m.read() == '0') {
      bit = rule.on_middle_zero(m.counter());
      if (bit == WalkRule::kContinue) m.step(d);
    }
    if (bit == WalkRule::kContinue) bit = rule.on_traversal_end(m.counter());
  }
  return bit;
}

}  // namespace

int dima_forced_walk(const Word& w, std::uint64_t heads) {
  if (!dima_member(w)) throw std::invalid_argument("walk needs a DIMA member");
  Machine m(w, HeadDiscipline::TwoWay);
  for (std::uint64_t i = 0; i < heads; ++i) m.counter().increment();
  m.sweep(Move::Right);
  m.step(Move::Left);
  while (m.read() == '0') m.step(Move::Left);
  move_to_anchor(m);
  return two_way_walk(m);
}

RunStats pca2_dima_I(const Word& w, const SubsetOracle& oracle, const RecognizerParams& params, RandomSource& rng) {
  if (params.repetitions % 2 == 0) throw std::invalid_argument("repetition count must be odd");
  Machine m(w, HeadDiscipline::TwoWay, params.max_steps, params.representation);
  try {
    if (!dca2_screen(m)) return m.finish(Decision::Reject);
    const auto& runs = w.runs();
    const unsigned k = dima_parameter_from_final(m, runs.back().count);
    oracle.query(static_cast<std::int64_t>(k));
    const BinaryExpansion bias(oracle.coin_bias());

    unsigned ones = 0;
    for (unsigned rep = 0; rep < params.repetitions; ++rep) {
      toss_final_block(m, bias, rng);
      move_to_anchor(m);
      const int bit = two_way_walk(m);
      ones += static_cast<unsigned>(bit);
      m.sweep(Move::Right);
    }
    return m.finish(2 * ones > params.repetitions ? Decision::Accept : Decision::Reject);
  } catch (const Machine::CapExceededSignal&) {
    return m.finish(Decision::CapExceeded);
  }
}

namespace {

// Pass 2 (right to left): block 2i+1 must hold twice the zeros of block 2i.
bool sweep_pass_pairs_from_right(Machine& m) {
  bool odd = true;  // 6k+1 blocks, so the rightmost has odd index
  m.step(Move::Left);
  for (;;) {
    if (odd) {
      while (m.read() == '0') {
        m.counter().increment();
        m.step(Move::Left);
      }
    } else {
      while (m.read() == '0') {
        for (int i = 0; i < 2; ++i) {
          if (m.counter().is_zero()) return false;
          m.counter().decrement();
          if (i == 0) m.step();
        }
        m.step(Move::Left);
      }
      if (!m.counter().is_zero()) return false;
    }
    skip_ones(m, Move::Left);
    if (m.input().at_left_end()) {
      // block 1 has no partner on this pass
      while (!m.counter().is_zero()) {
        m.counter().decrement();
        m.step();
      }
      return true;
    }
    odd = !odd;
  }
}

// Pass 3 (left to right): block 2i must hold twice the zeros of block 2i-1.
bool sweep_pass_pairs_from_left(Machine& m) {
  bool odd = true;
  m.step(Move::Right);
  for (;;) {
    if (odd) {
      while (m.read() == '0') {
        m.counter().increment();
        m.step(Move::Right);
      }
    } else {
      bool odd_zero = true;
      while (m.read() == '0') {
        if (odd_zero) {
          if (m.counter().is_zero()) return false;
          m.counter().decrement();
        }
        odd_zero = !odd_zero;
        m.step(Move::Right);
      }
      if (!odd_zero || !m.counter().is_zero()) return false;
    }
    if (m.input().at_right_end()) {
      while (!m.counter().is_zero()) {
        m.counter().decrement();
        m.step();
      }
      return true;
    }
    skip_ones(m, Move::Right);
    odd = !odd;
  }
}

// One end-marker to end-marker sweep of the walk. The middle block is the
// run of zeros right after the first "11" met in the sweep direction.
int walk_sweep(Machine& m, Move d, WalkRule& rule) {
  bool prev_one = false;
  for (;;) {
    m.step(d);
    const char c = m.read();
    if (c == kLeftEnd || c == kRightEnd) return WalkRule::kContinue;
    const bool one = c == '1';
    if (one && prev_one) break;
    prev_one = one;
  }
  m.step(d);
  int bit = WalkRule::kContinue;
  while (m.read() == '0') {
    bit = rule.on_middle_zero(m.counter());
    if (bit != WalkRule::kContinue) break;
    m.step(d);
  }
  if (bit == WalkRule::kContinue) bit = rule.on_traversal_end(m.counter());
  m.sweep(d);
  return bit;
}

}  // namespace

RunStats pca_sweeping_dima_I(const Word& w, const SubsetOracle& oracle, const RecognizerParams& params,
                             RandomSource& rng) {
  if (params.repetitions % 2 == 0) throw std::invalid_argument("repetition count must be odd");
  Machine m(w, HeadDiscipline::Sweeping, params.max_steps, params.representation);
  try {
    if (!form_pass(m, false, 4)) {
      if (!m.input().at_right_end()) m.sweep(Move::Right);
      return m.finish(Decision::Reject);
    }
    if (!sweep_pass_pairs_from_right(m)) {
      m.sweep(Move::Left);
      return m.finish(Decision::Reject);
    }
    if (!sweep_pass_pairs_from_left(m)) {
      m.sweep(Move::Right);
      return m.finish(Decision::Reject);
    }
    const unsigned k = dima_parameter_from_final(m, w.runs().back().count);
    oracle.query(static_cast<std::int64_t>(k));
    const BinaryExpansion bias(oracle.coin_bias());

    unsigned ones = 0;
    for (unsigned rep = 0; rep < params.repetitions; ++rep) {
      if (m.input().at_left_end()) m.sweep(Move::Right);
      toss_final_block(m, bias, rng);
      m.sweep(Move::Left);
      WalkRule rule;
      Move d = Move::Right;
      int bit = WalkRule::kContinue;
      while (bit == WalkRule::kContinue) {
        bit = walk_sweep(m, d, rule);
        d = d == Move::Right ? Move::Left : Move::Right;
      }
      ones += static_cast<unsigned>(bit);
    }
    return m.finish(2 * ones > params.repetitions ? Decision::Accept : Decision::Reject);
  } catch (const Machine::CapExceededSignal&) {
    return m.finish(Decision::CapExceeded);
  }
}

}  // namespace bqsim::classical
