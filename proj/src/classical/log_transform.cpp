#include "bqsim/classical/log_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bqsim/classical/am75.hpp"
#include "bqsim/classical/dima.hpp"

namespace bqsim::classical {

Word log_transform(const Word& w) {
  if (w.empty()) throw std::domain_error("LOG is defined for words of length >= 1");
  if (!w.length().fits_ulong_p()) throw std::domain_error("word too long to transform");
  Word x;
  x.append('0', 1);
  std::uint64_t i = 1;
  for (const Run& r : w.runs()) {
    if (r.symbol != '0' && r.symbol != '1') throw std::domain_error("LOG is defined on binary words");
    for (BigInt c = 0; c < r.count; ++c, ++i) {
      x.append('1', 1);
      x.append(r.symbol, 1);
      x.append('0', pow2(i));
    }
  }
  return x;
}

BigInt log_transform_length(std::uint64_t m) { return pow2(m + 1) + BigInt(2 * m) - 1; }

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::Unequal: return "unequal";
    case Comparison::Inconclusive: return "inconclusive";
  }
  return "?";
}

Rational decisive_bias(std::uint64_t len_a, std::uint64_t len_b) {
  if (len_a == 0 || len_b == 0) throw std::domain_error("block lengths must be >= 1");
  const BigInt ta = pow2(len_a) - 1;
  const BigInt tb = pow2(len_b) - 1;
  Rational q(tb, ta + tb);
  q.canonicalize();
  return q;
}

Rational freivalds_equal_probability(std::uint64_t len_a, std::uint64_t len_b, const FreivaldsParams& params) {
  const Rational q = decisive_bias(len_a, len_b);
  const std::uint64_t K = params.decisive_target;
  const auto hi = static_cast<std::uint64_t>(std::floor(params.threshold * static_cast<double>(K)));
  if (hi >= K) return Rational(1);
  const std::uint64_t lo = K - hi;
  // sum_{c=lo..hi} C(K,c) q^c (1-q)^(K-c), over the common denominator
  const BigInt num = q.get_num();
  const BigInt den = q.get_den();
  const BigInt rest = den - num;
  BigInt total = 0;
  BigInt binom = 1;
  for (std::uint64_t c = 0; c <= hi; ++c) {
    if (c >= lo) total += binom * ipow(num, c) * ipow(rest, K - c);
    binom = binom * BigInt(K - c) / BigInt(c + 1);
  }
  Rational p(total, ipow(den, K));
  p.canonicalize();
  return p;
}

double freivalds_log2_expected_rounds(const BigInt& len_a, const BigInt& len_b, std::uint64_t decisive_target) {
  const BigInt& s = len_a < len_b ? len_a : len_b;
  const double da = BigInt(len_a - s).get_d();
  const double db = BigInt(len_b - s).get_d();
  const double pa = std::exp2(-da) * (1.0 - std::exp2(-len_b.get_d()));
  const double pb = std::exp2(-db) * (1.0 - std::exp2(-len_a.get_d()));
  // log2 P(decisive) = -s + log2(pa + pb)
  return std::log2(static_cast<double>(decisive_target)) + s.get_d() - std::log2(pa + pb);
}

FreivaldsResult freivalds_compare(const BigInt& len_a, const BigInt& len_b, const FreivaldsParams& params,
                                  RandomSource& rng) {
  if (len_a < 1 || len_b < 1) throw std::domain_error("block lengths must be >= 1");
  if (params.decisive_target == 0) throw std::invalid_argument("decisive target must be >= 1");
  FreivaldsResult res;
  res.log2_expected_rounds = freivalds_log2_expected_rounds(len_a, len_b, params.decisive_target);
  bool literal = params.mode == RoundMode::Literal;
  if (params.mode == RoundMode::Auto) {
    literal = res.log2_expected_rounds + 2.0 <= std::log2(static_cast<double>(params.max_rounds));
  }
  const std::uint64_t K = params.decisive_target;
  if (literal) {
    while (res.wins_a + res.wins_b < K) {
      if (params.max_rounds != 0 && res.rounds >= params.max_rounds) {
        res.verdict = Comparison::Inconclusive;
        return res;
      }
      ++res.rounds;
      const bool a = rng.all_heads(len_a);
      const bool b = rng.all_heads(len_b);
      if (a && !b) ++res.wins_a;
      if (b && !a) ++res.wins_b;
    }
  } else {
    // Exact sampler for the winner of a decisive round: propose a side with a
    // fair bit, accept A with 2^(s-a)(1-2^-b) and B with 2^(s-b)(1-2^-a).
    res.skipped = true;
    const BigInt& s = len_a < len_b ? len_a : len_b;
    const BigInt extra_a = len_a - s;
    const BigInt extra_b = len_b - s;
    while (res.wins_a + res.wins_b < K) {
      if (rng.fair_bit()) {
        if (rng.all_heads(extra_a) && !rng.all_heads(len_b)) ++res.wins_a;
      } else {
        if (rng.all_heads(extra_b) && !rng.all_heads(len_a)) ++res.wins_b;
      }
    }
  }
  const double limit = params.threshold * static_cast<double>(K);
  const bool unequal = static_cast<double>(std::max(res.wins_a, res.wins_b)) > limit;
  res.verdict = unequal ? Comparison::Unequal : Comparison::Equal;
  return res;
}

namespace {

// Cursor over the runs of a word, one symbol or one maximal zero-run at a time.
class RunCursor {
 public:
  explicit RunCursor(const Word& w) : runs_(w.runs()) {}

  bool done() const { return index_ >= runs_.size(); }
  char peek() const { return runs_[index_].symbol; }

  void take_one() {
    if (++offset_ == runs_[index_].count) {
      ++index_;
      offset_ = 0;
    }
  }

  BigInt take_zeros() {
    if (done() || peek() != '0') return 0;
    BigInt n = runs_[index_].count - offset_;
    ++index_;
    offset_ = 0;
    return n;
  }

 private:
  const std::vector<Run>& runs_;
  std::size_t index_ = 0;
  BigInt offset_ = 0;
};

double log2_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

}  // namespace

bool parse_log_skeleton(const Word& x, LogSkeleton& out) {
  out = {};
  RunCursor cur(x);
  const BigInt first = cur.take_zeros();
  if (first != 1) return false;
  out.blocks.push_back(first);
  while (!cur.done()) {
    if (cur.peek() != '1') return false;
    cur.take_one();
    if (cur.done()) return false;
    out.bits.push_back(cur.peek() == '1' ? 1 : 0);
    cur.take_one();
    const BigInt zeros = cur.take_zeros();
    if (zeros == 0) return false;
    out.blocks.push_back(zeros);
  }
  return !out.bits.empty();
}

RunStats ptm_log_recognizer(const Word& x, LogInner inner, const SubsetOracle& oracle,
                            const RecognizerParams& params, RandomSource& rng) {
  RunStats stats;
  stats.discipline = HeadDiscipline::TwoWay;
  stats.steps = x.length() + 1;
  stats.passes = 1;
  stats.rounds = 0;
  LogSkeleton sk;
  if (!parse_log_skeleton(x, sk)) {
    stats.decision = Decision::Reject;
    return stats;
  }
  double log2_skipped = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < sk.blocks.size(); ++i) {
    const BigInt twice = 2 * sk.blocks[i];
    const FreivaldsResult r = freivalds_compare(twice, sk.blocks[i + 1], params.freivalds, rng);
    stats.rounds += r.rounds;
    // each simulated round walks block i twice and block i+1 once, then back
    stats.steps += BigInt(r.rounds) * 2 * (twice + sk.blocks[i + 1]);
    if (r.skipped) log2_skipped = log2_add(log2_skipped, r.log2_expected_rounds);
    if (r.verdict == Comparison::Inconclusive) {
      stats.decision = Decision::Inconclusive;
      return stats;
    }
    if (r.verdict == Comparison::Unequal) {
      stats.decision = Decision::Reject;
      if (std::isfinite(log2_skipped)) stats.log2_skipped_rounds = log2_skipped;
      return stats;
    }
  }
  if (std::isfinite(log2_skipped)) stats.log2_skipped_rounds = log2_skipped;

  RunStats in;
  if (inner == LogInner::DimaI) {
    std::string w;
    for (int b : sk.bits) w.push_back(b ? '1' : '0');
    in = pca2_dima_I(Word::from_string(w), oracle, params, rng);
  } else {
    if (std::any_of(sk.bits.begin(), sk.bits.end(), [](int b) { return b != 0; })) {
      stats.decision = Decision::Reject;
      return stats;
    }
    in = ptm_am75p_I(BigInt(sk.bits.size()), oracle, params, rng);
  }
  stats.steps += in.steps;
  stats.space_work = in.space_work;
  stats.space_counter = in.space_counter;
  stats.passes += in.passes;
  stats.decision = in.decision;
  return stats;
}

}  // namespace bqsim::classical
