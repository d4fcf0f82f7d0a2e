// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/classical/am75.hpp"
#include "bqsim/classical/dima.hpp"
#include "bqsim/classical/log_transform.hpp"
#include "bqsim/classical/upower64.hpp"
#include "bqsim/coin.hpp"
#include "bqsim/core/errors.hpp"
#include "bqsim/harness/experiment.hpp"
#include "bqsim/harness/registry.hpp"
#include "bqsim/harness/stats.hpp"
#include "bqsim/oracles.hpp"
#include "bqsim/quantum.hpp"

using namespace bqsim;
using namespace bqsim::classical;
using harness::wilson_interval;
using oracles::LanguageId;

namespace {

// Pinned tolerances and sizes.
constexpr double kConfidence = 0.99;
const Rational kCoinErrorBound(1, 4);
const Rational kCoinErrorK2Slack = Rational(1, 4) + Rational(1, BigInt("100000000000000000000"));
constexpr std::uint64_t kAc2Campaigns = 100000;
constexpr double kAdhMin = 0.98;
constexpr std::uint64_t kAc4Range = 100000;
constexpr std::uint64_t kAc5Trials = 10000;
constexpr std::uint64_t kAc6Trials = 10000;
constexpr unsigned kAc6Length = 16;
constexpr std::size_t kAc6Mutants = 200;
constexpr double kBoundedMajority = 0.75;
constexpr std::uint64_t kAc7Seeds = 2000;
constexpr double kSweepC = 2.5;       // steps <= c |w|^1.5, calibrated max 1.98
constexpr double kSweepCPrime = 16.0; // steps > c' |w| for k >= 2; pca2 stays below 15.8
constexpr std::uint64_t kAc8Trials64 = 10000;
constexpr std::uint64_t kAc8Trials4096 = 1000;
constexpr std::size_t kAc9Mutants = 20;
constexpr unsigned kAc10MaxLen = 10;
constexpr std::uint64_t kAc10Decisive = 4000;
constexpr std::uint64_t kAc10EqualTrials = 400;
constexpr double kFreivaldsMin = 0.9;
constexpr std::uint64_t kAc11Trials = 300;
constexpr double kLogMin = 2.0 / 3.0;
constexpr std::size_t kAc12Strings = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = "failed: " + what;
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

BigInt lcm_upto(unsigned m) {
  BigInt l = 1;
  for (unsigned i = 2; i <= m; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
  return l;
}

Word power_eq_word(unsigned n) {
  std::string rle = "a b a^7 b";
  BigInt block = 7;
  for (unsigned i = 1; i <= n; ++i) {
    block *= 8;
    rle += " a^" + block.get_str() + " b";
  }
  return Word::parse_rle(rle);
}

std::vector<int> prefix_with(unsigned len, unsigned at, int bit) {
  std::vector<int> p(len, 1 - bit);
  p[at - 1] = bit;
  return p;
}

Outcome ac1() {
  Outcome o;
  Rational worst = 0;
  for (const auto& p : std::vector<std::vector<int>>{{0}, {1}, {0, 0}, {1, 1}}) {
    const Rational e = coin::exact_error_probability(SubsetOracle(p), 1);
    require(o, e <= kCoinErrorBound, "k=1 exact error > 1/4");
    worst = std::max(worst, e);
  }
  Rational worst2 = 0;
  for (const auto& p : std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    const Rational e = coin::exact_error_probability(SubsetOracle(p), 2);
    require(o, e <= kCoinErrorK2Slack, "k=2 exact error > 1/4 + 1e-20");
    worst2 = std::max(worst2, e);
  }
  if (o.pass) o.detail = "max error k=1 " + fmt(to_double(worst)) + ", k=2 " + fmt(to_double(worst2)) + " (exact)";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (int bit = 0; bit <= 1; ++bit) {
    const SubsetOracle oracle({bit});
    const double exact = 1.0 - to_double(coin::exact_error_probability(oracle, 1));
    std::uint64_t ok = 0;
    for (std::uint64_t t = 0; t < kAc2Campaigns; ++t) {
      RandomSource rng(derive_seed(2, bit, t));
      ok += coin::extract_bit(coin::toss_campaign(oracle, 1, rng)) == bit;
    }
    const auto ci = wilson_interval(ok, kAc2Campaigns, kConfidence);
    require(o, ci.low <= exact && exact <= ci.high, "x=" + std::to_string(bit) + " exact outside Wilson interval");
    o.detail += "x=" + std::to_string(bit) + " exact " + fmt(exact) + " in [" + fmt(ci.low) + "," + fmt(ci.high) + "] ";
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  double worst = 1.0;
  for (unsigned j = 1; j <= 5; ++j) {
    for (int bit = 0; bit <= 1; ++bit) {
      const auto r = quantum::adh_accept_probability(SubsetOracle(prefix_with(j + 1, j, bit)), j);
      require(o, r.bit == bit && r.p_correct > kAdhMin, "ADH j=" + std::to_string(j));
      worst = std::min(worst, r.p_correct);
    }
  }
  if (o.pass) o.detail = "min correct probability " + fmt(worst);
  return o;
}

Outcome ac4() {
  Outcome o;
  for (std::uint64_t n = 1; n <= kAc4Range && o.pass; ++n) {
    std::uint64_t scan = 1;
    while (n % scan == 0) ++scan;
    const FValue v = f_of_n(BigInt(n));
    require(o, v.f == scan, "f_of_n(" + std::to_string(n) + ")");
    const bool pow2 = (scan & (scan - 1)) == 0;
    require(o, am75_member(BigInt(n)) == pow2, "am75_member(" + std::to_string(n) + ")");
    const auto cells = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(v.f)))) + 4;
    require(o, v.work_cells <= cells, "work cells at n=" + std::to_string(n));
    if (n >= 3) require(o, static_cast<double>(v.f) < 2.0 * std::log2(static_cast<double>(n)), "F(n) < 2 log2 n");
  }
  if (o.pass) o.detail = "n <= " + std::to_string(kAc4Range) + " (F bound from n = 3)";
  return o;
}

Outcome ac5() {
  Outcome o;
  RecognizerParams params;
  const BigInt base = lcm_upto(63);
  for (const BigInt& n : std::vector<BigInt>{base, BigInt(3 * base)}) {
    for (int bit = 0; bit <= 1; ++bit) {
      const SubsetOracle oracle({bit});
      std::uint64_t acc = 0;
      for (std::uint64_t t = 0; t < kAc5Trials; ++t) {
        RandomSource rng(derive_seed(5, bit, t));
        const RunStats s = ptm_am75p_I(n, oracle, params, rng);
        acc += s.accepted();
        require(o, s.discipline == HeadDiscipline::Sweeping, "sweeping audit");
        require(o, static_cast<double>(s.space_work) <= am75p_space_budget(n), "space budget");
      }
      const auto ci = wilson_interval(acc, kAc5Trials, kConfidence);
      if (bit == 1) require(o, ci.low >= 0.75, "accept rate for x_1 = 1");
      else require(o, ci.high <= 0.25, "accept rate for x_1 = 0");
      o.detail += "x=" + std::to_string(bit) + ":" + fmt(static_cast<double>(acc) / kAc5Trials) + " ";
    }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  std::uint64_t checked = 0;
  auto check_det = [&](const Word& w) {
    const RunStats r = dca2_dima(w);
    ++checked;
    require(o, r.accepted() == oracles::oracle_membership(LanguageId::DIMA, w), "dca2 vs oracle on " + w.to_rle());
    require(o, r.space_counter <= w.length(), "counter <= |w|");
    if (w.length() == 0) require(o, r.steps <= 1, "steps on empty input");
    else require(o, r.steps <= 8 * w.length(), "steps <= 8|w| on " + w.to_rle());
  };
  for (unsigned len = 0; len <= kAc6Length; ++len) {
    for (std::uint32_t x = 0; x < (1u << len); ++x) {
      std::string s(len, '0');
      for (unsigned i = 0; i < len; ++i)
        if ((x >> i) & 1u) s[i] = '1';
      check_det(Word::from_string(s));
    }
  }
  std::size_t mutants = 0;
  for (unsigned k = 1; k <= 3; ++k) {
    const Word w = dima_word(k);
    check_det(w);
    const auto ms = oracles::mutate_near_members(LanguageId::DIMA, w, kAc6Mutants);
    mutants += ms.size();
    for (const Word& m : ms) check_det(m);
  }
  require(o, mutants >= kAc6Mutants, "mutant count");
  RecognizerParams params;
  for (unsigned k = 1; k <= 2; ++k) {
    for (int bit = 0; bit <= 1; ++bit) {
      const SubsetOracle oracle(std::vector<int>(k, bit));
      std::uint64_t ok = 0;
      for (std::uint64_t t = 0; t < kAc6Trials; ++t) {
        RandomSource rng(derive_seed(6, k * 2 + bit, t));
        ok += pca2_dima_I(dima_word(k), oracle, params, rng).accepted() == (bit == 1);
      }
      const auto ci = wilson_interval(ok, kAc6Trials, kConfidence);
      require(o, ci.low >= kBoundedMajority, "pca2 k=" + std::to_string(k) + " bit=" + std::to_string(bit));
      o.detail += "k" + std::to_string(k) + "x" + std::to_string(bit) + ":" + fmt(static_cast<double>(ok) / kAc6Trials) + " ";
    }
  }
  o.detail = std::to_string(checked) + " deterministic runs, " + std::to_string(mutants) + " mutants; " + o.detail;
  return o;
}

Outcome ac7() {
  Outcome o;
  RecognizerParams params;
  double worst15 = 0.0;
  for (unsigned k = 1; k <= 2; ++k) {
    const Word w = dima_word(k);
    const double n = w.length().get_d();
    for (int bit = 0; bit <= 1; ++bit) {
      const SubsetOracle oracle(std::vector<int>(k, bit));
      for (std::uint64_t t = 0; t < kAc7Seeds; ++t) {
        const std::uint64_t seed = derive_seed(7, k * 2 + bit, t);
        RandomSource a(seed), b(seed);
        const RunStats sw = pca_sweeping_dima_I(w, oracle, params, a);
        const RunStats two = pca2_dima_I(w, oracle, params, b);
        require(o, sw.decision == two.decision, "sweeping vs pca2 decision");
        require(o, sw.discipline == HeadDiscipline::Sweeping && sw.passes == sw.direction_changes + 1,
                "reversals only at end-markers");
        const double ratio = sw.steps.get_d() / std::pow(n, 1.5);
        worst15 = std::max(worst15, ratio);
        require(o, ratio <= kSweepC, "steps <= c|w|^1.5");
      }
    }
  }
  double min_linear = 1e300;
  for (unsigned k = 2; k <= 3; ++k) {
    const Word w = dima_word(k);
    for (int bit = 0; bit <= 1; ++bit) {
      RandomSource rng(derive_seed(7, 100 + k, bit));
      const RunStats sw = pca_sweeping_dima_I(w, SubsetOracle(std::vector<int>(k, bit)), params, rng);
      const double lin = sw.steps.get_d() / w.length().get_d();
      min_linear = std::min(min_linear, lin);
      require(o, lin > kSweepCPrime, "steps > c'|w| at k=" + std::to_string(k));
    }
  }
  if (o.pass)
    o.detail = "max steps/|w|^1.5 " + fmt(worst15) + " (c=" + fmt(kSweepC) + "), min steps/|w| at k>=2 " +
               fmt(min_linear) + " (c'=" + fmt(kSweepCPrime) + ")";
  return o;
}

Outcome ac8() {
  Outcome o;
  RecognizerParams params;
  for (const auto& [len, trials] : std::vector<std::pair<unsigned, std::uint64_t>>{{64, kAc8Trials64}, {4096, kAc8Trials4096}}) {
    const unsigned m = len == 64 ? 1 : 2;
    const Word w = Word::unary('0', len);
    for (int bit = 0; bit <= 1; ++bit) {
      const SubsetOracle oracle(prefix_with(m, m, bit));
      std::uint64_t ok = 0;
      for (std::uint64_t t = 0; t < trials; ++t) {
        RandomSource rng(derive_seed(8, len + bit, t));
        const RunStats s = ptm1_upower64_I(w, oracle, params, rng);
        ok += s.accepted() == (bit == 1);
        require(o, s.left_moves == 0, "left moves");
        require(o, s.steps.get_d() <= upower64_step_budget(BigInt(len)), "steps <= 8 n log2 n");
      }
      const auto ci = wilson_interval(ok, trials, kConfidence);
      require(o, ci.low >= kBoundedMajority, "n=" + std::to_string(len) + " bit=" + std::to_string(bit));
      o.detail += "n" + std::to_string(len) + "x" + std::to_string(bit) + ":" + fmt(static_cast<double>(ok) / trials) + " ";
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const Rational l(1, 64);
  for (unsigned n = 0; n <= 2; ++n) {
    const Word w = power_eq_word(n);
    const auto r = quantum::rtqcfa_round(w, l, n != 0);
    require(o, r.reject == 0, "R = 0");
    require(o, r.accept == quantum::rtqcfa_member_accept(n, l), "A closed form");
    require(o, quantum::rtqcfa_overall(r).accept_probability == 1, "overall accept");
    require(o, quantum::rtqcfa_overall(w, l).accept_probability == 1, "overall accept (default base case)");
    BigInt s = 7;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      require(o, r.trace[i].t == quantum::rtqcfa_t(static_cast<unsigned>(i)) &&
                     r.trace[i].v == quantum::Vec3{BigInt(1), 8 * s, BigInt(0)},
              "boundary vector");
      s *= 8;
    }
  }
  const Rational bound = Rational(1) / (1 + l * l);
  std::size_t mutants = 0;
  Rational worst = 1;
  for (unsigned n = 1; n <= 2; ++n) {
    for (const Word& m : oracles::mutate_near_members(LanguageId::POWER_EQ, power_eq_word(n), kAc9Mutants)) {
      ++mutants;
      const Rational rej = Rational(1) - quantum::rtqcfa_overall(m, l).accept_probability;
      worst = std::min(worst, rej);
      require(o, rej >= bound, "mutant reject >= 4096/4097");
    }
  }
  require(o, mutants >= kAc9Mutants, "mutant count");
  if (o.pass) o.detail = std::to_string(mutants) + " mutants, min reject " + to_string(worst);
  return o;
}

Outcome ac10() {
  Outcome o;
  const unsigned pairs = kAc10MaxLen * kAc10MaxLen;
  // Bonferroni: the family of pairs holds at the pinned confidence.
  const double per_pair = 1.0 - (1.0 - kConfidence) / pairs;
  FreivaldsParams lit;
  lit.mode = RoundMode::Literal;
  lit.decisive_target = kAc10Decisive;
  lit.threshold = 1.0;
  lit.max_rounds = 1ULL << 40;
  for (unsigned a = 1; a <= kAc10MaxLen; ++a) {
    for (unsigned b = 1; b <= kAc10MaxLen; ++b) {
      RandomSource rng(derive_seed(10, a, b));
      const auto r = freivalds_compare(BigInt(a), BigInt(b), lit, rng);
      const auto ci = wilson_interval(r.wins_a, r.wins_a + r.wins_b, per_pair);
      const double q = to_double(decisive_bias(a, b));
      require(o, ci.low <= q && q <= ci.high, "decisive bias at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  FreivaldsParams def;
  double min_eq = 1.0, min_neq = 1.0;
  for (unsigned a = 1; a <= kAc10MaxLen; ++a) {
    const double eq = to_double(freivalds_equal_probability(a, a, def));
    min_eq = std::min(min_eq, eq);
    require(o, eq >= kFreivaldsMin, "equal blocks accepted");
    if (2 * a <= kAc10MaxLen) {
      for (const auto& [x, y] : {std::pair{a, 2 * a}, std::pair{2 * a, a}}) {
        const double neq = 1.0 - to_double(freivalds_equal_probability(x, y, def));
        min_neq = std::min(min_neq, neq);
        require(o, neq >= kFreivaldsMin, "2x-unequal blocks rejected");
      }
    }
  }
  // Monte Carlo at defaults against the exact equal-verdict probability.
  for (const auto& [a, b] : {std::pair{3u, 3u}, std::pair{2u, 4u}}) {
    std::uint64_t eq = 0;
    for (std::uint64_t t = 0; t < kAc10EqualTrials; ++t) {
      RandomSource rng(derive_seed(10, 1000 + a * 16 + b, t));
      eq += freivalds_compare(BigInt(a), BigInt(b), def, rng).verdict == Comparison::Equal;
    }
    const auto ci = wilson_interval(eq, kAc10EqualTrials, kConfidence);
    const double p = to_double(freivalds_equal_probability(a, b, def));
    require(o, ci.low <= p && p <= ci.high, "default-mode verdict rate vs exact");
  }
  if (o.pass)
    o.detail = "100 pairs (Bonferroni), min P(equal|equal) " + fmt(min_eq) + ", min P(unequal|2x) " + fmt(min_neq);
  return o;
}

Outcome ac11() {
  Outcome o;
  RecognizerParams params;
  const Word inner = dima_word(1);
  const Word x = log_transform(inner);
  for (int bit = 0; bit <= 1; ++bit) {
    const SubsetOracle oracle({bit});
    std::uint64_t ok = 0;
    for (std::uint64_t t = 0; t < kAc11Trials; ++t) {
      RandomSource rng(derive_seed(11, bit, t));
      const RunStats s = ptm_log_recognizer(x, LogInner::DimaI, oracle, params, rng);
      ok += s.accepted() == (bit == 1);
      require(o, s.space_counter <= inner.length(), "counter confined to the inner machine");
    }
    const auto ci = wilson_interval(ok, kAc11Trials, kConfidence);
    require(o, ci.low >= kLogMin, "correct rate >= 2/3 for x=" + std::to_string(bit));
    o.detail += "x=" + std::to_string(bit) + ":" + fmt(static_cast<double>(ok) / kAc11Trials) + " ";
  }
  o.detail += "|x| = " + x.length().get_str();
  return o;
}

bool same_stats(const RunStats& a, const RunStats& b) {
  return a.decision == b.decision && a.steps == b.steps && a.passes == b.passes && a.space_work == b.space_work &&
         a.space_counter == b.space_counter && a.left_moves == b.left_moves &&
         a.direction_changes == b.direction_changes;
}

Outcome ac12() {
  Outcome o;
  // Determinism of every registered recognizer's report.
  for (const auto& rec : harness::recognizers()) {
    harness::ExperimentConfig cfg;
    cfg.language = std::string(oracles::to_string(rec.language));
    cfg.recognizer = rec.name;
    cfg.trials = 20;
    cfg.seed = 12;
    if (oracles::requires_oracle(rec.language)) cfg.prefix = "101";
    switch (rec.language) {
      case LanguageId::AM75:
      case LanguageId::AM75P:
      case LanguageId::AM75P_I:
        cfg.inputs = {"#6", "#7", "#" + lcm_upto(63).get_str()};
        break;
      case LanguageId::UPOWER64:
      case LanguageId::UPOWER64_I:
        cfg.inputs = {"#64", "#65"};
        break;
      case LanguageId::UPOWER8_I:
        cfg.inputs = {"#64", "#512"};
        break;
      case LanguageId::POWER_EQ:
      case LanguageId::POWER_EQ_I:
        cfg.inputs = {"a b a^7 b a^56 b", "a b a^7 b a^55 b"};
        break;
      case LanguageId::LOG_DIMA_I:
        cfg.inputs = {log_transform(dima_word(1)).to_rle()};
        cfg.trials = 3;
        break;
      default:
        cfg.inputs = {dima_word(1).to_rle(), "0 1 0"};
    }
    const std::string a = harness::emit_report(harness::run_experiment(cfg), harness::ReportFormat::Json);
    const std::string b = harness::emit_report(harness::run_experiment(cfg), harness::ReportFormat::Json);
    require(o, a == b, "report determinism for " + rec.name);
  }
  // RLE vs explicit tape on random strings.
  std::mt19937_64 gen(12);
  RecognizerParams rle, expl;
  rle.representation = TapeRepresentation::RunLength;
  expl.representation = TapeRepresentation::Explicit;
  const SubsetOracle oracle({1});
  for (std::size_t i = 0; i < kAc12Strings; ++i) {
    const unsigned len = static_cast<unsigned>(gen() % 65);
    std::string s(len, '0');
    // Long runs as well as noise.
    const bool blocky = i % 2 == 0;
    char cur = '0';
    for (unsigned j = 0; j < len; ++j) {
      if (blocky) {
        if (gen() % 6 == 0) cur = cur == '0' ? '1' : '0';
        s[j] = cur;
      } else {
        s[j] = (gen() & 1u) ? '1' : '0';
      }
    }
    const Word w = Word::from_string(s);
    require(o, same_stats(dca2_dima(w, rle), dca2_dima(w, expl)), "dca2 RLE/explicit on " + s);
    const std::uint64_t seed = gen();
    {
      RandomSource a(seed), b(seed);
      require(o, same_stats(pca2_dima_I(w, oracle, rle, a), pca2_dima_I(w, oracle, expl, b)), "pca2 RLE/explicit");
    }
    {
      RandomSource a(seed), b(seed);
      require(o, same_stats(pca_sweeping_dima_I(w, oracle, rle, a), pca_sweeping_dima_I(w, oracle, expl, b)),
              "sweeping RLE/explicit");
    }
    const Word u = Word::unary('0', len);
    {
      RandomSource a(seed), b(seed);
      require(o, same_stats(ptm1_upower64_I(u, oracle, rle, a), ptm1_upower64_I(u, oracle, expl, b)),
              "upower64 RLE/explicit");
    }
  }
  // Deterministic machines against the oracles.
  std::uint64_t disagreements = 0;
  for (const auto& [lang, rec, bound] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"DIMA", "dca2_dima", "3"}, {"AM75", "am75_member", "2000"}, {"AM75P", "am75p_member", "2000"},
           {"UPOWER64", "upower64_member", "5000"}}) {
    harness::ExperimentConfig cfg;
    cfg.language = lang;
    cfg.recognizer = rec;
    cfg.trials = 1;
    cfg.enumerate_bound = bound;
    cfg.mutants_per_member = 20;
    cfg.inputs = {"#1"};
    if (lang == "DIMA") cfg.inputs = {"0", "0 1 00"};
    const auto rep = harness::run_experiment(cfg);
    disagreements += rep.disagreements;
  }
  require(o, disagreements == 0, "deterministic disagreements");
  if (o.pass) o.detail = std::to_string(harness::recognizers().size()) + " recognizers deterministic, " +
                         std::to_string(kAc12Strings) + " strings RLE == explicit, 0 disagreements";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %s %s [%.1fs]\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
