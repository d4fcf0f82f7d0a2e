#include <cmath>

#include "doctest.h"

#include "bqsim/core/errors.hpp"
#include "bqsim/oracles.hpp"
#include "bqsim/quantum.hpp"

using namespace bqsim;
using namespace bqsim::quantum;

namespace {

Word power_eq_word(unsigned n) {
  std::string rle = "a b a^7 b";
  BigInt block = 7;
  for (unsigned i = 1; i <= n; ++i) {
    block *= 8;
    rle += " a^" + block.get_str() + " b";
  }
  return Word::parse_rle(rle);
}

// Normalized amplitudes, l applied on every quantum step.
struct Naive {
  Rational accept = 0, reject = 0;
};

Naive naive_round(const Word& w, const Rational& l) {
  const auto& runs = w.runs();
  Rational v1 = 1, v2 = 0, v3 = 0;
  Naive out;
  for (int i = 0; i < 7; ++i) {
    v2 = l * (8 * v1 + v2);
    v1 = l * v1;
    v3 = 0;
  }
  for (std::size_t r = 4; r < runs.size(); r += 2) {
    for (BigInt c = 0; c < runs[r].count; ++c) {
      v3 = l * (v1 + v3);
      v1 = l * v1;
      v2 = l * v2;
    }
    const Rational n2 = l * 8 * v3;
    const Rational n3 = l * (v3 - v2);
    v1 = l * v1;
    v2 = n2;
    out.reject += n3 * n3;
    v3 = 0;
  }
  out.accept = l * l * v1 * v1;
  return out;
}

}  // namespace

TEST_CASE("qubit angle reduction") {
  CHECK(QubitAngle(Rational(3, 4)).fraction() == Rational(-1, 4));
  CHECK(QubitAngle(Rational(1, 2)).fraction() == Rational(1, 2));
  CHECK(QubitAngle(Rational(-1, 2)).fraction() == Rational(1, 2));
  CHECK(std::abs(QubitAngle(Rational(1, 8)).cos_sq() - 0.5) < 1e-15);
  CHECK(std::abs(QubitAngle(Rational(1, 4)).sin_sq() - 1.0) < 1e-15);
}

TEST_CASE("ADH reads digit j with probability above 0.98") {
  for (unsigned j = 1; j <= 5; ++j) {
    for (int bit = 0; bit <= 1; ++bit) {
      std::vector<int> prefix(j + 1, 1 - bit);
      prefix[j - 1] = bit;
      const SubsetOracle o(prefix);
      const AdhResult r = adh_accept_probability(o, j);
      CHECK(r.bit == bit);
      CHECK(r.certified);
      CHECK(r.p_correct > 0.98);
      CHECK(abs(r.residual) <= Rational(9, 400));
      CHECK((bit == 1 ? r.qubit.p_out : r.qubit.p_in) == doctest::Approx(r.p_correct));
    }
  }
  CHECK_THROWS_AS(adh_accept_probability(SubsetOracle({1}), 1), OutOfPrefixError);
}

TEST_CASE("ADH residual is at most 1/56 for every prefix of length 4") {
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> p;
    for (int i = 0; i < 4; ++i) p.push_back((mask >> i) & 1);
    const SubsetOracle o(p);
    for (unsigned j = 1; j <= 3; ++j) {
      const AdhResult r = adh_accept_probability(o, j);
      REQUIRE(abs(r.residual) <= Rational(1, 56));
      REQUIRE(r.p_correct > 0.98);
      REQUIRE(adh_rotation_crosscheck(o, j) < 1e-9);
    }
  }
}

TEST_CASE("POWER-EQ structure") {
  CHECK(power_eq_member(power_eq_word(0)));
  CHECK(power_eq_member(power_eq_word(2)));
  CHECK_FALSE(power_eq_member(Word::parse_rle("a b a^7 b a^55 b")));
  CHECK_FALSE(power_eq_member(Word::parse_rle("a b a^7")));
  CHECK(rtqcfa_t(1) == 64);
  CHECK(rtqcfa_t(2) == 513);
}

TEST_CASE("rtQCFA members: closed form, R = 0 and boundary vectors") {
  const Rational l(1, 64);
  for (unsigned n = 1; n <= 2; ++n) {
    const RoundOutcome r = rtqcfa_round(power_eq_word(n), l);
    CHECK(r.reject == 0);
    CHECK(r.accept == rtqcfa_member_accept(n, l));
    const Naive nv = naive_round(power_eq_word(n), l);
    CHECK(nv.accept == r.accept);
    CHECK(nv.reject == r.reject);
    CHECK(rtqcfa_overall(r).accept_probability == 1);
    BigInt s = 7;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      CHECK(r.trace[i].t == rtqcfa_t(static_cast<unsigned>(i)));
      CHECK(r.trace[i].v == Vec3{BigInt(1), BigInt(8 * s), BigInt(0)});
      s *= 8;
    }
  }
  const RoundOutcome base = rtqcfa_round(power_eq_word(0), l);
  CHECK(base.deterministic);
  CHECK(base.accept == 1);
  const RoundOutcome base_q = rtqcfa_round(power_eq_word(0), l, false);
  CHECK_FALSE(base_q.deterministic);
  CHECK(base_q.accept == rtqcfa_member_accept(0, l));
  CHECK(base_q.reject == 0);
}

TEST_CASE("rtQCFA non-members are rejected with probability >= 1/(1+l^2)") {
  const Rational l(1, 64);
  const Rational bound = Rational(1) / (1 + l * l);
  CHECK(bound == Rational(4096, 4097));
  const Word off = Word::parse_rle("a b a^7 b a^55 b");
  const RoundOutcome r = rtqcfa_round(off, l);
  const Naive nv = naive_round(off, l);
  CHECK(r.accept == nv.accept);
  CHECK(r.reject == nv.reject);
  CHECK(Rational(1) - rtqcfa_overall(r).accept_probability >= bound);

  const auto mutants = oracles::mutate_near_members(oracles::LanguageId::POWER_EQ, power_eq_word(1), 30);
  CHECK(mutants.size() >= 20);
  for (const Word& m : mutants) {
    REQUIRE_FALSE(power_eq_member(m));
    const auto o = rtqcfa_overall(m, l);
    REQUIRE(Rational(1) - o.accept_probability >= bound);
  }
}

TEST_CASE("round sampling") {
  RandomSource rng(5);
  const RoundOutcome r = rtqcfa_round(power_eq_word(1), Rational(1, 64));
  const RoundSample s = sample_rounds(r, rng);
  CHECK(s.decision == Decision::Accept);
  // expected rounds 1/A = 64^130 = 2^780
  CHECK(s.log2_rounds > 760.0);
  CHECK(s.log2_rounds < 800.0);
}

TEST_CASE("POWER-EQ(I) and UPOWER8(I)") {
  const Word w = power_eq_word(1);  // |w|_a = 64 = 8^2: reads x_2
  const auto hi = power_eq_I(w, SubsetOracle({0, 1, 0}));
  const auto lo = power_eq_I(w, SubsetOracle({1, 0, 1}));
  CHECK(hi.accept_probability > 0.98);
  CHECK(lo.accept_probability < 0.02);
  CHECK_THROWS_AS(power_eq_I(w, SubsetOracle({1, 1})), OutOfPrefixError);

  CHECK_FALSE(qcca_upower8_I(BigInt(8), SubsetOracle({1})).screened);
  CHECK_FALSE(qcca_upower8_I(BigInt(65), SubsetOracle({1})).screened);
  const auto u = qcca_upower8_I(BigInt(512), SubsetOracle({0, 0, 1, 0}));
  CHECK(u.screened);
  CHECK(u.n == 3);
  CHECK(u.adh.j == 2);
  CHECK(u.accept_probability < 0.02);
  RandomSource rng(2);
  int acc = 0;
  const auto yes = qcca_upower8_I(BigInt(64), SubsetOracle({1, 0}));
  for (int t = 0; t < 1000; ++t) acc += sample_upower8(yes, rng) == Decision::Accept;
  CHECK(acc > 950);
}
