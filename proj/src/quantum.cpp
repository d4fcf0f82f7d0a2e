#include "bqsim/quantum.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

#include "bqsim/core/errors.hpp"

namespace bqsim::quantum {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

HighFloat to_high(const Rational& r) {
  return HighFloat(r.get_num().get_str()) / HighFloat(r.get_den().get_str());
}

HighFloat two_pi() { return boost::math::constants::two_pi<HighFloat>(); }

}  // namespace

QubitAngle::QubitAngle(const Rational& fraction) {
  // floor(fraction + 1/2) turns removed gives a value in [-1/2, 1/2)
  Rational shifted = fraction + Rational(1, 2);
  BigInt whole;
  mpz_fdiv_q(whole.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  fraction_ = fraction - Rational(whole);
  if (fraction_ == Rational(-1, 2)) fraction_ = Rational(1, 2);
}

double QubitAngle::cos_sq() const {
  const HighFloat c = cos(two_pi() * to_high(fraction_));
  return static_cast<double>(c * c);
}

double QubitAngle::sin_sq() const {
  const HighFloat s = sin(two_pi() * to_high(fraction_));
  return static_cast<double>(s * s);
}

AdhQubit adh_after_rotations(const SubsetOracle& oracle, const BigInt& rotations) {
  AdhQubit q;
  q.angle = QubitAngle(oracle.rotation_fraction()).times(rotations) + QubitAngle(Rational(1, 8));
  q.p_in = q.angle.cos_sq();
  q.p_out = q.angle.sin_sq();
  return q;
}

AdhResult adh_accept_probability(const SubsetOracle& oracle, unsigned j) {
  if (j < 1) throw std::domain_error("ADH digit index must be >= 1");
  if (static_cast<std::size_t>(j) + 1 > oracle.size()) {
    throw OutOfPrefixError("ADH at j = " + std::to_string(j) + " needs a prefix of length >= j + 1");
  }
  AdhResult r;
  r.j = j;
  r.bit = oracle.query(static_cast<std::int64_t>(j));
  r.qubit = adh_after_rotations(oracle, ipow(8, j));
  r.residual = r.qubit.angle.fraction() - (r.bit == 1 ? Rational(1, 4) : Rational(0));
  r.p_correct = r.bit == 1 ? r.qubit.p_out : r.qubit.p_in;
  r.certified = abs(r.residual) <= Rational(9, 400);
  return r;
}

double adh_rotation_crosscheck(const SubsetOracle& oracle, unsigned j) {
  if (j > 3) throw std::domain_error("rotation cross-check is limited to j <= 3");
  const HighFloat theta = two_pi() * to_high(oracle.rotation_fraction());
  const HighFloat c = cos(theta);
  const HighFloat s = sin(theta);
  HighFloat x = 1;
  HighFloat y = 0;
  const std::uint64_t count = std::uint64_t{1} << (3 * j);
  for (std::uint64_t i = 0; i < count; ++i) {
    const HighFloat nx = c * x - s * y;
    y = s * x + c * y;
    x = nx;
  }
  const HighFloat q = two_pi() / 8;
  const HighFloat out = sin(q) * x + cos(q) * y;
  const double iterated = static_cast<double>(out * out);
  return std::abs(iterated - adh_after_rotations(oracle, ipow(8, j)).p_out);
}

bool power_eq_member(const Word& w) {
  const auto& runs = w.runs();
  if (runs.size() < 4 || runs.size() % 2 != 0) return false;
  BigInt expected = 1;
  for (std::size_t i = 0; i < runs.size(); i += 2) {
    if (runs[i].symbol != 'a' || runs[i + 1].symbol != 'b' || runs[i + 1].count != 1) return false;
    if (runs[i].count != expected) return false;
    expected = i == 0 ? BigInt(7) : expected * 8;
  }
  return true;
}

namespace {

BigInt norm2(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

class Core3 {
 public:
  explicit Core3(const Rational& l) : l_(l), l2_(l * l) {
    if (l <= 0 || l >= 1) throw std::domain_error("l must lie in (0, 1)");
  }

  // v <- M v with coefficient l; the squared-norm drop is the restart leakage.
  void apply(const std::array<std::array<int, 3>, 3>& M) {
    Vec3 nv;
    for (int r = 0; r < 3; ++r) nv[r] = M[r][0] * v[0] + M[r][1] * v[1] + M[r][2] * v[2];
    if (l2_ * Rational(norm2(nv)) > Rational(norm2(v))) throw SimulatorFault("l * A is not a contraction on this state");
    v = nv;
    ++t;
    scale2 *= l2_;
  }

  Vec3 v{1, 0, 0};
  std::uint64_t t = 0;
  Rational scale2 = 1;  // l^(2t)

 private:
  Rational l_;
  Rational l2_;
};

constexpr std::array<std::array<int, 3>, 3> kInit{{{1, 0, 0}, {8, 1, 0}, {0, 0, 0}}};
constexpr std::array<std::array<int, 3>, 3> kCountA{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}};
constexpr std::array<std::array<int, 3>, 3> kCompareB{{{1, 0, 0}, {0, 0, 8}, {0, -1, 1}}};
constexpr std::array<std::array<int, 3>, 3> kEnd{{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}};

enum class Form { Base, Blocks, Invalid };

// a b a^7 b, optionally followed by (a^+ b)^+.
Form screen(const std::vector<Run>& runs) {
  if (runs.size() < 4 || runs.size() % 2 != 0) return Form::Invalid;
  if (runs[0].symbol != 'a' || runs[0].count != 1 || runs[2].count != 7) return Form::Invalid;
  for (std::size_t i = 0; i < runs.size(); i += 2) {
    if (runs[i].symbol != 'a' || runs[i + 1].symbol != 'b' || runs[i + 1].count != 1) return Form::Invalid;
  }
  return runs.size() == 4 ? Form::Base : Form::Blocks;
}

}  // namespace

RoundOutcome rtqcfa_round(const Word& w, const Rational& l, bool deterministic_base_case) {
  RoundOutcome out;
  Machine m(w, HeadDiscipline::RestartingRealtime);
  auto read_all = [&] {
    while (!m.input().at_right_end()) m.step(Move::Right);
    out.steps = m.steps();
  };
  const auto& runs = w.runs();
  const Form form = screen(runs);
  if (form == Form::Invalid || (form == Form::Base && deterministic_base_case)) {
    read_all();
    out.deterministic = true;
    (form == Form::Invalid ? out.reject : out.accept) = 1;
    return out;
  }
  Core3 core(l);
  // a, b: no quantum step; a^7: initialization; b: no quantum step
  for (int i = 0; i < 2; ++i) m.step(Move::Right);
  for (int i = 0; i < 7; ++i) {
    m.step(Move::Right);
    core.apply(kInit);
  }
  m.step(Move::Right);
  std::size_t block = 0;
  for (std::size_t r = 4; r < runs.size(); r += 2) {
    ++block;
    out.trace.push_back({block, core.t, core.v});
    for (BigInt c = 0; c < runs[r].count; ++c) {
      m.step(Move::Right);
      core.apply(kCountA);
    }
    m.step(Move::Right);
    core.apply(kCompareB);
    out.reject += core.scale2 * Rational(core.v[2] * core.v[2]);
    core.v[2] = 0;
  }
  out.trace.push_back({block + 1, core.t, core.v});
  m.step(Move::Right);
  core.apply(kEnd);
  out.accept = core.scale2 * Rational(core.v[0] * core.v[0]);
  out.steps = m.steps();
  return out;
}

OverallOutcome rtqcfa_overall(const RoundOutcome& round) {
  const Rational halt = round.accept + round.reject;
  if (halt <= 0) throw SimulatorFault("round halts with probability 0");
  return {round.accept / halt, Rational(1) / halt};
}

OverallOutcome rtqcfa_overall(const Word& w, const Rational& l) { return rtqcfa_overall(rtqcfa_round(w, l)); }

std::uint64_t rtqcfa_t(unsigned k) {
  std::uint64_t t = 7;
  std::uint64_t s = 7;
  for (unsigned i = 1; i <= k; ++i) {
    s *= 8;
    t += s + 1;
  }
  return t;
}

Rational rtqcfa_member_accept(unsigned n, const Rational& l) { return rpow(l, 2 * rtqcfa_t(n) + 2); }

RoundSample sample_rounds(const RoundOutcome& round, RandomSource& rng) {
  const OverallOutcome o = rtqcfa_overall(round);
  RoundSample s;
  s.decision = rng.bernoulli(BinaryExpansion(o.accept_probability)) ? Decision::Accept : Decision::Reject;
  // rounds ~ Geometric(h), h = A + R: log2 of ceil(ln U / ln(1 - h)).
  const Rational h = round.accept + round.reject;
  if (h == 1) return s;
  const double log2_h = log2_of(h);
  const double u = rng.open_unit();
  if (log2_h > -30.0) {
    const double hd = std::exp2(log2_h);
    s.log2_rounds = std::log2(std::ceil(std::log(u) / std::log1p(-hd)));
  } else {
    s.log2_rounds = std::log2(-std::log(u)) - log2_h;
  }
  return s;
}

PowerEqIOutcome power_eq_I(const Word& w, const SubsetOracle& oracle, const Rational& l) {
  PowerEqIOutcome o;
  o.base = rtqcfa_round(w, l);
  const BigInt as = w.count_of('a');
  const long j = exact_log(as, 8);
  if (j >= 1 && static_cast<std::size_t>(j) + 1 > oracle.size()) {
    throw OutOfPrefixError("ADH at j = " + std::to_string(j) + " needs a prefix of length >= j + 1");
  }
  o.adh = adh_after_rotations(oracle, as);
  o.accept_probability = to_double(rtqcfa_overall(o.base).accept_probability) * o.adh.p_out;
  return o;
}

Upower8Outcome qcca_upower8_I(const BigInt& length, const SubsetOracle& oracle) {
  Upower8Outcome o;
  const long n = exact_log(length, 8);
  if (n < 2) return o;
  o.screened = true;
  o.n = static_cast<unsigned>(n);
  o.adh = adh_accept_probability(oracle, o.n - 1);
  o.accept_probability = o.adh.qubit.p_out;
  return o;
}

Decision sample_upower8(const Upower8Outcome& outcome, RandomSource& rng) {
  if (!outcome.screened) return Decision::Reject;
  return rng.open_unit() < outcome.accept_probability ? Decision::Accept : Decision::Reject;
}

}  // namespace bqsim::quantum
