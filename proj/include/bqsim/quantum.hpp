#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::quantum {

/// Rotation angle stored as angle / 2pi, reduced into (-1/2, 1/2].
class QubitAngle {
 public:
  QubitAngle() = default;
  explicit QubitAngle(const Rational& fraction);

  const Rational& fraction() const { return fraction_; }
  QubitAngle operator+(const QubitAngle& other) const { return QubitAngle(fraction_ + other.fraction_); }
  QubitAngle times(const BigInt& k) const { return QubitAngle(fraction_ * Rational(k)); }

  /// Probability of |q1> (cos^2) and |q2> (sin^2) after rotating |q1> by this angle.
  double cos_sq() const;
  double sin_sq() const;

 private:
  Rational fraction_ = 0;
};

/// Qubit of Procedure ADH after `rotations` rotations by theta_I and one by pi/4.
struct AdhQubit {
  QubitAngle angle;
  double p_in = 0.0;   // |q1>
  double p_out = 0.0;  // |q2>
};

AdhQubit adh_after_rotations(const SubsetOracle& oracle, const BigInt& rotations);

struct AdhResult {
  unsigned j = 0;
  int bit = 0;           // x_j
  AdhQubit qubit;
  Rational residual;     // signed distance (in turns) from the ideal angle 0 or 1/4
  double p_correct = 0.0;
  bool certified = false;  // |residual| <= 9/400, which forces p_correct > 0.98
};

/// ADH for digit j: 8^j rotations then pi/4. Requires j + 1 <= oracle size so
/// that the unknown tail cannot move the residual past 1/56.
AdhResult adh_accept_probability(const SubsetOracle& oracle, unsigned j);

/// Iterates 8^j explicit 2x2 rotations in 50-digit arithmetic and returns
/// |p_out(iterated) - p_out(reduced fraction)|. j <= 3.
double adh_rotation_crosscheck(const SubsetOracle& oracle, unsigned j);

/// Structural check against a b a^7 b a^56 b ... a^(7*8^n) b.
bool power_eq_member(const Word& w);

using Vec3 = std::array<BigInt, 3>;

/// Unnormalized state l^t * v at the start of an a-block (and before the end-marker).
struct BoundaryRecord {
  std::size_t block = 0;  // 1-based block index; k+1 for the end-marker
  std::uint64_t t = 0;
  Vec3 v;
};

struct RoundOutcome {
  Rational accept = 0;
  Rational reject = 0;
  bool deterministic = false;
  BigInt steps = 0;
  std::vector<BoundaryRecord> trace;
  Rational restart() const { return Rational(1) - accept - reject; }
};

/// Exact single round of the restarting realtime QCFA for POWER-EQ with global
/// coefficient l. Squared-norm lost by each l*A step goes to restart; a b-step
/// rejects with the squared q3 amplitude. With deterministic_base_case the
/// input aba^7b is accepted without the quantum phase.
RoundOutcome rtqcfa_round(const Word& w, const Rational& l = Rational(1, 64), bool deterministic_base_case = true);

struct OverallOutcome {
  Rational accept_probability = 0;
  Rational expected_rounds = 0;
};

OverallOutcome rtqcfa_overall(const RoundOutcome& round);
OverallOutcome rtqcfa_overall(const Word& w, const Rational& l = Rational(1, 64));

/// Closed form A = l^(2 t_k + 2) for the member with n+1 blocks of a's, n >= 1.
Rational rtqcfa_member_accept(unsigned n, const Rational& l);
std::uint64_t rtqcfa_t(unsigned k);

/// One restarting run sampled from the exact round distribution: the decision
/// and log2 of the number of rounds it took.
struct RoundSample {
  Decision decision = Decision::Reject;
  double log2_rounds = 0.0;
};
RoundSample sample_rounds(const RoundOutcome& round, RandomSource& rng);

/// POWER-EQ(I): the POWER-EQ machine tensored with the ADH qubit, which is
/// rotated once per a. Overall accept = A/(A+R) * p_out.
struct PowerEqIOutcome {
  RoundOutcome base;
  AdhQubit adh;
  double accept_probability = 0.0;
};
PowerEqIOutcome power_eq_I(const Word& w, const SubsetOracle& oracle, const Rational& l = Rational(1, 64));

/// UPOWER8(I) = { a^(8^n) : n-1 in I }. The power-of-8 test is deterministic;
/// ADH at j = n-1 decides. The middle-space claim is not reproduced.
struct Upower8Outcome {
  bool screened = false;  // length is 8^n with n >= 2
  unsigned n = 0;
  double accept_probability = 0.0;
  AdhResult adh;
};
Upower8Outcome qcca_upower8_I(const BigInt& length, const SubsetOracle& oracle);

/// Samples the UPOWER8(I) decision.
Decision sample_upower8(const Upower8Outcome& outcome, RandomSource& rng);

}  // namespace bqsim::quantum
