#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bqsim/bigint.hpp"
#include "bqsim/core/tape.hpp"

namespace bqsim {

enum class Decision { Accept, Reject, Restart, CapExceeded, Inconclusive };

std::string_view to_string(Decision d);

struct RunStats {
  BigInt steps = 0;
  std::uint64_t passes = 0;
  std::uint64_t space_work = 0;
  BigInt space_counter = 0;
  Decision decision = Decision::Reject;
  std::uint64_t rounds = 0;
  // head-discipline audit
  HeadDiscipline discipline = HeadDiscipline::TwoWay;
  std::uint64_t left_moves = 0;
  std::uint64_t direction_changes = 0;
  // log2 of expected rounds that were sampled through rather than simulated one by one
  double log2_skipped_rounds = 0.0;

  bool accepted() const { return decision == Decision::Accept; }
};

/// One run of a machine: input tape, work tape, counter and step accounting.
/// Every transition goes through step(); bulk logical moves (a sweep over a
/// unary block of astronomic length) through sweep().
class Machine {
 public:
  Machine(const Word& input, HeadDiscipline discipline, std::uint64_t max_steps = 0,
          TapeRepresentation rep = TapeRepresentation::Auto);

  InputTape& input() { return input_; }
  const InputTape& input() const { return input_; }
  WorkTape& work() { return work_; }
  const WorkTape& work() const { return work_; }
  Counter& counter() { return counter_; }
  const Counter& counter() const { return counter_; }

  char read() const { return input_.read(); }

  /// One transition; the input head moves by `m`.
  void step(Move m = Move::Stay) {
    input_.move(m);
    ++fast_steps_;
    if (max_steps_ != 0 && fast_steps_ > max_steps_) throw CapExceededSignal{};
  }

  /// One transition that also moves the work head.
  void work_step(Move work_move) {
    step(Move::Stay);
    work_.move(work_move);
  }

  /// Moves the input head to the end-marker in direction d, one transition per cell.
  void sweep(Move d);
  void add_steps(const BigInt& n);

  BigInt steps() const;
  RunStats finish(Decision d) const;

  struct CapExceededSignal {};

 private:
  InputTape input_;
  WorkTape work_;
  Counter counter_;
  std::uint64_t max_steps_;
  std::uint64_t fast_steps_ = 0;
  BigInt bulk_steps_ = 0;
};

}  // namespace bqsim
