#include "bqsim/core/run.hpp"

namespace bqsim {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Accept: return "accept";
    case Decision::Reject: return "reject";
    case Decision::Restart: return "restart";
    case Decision::CapExceeded: return "cap-exceeded";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "?";
}

Machine::Machine(const Word& input, HeadDiscipline discipline, std::uint64_t max_steps, TapeRepresentation rep)
    : input_(input, discipline, rep), max_steps_(max_steps) {}

void Machine::sweep(Move d) { add_steps(input_.sweep(d)); }

void Machine::add_steps(const BigInt& n) {
  bulk_steps_ += n;
  if (max_steps_ != 0 && bulk_steps_ + BigInt(static_cast<unsigned long>(fast_steps_)) >
                             BigInt(static_cast<unsigned long>(max_steps_))) {
    throw CapExceededSignal{};
  }
}

BigInt Machine::steps() const { return bulk_steps_ + from_u64(fast_steps_); }

RunStats Machine::finish(Decision d) const {
  RunStats s;
  s.steps = steps();
  s.passes = input_.audit().passes;
  s.space_work = work_.space();
  s.space_counter = from_u64(counter_.max_value());
  s.decision = d;
  s.discipline = input_.discipline();
  s.left_moves = input_.audit().left_moves;
  s.direction_changes = input_.audit().direction_changes;
  s.rounds = input_.audit().restarts + 1;
  return s;
}

}  // namespace bqsim
