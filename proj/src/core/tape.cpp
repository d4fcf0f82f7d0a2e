#include "bqsim/core/tape.hpp"

#include "bqsim/core/errors.hpp"

namespace bqsim {

std::string_view to_string(HeadDiscipline d) {
  switch (d) {
    case HeadDiscipline::TwoWay: return "two-way";
    case HeadDiscipline::Sweeping: return "sweeping";
    case HeadDiscipline::OneWay: return "one-way";
    case HeadDiscipline::Realtime: return "realtime";
    case HeadDiscipline::RestartingRealtime: return "restarting-realtime";
  }
  return "?";
}

namespace {
constexpr std::uint64_t kExplicitLimit = 1ULL << 24;
}

InputTape::InputTape(const Word& w, HeadDiscipline discipline, TapeRepresentation rep)
    : discipline_(discipline), length_(w.length()) {
  explicit_ = rep == TapeRepresentation::Explicit ||
              (rep == TapeRepresentation::Auto && length_ <= BigInt(static_cast<unsigned long>(kExplicitLimit)));
  if (explicit_) {
    cells_.reserve(length_.get_ui() + 2);
    cells_.push_back(kLeftEnd);
    cells_ += w.expand(kExplicitLimit * 16);
    cells_.push_back(kRightEnd);
  } else {
    runs_.push_back(Run{kLeftEnd, 1});
    for (const Run& r : w.runs()) runs_.push_back(r);
    runs_.push_back(Run{kRightEnd, 1});
    BigInt start = 0;
    run_start_.reserve(runs_.size());
    for (const Run& r : runs_) {
      run_start_.push_back(start);
      start += r.count;
    }
    offset_ = 0;
  }
}

void InputTape::check_discipline(Move m) {
  const int d = static_cast<int>(m);
  switch (discipline_) {
    case HeadDiscipline::OneWay:
      if (d < 0) throw SimulatorFault("one-way head attempted a left move");
      break;
    case HeadDiscipline::Realtime:
    case HeadDiscipline::RestartingRealtime:
      if (d != 1) throw SimulatorFault("realtime head must move right on every step");
      break;
    case HeadDiscipline::Sweeping:
      if (d != 0 && last_dir_ != 0 && d != last_dir_ && !at_left_end() && !at_right_end()) {
        throw SimulatorFault("sweeping head changed direction away from an end-marker");
      }
      break;
    case HeadDiscipline::TwoWay:
      break;
  }
  if (d == 0) return;
  if (d < 0) ++audit_.left_moves;
  if (last_dir_ == 0) {
    audit_.passes = 1;
  } else if (d != last_dir_) {
    ++audit_.direction_changes;
    ++audit_.passes;
  }
  last_dir_ = d;
}

void InputTape::move(Move m) {
  if (m == Move::Left && at_left_end()) throw SimulatorFault("input head moved left of the left end-marker");
  if (m == Move::Right && at_right_end()) throw SimulatorFault("input head moved right of the right end-marker");
  check_discipline(m);
  if (m == Move::Stay) return;
  if (explicit_) {
    pos_ += static_cast<int>(m);
    return;
  }
  if (m == Move::Right) {
    ++offset_;
    if (offset_ == runs_[run_].count) {
      ++run_;
      offset_ = 0;
    }
  } else {
    if (offset_ == 0) {
      --run_;
      offset_ = runs_[run_].count - 1;
    } else {
      --offset_;
    }
  }
}

BigInt InputTape::sweep(Move d) {
  if (d == Move::Stay) return 0;
  if ((d == Move::Left && at_left_end()) || (d == Move::Right && at_right_end())) return 0;
  check_discipline(d);
  const BigInt from = position();
  if (explicit_) {
    pos_ = d == Move::Right ? static_cast<std::int64_t>(cells_.size()) - 1 : 0;
  } else {
    run_ = d == Move::Right ? runs_.size() - 1 : 0;
    offset_ = 0;
  }
  const BigInt to = position();
  BigInt moved = d == Move::Right ? BigInt(to - from) : BigInt(from - to);
  if (d == Move::Left && moved > 1) {
    const BigInt extra = moved - 1;
    audit_.left_moves += fits_u64(extra) ? to_u64(extra) : UINT64_MAX;
  }
  return moved;
}

void InputTape::restart() {
  if (discipline_ != HeadDiscipline::RestartingRealtime) {
    throw SimulatorFault("restart is only defined for restarting realtime heads");
  }
  pos_ = 0;
  run_ = 0;
  offset_ = 0;
  last_dir_ = 0;
  ++audit_.restarts;
}

BigInt InputTape::position() const {
  if (explicit_) return BigInt(static_cast<long>(pos_));
  return run_start_[run_] + offset_;
}

WorkTape::WorkTape() { right_.assign(1, 0); }

std::uint8_t& WorkTape::cell(std::int64_t index) {
  if (index >= 0) {
    const auto i = static_cast<std::size_t>(index);
    if (i >= right_.size()) right_.resize(i + 1, 0);
    return right_[i];
  }
  const auto i = static_cast<std::size_t>(-index - 1);
  if (i >= left_.size()) left_.resize(i + 1, 0);
  return left_[i];
}

std::uint8_t WorkTape::cell_value(std::int64_t index) const {
  if (index >= 0) {
    const auto i = static_cast<std::size_t>(index);
    return i < right_.size() ? right_[i] : 0;
  }
  const auto i = static_cast<std::size_t>(-index - 1);
  return i < left_.size() ? left_[i] : 0;
}

int WorkTape::read(int track) const {
  const int code = (cell_value(head_) >> (2 * track)) & 0x3;
  return code == 0 ? kBlank : code - 1;
}

void WorkTape::write(int track, int bit) {
  if (track < 0 || track >= kTracks) throw SimulatorFault("work tape track out of range");
  std::uint8_t& c = cell(head_);
  const int code = bit == kBlank ? 0 : (bit != 0 ? 2 : 1);
  c = static_cast<std::uint8_t>((c & ~(0x3 << (2 * track))) | (code << (2 * track)));
}

void WorkTape::move(Move m) {
  head_ += static_cast<int>(m);
  if (head_ < min_visited_) min_visited_ = head_;
  if (head_ > max_visited_) max_visited_ = head_;
}

void Counter::decrement() {
  if (value_ == 0) throw SimulatorFault("counter decremented below zero");
  --value_;
}

}  // namespace bqsim
