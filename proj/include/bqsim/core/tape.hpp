#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim {

inline constexpr char kLeftEnd = '<';
inline constexpr char kRightEnd = '>';

enum class Move : int { Left = -1, Stay = 0, Right = 1 };

enum class HeadDiscipline { TwoWay, Sweeping, OneWay, Realtime, RestartingRealtime };

std::string_view to_string(HeadDiscipline d);

enum class TapeRepresentation { Auto, Explicit, RunLength };

struct HeadAudit {
  std::uint64_t left_moves = 0;
  std::uint64_t direction_changes = 0;
  std::uint64_t passes = 0;  // sweeps started; 0 until the head first moves
  std::uint64_t restarts = 0;
};

/// Read-only input tape holding <w> with end-markers. The head discipline is
/// enforced on every move; violations throw SimulatorFault.
class InputTape {
 public:
  InputTape(const Word& w, HeadDiscipline discipline, TapeRepresentation rep = TapeRepresentation::Auto);

  char read() const {
    return explicit_ ? cells_[static_cast<std::size_t>(pos_)] : runs_[run_].symbol;
  }
  bool at_left_end() const { return read() == kLeftEnd; }
  bool at_right_end() const { return read() == kRightEnd; }

  void move(Move m);

  /// Moves straight to the end-marker in direction d; returns the moves taken.
  BigInt sweep(Move d);

  /// Restarting models only: return to the initial configuration.
  void restart();

  BigInt position() const;
  const BigInt& word_length() const { return length_; }
  HeadDiscipline discipline() const { return discipline_; }
  const HeadAudit& audit() const { return audit_; }
  bool is_explicit() const { return explicit_; }

 private:
  void check_discipline(Move m);

  HeadDiscipline discipline_;
  bool explicit_;
  BigInt length_;
  int last_dir_ = 0;
  HeadAudit audit_;

  // explicit representation
  std::string cells_;
  std::int64_t pos_ = 0;

  // run-length representation; markers are runs of length 1
  std::vector<Run> runs_;
  std::vector<BigInt> run_start_;
  std::size_t run_ = 0;
  BigInt offset_;
};

/// Two-way infinite work tape with up to four binary tracks per cell. Each
/// track cell holds blank, 0 or 1. Space is the number of distinct cells the
/// head has visited; since the head moves one cell at a time that set is an
/// interval containing cell 0.
class WorkTape {
 public:
  static constexpr int kBlank = -1;
  static constexpr int kTracks = 4;

  WorkTape();

  int read(int track = 0) const;
  void write(int track, int bit);
  void move(Move m);

  std::int64_t head() const { return head_; }
  std::uint64_t space() const { return static_cast<std::uint64_t>(max_visited_ - min_visited_ + 1); }

 private:
  std::uint8_t& cell(std::int64_t index);
  std::uint8_t cell_value(std::int64_t index) const;

  std::vector<std::uint8_t> right_;  // cells 0, 1, 2, ...
  std::vector<std::uint8_t> left_;   // cells -1, -2, ...
  std::int64_t head_ = 0;
  std::int64_t min_visited_ = 0;
  std::int64_t max_visited_ = 0;
};

/// Counter whose only readable property is zero/nonzero; space is its maximum value.
class Counter {
 public:
  bool is_zero() const { return value_ == 0; }
  void increment() {
    ++value_;
    if (value_ > max_) max_ = value_;
  }
  void decrement();
  std::uint64_t max_value() const { return max_; }
  /// Instrumentation only; machine logic must go through is_zero().
  std::uint64_t audit_value() const { return value_; }

 private:
  std::uint64_t value_ = 0;
  std::uint64_t max_ = 0;
};

}  // namespace bqsim
