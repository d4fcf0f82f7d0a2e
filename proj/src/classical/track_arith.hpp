#pragma once

// Binary arithmetic on work-tape tracks, least significant bit at cell 0.
// Every routine starts and ends with the work head on cell 0, and every cell
// visit is one machine transition.

#include <cstdint>

#include "bqsim/bigint.hpp"
#include "bqsim/core/run.hpp"

namespace bqsim::classical::detail {

inline void walk_home(Machine& m) {
  while (m.work().head() > 0) m.work_step(Move::Left);
}

inline void increment(Machine& m, int track) {
  while (m.work().read(track) == 1) {
    m.work().write(track, 0);
    m.work_step(Move::Right);
  }
  m.work().write(track, 1);
  walk_home(m);
}

// Writes `value` in binary, then blanks the track up to `clear_to` cells.
inline void write_value(Machine& m, int track, const BigInt& value, unsigned long clear_to = 0) {
  const unsigned long bits = bit_length(value);
  const unsigned long span = bits > clear_to ? bits : clear_to;
  for (unsigned long i = 0; i < span; ++i) {
    m.work().write(track, i < bits ? mpz_tstbit(value.get_mpz_t(), i) : WorkTape::kBlank);
    if (i + 1 < span) m.work_step(Move::Right);
  }
  walk_home(m);
}

inline void clear(Machine& m, int track) {
  while (m.work().read(track) != WorkTape::kBlank) {
    m.work().write(track, WorkTape::kBlank);
    m.work_step(Move::Right);
  }
  walk_home(m);
}

inline int read_bit(Machine& m, int track, std::uint64_t position) {
  for (std::uint64_t i = 0; i < position; ++i) m.work_step(Move::Right);
  const int b = m.work().read(track);
  walk_home(m);
  return b == 1 ? 1 : 0;
}

// Compares two tracks as binary numbers (blank == 0 beyond the top bit).
inline bool equal(Machine& m, int a, int b) {
  bool same = true;
  for (;;) {
    const int x = m.work().read(a);
    const int y = m.work().read(b);
    if (x == WorkTape::kBlank && y == WorkTape::kBlank) break;
    if ((x == 1) != (y == 1)) same = false;
    m.work_step(Move::Right);
  }
  walk_home(m);
  return same;
}

// If the track holds 2^(group*e) with e >= 1 returns e, otherwise 0:
// one 1 on top, only zeros below, zero count a multiple of `group`.
inline std::uint64_t power_exponent(Machine& m, int track, unsigned group) {
  std::uint64_t zeros = 0;
  while (m.work().read(track) == 0) {
    ++zeros;
    m.work_step(Move::Right);
  }
  bool ok = m.work().read(track) == 1;
  if (ok) {
    m.work_step(Move::Right);
    ok = m.work().read(track) == WorkTape::kBlank;
  }
  walk_home(m);
  if (!ok || zeros == 0 || zeros % group != 0) return 0;
  return zeros / group;
}

}  // namespace bqsim::classical::detail
