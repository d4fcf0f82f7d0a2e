#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bqsim/bigint.hpp"

namespace bqsim {

/// Finite prefix x_1..x_N of the membership sequence of a set I of positive
/// integers. Indices beyond N are not guessed: querying them throws.
///
/// The coin bias completes the tail with x_i = 0, the rotation fraction with
/// s_i = -1; both completions belong to some I agreeing on the prefix, so
/// both derived quantities are exact rationals.
class SubsetOracle {
 public:
  explicit SubsetOracle(std::vector<int> prefix);

  /// Parses a bit string such as "101".
  static SubsetOracle parse(std::string_view bits);

  std::size_t size() const { return prefix_.size(); }
  const std::vector<int>& prefix() const { return prefix_; }
  std::string bits() const;

  int query(std::int64_t index) const;
  int query(const BigInt& index) const;
  bool contains(std::int64_t index) const { return query(index) == 1; }

  /// p_I = 0.x_1 01 x_2 01 ... x_N 01 (001)^inf in binary.
  Rational coin_bias() const;

  /// theta_I / 2pi = sum_i s_i / 8^(i+1), with s_i = +1 iff x_i = 1 and the tail all -1.
  Rational rotation_fraction() const;

 private:
  std::vector<int> prefix_;
};

}  // namespace bqsim
