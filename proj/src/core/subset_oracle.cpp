#include "bqsim/core/subset_oracle.hpp"

#include <stdexcept>

#include "bqsim/core/errors.hpp"

namespace bqsim {

SubsetOracle::SubsetOracle(std::vector<int> prefix) : prefix_(std::move(prefix)) {
  if (prefix_.empty()) throw std::invalid_argument("subset oracle needs at least one prefix bit");
  for (int b : prefix_) {
    if (b != 0 && b != 1) throw std::invalid_argument("subset oracle prefix entries must be 0 or 1");
  }
}

SubsetOracle SubsetOracle::parse(std::string_view bits) {
  std::vector<int> prefix;
  prefix.reserve(bits.size());
  for (char c : bits) {
    if (c == '0' || c == '1') {
      prefix.push_back(c - '0');
    } else {
      throw std::invalid_argument("prefix must be a string over {0,1}: " + std::string(bits));
    }
  }
  return SubsetOracle(std::move(prefix));
}

std::string SubsetOracle::bits() const {
  std::string out;
  out.reserve(prefix_.size());
  for (int b : prefix_) out.push_back(static_cast<char>('0' + b));
  return out;
}

int SubsetOracle::query(std::int64_t index) const {
  if (index < 1) throw std::domain_error("subset oracle index must be positive, got " + std::to_string(index));
  if (static_cast<std::uint64_t>(index) > prefix_.size()) {
    throw OutOfPrefixError("index " + std::to_string(index) + " beyond oracle prefix of length " +
                           std::to_string(prefix_.size()));
  }
  return prefix_[static_cast<std::size_t>(index - 1)];
}

int SubsetOracle::query(const BigInt& index) const {
  if (index < 1) throw std::domain_error("subset oracle index must be positive, got " + index.get_str());
  if (index > static_cast<unsigned long>(prefix_.size())) {
    throw OutOfPrefixError("index " + index.get_str() + " beyond oracle prefix of length " +
                           std::to_string(prefix_.size()));
  }
  return prefix_[index.get_ui() - 1];
}

Rational SubsetOracle::coin_bias() const {
  // The first 3N bits form the integer P; the tail 0.(001) = 1/7 sits below weight 8^-N.
  BigInt p = 0;
  for (int b : prefix_) p = p * 8 + (b * 4 + 1);
  const BigInt scale = ipow(8, prefix_.size());
  Rational r(7 * p + 1, 7 * scale);
  r.canonicalize();
  return r;
}

Rational SubsetOracle::rotation_fraction() const {
  const std::size_t n = prefix_.size();
  // Common denominator 7 * 8^(N+1).
  BigInt num = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const int s = prefix_[i - 1] == 1 ? 1 : -1;
    num += s * 7 * ipow(8, n - i);
  }
  num -= 1;
  Rational r(num, 7 * ipow(8, n + 1));
  r.canonicalize();
  return r;
}

}  // namespace bqsim
