#include "bqsim/core/word.hpp"

#include <cctype>
#include <stdexcept>

#include "bqsim/core/errors.hpp"

namespace bqsim {

Word Word::from_string(std::string_view symbols) {
  Word w;
  for (char c : symbols) w.append(c);
  return w;
}

Word Word::parse_rle(std::string_view literal) {
  Word w;
  std::size_t i = 0;
  while (i < literal.size()) {
    if (std::isspace(static_cast<unsigned char>(literal[i])) != 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < literal.size() && std::isspace(static_cast<unsigned char>(literal[j])) == 0) ++j;
    const std::string_view token = literal.substr(i, j - i);
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      for (char c : token) w.append(c);
    } else {
      if (caret != 1) throw std::invalid_argument("exponent must follow a single symbol: " + std::string(token));
      const std::string digits(token.substr(caret + 1));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad run length in token: " + std::string(token));
      }
      const BigInt count(digits, 10);
      if (count > 0) w.append(token[0], count);
    }
    i = j;
  }
  return w;
}

Word Word::unary(char symbol, const BigInt& length) {
  Word w;
  if (length < 0) throw std::domain_error("negative unary length");
  if (length > 0) w.append(symbol, length);
  return w;
}

Word& Word::append(char symbol, const BigInt& count) {
  if (count <= 0) return *this;
  if (symbol == '^' || std::isspace(static_cast<unsigned char>(symbol)) != 0) {
    throw std::invalid_argument("reserved symbol in word");
  }
  if (!runs_.empty() && runs_.back().symbol == symbol) {
    runs_.back().count += count;
  } else {
    runs_.push_back(Run{symbol, count});
  }
  return *this;
}

Word& Word::append(const Word& other) {
  for (const Run& r : other.runs_) append(r.symbol, r.count);
  return *this;
}

BigInt Word::length() const {
  BigInt n = 0;
  for (const Run& r : runs_) n += r.count;
  return n;
}

std::string Word::expand(std::uint64_t cap) const {
  const BigInt n = length();
  if (n > BigInt(static_cast<unsigned long>(cap))) {
    throw CapExceeded("word of length " + n.get_str() + " exceeds explicit expansion cap");
  }
  std::string out;
  out.reserve(n.get_ui());
  for (const Run& r : runs_) out.append(r.count.get_ui(), r.symbol);
  return out;
}

std::string Word::to_rle() const {
  std::string out;
  for (const Run& r : runs_) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(r.symbol);
    if (r.count != 1) {
      out.push_back('^');
      out += r.count.get_str();
    }
  }
  return out;
}

char Word::at(const BigInt& position) const {
  BigInt p = position;
  if (p < 0) throw std::out_of_range("negative word position");
  for (const Run& r : runs_) {
    if (p < r.count) return r.symbol;
    p -= r.count;
  }
  throw std::out_of_range("word position beyond length");
}

bool Word::is_unary_over(char symbol) const {
  for (const Run& r : runs_) {
    if (r.symbol != symbol) return false;
  }
  return true;
}

BigInt Word::count_of(char symbol) const {
  BigInt n = 0;
  for (const Run& r : runs_) {
    if (r.symbol == symbol) n += r.count;
  }
  return n;
}

}  // namespace bqsim
