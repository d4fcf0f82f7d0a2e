#include "bqsim/oracles.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "bqsim/core/errors.hpp"

namespace bqsim::oracles {

namespace {

constexpr std::array<std::pair<LanguageId, std::string_view>, 11> kNames{{
    {LanguageId::AM75, "AM75"},
    {LanguageId::AM75P, "AM75P"},
    {LanguageId::AM75P_I, "AM75P_I"},
    {LanguageId::UPOWER64, "UPOWER64"},
    {LanguageId::UPOWER64_I, "UPOWER64_I"},
    {LanguageId::DIMA, "DIMA"},
    {LanguageId::DIMA_I, "DIMA_I"},
    {LanguageId::LOG_DIMA_I, "LOG_DIMA_I"},
    {LanguageId::POWER_EQ, "POWER_EQ"},
    {LanguageId::POWER_EQ_I, "POWER_EQ_I"},
    {LanguageId::UPOWER8_I, "UPOWER8_I"},
}};

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Exponent e >= 0 with base^e == v, or -1. Repeated multiplication only.
long power_index(const BigInt& v, unsigned base) {
  BigInt x = 1;
  for (long e = 0;; ++e) {
    if (x == v) return e;
    if (x > v) return -1;
    x *= base;
  }
}

bool member_bit(const SubsetOracle* oracle, long index) {
  if (oracle == nullptr) throw std::invalid_argument("language needs a subset oracle");
  if (index < 1) return false;
  return oracle->query(static_cast<std::int64_t>(index)) == 1;
}

// Canonical DIMA word spelled out symbol group by symbol group.
Word canonical_dima(unsigned k) {
  Word w;
  BigInt len = 1;
  for (unsigned i = 0; i <= 6 * k; ++i) {
    if (i == 3 * k + 2 || i == 3 * k + 3) {
      w.append('1', 1);
      w.append('1', 1);
    } else if (i > 0) {
      w.append('1', 1);
    }
    w.append('0', len);
    len *= 2;
  }
  return w;
}

BigInt canonical_dima_length(unsigned k) {
  BigInt zeros = 0;
  BigInt len = 1;
  for (unsigned i = 0; i <= 6 * k; ++i, len *= 2) zeros += len;
  return zeros + BigInt(6 * k + 2);
}

// Smallest k >= 1 whose canonical DIMA length is >= len, or 0 when len is shorter than k = 1.
unsigned dima_parameter_for(const BigInt& len) {
  for (unsigned k = 1;; ++k) {
    const BigInt c = canonical_dima_length(k);
    if (c == len) return k;
    if (c > len) return 0;
  }
}

Word canonical_power_eq(unsigned n) {
  Word w;
  w.append('a', 1);
  w.append('b', 1);
  BigInt block = 7;
  for (unsigned i = 0; i <= n; ++i) {
    w.append('a', block);
    w.append('b', 1);
    block *= 8;
  }
  return w;
}

Word log_image(const std::string& w) {
  Word x;
  x.append('0', 1);
  BigInt block = 2;
  for (char c : w) {
    x.append('1', 1);
    x.append(c, 1);
    x.append('0', block);
    block *= 2;
  }
  return x;
}

bool dima_oracle(const Word& w, unsigned* k_out) {
  const unsigned k = dima_parameter_for(w.length());
  if (k == 0) return false;
  if (!(w == canonical_dima(k))) return false;
  if (k_out != nullptr) *k_out = k;
  return true;
}

bool unary_over(const Word& w, char c) {
  return std::all_of(w.runs().begin(), w.runs().end(), [c](const Run& r) { return r.symbol == c; });
}

std::string expand_small(const Word& w) { return w.expand(1u << 20); }

}  // namespace

std::string_view to_string(LanguageId id) {
  for (const auto& [k, v] : kNames) {
    if (k == id) return v;
  }
  return "?";
}

std::optional<LanguageId> parse_language(std::string_view name) {
  for (const auto& [k, v] : kNames) {
    if (v == name) return k;
  }
  return std::nullopt;
}

const std::vector<LanguageId>& all_languages() {
  static const std::vector<LanguageId> ids = [] {
    std::vector<LanguageId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

bool requires_oracle(LanguageId id) {
  switch (id) {
    case LanguageId::AM75P_I:
    case LanguageId::UPOWER64_I:
    case LanguageId::DIMA_I:
    case LanguageId::LOG_DIMA_I:
    case LanguageId::POWER_EQ_I:
    case LanguageId::UPOWER8_I:
      return true;
    default:
      return false;
  }
}

std::string_view alphabet(LanguageId id) {
  switch (id) {
    case LanguageId::AM75:
    case LanguageId::AM75P:
    case LanguageId::AM75P_I:
    case LanguageId::UPOWER8_I:
      return "a";
    case LanguageId::UPOWER64:
    case LanguageId::UPOWER64_I:
      return "0";
    case LanguageId::POWER_EQ:
    case LanguageId::POWER_EQ_I:
      return "ab";
    default:
      return "01";
  }
}

BigInt least_non_divisor(const BigInt& n) {
  if (n < 1) throw std::domain_error("F(n) needs n >= 1");
  BigInt best = 0;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (best != 0 && BigInt(p) >= best) return best;
    BigInt pk = p;
    while (n % pk == 0) pk *= p;
    if (best == 0 || pk < best) best = pk;
  }
}

bool oracle_membership(LanguageId id, const Word& input, const SubsetOracle* oracle) {
  const BigInt n = input.length();
  switch (id) {
    case LanguageId::AM75:
    case LanguageId::AM75P:
    case LanguageId::AM75P_I: {
      if (n < 1 || !unary_over(input, 'a')) return false;
      const BigInt f = least_non_divisor(n);
      if (id == LanguageId::AM75) return power_index(f, 2) >= 1;
      const long m = power_index(f, 64);
      if (m < 1) return false;
      return id == LanguageId::AM75P || member_bit(oracle, m);
    }
    case LanguageId::UPOWER64:
    case LanguageId::UPOWER64_I: {
      if (!unary_over(input, '0')) return false;
      const long k = power_index(n, 64);
      if (k < 1) return false;
      return id == LanguageId::UPOWER64 || member_bit(oracle, k);
    }
    case LanguageId::UPOWER8_I: {
      if (!unary_over(input, 'a')) return false;
      const long e = power_index(n, 8);
      if (e < 2) return false;
      return member_bit(oracle, e - 1);
    }
    case LanguageId::DIMA:
    case LanguageId::DIMA_I: {
      unsigned k = 0;
      if (!dima_oracle(input, &k)) return false;
      return id == LanguageId::DIMA || member_bit(oracle, k);
    }
    case LanguageId::LOG_DIMA_I: {
      // |LOG(w)| = 2^(m+1) + 2m - 1 fixes m = |w|; w must then be a DIMA(I) member.
      std::uint64_t m = 0;
      for (;; ++m) {
        const BigInt len = pow2(m + 1) + BigInt(2 * m) - 1;
        if (len == n) break;
        if (len > n) return false;
      }
      if (m == 0) return false;
      const unsigned k = dima_parameter_for(BigInt(m));
      if (k == 0) return false;
      if (!(input == log_image(expand_small(canonical_dima(k))))) return false;
      return member_bit(oracle, k);
    }
    case LanguageId::POWER_EQ:
    case LanguageId::POWER_EQ_I: {
      const BigInt bs = input.count_of('b');
      if (bs < 2 || !bs.fits_uint_p()) return false;
      const unsigned nn = static_cast<unsigned>(bs.get_ui()) - 2;
      if (!(input == canonical_power_eq(nn))) return false;
      return id == LanguageId::POWER_EQ || member_bit(oracle, nn + 1);
    }
  }
  return false;
}

std::vector<Word> enumerate_members(LanguageId id, const BigInt& bound, const SubsetOracle* oracle,
                                    std::uint64_t cap) {
  std::vector<Word> out;
  switch (id) {
    case LanguageId::AM75:
    case LanguageId::AM75P:
    case LanguageId::AM75P_I: {
      if (bound > BigInt(cap)) throw CapExceeded("enumeration bound exceeds the cap");
      for (BigInt n = 1; n <= bound; ++n) {
        const Word w = Word::unary('a', n);
        if (oracle_membership(id, w, oracle)) out.push_back(w);
      }
      return out;
    }
    case LanguageId::UPOWER64:
    case LanguageId::UPOWER64_I:
    case LanguageId::UPOWER8_I: {
      const unsigned base = id == LanguageId::UPOWER8_I ? 8 : 64;
      const char letter = id == LanguageId::UPOWER8_I ? 'a' : '0';
      for (BigInt len = base; len <= bound; len *= base) {
        const Word w = Word::unary(letter, len);
        if (oracle_membership(id, w, oracle)) out.push_back(w);
      }
      return out;
    }
    case LanguageId::DIMA:
    case LanguageId::DIMA_I:
    case LanguageId::LOG_DIMA_I: {
      if (bound > BigInt(cap)) throw CapExceeded("enumeration bound exceeds the cap");
      const unsigned top = static_cast<unsigned>(bound.get_ui());
      if (id == LanguageId::LOG_DIMA_I && top > 2) throw CapExceeded("LOG images beyond k = 2 are not enumerated");
      for (unsigned k = 1; k <= top; ++k) {
        const Word w = canonical_dima(k);
        if (id == LanguageId::DIMA) {
          out.push_back(w);
        } else if (member_bit(oracle, k)) {
          out.push_back(id == LanguageId::DIMA_I ? w : log_image(expand_small(w)));
        }
      }
      return out;
    }
    case LanguageId::POWER_EQ:
    case LanguageId::POWER_EQ_I: {
      if (bound > BigInt(cap)) throw CapExceeded("enumeration bound exceeds the cap");
      for (unsigned n = 0; BigInt(n) <= bound; ++n) {
        if (id == LanguageId::POWER_EQ || member_bit(oracle, n + 1)) out.push_back(canonical_power_eq(n));
      }
      return out;
    }
  }
  return out;
}

namespace {

Word rebuild(const std::vector<Run>& runs) {
  Word w;
  for (const Run& r : runs) {
    if (r.count > 0) w.append(r.symbol, r.count);
  }
  return w;
}

}  // namespace

std::vector<Word> mutate_near_members(LanguageId id, const Word& member, std::size_t budget,
                                      const SubsetOracle* oracle) {
  const std::string_view letters = alphabet(id);
  const auto& runs = member.runs();
  std::vector<Word> candidates;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    // off-by-one run lengths
    for (int delta : {-1, 1}) {
      std::vector<Run> v = runs;
      v[i].count += delta;
      candidates.push_back(rebuild(v));
    }
    // flip one symbol at the start, middle and end of the run
    for (char other : letters) {
      if (other == runs[i].symbol) continue;
      std::vector<BigInt> offsets{0};
      if (runs[i].count > 2) offsets.push_back(runs[i].count / 2);
      if (runs[i].count > 1) offsets.push_back(runs[i].count - 1);
      for (const BigInt& off : offsets) {
        std::vector<Run> v(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(i));
        v.push_back({runs[i].symbol, off});
        v.push_back({other, 1});
        v.push_back({runs[i].symbol, runs[i].count - off - 1});
        v.insert(v.end(), runs.begin() + static_cast<std::ptrdiff_t>(i) + 1, runs.end());
        candidates.push_back(rebuild(v));
      }
      // insert a foreign symbol after the run
      std::vector<Run> v(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      v.push_back({other, 1});
      v.insert(v.end(), runs.begin() + static_cast<std::ptrdiff_t>(i) + 1, runs.end());
      candidates.push_back(rebuild(v));
    }
  }
  std::vector<Word> out;
  for (const Word& c : candidates) {
    if (out.size() >= budget) break;
    if (std::any_of(out.begin(), out.end(), [&](const Word& o) { return o == c; })) continue;
    bool member_c = true;
    try {
      member_c = oracle_membership(id, c, oracle);
    } catch (const OutOfPrefixError&) {
      continue;
    }
    if (!member_c) out.push_back(c);
  }
  return out;
}

}  // namespace bqsim::oracles
