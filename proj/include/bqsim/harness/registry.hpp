#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bqsim/bigint.hpp"
#include "bqsim/classical/params.hpp"
#include "bqsim/core/random.hpp"
#include "bqsim/core/run.hpp"
#include "bqsim/core/subset_oracle.hpp"
#include "bqsim/core/word.hpp"
#include "bqsim/oracles.hpp"

namespace bqsim::harness {

enum class RecognizerKind { Deterministic, Probabilistic, Quantum };

/// Per-run resource limits; infinity means unchecked.
struct Budget {
  double steps = std::numeric_limits<double>::infinity();
  double space_work = std::numeric_limits<double>::infinity();
  double counter = std::numeric_limits<double>::infinity();
};

/// Exact acceptance probability of one run: a rational when the analysis is
/// rational, otherwise a high-precision value rounded to double.
struct ExactValue {
  std::optional<Rational> rational;
  double approx = 0.0;
};

struct RunContext {
  const SubsetOracle* oracle = nullptr;
  classical::RecognizerParams params;
  std::uint64_t max_exact_tosses = 4096;
};

struct Recognizer {
  std::string name;
  oracles::LanguageId language;
  RecognizerKind kind;
  std::function<RunStats(const Word&, const RunContext&, RandomSource&)> run;
  std::function<Budget(const Word&, const RunContext&)> budget;
  std::function<std::optional<ExactValue>(const Word&, const RunContext&)> exact;  // may be empty
};

const std::vector<Recognizer>& recognizers();
const Recognizer* find_recognizer(const std::string& name);

}  // namespace bqsim::harness
