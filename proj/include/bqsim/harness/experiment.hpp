#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqsim/harness/config.hpp"
#include "bqsim/harness/registry.hpp"
#include "bqsim/harness/stats.hpp"

namespace bqsim::harness {

/// Acceptance probability of one input: the Monte Carlo estimate with its
/// Wilson interval, plus the exact value when the analysis provides one.
struct AcceptanceEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double value = 0.0;
  Interval ci;
  std::optional<std::string> exact;  // rational "num/den" or decimal
  std::optional<double> exact_approx;

  bool operator==(const AcceptanceEstimate&) const = default;
};

struct InputRow {
  std::string input;   // RLE
  std::string length;  // decimal
  bool oracle_member = false;
  std::uint64_t accepts = 0;
  std::uint64_t rejects = 0;
  std::uint64_t cap_exceeded = 0;
  std::uint64_t inconclusive = 0;
  AcceptanceEstimate estimate;
  double correct_rate = 0.0;
  std::string steps_max;
  std::string steps_median;
  std::uint64_t space_work_max = 0;
  std::string counter_max;
  std::uint64_t passes_max = 0;
  std::uint64_t left_moves_max = 0;
  std::uint64_t direction_changes_max = 0;
  double log2_rounds_max = 0.0;
  bool budget_ok = true;
  std::string verdict;  // agree | disagree | inconclusive

  bool operator==(const InputRow&) const = default;
};

struct Report {
  std::string artifact = "bqsim";
  std::string version;
  nlohmann::json config;
  std::vector<InputRow> rows;
  std::uint64_t disagreements = 0;
  std::uint64_t budget_failures = 0;
  std::uint64_t inconclusive_rows = 0;

  /// 0 ok, 3 budget or inconclusive, 4 oracle disagreement.
  int exit_code() const;
};

inline constexpr const char* kVersion = "1.0.0";

/// Resolves the config's inputs (explicit, enumerated, mutated) in report order.
std::vector<Word> resolve_inputs(const ExperimentConfig& cfg);

/// Runs every trial of every input. Trial t of input i draws from seed
/// derive_seed(cfg.seed, i, t); rows are reduced in input order.
Report run_experiment(const ExperimentConfig& cfg);

std::string emit_report(const Report& report, ReportFormat format);
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

}  // namespace bqsim::harness
