#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqsim/classical/params.hpp"
#include "bqsim/core/word.hpp"

namespace bqsim::harness {

enum class ReportFormat { Json, Csv };

/// One experiment. Serializes to and from JSON; with the artifact version
/// and seed it determines the report byte for byte.
struct ExperimentConfig {
  std::string language;
  std::string recognizer;
  std::string prefix;                 // oracle bits, e.g. "101"
  std::vector<std::string> inputs;    // RLE literals, or "#N" for a^N in the language's letter
  std::optional<std::string> enumerate_bound;
  std::size_t mutants_per_member = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned repetitions = 5;
  double confidence = 0.99;
  classical::FreivaldsParams freivalds;
  std::uint64_t max_steps = 0;
  std::uint64_t max_exact_tosses = 4096;
  bool exact = true;                  // attach exact acceptance values when available
  double step_budget_scale = 1.0;
  ReportFormat format = ReportFormat::Json;
  std::string out;                    // empty: stdout
};

/// Throws ConfigError with a diagnostic on any invalid field.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);
void validate(const ExperimentConfig& cfg);

/// Parses a bit string such as "101" into oracle bits.
std::vector<int> parse_prefix(const std::string& bits);
ReportFormat parse_format(const std::string& name);

}  // namespace bqsim::harness
