#include "bqsim/harness/config.hpp"

#include <fstream>

#include "bqsim/core/errors.hpp"
#include "bqsim/harness/registry.hpp"
#include "bqsim/oracles.hpp"

namespace bqsim::harness {

std::vector<int> parse_prefix(const std::string& bits) {
  std::vector<int> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ConfigError("prefix must be a bit string, got \"" + bits + "\"");
    out.push_back(c - '0');
  }
  return out;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw ConfigError("format must be json or csv, got \"" + name + "\"");
}

namespace {

std::string_view mode_name(classical::RoundMode m) {
  switch (m) {
    case classical::RoundMode::Literal: return "literal";
    case classical::RoundMode::SkipAhead: return "skip";
    default: return "auto";
  }
}

classical::RoundMode parse_mode(const std::string& s) {
  if (s == "auto") return classical::RoundMode::Auto;
  if (s == "literal") return classical::RoundMode::Literal;
  if (s == "skip") return classical::RoundMode::SkipAhead;
  throw ConfigError("freivalds.mode must be auto, literal or skip");
}

template <typename T>
void read_opt(const nlohmann::json& j, const char* key, T& into) {
  if (!j.contains(key)) return;
  try {
    into = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"language", "recognizer", "prefix", "inputs", "enumerate_bound",
                                              "mutants_per_member", "trials", "seed", "repetitions", "confidence",
                                              "freivalds", "max_steps", "max_exact_tosses", "exact",
                                              "step_budget_scale", "format", "out"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown config field \"" + key + "\"");
  }
  ExperimentConfig cfg;
  read_opt(j, "language", cfg.language);
  read_opt(j, "recognizer", cfg.recognizer);
  read_opt(j, "prefix", cfg.prefix);
  read_opt(j, "inputs", cfg.inputs);
  if (j.contains("enumerate_bound")) {
    const auto& b = j.at("enumerate_bound");
    if (b.is_string()) {
      cfg.enumerate_bound = b.get<std::string>();
    } else if (b.is_number_unsigned()) {
      cfg.enumerate_bound = std::to_string(b.get<std::uint64_t>());
    } else if (!b.is_null()) {
      throw ConfigError("enumerate_bound must be a non-negative integer or decimal string");
    }
  }
  read_opt(j, "mutants_per_member", cfg.mutants_per_member);
  if (j.contains("trials") && !j.at("trials").is_number_unsigned()) throw ConfigError("trials must be a positive integer");
  read_opt(j, "trials", cfg.trials);
  read_opt(j, "seed", cfg.seed);
  read_opt(j, "repetitions", cfg.repetitions);
  read_opt(j, "confidence", cfg.confidence);
  if (j.contains("freivalds")) {
    const auto& f = j.at("freivalds");
    if (!f.is_object()) throw ConfigError("freivalds must be an object");
    read_opt(f, "decisive_target", cfg.freivalds.decisive_target);
    read_opt(f, "threshold", cfg.freivalds.threshold);
    read_opt(f, "max_rounds", cfg.freivalds.max_rounds);
    std::string mode = "auto";
    read_opt(f, "mode", mode);
    cfg.freivalds.mode = parse_mode(mode);
  }
  read_opt(j, "max_steps", cfg.max_steps);
  read_opt(j, "max_exact_tosses", cfg.max_exact_tosses);
  read_opt(j, "exact", cfg.exact);
  read_opt(j, "step_budget_scale", cfg.step_budget_scale);
  std::string format = "json";
  read_opt(j, "format", format);
  cfg.format = parse_format(format);
  read_opt(j, "out", cfg.out);
  return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["language"] = cfg.language;
  j["recognizer"] = cfg.recognizer;
  j["prefix"] = cfg.prefix;
  j["inputs"] = cfg.inputs;
  j["enumerate_bound"] = cfg.enumerate_bound ? nlohmann::json(*cfg.enumerate_bound) : nlohmann::json(nullptr);
  j["mutants_per_member"] = cfg.mutants_per_member;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["repetitions"] = cfg.repetitions;
  j["confidence"] = cfg.confidence;
  j["freivalds"] = {{"decisive_target", cfg.freivalds.decisive_target},
                    {"threshold", cfg.freivalds.threshold},
                    {"max_rounds", cfg.freivalds.max_rounds},
                    {"mode", mode_name(cfg.freivalds.mode)}};
  j["max_steps"] = cfg.max_steps;
  j["max_exact_tosses"] = cfg.max_exact_tosses;
  j["exact"] = cfg.exact;
  j["step_budget_scale"] = cfg.step_budget_scale;
  j["format"] = cfg.format == ReportFormat::Json ? "json" : "csv";
  j["out"] = cfg.out;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config \"" + path + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config \"" + path + "\" is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw ConfigError("trials must be >= 1");
  if (cfg.repetitions == 0 || cfg.repetitions % 2 == 0) throw ConfigError("repetitions must be odd");
  if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0)) throw ConfigError("confidence must lie in (0, 1)");
  if (cfg.freivalds.decisive_target == 0) throw ConfigError("freivalds.decisive_target must be >= 1");
  if (!(cfg.freivalds.threshold > 0.5 && cfg.freivalds.threshold < 1.0)) {
    throw ConfigError("freivalds.threshold must lie in (0.5, 1)");
  }
  if (!(cfg.step_budget_scale > 0.0)) throw ConfigError("step_budget_scale must be positive");
  const Recognizer* rec = find_recognizer(cfg.recognizer);
  if (rec == nullptr) throw ConfigError("unknown recognizer \"" + cfg.recognizer + "\"");
  if (!cfg.language.empty()) {
    const auto id = oracles::parse_language(cfg.language);
    if (!id) throw ConfigError("unknown language \"" + cfg.language + "\"");
    if (*id != rec->language) {
      throw ConfigError("recognizer " + cfg.recognizer + " decides " + std::string(oracles::to_string(rec->language)) +
                        ", not " + cfg.language);
    }
  }
  parse_prefix(cfg.prefix);
  if (oracles::requires_oracle(rec->language) && cfg.prefix.empty()) {
    throw ConfigError("language " + std::string(oracles::to_string(rec->language)) + " needs a --prefix");
  }
  if (cfg.inputs.empty() && !cfg.enumerate_bound) throw ConfigError("config has no inputs and no enumerate_bound");
}

}  // namespace bqsim::harness
