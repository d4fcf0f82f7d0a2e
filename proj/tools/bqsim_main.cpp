#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bqsim/classical/log_transform.hpp"
#include "bqsim/coin.hpp"
#include "bqsim/core/errors.hpp"
#include "bqsim/harness/experiment.hpp"
#include "bqsim/oracles.hpp"
#include "bqsim/quantum.hpp"

namespace {

using namespace bqsim;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << text;
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

// A single flat JSON object as one CSV row with a header.
std::string object_to_csv(const json& obj) {
  std::ostringstream head;
  std::ostringstream row;
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    if (!first) {
      head << ',';
      row << ',';
    }
    first = false;
    head << key;
    row << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return head.str() + "\n" + row.str() + "\n";
}

std::string render(const json& j, harness::ReportFormat format) {
  if (format == harness::ReportFormat::Json) return j.dump(2) + "\n";
  if (j.is_array()) {
    std::string out;
    bool header = true;
    for (const auto& item : j) {
      std::string csv = object_to_csv(item);
      if (!header) csv = csv.substr(csv.find('\n') + 1);
      header = false;
      out += csv;
    }
    return out;
  }
  return object_to_csv(j);
}

oracles::LanguageId language_of(const std::string& name) {
  const auto id = oracles::parse_language(name);
  if (!id) throw ConfigError("unknown language \"" + name + "\"");
  return *id;
}

Word input_of(const std::string& text, oracles::LanguageId id) {
  try {
    if (!text.empty() && text.front() == '#') return Word::unary(oracles::alphabet(id).front(), BigInt(text.substr(1)));
    return Word::parse_rle(text);
  } catch (const std::exception& e) {
    throw ConfigError("bad input \"" + text + "\": " + e.what());
  }
}

std::optional<SubsetOracle> oracle_of(const std::string& prefix) {
  if (prefix.empty()) return std::nullopt;
  return SubsetOracle(harness::parse_prefix(prefix));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bqsim: bounded-error recognizers for uncountable language families"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string out_path;
  std::string prefix;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Membership by definition");
  std::string language;
  std::string input;
  oracle_cmd->add_option("--language", language, "Language id")->required();
  oracle_cmd->add_option("--input", input, "Input in RLE form, or #N for a unary word of length N")->required();
  oracle_cmd->add_option("--prefix", prefix, "Oracle prefix bits, e.g. 101");
  add_output(oracle_cmd);

  // run
  auto* run_cmd = app.add_subcommand("run", "Run an experiment from a JSON config");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::string> run_prefix;
  std::optional<std::string> run_format;
  std::optional<std::string> run_out;
  run_cmd->add_option("--config", config_path, "Experiment config")->required();
  run_cmd->add_option("--seed", seed, "Base seed");
  run_cmd->add_option("--trials", trials, "Trials per input");
  run_cmd->add_option("--max-steps", max_steps, "Step cap per run (0: none)");
  run_cmd->add_option("--prefix", run_prefix, "Oracle prefix bits");
  run_cmd->add_option("--format", run_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--out", run_out, "Output file (default stdout)");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Exact probability computations");
  std::string kind;
  unsigned k = 1;
  unsigned j = 1;
  std::uint64_t len_a = 1;
  std::uint64_t len_b = 1;
  unsigned repetitions = 1;
  std::string l_text = "1/64";
  std::uint64_t max_exact_tosses = coin::kDefaultMaxExactTosses;
  exact_cmd->add_option("--kind", kind, "coin | adh | rtqcfa | freivalds | upower8")
      ->required()
      ->check(CLI::IsMember({"coin", "adh", "rtqcfa", "freivalds", "upower8"}));
  exact_cmd->add_option("--k", k, "Coin index k (coin)");
  exact_cmd->add_option("--repetitions", repetitions, "Odd majority size (coin)");
  exact_cmd->add_option("--j", j, "ADH digit index");
  exact_cmd->add_option("--input", input, "Input word (rtqcfa, upower8)");
  exact_cmd->add_option("--len-a", len_a, "First block length (freivalds)");
  exact_cmd->add_option("--len-b", len_b, "Second block length (freivalds)");
  exact_cmd->add_option("--l", l_text, "Global coefficient l (rtqcfa)");
  exact_cmd->add_option("--max-exact-tosses", max_exact_tosses, "Toss cap for exact binomial sums");
  exact_cmd->add_option("--prefix", prefix, "Oracle prefix bits");
  add_output(exact_cmd);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "List members up to a bound");
  std::string bound = "1";
  enum_cmd->add_option("--language", language, "Language id")->required();
  enum_cmd->add_option("--bound", bound, "Length bound (unary) or family parameter bound");
  enum_cmd->add_option("--prefix", prefix, "Oracle prefix bits");
  add_output(enum_cmd);

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "Single-edit non-members near a member");
  std::size_t budget = 20;
  mutate_cmd->add_option("--language", language, "Language id")->required();
  mutate_cmd->add_option("--input", input, "Member in RLE form")->required();
  mutate_cmd->add_option("--budget", budget, "Maximum number of mutants");
  mutate_cmd->add_option("--prefix", prefix, "Oracle prefix bits");
  add_output(mutate_cmd);

  // report
  auto* report_cmd = app.add_subcommand("report", "Re-emit a saved JSON report");
  std::string report_in;
  report_cmd->add_option("--in", report_in, "Report JSON file")->required();
  add_output(report_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      harness::ExperimentConfig cfg = harness::load_config(config_path);
      if (seed) cfg.seed = *seed;
      if (trials) cfg.trials = *trials;
      if (max_steps) cfg.max_steps = *max_steps;
      if (run_prefix) cfg.prefix = *run_prefix;
      if (run_format) cfg.format = harness::parse_format(*run_format);
      if (run_out) cfg.out = *run_out;
      const harness::Report report = harness::run_experiment(cfg);
      write_out(harness::emit_report(report, cfg.format), cfg.out);
      return report.exit_code();
    }

    const harness::ReportFormat format = harness::parse_format(format_name);

    if (*report_cmd) {
      std::ifstream in(report_in);
      if (!in) throw ConfigError("cannot open report \"" + report_in + "\"");
      json parsed;
      try {
        in >> parsed;
      } catch (const json::exception& e) {
        throw ConfigError(std::string("report is not valid JSON: ") + e.what());
      }
      const harness::Report report = harness::report_from_json(parsed);
      write_out(harness::emit_report(report, format), out_path);
      return report.exit_code();
    }

    const auto oracle = oracle_of(prefix);
    const SubsetOracle* op = oracle ? &*oracle : nullptr;

    if (*oracle_cmd) {
      const auto id = language_of(language);
      const Word w = input_of(input, id);
      bool member = false;
      try {
        member = oracles::oracle_membership(id, w, op);
      } catch (const OutOfPrefixError& e) {
        throw ConfigError(e.what());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      write_out(render({{"language", language}, {"input", w.to_rle()}, {"member", member}}, format), out_path);
      return kExitOk;
    }

    if (*enum_cmd) {
      const auto id = language_of(language);
      BigInt b;
      if (b.set_str(bound, 10) != 0) throw ConfigError("bound must be a decimal integer");
      std::vector<Word> members;
      try {
        members = oracles::enumerate_members(id, b, op);
      } catch (const OutOfPrefixError& e) {
        throw ConfigError(e.what());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      json arr = json::array();
      for (const auto& m : members) arr.push_back({{"input", m.to_rle()}, {"length", to_string(m.length())}});
      write_out(render(arr, format), out_path);
      return kExitOk;
    }

    if (*mutate_cmd) {
      const auto id = language_of(language);
      const Word w = input_of(input, id);
      json arr = json::array();
      for (const auto& m : oracles::mutate_near_members(id, w, budget, op)) {
        arr.push_back({{"input", m.to_rle()}, {"length", to_string(m.length())}});
      }
      write_out(render(arr, format), out_path);
      return kExitOk;
    }

    if (*exact_cmd) {
      json result;
      if (kind == "coin") {
        if (!oracle) throw ConfigError("coin needs --prefix");
        if (repetitions % 2 == 0) throw ConfigError("repetitions must be odd");
        const Rational err = coin::exact_error_probability(*oracle, k, max_exact_tosses);
        const Rational maj = coin::majority_error(err, repetitions);
        result = {{"kind", kind},
                  {"k", k},
                  {"prefix", prefix},
                  {"error", to_string(err)},
                  {"error_approx", to_double(err)},
                  {"majority_error", to_string(maj)},
                  {"repetitions", repetitions},
                  {"within_quarter", err <= Rational(1, 4)}};
      } else if (kind == "adh") {
        if (!oracle) throw ConfigError("adh needs --prefix");
        const auto r = quantum::adh_accept_probability(*oracle, j);
        result = {{"kind", kind},
                  {"j", j},
                  {"bit", r.bit},
                  {"phi", to_string(r.qubit.angle.fraction())},
                  {"p_in", r.qubit.p_in},
                  {"p_out", r.qubit.p_out},
                  {"p_correct", r.p_correct},
                  {"certified", r.certified}};
      } else if (kind == "rtqcfa") {
        const Rational l = parse_rational(l_text);
        const Word w = input_of(input, oracles::LanguageId::POWER_EQ);
        const auto round = quantum::rtqcfa_round(w, l);
        const auto overall = quantum::rtqcfa_overall(round);
        result = {{"kind", kind},
                  {"input", w.to_rle()},
                  {"l", to_string(l)},
                  {"round_accept", to_string(round.accept)},
                  {"round_reject", to_string(round.reject)},
                  {"deterministic", round.deterministic},
                  {"accept_probability", to_string(overall.accept_probability)},
                  {"accept_approx", to_double(overall.accept_probability)},
                  {"log2_expected_rounds", log2_of(overall.expected_rounds)}};
      } else if (kind == "freivalds") {
        classical::FreivaldsParams fp;
        const Rational q = classical::decisive_bias(len_a, len_b);
        const Rational eq = classical::freivalds_equal_probability(len_a, len_b, fp);
        result = {{"kind", kind},
                  {"len_a", len_a},
                  {"len_b", len_b},
                  {"decisive_bias", to_string(q)},
                  {"equal_probability", to_double(eq)},
                  {"log2_expected_rounds", classical::freivalds_log2_expected_rounds(len_a, len_b, fp.decisive_target)}};
      } else {
        if (!oracle) throw ConfigError("upower8 needs --prefix");
        const Word w = input_of(input, oracles::LanguageId::UPOWER8_I);
        const auto o = quantum::qcca_upower8_I(w.length(), *oracle);
        result = {{"kind", kind},
                  {"length", to_string(w.length())},
                  {"screened", o.screened},
                  {"n", o.n},
                  {"accept_probability", o.accept_probability},
                  {"middle_space", "not reproduced: deterministic power-of-8 check"}};
      }
      write_out(render(result, format), out_path);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const OutOfPrefixError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CapExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
