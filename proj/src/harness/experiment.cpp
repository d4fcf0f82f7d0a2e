#include "bqsim/harness/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bqsim/core/errors.hpp"
#include "bqsim/oracles.hpp"

namespace bqsim::harness {

int Report::exit_code() const {
  if (disagreements > 0) return 4;
  if (budget_failures > 0 || inconclusive_rows > 0) return 3;
  return 0;
}

std::vector<Word> resolve_inputs(const ExperimentConfig& cfg) {
  const Recognizer* rec = find_recognizer(cfg.recognizer);
  if (rec == nullptr) throw ConfigError("unknown recognizer \"" + cfg.recognizer + "\"");
  const char letter = oracles::alphabet(rec->language).front();
  std::optional<SubsetOracle> oracle;
  if (!cfg.prefix.empty()) oracle.emplace(parse_prefix(cfg.prefix));
  std::vector<Word> words;
  for (const auto& text : cfg.inputs) {
    try {
      if (!text.empty() && text.front() == '#') {
        words.push_back(Word::unary(letter, BigInt(text.substr(1))));
      } else {
        words.push_back(Word::parse_rle(text));
      }
    } catch (const std::exception& e) {
      throw ConfigError("bad input \"" + text + "\": " + e.what());
    }
  }
  if (cfg.enumerate_bound) {
    BigInt bound;
    if (bound.set_str(*cfg.enumerate_bound, 10) != 0 || bound < 0) throw ConfigError("enumerate_bound is not an integer");
    std::vector<Word> members;
    try {
      members = oracles::enumerate_members(rec->language, bound, oracle ? &*oracle : nullptr);
    } catch (const OutOfPrefixError& e) {
      throw ConfigError(std::string("enumeration leaves the oracle prefix: ") + e.what());
    } catch (const CapExceeded& e) {
      throw ConfigError(std::string("enumeration: ") + e.what());
    }
    for (const Word& m : members) {
      words.push_back(m);
      if (cfg.mutants_per_member > 0) {
        for (Word& x : oracles::mutate_near_members(rec->language, m, cfg.mutants_per_member,
                                                    oracle ? &*oracle : nullptr)) {
          words.push_back(std::move(x));
        }
      }
    }
  }
  return words;
}

namespace {

bool within(const BigInt& v, double limit) { return std::isinf(limit) || v.get_d() <= limit; }
bool within(double v, double limit) { return std::isinf(limit) || v <= limit; }

InputRow run_input(const Recognizer& rec, const Word& w, std::size_t index, const ExperimentConfig& cfg,
                   const RunContext& ctx) {
  InputRow row;
  row.input = w.to_rle();
  row.length = to_string(w.length());
  try {
    row.oracle_member = oracles::oracle_membership(rec.language, w, ctx.oracle);
  } catch (const OutOfPrefixError& e) {
    throw ConfigError("input " + row.input + " needs an oracle index beyond the prefix: " + e.what());
  }

  Budget budget = rec.budget(w, ctx);
  budget.steps *= cfg.step_budget_scale;

  std::vector<BigInt> steps;
  steps.reserve(cfg.trials);
  BigInt counter_max = 0;
  std::uint64_t correct = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    RandomSource rng(derive_seed(cfg.seed, index, t));
    RunStats s;
    try {
      s = rec.run(w, ctx, rng);
    } catch (const OutOfPrefixError& e) {
      throw ConfigError("input " + row.input + " needs an oracle index beyond the prefix: " + e.what());
    }
    switch (s.decision) {
      case Decision::Accept: ++row.accepts; break;
      case Decision::Reject: ++row.rejects; break;
      case Decision::CapExceeded: ++row.cap_exceeded; break;
      default: ++row.inconclusive; break;
    }
    if ((s.decision == Decision::Accept) == row.oracle_member &&
        (s.decision == Decision::Accept || s.decision == Decision::Reject)) {
      ++correct;
    }
    steps.push_back(s.steps);
    if (s.space_counter > counter_max) counter_max = s.space_counter;
    row.space_work_max = std::max(row.space_work_max, s.space_work);
    row.passes_max = std::max(row.passes_max, s.passes);
    row.left_moves_max = std::max(row.left_moves_max, s.left_moves);
    row.direction_changes_max = std::max(row.direction_changes_max, s.direction_changes);
    row.log2_rounds_max = std::max(row.log2_rounds_max, s.log2_skipped_rounds);
    if (!within(s.steps, budget.steps) || !within(static_cast<double>(s.space_work), budget.space_work) ||
        !within(s.space_counter, budget.counter)) {
      row.budget_ok = false;
    }
  }
  std::sort(steps.begin(), steps.end());
  row.steps_max = to_string(steps.back());
  row.steps_median = to_string(steps[(steps.size() - 1) / 2]);
  row.counter_max = to_string(counter_max);

  row.estimate.trials = cfg.trials;
  row.estimate.successes = row.accepts;
  row.estimate.value = static_cast<double>(row.accepts) / static_cast<double>(cfg.trials);
  row.estimate.ci = wilson_interval(row.accepts, cfg.trials, cfg.confidence);
  if (cfg.exact && rec.exact) {
    if (const auto ev = rec.exact(w, ctx)) {
      if (ev->rational) {
        row.estimate.exact = to_string(*ev->rational);
      } else {
        std::ostringstream os;
        os.precision(17);
        os << ev->approx;
        row.estimate.exact = os.str();
      }
      row.estimate.exact_approx = ev->approx;
    }
  }
  row.correct_rate = static_cast<double>(correct) / static_cast<double>(cfg.trials);

  if (row.cap_exceeded + row.inconclusive > 0) {
    row.verdict = "inconclusive";
  } else if (rec.kind == RecognizerKind::Deterministic) {
    row.verdict = correct == cfg.trials ? "agree" : "disagree";
  } else {
    // majority of trials must match the oracle
    row.verdict = 2 * correct > cfg.trials ? "agree" : "disagree";
  }
  return row;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const Recognizer& rec = *find_recognizer(cfg.recognizer);
  std::optional<SubsetOracle> oracle;
  if (!cfg.prefix.empty()) oracle.emplace(parse_prefix(cfg.prefix));
  RunContext ctx;
  ctx.oracle = oracle ? &*oracle : nullptr;
  ctx.params.repetitions = cfg.repetitions;
  ctx.params.max_steps = cfg.max_steps;
  ctx.params.freivalds = cfg.freivalds;
  ctx.max_exact_tosses = cfg.max_exact_tosses;

  Report report;
  report.version = kVersion;
  report.config = config_to_json(cfg);
  const std::vector<Word> words = resolve_inputs(cfg);
  if (words.empty()) throw ConfigError("config resolves to no inputs");
  for (std::size_t i = 0; i < words.size(); ++i) {
    InputRow row = run_input(rec, words[i], i, cfg, ctx);
    if (row.verdict == "disagree") ++report.disagreements;
    if (row.verdict == "inconclusive") ++report.inconclusive_rows;
    if (!row.budget_ok) ++report.budget_failures;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

nlohmann::json row_to_json(const InputRow& r) {
  nlohmann::json est = {{"mode", "monte-carlo"},
                        {"trials", r.estimate.trials},
                        {"successes", r.estimate.successes},
                        {"value", r.estimate.value},
                        {"ci", {r.estimate.ci.low, r.estimate.ci.high}}};
  nlohmann::json exact = nullptr;
  if (r.estimate.exact) exact = {{"mode", "exact"}, {"value", *r.estimate.exact}, {"approx", *r.estimate.exact_approx}};
  return {{"input", r.input},
          {"length", r.length},
          {"oracle_member", r.oracle_member},
          {"decisions",
           {{"accept", r.accepts},
            {"reject", r.rejects},
            {"cap_exceeded", r.cap_exceeded},
            {"inconclusive", r.inconclusive}}},
          {"estimate", est},
          {"exact", exact},
          {"correct_rate", r.correct_rate},
          {"steps", {{"max", r.steps_max}, {"median", r.steps_median}}},
          {"space_work_max", r.space_work_max},
          {"counter_max", r.counter_max},
          {"passes_max", r.passes_max},
          {"left_moves_max", r.left_moves_max},
          {"direction_changes_max", r.direction_changes_max},
          {"log2_rounds_max", r.log2_rounds_max},
          {"budget_check", r.budget_ok ? "pass" : "fail"},
          {"verdict", r.verdict}};
}

InputRow row_from_json(const nlohmann::json& j) {
  InputRow r;
  r.input = j.at("input").get<std::string>();
  r.length = j.at("length").get<std::string>();
  r.oracle_member = j.at("oracle_member").get<bool>();
  const auto& d = j.at("decisions");
  r.accepts = d.at("accept").get<std::uint64_t>();
  r.rejects = d.at("reject").get<std::uint64_t>();
  r.cap_exceeded = d.at("cap_exceeded").get<std::uint64_t>();
  r.inconclusive = d.at("inconclusive").get<std::uint64_t>();
  const auto& e = j.at("estimate");
  r.estimate.trials = e.at("trials").get<std::uint64_t>();
  r.estimate.successes = e.at("successes").get<std::uint64_t>();
  r.estimate.value = e.at("value").get<double>();
  r.estimate.ci = {e.at("ci").at(0).get<double>(), e.at("ci").at(1).get<double>()};
  if (!j.at("exact").is_null()) {
    r.estimate.exact = j.at("exact").at("value").get<std::string>();
    r.estimate.exact_approx = j.at("exact").at("approx").get<double>();
  }
  r.correct_rate = j.at("correct_rate").get<double>();
  r.steps_max = j.at("steps").at("max").get<std::string>();
  r.steps_median = j.at("steps").at("median").get<std::string>();
  r.space_work_max = j.at("space_work_max").get<std::uint64_t>();
  r.counter_max = j.at("counter_max").get<std::string>();
  r.passes_max = j.at("passes_max").get<std::uint64_t>();
  r.left_moves_max = j.at("left_moves_max").get<std::uint64_t>();
  r.direction_changes_max = j.at("direction_changes_max").get<std::uint64_t>();
  r.log2_rounds_max = j.at("log2_rounds_max").get<double>();
  r.budget_ok = j.at("budget_check").get<std::string>() == "pass";
  r.verdict = j.at("verdict").get<std::string>();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) rows.push_back(row_to_json(r));
  const char* status = report.exit_code() == 0 ? "ok" : report.exit_code() == 4 ? "disagreement" : "inconclusive";
  return {{"artifact", report.artifact},
          {"version", report.version},
          {"config", report.config},
          {"rows", rows},
          {"summary",
           {{"inputs", report.rows.size()},
            {"disagreements", report.disagreements},
            {"budget_failures", report.budget_failures},
            {"inconclusive", report.inconclusive_rows},
            {"status", status}}}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  try {
    r.artifact = j.at("artifact").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
    const auto& s = j.at("summary");
    r.disagreements = s.at("disagreements").get<std::uint64_t>();
    r.budget_failures = s.at("budget_failures").get<std::uint64_t>();
    r.inconclusive_rows = s.at("inconclusive").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("not a report: ") + e.what());
  }
  return r;
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream os;
  os << "input,length,oracle_member,accept,reject,cap_exceeded,inconclusive,estimate,ci_low,ci_high,exact,"
        "correct_rate,steps_max,steps_median,space_work_max,counter_max,passes_max,left_moves_max,"
        "direction_changes_max,log2_rounds_max,budget_check,verdict\n";
  for (const auto& r : report.rows) {
    os << csv_field(r.input) << ',' << r.length << ',' << (r.oracle_member ? "true" : "false") << ',' << r.accepts
       << ',' << r.rejects << ',' << r.cap_exceeded << ',' << r.inconclusive << ',' << fmt(r.estimate.value) << ','
       << fmt(r.estimate.ci.low) << ',' << fmt(r.estimate.ci.high) << ',' << csv_field(r.estimate.exact.value_or(""))
       << ',' << fmt(r.correct_rate) << ',' << r.steps_max << ',' << r.steps_median << ',' << r.space_work_max << ','
       << r.counter_max << ',' << r.passes_max << ',' << r.left_moves_max << ',' << r.direction_changes_max << ','
       << fmt(r.log2_rounds_max) << ',' << (r.budget_ok ? "pass" : "fail") << ',' << r.verdict << '\n';
  }
  return os.str();
}

}  // namespace bqsim::harness
