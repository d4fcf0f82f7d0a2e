#include <sstream>

#include "doctest.h"

#include "bqsim/classical/dima.hpp"
#include "bqsim/core/errors.hpp"
#include "bqsim/harness/config.hpp"
#include "bqsim/harness/experiment.hpp"
#include "bqsim/harness/registry.hpp"
#include "bqsim/harness/stats.hpp"

using namespace bqsim;
using namespace bqsim::harness;

namespace {

ExperimentConfig dima_config() {
  ExperimentConfig cfg;
  cfg.language = "DIMA_I";
  cfg.recognizer = "pca2_dima_I";
  cfg.prefix = "1";
  cfg.inputs = {"0 1 00 1 0^4 1 0^8 1 0^16 11 0^32 11 0^64", "0 1 0"};
  cfg.trials = 40;
  cfg.seed = 11;
  return cfg;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST_CASE("Wilson interval examples") {
  CHECK(wilson_interval(0, 50, 0.99).low == 0.0);
  CHECK(wilson_interval(50, 50, 0.99).high == 1.0);
  const Interval i = wilson_interval(50, 100, 0.95);
  CHECK(i.low < 0.5);
  CHECK(i.high > 0.5);
  CHECK((0.5 - i.low) == doctest::Approx(i.high - 0.5));
  // z = 1.959964: 0.5 +- z*0.05/sqrt(1 + z^2/100)
  CHECK(i.low == doctest::Approx(0.403831).epsilon(1e-5));
  CHECK_THROWS(wilson_interval(3, 2, 0.99));
  CHECK_THROWS(wilson_interval(0, 0, 0.99));
  CHECK_THROWS(wilson_interval(1, 2, 1.5));
}

TEST_CASE("every recognizer maps to one language") {
  CHECK(recognizers().size() == 12);
  for (const Recognizer& r : recognizers()) {
    CHECK(find_recognizer(r.name) == &r);
    CHECK(static_cast<bool>(r.run));
  }
  CHECK(find_recognizer("nope") == nullptr);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = dima_config();
  CHECK_NOTHROW(validate(cfg));
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = dima_config();
  cfg.repetitions = 4;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = dima_config();
  cfg.prefix.clear();
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = dima_config();
  cfg.recognizer = "dca2_dima";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = dima_config();
  cfg.inputs.clear();
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"bogus", 1}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"trials", "many"}}), ConfigError);
  const ExperimentConfig back = config_from_json(config_to_json(dima_config()));
  CHECK(config_to_json(back) == config_to_json(dima_config()));
  CHECK(parse_prefix("101") == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(parse_prefix("12"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("exact coin-extraction value is attached and at most 1/4 error") {
  ExperimentConfig cfg;
  cfg.language = "UPOWER64_I";
  cfg.recognizer = "ptm1_upower64_I";
  cfg.prefix = "1";
  cfg.inputs = {"#64"};
  cfg.trials = 200;
  cfg.repetitions = 1;
  const Report r = run_experiment(cfg);
  REQUIRE(r.rows.size() == 1);
  REQUIRE(r.rows[0].estimate.exact);
  CHECK(parse_rational(*r.rows[0].estimate.exact) >= Rational(3, 4));
  CHECK(r.exit_code() == 0);
}

TEST_CASE("deterministic DIMA run over all short strings reports no disagreements") {
  ExperimentConfig cfg;
  cfg.language = "DIMA";
  cfg.recognizer = "dca2_dima";
  cfg.trials = 1;
  for (unsigned len = 1; len <= 10; ++len) {
    for (unsigned x = 0; x < (1u << len); ++x) {
      std::string s;
      for (unsigned i = 0; i < len; ++i) s += ((x >> i) & 1u) ? "1 " : "0 ";
      cfg.inputs.push_back(s);
    }
  }
  cfg.enumerate_bound = "2";
  cfg.mutants_per_member = 10;
  const Report r = run_experiment(cfg);
  CHECK(r.disagreements == 0);
  CHECK(r.budget_failures == 0);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("seed determinism and report round-trip") {
  const ExperimentConfig cfg = dima_config();
  const Report a = run_experiment(cfg);
  const Report b = run_experiment(cfg);
  CHECK(emit_report(a, ReportFormat::Json) == emit_report(b, ReportFormat::Json));
  CHECK(emit_report(a, ReportFormat::Csv) == emit_report(b, ReportFormat::Csv));
  ExperimentConfig other = cfg;
  other.seed = 12;
  CHECK(emit_report(run_experiment(other), ReportFormat::Json) != emit_report(a, ReportFormat::Json));

  const Report back = report_from_json(nlohmann::json::parse(emit_report(a, ReportFormat::Json)));
  CHECK(back.rows == a.rows);
  CHECK(back.config == a.config);
  CHECK(back.version == a.version);
  CHECK(count_lines(emit_report(a, ReportFormat::Csv)) == 1 + cfg.inputs.size());
  CHECK(a.rows[1].verdict == "agree");
  CHECK(a.rows[1].accepts == 0);
}

TEST_CASE("budget column fails when the step budget is scaled down") {
  ExperimentConfig cfg;
  cfg.language = "DIMA";
  cfg.recognizer = "dca2_dima";
  cfg.inputs = {"0 1 00 1 0^4 1 0^8 1 0^16 11 0^32 11 0^64"};
  cfg.trials = 1;
  cfg.step_budget_scale = 0.01;
  const Report r = run_experiment(cfg);
  CHECK_FALSE(r.rows[0].budget_ok);
  CHECK(r.budget_failures == 1);
  CHECK(r.exit_code() == 3);
  CHECK(emit_report(r, ReportFormat::Csv).find(",fail") != std::string::npos);
}

TEST_CASE("step cap yields an inconclusive row") {
  ExperimentConfig cfg = dima_config();
  cfg.max_steps = 50;
  cfg.inputs = {cfg.inputs[0]};
  const Report r = run_experiment(cfg);
  CHECK(r.rows[0].cap_exceeded == cfg.trials);
  CHECK(r.rows[0].verdict == "inconclusive");
  CHECK(r.exit_code() == 3);
}

TEST_CASE("out-of-prefix indices are configuration errors") {
  ExperimentConfig cfg = dima_config();
  cfg.inputs = {classical::dima_word(2).to_rle()};
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}
