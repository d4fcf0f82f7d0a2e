#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bqsim/classical/am75.hpp"
#include "bqsim/classical/log_transform.hpp"
#include "bqsim/coin.hpp"
#include "bqsim/core/errors.hpp"
#include "bqsim/harness/config.hpp"
#include "bqsim/harness/experiment.hpp"
#include "bqsim/harness/stats.hpp"
#include "bqsim/oracles.hpp"
#include "bqsim/quantum.hpp"

namespace py = pybind11;
using namespace bqsim;

namespace {

oracles::LanguageId language(const std::string& name) {
  const auto id = oracles::parse_language(name);
  if (!id) throw ConfigError("unknown language: " + name);
  return *id;
}

}  // namespace

PYBIND11_MODULE(_bqsim, m) {
  m.doc() = "Recognizer simulators for sublogarithmic-space language families";
  m.attr("__version__") = harness::kVersion;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<OutOfPrefixError>(m, "OutOfPrefixError", PyExc_IndexError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<SimulatorFault>(m, "SimulatorFault", PyExc_RuntimeError);

  m.def("languages", [] {
    std::vector<std::string> out;
    for (auto id : oracles::all_languages()) out.emplace_back(oracles::to_string(id));
    return out;
  });

  m.def(
      "is_member",
      [](const std::string& lang, const std::string& rle, const std::string& prefix) {
        const auto id = language(lang);
        const Word w = Word::parse_rle(rle);
        if (prefix.empty()) return oracles::oracle_membership(id, w);
        const SubsetOracle o = SubsetOracle::parse(prefix);
        return oracles::oracle_membership(id, w, &o);
      },
      py::arg("language"), py::arg("input"), py::arg("prefix") = "");

  m.def(
      "enumerate_members",
      [](const std::string& lang, const std::string& bound, const std::string& prefix) {
        std::vector<std::string> out;
        std::optional<SubsetOracle> o;
        if (!prefix.empty()) o = SubsetOracle::parse(prefix);
        for (const Word& w : oracles::enumerate_members(language(lang), BigInt(bound), o ? &*o : nullptr))
          out.push_back(w.to_rle());
        return out;
      },
      py::arg("language"), py::arg("bound"), py::arg("prefix") = "");

  m.def("least_non_divisor", [](const std::string& n) { return oracles::least_non_divisor(BigInt(n)).get_str(); });

  m.def(
      "coin_error",
      [](const std::string& prefix, unsigned k) {
        return to_string(coin::exact_error_probability(SubsetOracle::parse(prefix), k));
      },
      py::arg("prefix"), py::arg("k"), "Exact extraction error as \"num/den\".");

  m.def(
      "adh_correct",
      [](const std::string& prefix, unsigned j) {
        return quantum::adh_accept_probability(SubsetOracle::parse(prefix), j).p_correct;
      },
      py::arg("prefix"), py::arg("j"));

  m.def("log_transform", [](const std::string& bits) { return classical::log_transform(Word::from_string(bits)).to_rle(); });

  m.def(
      "wilson_interval",
      [](std::uint64_t successes, std::uint64_t trials, double confidence) {
        const auto i = harness::wilson_interval(successes, trials, confidence);
        return std::make_pair(i.low, i.high);
      },
      py::arg("successes"), py::arg("trials"), py::arg("confidence") = 0.99);

  m.def(
      "run_experiment",
      [](const std::string& config_json, const std::string& format) {
        const auto cfg = harness::config_from_json(nlohmann::json::parse(config_json));
        harness::validate(cfg);
        const auto report = harness::run_experiment(cfg);
        return py::make_tuple(harness::emit_report(report, harness::parse_format(format)), report.exit_code());
      },
      py::arg("config_json"), py::arg("format") = "json",
      "Runs an experiment from a JSON config; returns (report text, exit code).");
}
