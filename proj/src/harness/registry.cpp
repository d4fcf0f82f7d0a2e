#include "bqsim/harness/registry.hpp"

#include <cmath>

#include "bqsim/classical/am75.hpp"
#include "bqsim/classical/dima.hpp"
#include "bqsim/classical/log_transform.hpp"
#include "bqsim/classical/upower64.hpp"
#include "bqsim/coin.hpp"
#include "bqsim/core/errors.hpp"
#include "bqsim/quantum.hpp"

namespace bqsim::harness {

namespace {

using oracles::LanguageId;

const SubsetOracle& need(const RunContext& ctx) {
  if (ctx.oracle == nullptr) throw ConfigError("recognizer needs a subset oracle");
  return *ctx.oracle;
}

RunStats deterministic_stats(bool accept, const Word& w) {
  RunStats s;
  s.decision = accept ? Decision::Accept : Decision::Reject;
  s.steps = w.length() + 1;
  s.passes = 1;
  return s;
}

// P(majority of r coin-bit extractions of x_k reads 1).
std::optional<ExactValue> extraction_accept(const SubsetOracle& o, unsigned k, unsigned r, std::uint64_t cap) {
  if (k > o.size()) return std::nullopt;
  if (coin::tosses_for(k) > cap) return std::nullopt;
  const Rational err = coin::majority_error(coin::exact_error_probability(o, k, cap), r);
  const Rational acc = o.query(static_cast<std::int64_t>(k)) == 1 ? Rational(1) - err : err;
  return ExactValue{acc, to_double(acc)};
}

ExactValue certain(bool accept) { return ExactValue{Rational(accept ? 1 : 0), accept ? 1.0 : 0.0}; }

double len_of(const Word& w) { return w.length().get_d(); }

std::vector<Recognizer> build() {
  std::vector<Recognizer> v;

  v.push_back({"am75_member", LanguageId::AM75, RecognizerKind::Deterministic,
               [](const Word& w, const RunContext&, RandomSource&) {
                 return deterministic_stats(!w.empty() && w.is_unary_over('a') && classical::am75_member(w.length()), w);
               },
               [](const Word&, const RunContext&) { return Budget{}; }, {}});

  v.push_back({"am75p_member", LanguageId::AM75P, RecognizerKind::Deterministic,
               [](const Word& w, const RunContext&, RandomSource&) {
                 return deterministic_stats(!w.empty() && w.is_unary_over('a') && classical::am75p_member(w.length()), w);
               },
               [](const Word&, const RunContext&) { return Budget{}; }, {}});

  v.push_back({"ptm_am75p_I", LanguageId::AM75P_I, RecognizerKind::Probabilistic,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 return classical::ptm_am75p_I(w, need(ctx), ctx.params, rng);
               },
               [](const Word& w, const RunContext&) {
                 Budget b;
                 b.space_work = classical::am75p_space_budget(w.length());
                 return b;
               },
               [](const Word& w, const RunContext& ctx) -> std::optional<ExactValue> {
                 if (w.empty() || !w.is_unary_over('a') || !classical::am75p_member(w.length())) return certain(false);
                 const long m = exact_log(classical::f_of_n(w.length()).f, 64);
                 return extraction_accept(need(ctx), static_cast<unsigned>(m), ctx.params.repetitions,
                                          ctx.max_exact_tosses);
               }});

  v.push_back({"upower64_member", LanguageId::UPOWER64, RecognizerKind::Deterministic,
               [](const Word& w, const RunContext&, RandomSource&) {
                 return deterministic_stats(classical::upower64_member(w), w);
               },
               [](const Word&, const RunContext&) { return Budget{}; }, {}});

  v.push_back({"ptm1_upower64_I", LanguageId::UPOWER64_I, RecognizerKind::Probabilistic,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 return classical::ptm1_upower64_I(w, need(ctx), ctx.params, rng);
               },
               [](const Word& w, const RunContext&) {
                 Budget b;
                 b.steps = classical::upower64_step_budget(w.length());
                 b.space_work = classical::upower64_space_budget(w.length());
                 return b;
               },
               [](const Word& w, const RunContext& ctx) -> std::optional<ExactValue> {
                 if (!classical::upower64_member(w)) return certain(false);
                 return extraction_accept(need(ctx), static_cast<unsigned>(exact_log(w.length(), 64)), 1,
                                          ctx.max_exact_tosses);
               }});

  auto dima_exact = [](const Word& w, const RunContext& ctx) -> std::optional<ExactValue> {
    const auto shape = classical::parse_dima(w);
    if (!shape) return certain(false);
    return extraction_accept(need(ctx), shape->k, ctx.params.repetitions, ctx.max_exact_tosses);
  };
  auto dca2_budget = [](const Word& w) {
    Budget b;
    b.steps = w.empty() ? 1.0 : classical::dca2_step_budget(w.length());
    b.counter = len_of(w);
    return b;
  };

  v.push_back({"dca2_dima", LanguageId::DIMA, RecognizerKind::Deterministic,
               [](const Word& w, const RunContext& ctx, RandomSource&) { return classical::dca2_dima(w, ctx.params); },
               [dca2_budget](const Word& w, const RunContext&) { return dca2_budget(w); }, {}});

  v.push_back({"pca2_dima_I", LanguageId::DIMA_I, RecognizerKind::Probabilistic,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 return classical::pca2_dima_I(w, need(ctx), ctx.params, rng);
               },
               [dca2_budget](const Word& w, const RunContext& ctx) {
                 Budget b = dca2_budget(w);
                 b.steps += ctx.params.repetitions * classical::pca2_step_budget_per_repetition(w.length());
                 return b;
               },
               dima_exact});

  v.push_back({"pca_sweeping_dima_I", LanguageId::DIMA_I, RecognizerKind::Probabilistic,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 return classical::pca_sweeping_dima_I(w, need(ctx), ctx.params, rng);
               },
               [](const Word& w, const RunContext& ctx) {
                 Budget b;
                 b.steps = classical::sweeping_step_budget(w.length(), ctx.params.repetitions);
                 b.counter = len_of(w);
                 return b;
               },
               dima_exact});

  v.push_back({"ptm_log_recognizer", LanguageId::LOG_DIMA_I, RecognizerKind::Probabilistic,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 return classical::ptm_log_recognizer(w, classical::LogInner::DimaI, need(ctx), ctx.params, rng);
               },
               [](const Word& w, const RunContext&) {
                 // the counter serves only the inner machine, whose input has about log2|x| symbols
                 Budget b;
                 b.counter = static_cast<double>(bit_length(w.length()));
                 return b;
               },
               {}});

  v.push_back({"rtqcfa", LanguageId::POWER_EQ, RecognizerKind::Quantum,
               [](const Word& w, const RunContext&, RandomSource& rng) {
                 const auto round = quantum::rtqcfa_round(w);
                 const auto sample = quantum::sample_rounds(round, rng);
                 RunStats s;
                 s.discipline = HeadDiscipline::RestartingRealtime;
                 s.decision = sample.decision;
                 s.steps = round.steps;
                 s.passes = 1;
                 s.rounds = 1;
                 s.log2_skipped_rounds = sample.log2_rounds;
                 return s;
               },
               [](const Word& w, const RunContext&) {
                 Budget b;
                 b.steps = len_of(w) + 1.0;  // one round, strictly realtime
                 return b;
               },
               [](const Word& w, const RunContext&) -> std::optional<ExactValue> {
                 const Rational a = quantum::rtqcfa_overall(w).accept_probability;
                 return ExactValue{a, to_double(a)};
               }});

  v.push_back({"power_eq_I", LanguageId::POWER_EQ_I, RecognizerKind::Quantum,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 const auto o = quantum::power_eq_I(w, need(ctx));
                 const auto sample = quantum::sample_rounds(o.base, rng);
                 RunStats s;
                 s.discipline = HeadDiscipline::RestartingRealtime;
                 s.decision = sample.decision;
                 if (s.decision == Decision::Accept && !(rng.open_unit() < o.adh.p_out)) s.decision = Decision::Reject;
                 s.steps = o.base.steps;
                 s.passes = 1;
                 s.rounds = 1;
                 s.log2_skipped_rounds = sample.log2_rounds;
                 return s;
               },
               [](const Word& w, const RunContext&) {
                 Budget b;
                 b.steps = len_of(w) + 1.0;
                 return b;
               },
               [](const Word& w, const RunContext& ctx) -> std::optional<ExactValue> {
                 return ExactValue{std::nullopt, quantum::power_eq_I(w, need(ctx)).accept_probability};
               }});

  v.push_back({"qcca_upower8_I", LanguageId::UPOWER8_I, RecognizerKind::Quantum,
               [](const Word& w, const RunContext& ctx, RandomSource& rng) {
                 RunStats s;
                 s.discipline = HeadDiscipline::TwoWay;
                 s.steps = w.length() + 1;
                 s.passes = 1;
                 s.rounds = 1;
                 if (w.empty() || !w.is_unary_over('a')) return s;
                 s.decision = quantum::sample_upower8(quantum::qcca_upower8_I(w.length(), need(ctx)), rng);
                 return s;
               },
               [](const Word&, const RunContext&) { return Budget{}; },
               [](const Word& w, const RunContext& ctx) -> std::optional<ExactValue> {
                 if (w.empty() || !w.is_unary_over('a')) return certain(false);
                 const auto o = quantum::qcca_upower8_I(w.length(), need(ctx));
                 if (!o.screened) return certain(false);
                 return ExactValue{std::nullopt, o.accept_probability};
               }});
  return v;
}

}  // namespace

const std::vector<Recognizer>& recognizers() {
  static const std::vector<Recognizer> all = build();
  return all;
}

const Recognizer* find_recognizer(const std::string& name) {
  for (const auto& r : recognizers()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace bqsim::harness
