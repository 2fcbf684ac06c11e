#include "advlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "advlab/advice.hpp"
#include "advlab/errors.hpp"
#include "advlab/language.hpp"
#include "advlab/np_sim.hpp"
#include "advlab/random.hpp"
#include "advlab/reductions.hpp"
#include "advlab/search.hpp"
#include "parallel.hpp"

namespace advlab {

namespace {

constexpr std::size_t kMaxNMax = 24;
constexpr std::size_t kMaxCensusNMax = 10;
constexpr std::size_t kMaxTallyNMax = 16;

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

  double lap() {
    if (!enabled_) return 0.0;
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void add_record(std::vector<CompiledRunRecord>* records, const Word& x, bool direct, bool compiled,
                std::vector<std::uint64_t> queries, bool budget_ok) {
  if (records) records->push_back({x, direct, compiled, std::move(queries), budget_ok});
}

std::vector<ReportRow> advice_roundtrip_trial(const ExperimentConfig& cfg, std::uint64_t trial,
                                              std::vector<CompiledRunRecord>* records) {
  Rng rng = Rng::for_trial(cfg.seed, trial);
  Stopwatch clock(cfg.timing);
  const BoundedAdviceSolver original = random_advice_solver(rng, cfg.n_max);
  const Poly& length = original.family.length();
  const UnaryCompilation compiled = advice_to_unary(original, cfg.n_max);
  const BoundedAdviceSolver back =
      unary_to_advice(compiled.machine, compiled.oracle, advice_query_bound(length));

  SolverRun direct(original);
  SolverRun round_trip(back);
  OracleHandle machine_oracle(compiled.oracle);
  std::vector<ReportRow> rows;
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    OracleHandle h(compiled.oracle);
    const Word rebuilt = reconstruct_advice(h, n, length);
    const Word& expected = direct.advice_for(n);
    bool ok = rebuilt == expected && h.query_count() == length(n);
    bool bounded = true;
    for (const Word& x : binary_words(n)) {
      const bool want = direct.decide(x);
      const MachineRun run = run_machine(compiled.machine, x, std::span(&machine_oracle, 1));
      const bool back_answer = round_trip.decide(x);
      bounded = bounded && run.within_bound();
      ok = ok && run.answer == want && back_answer == want;
      add_record(records, x, want, back_answer == run.answer ? run.answer : !run.answer,
                 {0, run.queries}, run.within_bound());
    }
    ReportRow row;
    row.trial = trial;
    row.n = n;
    row.members = static_cast<std::uint64_t>(std::count(expected.str().begin(), expected.str().end(), '1'));
    row.queries = h.query_count();
    row.bound = length(n);
    row.bound_ok = row.queries <= row.bound && bounded;
    row.equivalence_ok = ok;
    row.elapsed_ms = clock.lap();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> sparse_compile_trial(const ExperimentConfig& cfg, std::uint64_t trial,
                                            std::vector<CompiledRunRecord>* records) {
  Rng rng = Rng::for_trial(cfg.seed, trial);
  Stopwatch clock(cfg.timing);
  const Poly cap = parse_poly(cfg.sparsity_cap);
  const Language oracle = gen_sparse_language(rng, cfg.n_max, cap);
  const DecisionMachine machine = random_sparse_oracle_machine(rng, cfg.n_max, &oracle);
  const SparseAdviceCompilation compiled = sparse_to_advice(machine, oracle, cap, cfg.n_max);

  SolverRun solver(compiled.solver);
  OracleHandle live(oracle);
  std::vector<ReportRow> rows;
  std::uint64_t members = 0;
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    members += members_at(oracle, n).size();
    bool ok = true;
    bool bounded = true;
    for (const Word& x : binary_words(n)) {
      const MachineRun direct = run_machine(machine, x, std::span(&live, 1));
      const bool compiled_answer = solver.decide(x);
      bounded = bounded && direct.within_bound();
      ok = ok && compiled_answer == direct.answer;
      add_record(records, x, direct.answer, compiled_answer, {direct.queries, 0},
                 direct.within_bound());
    }
    solver.advice_for(n);
    const GeneratorStats stats = compiled.log->snapshot().at(n);
    ReportRow row;
    row.trial = trial;
    row.n = n;
    row.members = members;
    row.queries = stats.queries;
    row.bound = stats.bound;
    row.bound_ok = stats.queries <= stats.bound && bounded;
    row.equivalence_ok = ok;
    row.elapsed_ms = clock.lap();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> census_trial(const ExperimentConfig& cfg, std::uint64_t trial,
                                    std::vector<CompiledRunRecord>* records) {
  Rng rng = Rng::for_trial(cfg.seed, trial);
  Stopwatch clock(cfg.timing);
  const Poly cap = parse_poly(cfg.sparsity_cap);
  std::optional<Poly> cert_len;
  if (cfg.cert_len) cert_len = parse_poly(*cfg.cert_len);
  const CensusInstance instance =
      random_census_instance(rng, cfg.n_max, cap, cert_len ? &*cert_len : nullptr);
  const CensusCompilation compiled =
      census_compile(instance.machine, instance.sparse_oracle, cap, cfg.n_max);
  const Language L = Language::np_verifier("L", cfg.n_max, instance.sparse_oracle);

  OracleHandle handle(compiled.oracle);
  std::vector<ReportRow> rows;
  std::uint64_t members = 0;
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    members += members_at(L, n).size();
    bool ok = true;
    bool bounded = true;
    std::uint64_t worst = 0;
    for (const Word& x : binary_words(n)) {
      const std::size_t mark = handle.transcript().size();
      const MachineRun run = run_machine(compiled.machine, x, std::span(&handle, 1));
      const auto finals = std::count_if(
          handle.transcript().begin() + static_cast<std::ptrdiff_t>(mark), handle.transcript().end(),
          [](const QueryRecord& r) { return !r.query.empty() && r.query[0] == Symbol::One; });
      worst = std::max(worst, run.queries);
      bounded = bounded && run.within_bound();
      const bool direct = census_direct(instance.machine, L, x);
      ok = ok && finals == 1 && run.answer == direct;
      add_record(records, x, direct, run.answer, {0, run.queries}, run.within_bound());
    }
    ReportRow row;
    row.trial = trial;
    row.n = n;
    row.members = members;
    row.queries = worst;
    row.bound = compiled.machine.query_poly(n);
    row.bound_ok = bounded;
    row.equivalence_ok = ok;
    row.elapsed_ms = clock.lap();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> tally_trial(const ExperimentConfig& cfg, std::uint64_t trial) {
  Rng rng = Rng::for_trial(cfg.seed, trial);
  Stopwatch clock(cfg.timing);
  const Language L = gen_dense_language(rng, cfg.n_max);
  const std::size_t horizon = (std::size_t{2} << cfg.n_max) - 1;
  const Language unary = tally_encode(L, horizon);
  const bool unary_ok = is_unary(unary, horizon);
  std::vector<ReportRow> rows;
  for (std::size_t n = 0; n <= cfg.n_max; ++n) {
    bool ok = unary_ok;
    std::uint64_t members = 0;
    for (const Word& x : binary_words(n)) {
      const bool in = membership(L, x);
      members += in ? 1 : 0;
      const std::uint64_t code = tally_code(x);
      ok = ok && tally_decode(code) == x && membership(unary, Word::ones(code)) == in;
    }
    ReportRow row;
    row.trial = trial;
    row.n = n;
    row.members = members;
    row.equivalence_ok = ok;
    row.elapsed_ms = clock.lap();
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<ReportRow>> run_trials(const ExperimentConfig& cfg, bool parallel) {
  cfg.validate();
  std::vector<std::vector<ReportRow>> per_trial(cfg.trials);
  auto one = [&](std::int64_t t) {
    per_trial[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::uint64_t>(t));
  };
  if (parallel) {
    // Trials are heavy; any count above one is worth spreading.
    detail::parallel_for(static_cast<std::int64_t>(cfg.trials), one, 2);
  } else {
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(cfg.trials); ++t) one(t);
  }
  return per_trial;
}

std::vector<ReportRow> flatten(std::vector<std::vector<ReportRow>> per_trial) {
  std::vector<ReportRow> rows;
  for (auto& trial_rows : per_trial) {
    rows.insert(rows.end(), trial_rows.begin(), trial_rows.end());
  }
  return rows;
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Enumerate: return "enumerate";
    case Experiment::AdviceRoundtrip: return "advice-roundtrip";
    case Experiment::SparseCompile: return "sparse-compile";
    case Experiment::Census: return "census";
    case Experiment::Tally: return "tally";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::Enumerate, Experiment::AdviceRoundtrip, Experiment::SparseCompile,
                       Experiment::Census, Experiment::Tally}) {
    if (experiment_name(e) == name) return e;
  }
  throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (n_max > kMaxNMax) throw ConfigError("n_max", "must be at most " + std::to_string(kMaxNMax));
  if (experiment == Experiment::Census && n_max > kMaxCensusNMax) {
    throw ConfigError("n_max", "census runs support n_max <= " + std::to_string(kMaxCensusNMax));
  }
  if (experiment == Experiment::Tally && n_max > kMaxTallyNMax) {
    throw ConfigError("n_max", "tally runs support n_max <= " + std::to_string(kMaxTallyNMax));
  }
  try {
    parse_poly(sparsity_cap);
  } catch (const SyntaxError& e) {
    throw ConfigError("sparsity_cap", e.what());
  }
  if (cert_len) {
    try {
      parse_poly(*cert_len);
    } catch (const SyntaxError& e) {
      throw ConfigError("cert_len", e.what());
    }
  }
}

std::vector<ReportRow> enumerate_rows(const Language& L, std::size_t n_max, std::uint64_t trial) {
  std::vector<OracleHandle> family;
  for (std::size_t l = 0; l <= n_max; ++l) family.emplace_back(prefix_language_exact(L, l));
  PrefixProbe probe = PrefixProbe::over_family(family);
  std::vector<ReportRow> rows;
  for (std::size_t l = 0; l <= n_max; ++l) {
    const std::uint64_t before = probe.queries();
    const std::vector<Word> found = enumerate_sparse(probe, l);
    const std::vector<Word> truth = members_at(L, l);
    ReportRow row;
    row.trial = trial;
    row.n = l;
    row.members = truth.size();
    row.queries = probe.queries() - before;
    row.bound = enumeration_bound(l, truth.size());
    row.bound_ok = row.queries <= row.bound;
    row.equivalence_ok = found == truth;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> run_trial(const ExperimentConfig& cfg, std::uint64_t trial,
                                 std::vector<CompiledRunRecord>* records) {
  try {
    switch (cfg.experiment) {
      case Experiment::Enumerate: {
        Rng rng = Rng::for_trial(cfg.seed, trial);
        Stopwatch clock(cfg.timing);
        const Language L = gen_sparse_language(rng, cfg.n_max, parse_poly(cfg.sparsity_cap));
        auto rows = enumerate_rows(L, cfg.n_max, trial);
        if (cfg.timing && !rows.empty()) rows.back().elapsed_ms = clock.lap();
        return rows;
      }
      case Experiment::AdviceRoundtrip:
        return advice_roundtrip_trial(cfg, trial, records);
      case Experiment::SparseCompile:
        return sparse_compile_trial(cfg, trial, records);
      case Experiment::Census:
        return census_trial(cfg, trial, records);
      case Experiment::Tally:
        return tally_trial(cfg, trial);
    }
  } catch (const TrialError&) {
    throw;
  } catch (const std::exception& e) {
    throw TrialError(trial, e.what(), std::current_exception());
  }
  return {};
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  return flatten(run_trials(cfg, true));
}

std::vector<ReportRow> run_experiment_serial(const ExperimentConfig& cfg) {
  return flatten(run_trials(cfg, false));
}

bool all_ok(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.bound_ok && r.equivalence_ok; });
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kReportHeader << '\n';
  for (const ReportRow& r : rows) {
    out << r.trial << ',' << r.n << ',' << r.members << ',' << r.queries << ',' << r.bound << ','
        << (r.bound_ok ? 1 : 0) << ',' << (r.equivalence_ok ? 1 : 0) << ',' << std::fixed
        << std::setprecision(3) << r.elapsed_ms << '\n';
  }
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  write_report_csv(out, rows);
  return out.str();
}

void write_summary_json(std::ostream& out, const ExperimentConfig& cfg,
                        const std::vector<ReportRow>& rows) {
  std::uint64_t bound_failures = 0;
  std::uint64_t equivalence_failures = 0;
  std::uint64_t total_queries = 0;
  double max_ratio = 0.0;
  for (const ReportRow& r : rows) {
    bound_failures += r.bound_ok ? 0 : 1;
    equivalence_failures += r.equivalence_ok ? 0 : 1;
    total_queries += r.queries;
    const double scale = static_cast<double>((r.n + 1) * (r.members + 1));
    max_ratio = std::max(max_ratio, static_cast<double>(r.queries) / scale);
  }
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(cfg.experiment);
  j["seed"] = cfg.seed;
  j["n_max"] = cfg.n_max;
  j["trials"] = cfg.trials;
  j["rows"] = rows.size();
  j["total_queries"] = total_queries;
  j["bound_failures"] = bound_failures;
  j["equivalence_failures"] = equivalence_failures;
  j["max_query_ratio"] = max_ratio;
  j["ok"] = bound_failures == 0 && equivalence_failures == 0;
  out << j.dump(2) << '\n';
}

}  // namespace advlab
