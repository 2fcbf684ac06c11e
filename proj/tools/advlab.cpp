// Command-line driver for the experiments.
//
// Exit status: 0 all checks passed, 1 some bound or equivalence check failed,
// 2 bad configuration or usage, 3 a trial raised a domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "advlab/errors.hpp"
#include "advlab/harness.hpp"
#include "advlab/io.hpp"
#include "advlab/reductions.hpp"

namespace fs = std::filesystem;
using namespace advlab;

namespace {

struct Options {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_max;
  std::optional<std::uint64_t> trials;
  std::optional<std::string> cap;
  std::optional<std::string> cert_len;
  std::optional<std::string> out;
  std::optional<std::string> summary;
  std::optional<std::string> records;
  std::optional<std::string> language;
  bool timing = false;
  bool serial = false;
};

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON config file; flags override its fields");
  cmd->add_option("--seed", o.seed, "64-bit seed");
  cmd->add_option("--n-max", o.n_max, "largest input length");
  cmd->add_option("--trials", o.trials, "number of trials");
  cmd->add_option("--cap", o.cap, "per-length sparsity cap polynomial, e.g. 2*n");
  cmd->add_option("--out", o.out, "CSV report path ('-' for stdout)");
  cmd->add_option("--summary", o.summary, "JSON summary path");
  cmd->add_flag("--timing", o.timing, "fill the elapsed_ms column");
  cmd->add_flag("--serial", o.serial, "run trials on one thread");
}

ExperimentConfig build_config(Experiment e, const Options& o) {
  ExperimentConfig cfg;
  if (o.config) cfg = load_config(*o.config);
  cfg.experiment = e;
  if (o.seed) cfg.seed = *o.seed;
  if (o.n_max) cfg.n_max = *o.n_max;
  if (o.trials) cfg.trials = *o.trials;
  if (o.cap) cfg.sparsity_cap = *o.cap;
  if (o.cert_len) cfg.cert_len = *o.cert_len;
  if (o.out) cfg.output = *o.out;
  if (o.summary) cfg.summary = *o.summary;
  if (o.timing) cfg.timing = true;
  cfg.validate();
  return cfg;
}

// An empty output falls back to $ADVLAB_OUT_DIR/<experiment>.csv, else stdout.
std::string resolve_output(const ExperimentConfig& cfg) {
  if (!cfg.output.empty()) return cfg.output;
  if (const char* dir = std::getenv("ADVLAB_OUT_DIR"); dir && *dir) {
    fs::create_directories(dir);
    return (fs::path(dir) / (experiment_name(cfg.experiment) + ".csv")).string();
  }
  return "-";
}

template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  if (const fs::path parent = fs::path(path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("output", "cannot write '" + path + "'");
  write(out);
}

std::vector<ReportRow> run(const ExperimentConfig& cfg, const Options& o) {
  if (o.language) {
    const Language L = load_language(*o.language);
    if (cfg.n_max > L.horizon()) {
      throw ConfigError("n_max", "exceeds the horizon of '" + L.name() + "'");
    }
    return enumerate_rows(L, cfg.n_max, 0);
  }
  return o.serial ? run_experiment_serial(cfg) : run_experiment(cfg);
}

void write_records(const ExperimentConfig& cfg, const std::string& path) {
  std::vector<CompiledRunRecord> records;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) run_trial(cfg, t, &records);
  emit(path, [&](std::ostream& out) {
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  });
}

int run_command(Experiment e, const Options& o) {
  const ExperimentConfig cfg = build_config(e, o);
  const auto rows = run(cfg, o);
  emit(resolve_output(cfg), [&](std::ostream& out) { write_report_csv(out, rows); });
  if (!cfg.summary.empty()) {
    emit(cfg.summary, [&](std::ostream& out) { write_summary_json(out, cfg, rows); });
  }
  if (o.records) write_records(cfg, *o.records);
  if (!all_ok(rows)) {
    std::cerr << "advlab: " << experiment_name(e) << ": some checks failed\n";
    return 1;
  }
  return 0;
}

int check_config(const std::string& path) {
  const ExperimentConfig cfg = load_config(path);
  std::cout << config_to_json(cfg).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale experiments on oracles, advice and sparse languages"};
  app.require_subcommand(1);

  Options o;
  std::string check_path;
  std::optional<Experiment> chosen;

  const std::pair<const char*, Experiment> experiments[] = {
      {"enumerate", Experiment::Enumerate},
      {"advice-roundtrip", Experiment::AdviceRoundtrip},
      {"sparse-compile", Experiment::SparseCompile},
      {"census", Experiment::Census},
      {"tally", Experiment::Tally},
  };
  const char* help[] = {
      "trie enumeration of random sparse languages through prefix oracles",
      "advice families through the unary advice language and back",
      "sparse-oracle machines compiled to advice solvers",
      "NP machines with a sparse NP oracle compiled to one NP query",
      "tally padding of random binary languages",
  };
  for (std::size_t i = 0; i < std::size(experiments); ++i) {
    auto* cmd = app.add_subcommand(experiments[i].first, help[i]);
    add_run_flags(cmd, o);
    const Experiment e = experiments[i].second;
    cmd->callback([&chosen, e] { chosen = e; });
    if (e == Experiment::Enumerate) {
      cmd->add_option("--language", o.language, "enumerate a language file instead of random ones");
    }
    if (e == Experiment::Census) {
      cmd->add_option("--cert-len", o.cert_len, "certificate length polynomial for the outer machine");
    }
    if (e == Experiment::AdviceRoundtrip || e == Experiment::SparseCompile || e == Experiment::Census) {
      cmd->add_option("--records", o.records, "JSON-lines file of per-input run records");
    }
  }
  auto* check = app.add_subcommand("check-config", "validate a config file and print it normalized");
  check->add_option("file", check_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return check_config(check_path);
    return run_command(*chosen, o);
  } catch (const ConfigError& e) {
    std::cerr << "advlab: config error in '" << e.field() << "': " << e.what() << '\n';
    return 2;
  } catch (const TrialError& e) {
    std::cerr << "advlab: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "advlab: " << e.what() << '\n';
    return 3;
  }
}
