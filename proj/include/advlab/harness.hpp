#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "advlab/poly.hpp"

namespace advlab {

enum class Experiment { Enumerate, AdviceRoundtrip, SparseCompile, Census, Tally };

std::string experiment_name(Experiment e);
/// Throws ConfigError("experiment", ...) for unknown names.
Experiment parse_experiment(const std::string& name);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t n_max = 8;
  std::uint64_t trials = 1;
  Experiment experiment = Experiment::Enumerate;
  /// Per-length member cap for generated sparse languages.
  std::string sparsity_cap = "2*n";
  std::string output;
  std::string summary;
  /// Census only: overrides the generated machines' certificate length.
  std::optional<std::string> cert_len;
  /// Fill the elapsed_ms column; off by default so reports are reproducible.
  bool timing = false;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

struct ReportRow {
  std::uint64_t trial = 0;
  std::size_t n = 0;
  std::uint64_t members = 0;
  std::uint64_t queries = 0;
  std::uint64_t bound = 0;
  bool bound_ok = true;
  bool equivalence_ok = true;
  double elapsed_ms = 0.0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

class Language;

/// Enumeration rows for one language: per length, trie enumeration through
/// exact-length prefix oracles checked against brute force and the query bound.
std::vector<ReportRow> enumerate_rows(const Language& L, std::size_t n_max, std::uint64_t trial);

struct CompiledRunRecord;

/// Runs one trial of the configured experiment. Domain errors propagate
/// wrapped in TrialError. Compiler experiments (advice-roundtrip,
/// sparse-compile, census) append one record per input to `records` when given.
std::vector<ReportRow> run_trial(const ExperimentConfig& cfg, std::uint64_t trial,
                                 std::vector<CompiledRunRecord>* records = nullptr);

/// All trials across OpenMP threads; rows come back in trial order. The first
/// failing trial (lowest id) determines the rethrown error.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg);
/// Single-threaded reference for run_experiment.
std::vector<ReportRow> run_experiment_serial(const ExperimentConfig& cfg);

bool all_ok(const std::vector<ReportRow>& rows);

inline constexpr const char* kReportHeader =
    "trial,n,members,queries,bound,bound_ok,equivalence_ok,elapsed_ms";

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
std::string report_csv(const std::vector<ReportRow>& rows);

/// Totals, failure counts and the largest queries / ((n + 1)(members + 1)).
void write_summary_json(std::ostream& out, const ExperimentConfig& cfg,
                        const std::vector<ReportRow>& rows);

}  // namespace advlab
