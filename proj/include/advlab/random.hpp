#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "advlab/advice.hpp"
#include "advlab/expr.hpp"
#include "advlab/language.hpp"
#include "advlab/np_machine.hpp"
#include "advlab/poly.hpp"
#include "advlab/reductions.hpp"

namespace advlab {

/// Deterministic generator. The engine's output sequence is fixed by the
/// standard; bounded draws use rejection sampling rather than the
/// implementation-defined std distributions, so streams match across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one trial of a run.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }
  Word word(std::size_t length);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded explicit set with a uniformly drawn number of members in
/// [0, cap(l)] at each length l <= n_max. Throws InvalidCap if cap(l) > 2^l.
Language gen_sparse_language(std::uint64_t seed, std::size_t n_max, const Poly& cap);
Language gen_sparse_language(Rng& rng, std::size_t n_max, const Poly& cap);

/// Random explicit set over binary words of length <= n_max, each word kept
/// with probability 1/2 (not sparse).
Language gen_dense_language(Rng& rng, std::size_t n_max);

struct ExprShape {
  std::size_t max_depth = 4;
  std::size_t input_bits = 0;
  std::size_t cert_bits = 0;
  /// Largest k used in len(x) == k guards; guards are disabled when 0.
  std::size_t max_len_guard = 0;
};

/// Random expression; leaves reference only the bits allowed by `shape`
/// (constants when none are).
Expr random_expr(Rng& rng, const ExprShape& shape);

/// Table-backed family with length a*n + b, a <= 2, b <= 4, random bits.
AdviceFamily random_advice_family(Rng& rng, std::size_t n_max);

/// User that XORs a table bit selected by the input with the input's parity.
BoundedAdviceSolver random_advice_solver(Rng& rng, std::size_t n_max);

/// Machine asking 1-3 questions derived from x (never longer than x) and
/// combining the answers with a random expression. Given `oracle`, machines
/// whose answers up to n_max are the same with an empty oracle are redrawn
/// (up to 64 times).
DecisionMachine random_sparse_oracle_machine(Rng& rng, std::size_t n_max,
                                             const Language* oracle = nullptr);

struct CensusInstance {
  NpMachine sparse_oracle;
  OracleNpMachine machine;
};

/// Random nonempty NP-defined language, sparse under `cap` up to n_max
/// (found by rejection) and a random oracle NP machine over it, redrawn like
/// random_sparse_oracle_machine until the oracle matters. cert_len, when
/// given, overrides the machine's certificate length.
CensusInstance random_census_instance(Rng& rng, std::size_t n_max, const Poly& cap,
                                      const Poly* cert_len = nullptr);

}  // namespace advlab
