#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "advlab/language.hpp"
#include "advlab/oracle.hpp"
#include "advlab/poly.hpp"

namespace advlab {

/// Maps an input length n to its advice string a_n.
///
/// Exact families promise a binary a_n of exactly length(n) bits. Bounded
/// families (produced by the sparse compiler, whose advice is a SEP-joined
/// member list) only promise |a_n| <= length(n).
class AdviceFamily {
 public:
  using Generator = std::function<Word(std::size_t n)>;

  AdviceFamily(Poly length, Generator generator, bool exact = true)
      : length_(std::move(length)), generator_(std::move(generator)), exact_(exact) {}

  /// A family backed by an explicit table. Lengths missing from the table, and
  /// entries shorter than length(n), are padded with ZERO. Throws
  /// std::invalid_argument for non-binary or over-long entries.
  static AdviceFamily from_table(Poly length, std::map<std::size_t, Word> table);

  const Poly& length() const noexcept { return length_; }
  bool exact() const noexcept { return exact_; }

  /// Runs the generator and checks the length contract; throws std::logic_error
  /// when the generator breaks it.
  Word advice(std::size_t n) const;

 private:
  Poly length_;
  Generator generator_;
  bool exact_;
};

/// A machine that decides x from x and the advice for |x|.
struct BoundedAdviceSolver {
  AdviceFamily family;
  std::function<bool(const Word& x, const Word& advice)> user;
};

/// Generates advice once per input length and reuses it for later inputs.
/// Not thread-safe; use one run per thread.
class SolverRun {
 public:
  explicit SolverRun(const BoundedAdviceSolver& solver) : solver_(&solver) {}

  bool decide(const Word& x);
  const Word& advice_for(std::size_t n);
  std::size_t generated() const noexcept { return cache_.size(); }

 private:
  const BoundedAdviceSolver* solver_;
  std::map<std::size_t, Word> cache_;
};

inline bool run_solver(const BoundedAdviceSolver& s, const Word& x) { return SolverRun(s).decide(x); }

/// Cantor pairing (n + m)(n + m + 1)/2 + m.
std::uint64_t pair_index(std::uint64_t n, std::uint64_t m);

/// A polynomial upper bound on pair_index(n, length(n)) for all n.
Poly advice_query_bound(const Poly& length);

/// Unary language {1^pair_index(n, m) : n <= n_max, 1 <= m <= |a_n|, bit m of
/// a_n is ONE}. Horizon is advice_query_bound(length)(n_max), so unary-bit
/// extraction up to that bound stays in range. Needs an exact family.
Language advice_language(const AdviceFamily& f, std::size_t n_max);

/// Rebuilds a_n from an oracle over advice_language with exactly length(n)
/// queries, one per bit.
Word reconstruct_advice(OracleHandle& h, std::size_t n, const Poly& length);

/// Bit m-1 is ONE iff 1^m is in L, for m = 1..q_max.
Word unary_advice_bits(const Language& L, std::size_t q_max);

}  // namespace advlab
