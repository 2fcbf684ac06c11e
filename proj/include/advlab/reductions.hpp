#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "advlab/advice.hpp"
#include "advlab/language.hpp"
#include "advlab/np_machine.hpp"
#include "advlab/oracle.hpp"
#include "advlab/poly.hpp"

namespace advlab {

/// A deterministic decision procedure over zero or more oracles, with a
/// declared polynomial bound on the total queries it makes per input.
struct DecisionMachine {
  using Body = std::function<bool(const Word& x, std::span<OracleHandle> oracles)>;

  Body body;
  Poly query_poly;
  std::size_t oracle_count = 1;
};

struct MachineRun {
  bool answer = false;
  std::uint64_t queries = 0;
  std::uint64_t bound = 0;

  bool within_bound() const noexcept { return queries <= bound; }
};

/// Runs the machine and measures the queries it made across all handles.
MachineRun run_machine(const DecisionMachine& m, const Word& x, std::span<OracleHandle> oracles);

/// Member lists as they travel inside advice and oracle queries: members in
/// ShortLex order joined by SEP. The single-member list [ε] is written "#" so
/// that it differs from the empty list "".
Word encode_member_list(std::vector<Word> members);
std::vector<Word> decode_member_list(const Word& encoded);

struct UnaryCompilation {
  DecisionMachine machine;
  /// The unary advice language the machine consults.
  Language oracle;
};

/// Machine that rebuilds a_|x| bit by bit from the unary advice language
/// (length(|x|) queries) and hands it to the solver's user.
UnaryCompilation advice_to_unary(const BoundedAdviceSolver& s, std::size_t n_max);

/// Same as advice_to_unary; additionally certifies the oracle sparse with
/// per-length bound 1 (throws SparsityViolated otherwise).
UnaryCompilation advice_to_sparse(const BoundedAdviceSolver& s, std::size_t n_max);

/// Solver whose advice at n is unary_advice_bits(oracle, q_max(n)) and whose
/// user runs `m`, answering each query 1^k from advice bit k. Queries of
/// length 0 or beyond q_max(n) throw QueryOutOfDeclaredRange.
BoundedAdviceSolver unary_to_advice(const DecisionMachine& m, const Language& oracle,
                                    const Poly& q_max);

/// Per-length statistics of a sparse-to-advice generator run.
struct GeneratorStats {
  std::uint64_t queries = 0;
  std::uint64_t max_members = 0;
  std::uint64_t bound = 0;
};

class GeneratorLog {
 public:
  void record(std::size_t n, GeneratorStats stats);
  std::map<std::size_t, GeneratorStats> snapshot() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::size_t, GeneratorStats> by_length_;
};

struct SparseAdviceCompilation {
  BoundedAdviceSolver solver;
  std::shared_ptr<GeneratorLog> log;
};

/// Compiles a machine over a sparse oracle into an advice solver. The advice
/// at n is the list of every member of the oracle up to length n, found by
/// trie enumeration against exact-length prefix oracles; the user answers each
/// query by list lookup. The machine must only ask words of length <= |x|.
/// Throws SparsityViolated if the oracle's census exceeds `bound` up to n_max.
SparseAdviceCompilation sparse_to_advice(const DecisionMachine& m, const Language& oracle,
                                         const Poly& bound, std::size_t n_max);

/// NP machine whose verifier may ask membership questions of an oracle.
struct OracleNpMachine {
  using Ask = std::function<bool(const Word&)>;
  using Verify = std::function<bool(const Word& x, const Word& cert, const Ask& ask)>;

  Verify verify;
  Poly cert_len;
  std::string description;
};

/// Two-level brute force: every certificate of k, each oracle question
/// answered by exhaustive certificate search for L.
bool census_direct(const OracleNpMachine& k, const Language& oracle, const Word& x,
                   std::size_t cap = kDefaultCertificateCap);

/// Per-length member lists found so far; write-once per length.
class CensusCache {
 public:
  bool lookup(std::size_t length, std::vector<Word>& out) const;
  void store(std::size_t length, std::vector<Word> members);

 private:
  mutable std::mutex mutex_;
  std::map<std::size_t, std::vector<Word>> layers_;
};

struct CensusCompilation {
  DecisionMachine machine;
  /// The single oracle: combine(prefix language of L at every length, final).
  Language oracle;
  /// {x # list : k accepts x with its oracle questions answered from list}.
  Language final_language;
  std::shared_ptr<CensusCache> cache;
};

/// Compiles an NP machine with an NP-defined sparse oracle into a
/// deterministic machine over one NP oracle. On input x the machine lists
/// every member of L up to |x| through ZERO-routed prefix queries (cached per
/// length), then asks one ONE-routed query x # list.
/// Throws SparsityViolated if L's census exceeds `bound` up to n_max.
CensusCompilation census_compile(const OracleNpMachine& k, const NpMachine& sparse_oracle,
                                 const Poly& bound, std::size_t n_max,
                                 std::size_t cap = kDefaultCertificateCap);

/// One report record for a compiled-machine run.
struct CompiledRunRecord {
  Word input;
  bool answer_direct = false;
  bool answer_compiled = false;
  std::vector<std::uint64_t> queries_by_oracle;
  bool budget_ok = true;
};

}  // namespace advlab
