#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "advlab/oracle.hpp"
#include "advlab/word.hpp"

namespace advlab {

/// Asks "does some member of length `length` extend `prefix`?" through an
/// oracle, counting every question asked.
class PrefixProbe {
 public:
  using Ask = std::function<bool(std::size_t length, const Word& prefix)>;

  explicit PrefixProbe(Ask ask) : ask_(std::move(ask)) {}

  /// Queries 1^length # prefix on `handle`.
  static PrefixProbe over(OracleHandle& handle);
  /// Queries `route` · 1^length # prefix, for a prefix language that sits
  /// behind one side of a combined oracle.
  static PrefixProbe routed(OracleHandle& handle, Symbol route);
  /// Sends length-l questions to family[l].
  static PrefixProbe over_family(std::vector<OracleHandle>& family);

  bool operator()(std::size_t length, const Word& prefix) {
    ++queries_;
    return ask_(length, prefix);
  }

  std::uint64_t queries() const noexcept { return queries_; }

 private:
  Ask ask_;
  std::uint64_t queries_ = 0;
};

/// Greedy descent: certify `start` with one query, then repeatedly extend by
/// ZERO if some member continues that way, else by ONE, until `length` is
/// reached. Returns nullopt after exactly one query if no member of that
/// length extends `start`. At most 1 + 2*(length - |start|) queries.
std::optional<Word> extend_prefix(PrefixProbe& probe, std::size_t length, const Word& start);

/// Query bound for enumerate_sparse: 4 * (length + 1) * (members + 1).
std::uint64_t enumeration_bound(std::size_t length, std::uint64_t members);

/// Partially explored prefix trie for one target length.
struct TrieState {
  std::size_t length = 0;
  std::vector<Word> found;
  std::set<Word> frontier;
  std::set<Word> explored;
};

/// Every member of exactly `length` symbols, lexicographic. Starts the trie
/// at the empty prefix; each discovered member adds the unexplored siblings
/// along its path below the start prefix to the frontier, which is drained
/// in lexicographic order.
std::vector<Word> enumerate_sparse(PrefixProbe& probe, std::size_t length);

/// Same as enumerate_sparse, exposing the final trie.
TrieState enumerate_sparse_trie(PrefixProbe& probe, std::size_t length);

struct LayeredEnumeration {
  /// ShortLex order.
  std::vector<Word> members;
  std::vector<std::uint64_t> members_by_length;
  std::vector<std::uint64_t> queries_by_length;

  std::uint64_t total_queries() const;
};

/// enumerate_sparse for every length 0..n, concatenated.
LayeredEnumeration enumerate_up_to(PrefixProbe& probe, std::size_t n);

/// 4 * (n + 1)^2 * (s + 1), the cumulative bound with s = max members per length.
std::uint64_t layered_enumeration_bound(std::size_t n, std::uint64_t max_members);

}  // namespace advlab
