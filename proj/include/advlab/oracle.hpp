#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advlab/language.hpp"
#include "advlab/poly.hpp"

namespace advlab {

struct QueryRecord {
  Word query;
  bool answer;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

using Transcript = std::vector<QueryRecord>;

/// Query-counted access to a Language. Single owner: do not share one handle
/// between threads. query_count() always equals transcript().size().
class OracleHandle {
 public:
  explicit OracleHandle(Language language, std::optional<std::uint64_t> budget = std::nullopt)
      : language_(std::move(language)), budget_(budget) {}

  /// Throws BudgetExhausted on the (budget + 1)-th query and HorizonExceeded
  /// for over-long words; neither is recorded.
  bool query(const Word& w);

  const Language& language() const noexcept { return language_; }
  std::uint64_t query_count() const noexcept { return transcript_.size(); }
  std::optional<std::uint64_t> budget() const noexcept { return budget_; }
  const Transcript& transcript() const noexcept { return transcript_; }

  /// Same language and budget, no history.
  OracleHandle fresh() const { return OracleHandle(language_, budget_); }

 private:
  Language language_;
  std::optional<std::uint64_t> budget_;
  Transcript transcript_;
};

/// Routes ZERO·w to `left` and ONE·w to `right`. The empty word and words
/// starting with SEP are non-members. Horizon is 1 + max of the two.
Language combine(const Language& left, const Language& right);

/// Per-length sparsity bound of combine(left, right), given bounds for the
/// parts: b(l) = left_bound(l - 1) + right_bound(l - 1), and b(0) = 0.
std::uint64_t combined_bound(const Poly& left_bound, const Poly& right_bound, std::size_t length);

/// One "word<TAB>0|1" line per query.
void write_transcript(std::ostream& out, const Transcript& transcript);
/// Inverse of write_transcript; throws std::invalid_argument on malformed lines.
Transcript read_transcript(std::istream& in);

/// True iff re-asking every query of `transcript` against `language` gives
/// the recorded answers.
bool replay_matches(const Language& language, const Transcript& transcript);

}  // namespace advlab
