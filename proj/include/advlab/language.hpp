#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "advlab/expr.hpp"
#include "advlab/np_machine.hpp"
#include "advlab/poly.hpp"
#include "advlab/word.hpp"

namespace advlab {

enum class LanguageKind { Explicit, Predicate, NpVerifier, Derived };

/// A named predicate on Words, total up to a fixed horizon (maximum word
/// length). Immutable; copies share the definition and are safe to read from
/// several threads.
///
/// Predicate and NpVerifier languages contain only binary words at least as
/// long as their largest x[i] reference. Derived languages wrap a pure
/// membership function, optionally with a per-length member enumerator used
/// in place of brute force.
class Language {
 public:
  using Membership = std::function<bool(const Word&)>;
  using Enumerator = std::function<std::vector<Word>(std::size_t length)>;

  /// Throws std::invalid_argument on duplicates or members past the horizon.
  static Language explicit_set(std::string name, std::size_t horizon, std::vector<Word> members);
  /// Throws std::invalid_argument if the expression reads certificate bits.
  static Language predicate(std::string name, std::size_t horizon, Expr expr);
  static Language np_verifier(std::string name, std::size_t horizon, NpMachine machine,
                              std::size_t cert_cap = kDefaultCertificateCap);
  static Language derived(std::string name, std::size_t horizon, Membership contains,
                          Enumerator enumerate = {}, bool binary_only = false);

  const std::string& name() const;
  std::size_t horizon() const;
  LanguageKind kind() const;

  /// Members of an explicit set, ShortLex-sorted. Empty for other kinds.
  const std::vector<Word>& explicit_members() const;
  /// Defining expression for Predicate and NpVerifier languages.
  const Expr* expression() const;
  const NpMachine* machine() const;
  std::size_t cert_cap() const;

  /// Membership without the horizon check.
  bool contains_unchecked(const Word& w) const;
  /// Non-null when the language knows its members of each length directly.
  const Enumerator& enumerator() const;
  bool binary_only() const;

  struct Impl;

 private:
  explicit Language(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Throws HorizonExceeded if |w| > L.horizon().
bool membership(const Language& L, const Word& w);

/// Members of exactly `length` symbols, lexicographic. Brute-force
/// enumeration runs across OpenMP threads.
std::vector<Word> members_at(const Language& L, std::size_t length);
/// Single-threaded reference for members_at.
std::vector<Word> members_at_serial(const Language& L, std::size_t length);

/// Every member of length <= n in ShortLex order.
std::vector<Word> members_up_to(const Language& L, std::size_t n);

struct CensusTable {
  /// counts[l] = number of members of length exactly l.
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](std::size_t length) const { return counts.at(length); }
  std::uint64_t max() const;
  std::uint64_t total() const;
};

CensusTable census(const Language& L, std::size_t n);

/// Per-length check: census count at l <= bound(l) for every l <= n.
bool is_sparse_up_to(const Language& L, std::size_t n, const Poly& bound);

bool is_unary(const Language& L, std::size_t n);

/// Integer value of 1x read as binary. Injective on binary words.
std::uint64_t tally_code(const Word& x);
/// Inverse of tally_code; throws std::invalid_argument for 0.
Word tally_decode(std::uint64_t code);

/// Unary language {1^tally_code(x) : x in L} with the given horizon. Throws
/// HorizonExceeded if a member's code exceeds it, std::invalid_argument if L
/// has a non-binary member.
Language tally_encode(const Language& L, std::size_t horizon);

}  // namespace advlab
