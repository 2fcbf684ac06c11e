#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "advlab/word.hpp"

namespace advlab {

enum class ExprKind { Const, InputBit, CertBit, LenEq, Not, And, Or, Xor };

/// Immutable boolean expression over input bits x[i], certificate bits c[i]
/// and the guard len(x) == k. Copies share structure.
class Expr {
 public:
  struct Node;

  static Expr constant(bool value);
  static Expr input_bit(std::size_t index);
  static Expr cert_bit(std::size_t index);
  static Expr len_eq(std::size_t length);

  friend Expr operator!(const Expr& e);
  friend Expr operator&(const Expr& a, const Expr& b);
  friend Expr operator|(const Expr& a, const Expr& b);
  friend Expr operator^(const Expr& a, const Expr& b);

  ExprKind kind() const;
  /// Constant value, bit index or guard length, depending on kind.
  std::size_t value() const;
  Expr child(std::size_t i) const;
  std::size_t arity() const;

  /// Largest x[i] / c[i] index referenced, if any.
  std::optional<std::size_t> max_input_index() const;
  std::optional<std::size_t> max_cert_index() const;
  /// Minimum input length for which every x[i] reference is in range.
  std::size_t min_input_length() const;
  std::size_t min_cert_length() const;
  std::size_t depth() const;

  friend bool operator==(const Expr& a, const Expr& b);

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const std::shared_ptr<const Node>& root() const noexcept { return node_; }

 private:
  std::shared_ptr<const Node> node_;
};

/// LL(1) parser; precedence ! > & > ^ > |, binary operators left-associative.
/// Accepts `true`, `false`, `x[i]`, `c[i]`, `len(x) == k` and parentheses.
Expr parse_expr(std::string_view text);

/// Canonical fully parenthesized form; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// Throws IndexOutOfRange if any reference in `e` falls outside input or cert,
/// whether or not evaluation would reach it. Both words must be binary.
bool eval_expr(const Expr& e, const Word& input, const Word& cert);

/// Same as eval_expr with the certificate packed MSB-first into `cert`
/// (c[0] is bit cert_len-1). No range checks; callers validate first.
bool eval_packed(const Expr& e, const Word& input, std::uint64_t cert, std::size_t cert_len);

/// Throws IndexOutOfRange when `e` references bits beyond the given lengths.
void check_ranges(const Expr& e, std::size_t input_len, std::size_t cert_len);

/// Fixes the first |prefix| input bits to `prefix` and turns the remaining
/// input bits x[|prefix|..length) into leading certificate bits; original
/// certificate bits shift right by length - |prefix|. len(x) guards resolve
/// against `length`. The result references no input bits, so one existential
/// search over its certificate covers both the input suffix and the old
/// certificate.
Expr bind_input_prefix(const Expr& e, const Word& prefix, std::size_t length);

}  // namespace advlab
