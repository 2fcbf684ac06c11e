#include "advlab/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

#include "advlab/errors.hpp"

namespace advlab {

struct Expr::Node {
  ExprKind kind;
  std::size_t value = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  // Cached reference maxima, as index + 1 (0 means none).
  std::size_t input_need = 0;
  std::size_t cert_need = 0;
  std::size_t depth = 1;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr leaf(ExprKind kind, std::size_t value) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->value = value;
  if (kind == ExprKind::InputBit) n->input_need = value + 1;
  if (kind == ExprKind::CertBit) n->cert_need = value + 1;
  return n;
}

NodePtr branch(ExprKind kind, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->input_need = std::max(lhs->input_need, rhs ? rhs->input_need : 0);
  n->cert_need = std::max(lhs->cert_need, rhs ? rhs->cert_need : 0);
  n->depth = 1 + std::max(lhs->depth, rhs ? rhs->depth : 0);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool same(const Expr::Node& a, const Expr::Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.value != b.value) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same(*a.rhs, *b.rhs)) return false;
  return true;
}

template <typename InputBit, typename CertBit>
bool evaluate(const Expr::Node& n, std::size_t input_len, const InputBit& x, const CertBit& c) {
  switch (n.kind) {
    case ExprKind::Const:
      return n.value != 0;
    case ExprKind::InputBit:
      return x(n.value);
    case ExprKind::CertBit:
      return c(n.value);
    case ExprKind::LenEq:
      return input_len == n.value;
    case ExprKind::Not:
      return !evaluate(*n.lhs, input_len, x, c);
    case ExprKind::And:
      return evaluate(*n.lhs, input_len, x, c) && evaluate(*n.rhs, input_len, x, c);
    case ExprKind::Or:
      return evaluate(*n.lhs, input_len, x, c) || evaluate(*n.rhs, input_len, x, c);
    case ExprKind::Xor:
      return evaluate(*n.lhs, input_len, x, c) != evaluate(*n.rhs, input_len, x, c);
  }
  return false;
}

void print(const Expr::Node& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(*n.lhs, out);
    out += op;
    print(*n.rhs, out);
    out += ')';
  };
  switch (n.kind) {
    case ExprKind::Const:
      out += n.value ? "true" : "false";
      return;
    case ExprKind::InputBit:
      out += "x[" + std::to_string(n.value) + "]";
      return;
    case ExprKind::CertBit:
      out += "c[" + std::to_string(n.value) + "]";
      return;
    case ExprKind::LenEq:
      out += "len(x) == " + std::to_string(n.value);
      return;
    case ExprKind::Not:
      out += "(!";
      print(*n.lhs, out);
      out += ')';
      return;
    case ExprKind::And:
      return binary(" & ");
    case ExprKind::Or:
      return binary(" | ");
    case ExprKind::Xor:
      return binary(" ^ ");
  }
}

// ---------------------------------------------------------------------------
// Parser

enum class Tok { Ident, Int, LBracket, RBracket, LParen, RParen, Bang, Amp, Pipe, Caret, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {Tok::End, "<end>", line, column};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ident += advance();
      }
      return {Tok::Ident, ident, line, column};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += advance();
      }
      return {Tok::Int, digits, line, column};
    }
    if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      advance();
      advance();
      return {Tok::EqEq, "==", line, column};
    }
    advance();
    switch (c) {
      case '[': return {Tok::LBracket, "[", line, column};
      case ']': return {Tok::RBracket, "]", line, column};
      case '(': return {Tok::LParen, "(", line, column};
      case ')': return {Tok::RParen, ")", line, column};
      case '!': return {Tok::Bang, "!", line, column};
      case '&': return {Tok::Amp, "&", line, column};
      case '|': return {Tok::Pipe, "|", line, column};
      case '^': return {Tok::Caret, "^", line, column};
      default: break;
    }
    throw SyntaxError("unexpected character", line, column, std::string(1, c));
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { look_ = lexer_.next(); }

  NodePtr parse() {
    NodePtr e = parse_or();
    if (look_.kind != Tok::End) fail("unexpected token");
    return e;
  }

 private:
  NodePtr parse_or() {
    NodePtr lhs = parse_xor();
    while (look_.kind == Tok::Pipe) {
      shift();
      lhs = branch(ExprKind::Or, lhs, parse_xor());
    }
    return lhs;
  }

  NodePtr parse_xor() {
    NodePtr lhs = parse_and();
    while (look_.kind == Tok::Caret) {
      shift();
      lhs = branch(ExprKind::Xor, lhs, parse_and());
    }
    return lhs;
  }

  NodePtr parse_and() {
    NodePtr lhs = parse_unary();
    while (look_.kind == Tok::Amp) {
      shift();
      lhs = branch(ExprKind::And, lhs, parse_unary());
    }
    return lhs;
  }

  NodePtr parse_unary() {
    if (look_.kind == Tok::Bang) {
      shift();
      return branch(ExprKind::Not, parse_unary(), nullptr);
    }
    return parse_primary();
  }

  NodePtr parse_primary() {
    if (look_.kind == Tok::LParen) {
      shift();
      NodePtr inner = parse_or();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    if (look_.kind != Tok::Ident) fail("expected an operand");
    const std::string ident = look_.text;
    if (ident == "true" || ident == "false") {
      shift();
      return leaf(ExprKind::Const, ident == "true" ? 1 : 0);
    }
    if (ident == "x" || ident == "c") {
      shift();
      expect(Tok::LBracket, "expected '['");
      const std::size_t index = integer();
      expect(Tok::RBracket, "expected ']'");
      return leaf(ident == "x" ? ExprKind::InputBit : ExprKind::CertBit, index);
    }
    if (ident == "len") {
      shift();
      expect(Tok::LParen, "expected '('");
      if (look_.kind != Tok::Ident || look_.text != "x") fail("expected 'x'");
      shift();
      expect(Tok::RParen, "expected ')'");
      expect(Tok::EqEq, "expected '=='");
      return leaf(ExprKind::LenEq, integer());
    }
    fail("unknown identifier");
  }

  std::size_t integer() {
    if (look_.kind != Tok::Int) fail("expected a non-negative integer");
    std::size_t value = 0;
    for (char d : look_.text) {
      const auto digit = static_cast<std::size_t>(d - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        fail("integer literal too large");
      }
      value = value * 10 + digit;
    }
    shift();
    return value;
  }

  void expect(Tok kind, const char* message) {
    if (look_.kind != kind) fail(message);
    shift();
  }

  void shift() { look_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, look_.line, look_.column, look_.text);
  }

  Lexer lexer_;
  Token look_;
};

NodePtr bind(const NodePtr& n, const Word& prefix, std::size_t length) {
  const std::size_t shift = length - prefix.size();
  switch (n->kind) {
    case ExprKind::Const:
      return n;
    case ExprKind::InputBit:
      if (n->value < prefix.size()) return leaf(ExprKind::Const, prefix.bit(n->value) ? 1 : 0);
      if (n->value < length) return leaf(ExprKind::CertBit, n->value - prefix.size());
      throw IndexOutOfRange("x[" + std::to_string(n->value) + "]", length);
    case ExprKind::CertBit:
      return leaf(ExprKind::CertBit, n->value + shift);
    case ExprKind::LenEq:
      return leaf(ExprKind::Const, n->value == length ? 1 : 0);
    case ExprKind::Not:
      return branch(ExprKind::Not, bind(n->lhs, prefix, length), nullptr);
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Xor:
      return branch(n->kind, bind(n->lhs, prefix, length), bind(n->rhs, prefix, length));
  }
  return n;
}

}  // namespace

Expr Expr::constant(bool value) { return Expr(leaf(ExprKind::Const, value ? 1 : 0)); }
Expr Expr::input_bit(std::size_t index) { return Expr(leaf(ExprKind::InputBit, index)); }
Expr Expr::cert_bit(std::size_t index) { return Expr(leaf(ExprKind::CertBit, index)); }
Expr Expr::len_eq(std::size_t length) { return Expr(leaf(ExprKind::LenEq, length)); }

Expr operator!(const Expr& e) { return Expr(branch(ExprKind::Not, e.node_, nullptr)); }
Expr operator&(const Expr& a, const Expr& b) { return Expr(branch(ExprKind::And, a.node_, b.node_)); }
Expr operator|(const Expr& a, const Expr& b) { return Expr(branch(ExprKind::Or, a.node_, b.node_)); }
Expr operator^(const Expr& a, const Expr& b) { return Expr(branch(ExprKind::Xor, a.node_, b.node_)); }

ExprKind Expr::kind() const { return node_->kind; }
std::size_t Expr::value() const { return node_->value; }
std::size_t Expr::depth() const { return node_->depth; }

std::size_t Expr::arity() const {
  if (node_->rhs) return 2;
  return node_->lhs ? 1 : 0;
}

Expr Expr::child(std::size_t i) const {
  if (i >= arity()) throw std::out_of_range("expression child index");
  return Expr(i == 0 ? node_->lhs : node_->rhs);
}

std::optional<std::size_t> Expr::max_input_index() const {
  if (node_->input_need == 0) return std::nullopt;
  return node_->input_need - 1;
}

std::optional<std::size_t> Expr::max_cert_index() const {
  if (node_->cert_need == 0) return std::nullopt;
  return node_->cert_need - 1;
}

std::size_t Expr::min_input_length() const { return node_->input_need; }
std::size_t Expr::min_cert_length() const { return node_->cert_need; }

bool operator==(const Expr& a, const Expr& b) { return same(*a.node_, *b.node_); }

Expr parse_expr(std::string_view text) { return Expr(Parser(text).parse()); }

std::string print_expr(const Expr& e) {
  std::string out;
  print(*e.root(), out);
  return out;
}

void check_ranges(const Expr& e, std::size_t input_len, std::size_t cert_len) {
  if (auto i = e.max_input_index(); i && *i >= input_len) {
    throw IndexOutOfRange("x[" + std::to_string(*i) + "]", input_len);
  }
  if (auto i = e.max_cert_index(); i && *i >= cert_len) {
    throw IndexOutOfRange("c[" + std::to_string(*i) + "]", cert_len);
  }
}

bool eval_expr(const Expr& e, const Word& input, const Word& cert) {
  if (!input.is_binary() || !cert.is_binary()) {
    throw std::invalid_argument("expression inputs must be binary words");
  }
  check_ranges(e, input.size(), cert.size());
  return evaluate(
      *e.root(), input.size(), [&](std::size_t i) { return input.bit(i); },
      [&](std::size_t i) { return cert.bit(i); });
}

bool eval_packed(const Expr& e, const Word& input, std::uint64_t cert, std::size_t cert_len) {
  return evaluate(
      *e.root(), input.size(), [&](std::size_t i) { return input.bit(i); },
      [&](std::size_t i) { return ((cert >> (cert_len - 1 - i)) & 1U) != 0; });
}

Expr bind_input_prefix(const Expr& e, const Word& prefix, std::size_t length) {
  if (prefix.size() > length) throw std::invalid_argument("prefix longer than bound length");
  return Expr(bind(e.root(), prefix, length));
}

}  // namespace advlab
