#include <doctest.h>

#include "advlab/errors.hpp"
#include "advlab/expr.hpp"

using namespace advlab;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("grammar examples") {
  const Expr e = parse_expr("x[0] & !x[1]");
  CHECK(e == (Expr::input_bit(0) & !Expr::input_bit(1)));
  CHECK(e.kind() == ExprKind::And);
  CHECK(e.child(1).kind() == ExprKind::Not);

  const Expr f = parse_expr("(x[0] | c[0]) ^ x[1]");
  CHECK(f == ((Expr::input_bit(0) | Expr::cert_bit(0)) ^ Expr::input_bit(1)));
}

TEST_CASE("precedence is not, and, xor, or") {
  CHECK(parse_expr("x[0] | x[1] ^ x[2] & x[3]") ==
        (Expr::input_bit(0) | (Expr::input_bit(1) ^ (Expr::input_bit(2) & Expr::input_bit(3)))));
  CHECK(parse_expr("!x[0] & x[1]") == (!Expr::input_bit(0) & Expr::input_bit(1)));
  // Left associative.
  CHECK(parse_expr("x[0] ^ x[1] ^ x[2]") ==
        ((Expr::input_bit(0) ^ Expr::input_bit(1)) ^ Expr::input_bit(2)));
}

TEST_CASE("incomplete input reports column 7") {
  try {
    parse_expr("x[0] &");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("syntax errors point inside the text, across lines") {
  for (const char* text : {"", "x[", "x[a]", "y[0]", "x[0] x[1]", "(x[0]", "len(x) = 2", "!",
                           "x[0] &&& x[1]"}) {
    CAPTURE(text);
    try {
      parse_expr(text);
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() >= 1);
      CHECK(e.column() <= std::string(text).size() + 1);
    }
  }
  try {
    parse_expr("x[0] &\n  )");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(e.token() == ")");
  }
}

TEST_CASE("evaluation examples") {
  CHECK(eval_expr(parse_expr("x[0] & !x[1]"), w("10"), w("")));
  CHECK(eval_expr(parse_expr("c[0] | x[0]"), w("0"), w("1")));
  CHECK_THROWS_AS(eval_expr(parse_expr("x[5]"), w("01"), w("")), IndexOutOfRange);
  CHECK_THROWS_AS(eval_expr(parse_expr("c[0]"), w("01"), w("")), IndexOutOfRange);
}

TEST_CASE("range errors name the reference") {
  try {
    eval_expr(parse_expr("x[0] | x[5]"), w("01"), w(""));
    FAIL("expected IndexOutOfRange");
  } catch (const IndexOutOfRange& e) {
    CHECK(e.reference() == "x[5]");
  }
}

TEST_CASE("length guard compares the input length") {
  const Expr e = parse_expr("len(x) == 3");
  CHECK(eval_expr(e, w("010"), w("")));
  CHECK(!eval_expr(e, w("01"), w("")));
  CHECK(print_expr(e) == "len(x) == 3");
}

TEST_CASE("canonical printing") {
  CHECK(print_expr(parse_expr("x[0] & !x[1]")) == "(x[0] & (!x[1]))");
  CHECK(print_expr(Expr::constant(true)) == "true");
  const Expr nested = parse_expr("!(x[0] ^ c[1]) | len(x) == 0 & false");
  CHECK(parse_expr(print_expr(nested)) == nested);
}

TEST_CASE("static reference analysis") {
  const Expr e = parse_expr("x[3] & c[1] | x[0]");
  CHECK(e.max_input_index() == 3);
  CHECK(e.max_cert_index() == 1);
  CHECK(e.min_input_length() == 4);
  CHECK(e.min_cert_length() == 2);
  CHECK(!parse_expr("true").max_input_index());
  CHECK(parse_expr("!!x[0]").depth() == 3);
}

TEST_CASE("packed evaluation reads c[0] as the top bit") {
  const Expr e = parse_expr("c[0] & !c[2]");
  CHECK(eval_packed(e, w(""), 0b100, 3));
  CHECK(!eval_packed(e, w(""), 0b101, 3));
  CHECK(!eval_packed(e, w(""), 0b001, 3));
}

TEST_CASE("binding an input prefix moves free input bits into the certificate") {
  const Expr e = parse_expr("x[0] & x[2] & c[0] & len(x) == 3");
  const Expr bound = bind_input_prefix(e, w("1"), 3);
  // Free bits x[1], x[2] become c[0], c[1]; the old c[0] becomes c[2].
  for (std::uint64_t v = 0; v < 8; ++v) {
    const Word cert = Word::from_bits(v, 3);
    const Word x = w("1") + cert.prefix(2);
    const Word c = cert.suffix_from(2);
    CHECK(eval_expr(bound, w(""), cert) == eval_expr(e, x, c));
  }
  CHECK_THROWS_AS(bind_input_prefix(parse_expr("x[3]"), w(""), 3), IndexOutOfRange);
}
