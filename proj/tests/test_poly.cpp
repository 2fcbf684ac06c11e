#include <doctest.h>

#include "advlab/errors.hpp"
#include "advlab/poly.hpp"

using namespace advlab;

TEST_CASE("evaluation examples") {
  CHECK(eval_poly(parse_poly("n^2"), 4) == 16);
  CHECK(eval_poly(parse_poly("0"), 0) == 0);
  CHECK(eval_poly(parse_poly("0"), 99) == 0);
  CHECK(eval_poly(parse_poly("2*n^2+3*n+1"), 2) == 15);
  CHECK(eval_poly(parse_poly("2*n+1"), 3) == 7);
}

TEST_CASE("whitespace, repeated terms and products") {
  CHECK(parse_poly(" 2 * n ^ 2 + n + n ") == Poly({0, 2, 2}));
  CHECK(parse_poly("n*n") == Poly({0, 0, 1}));
  CHECK(parse_poly("3*n*2") == Poly({0, 6}));
  CHECK(parse_poly("n^0") == Poly::constant(1));
}

TEST_CASE("negative coefficients are rejected") {
  CHECK_THROWS_AS(parse_poly("n - 1"), NegativeCoefficient);
  CHECK_THROWS_AS(parse_poly("-2*n"), NegativeCoefficient);
}

TEST_CASE("syntax errors carry a column inside the text") {
  for (const char* text : {"", "n^", "2*", "n + + 1", "m", "n)"}) {
    CAPTURE(text);
    try {
      parse_poly(text);
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() >= 1);
      CHECK(e.column() <= std::string(text).size() + 1);
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  const Poly p({1, 3, 2});
  CHECK(p.str() == "2*n^2 + 3*n + 1");
  CHECK(parse_poly(p.str()) == p);
  CHECK(Poly().str() == "0");
  CHECK(parse_poly(Poly::identity().str()) == Poly::identity());
}

TEST_CASE("algebra agrees with pointwise evaluation") {
  const Poly a({1, 2});
  const Poly b({0, 0, 3});
  for (std::uint64_t n = 0; n < 10; ++n) {
    CHECK((a + b)(n) == a(n) + b(n));
    CHECK((a * b)(n) == a(n) * b(n));
    CHECK(compose(a, b)(n) == a(b(n)));
  }
  CHECK(Poly({0, 1, 0, 0}).degree() == 1);
}

TEST_CASE("evaluation saturates instead of wrapping") {
  const Poly p({0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(p(1u << 20) == UINT64_MAX);
}
