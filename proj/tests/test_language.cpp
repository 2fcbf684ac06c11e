#include <doctest.h>

#include <set>

#include "advlab/errors.hpp"
#include "advlab/language.hpp"
#include "oracles.hpp"

using namespace advlab;

namespace {

Word w(const char* s) { return Word::parse(s); }

std::vector<Word> ws(std::initializer_list<const char*> xs) {
  std::vector<Word> out;
  for (const char* x : xs) out.push_back(w(x));
  return out;
}

Language full_language(std::size_t horizon) {
  return Language::predicate("full", horizon, Expr::constant(true));
}

}  // namespace

TEST_CASE("membership examples") {
  CHECK(membership(Language::explicit_set("L", 4, ws({"0110"})), w("0110")));
  CHECK(!membership(Language::explicit_set("E", 4, {}), w("0")));
  const Language np =
      Language::np_verifier("N", 4, NpMachine{parse_expr("x[0] & c[0]"), Poly::constant(1)});
  CHECK(membership(np, w("10")));
  CHECK(!membership(np, w("01")));
}

TEST_CASE("membership past the horizon is an error") {
  const Language L = Language::explicit_set("L", 2, ws({"01"}));
  try {
    membership(L, w("011"));
    FAIL("expected HorizonExceeded");
  } catch (const HorizonExceeded& e) {
    CHECK(e.length() == 3);
    CHECK(e.horizon() == 2);
  }
  CHECK_THROWS_AS(members_at(L, 3), HorizonExceeded);
  CHECK_THROWS_AS(census(L, 3), HorizonExceeded);
}

TEST_CASE("explicit sets reject duplicates and overlong members") {
  CHECK_THROWS_AS(Language::explicit_set("D", 4, ws({"01", "01"})), std::invalid_argument);
  CHECK_THROWS_AS(Language::explicit_set("H", 1, ws({"01"})), std::invalid_argument);
}

TEST_CASE("predicates cannot use certificate bits") {
  CHECK_THROWS_AS(Language::predicate("P", 3, parse_expr("c[0]")), std::invalid_argument);
}

TEST_CASE("members_at examples") {
  const Language L = Language::explicit_set("L", 3, ws({"11", "00", "01"}));
  CHECK(members_at(L, 2) == ws({"00", "01", "11"}));
  CHECK(members_at(L, 3).empty());
  CHECK(members_at(Language::predicate("P", 2, parse_expr("x[0] & !x[1]")), 2) == ws({"10"}));
}

TEST_CASE("census examples") {
  const CensusTable t = census(Language::explicit_set("L", 2, ws({"00", "01", "11"})), 2);
  CHECK(t.counts == std::vector<std::uint64_t>{0, 0, 3});
  CHECK(census(Language::explicit_set("E", 4, {}), 4).counts == std::vector<std::uint64_t>(5, 0));
  CHECK(census(Language::predicate("P", 2, parse_expr("!x[0]")), 2).counts ==
        std::vector<std::uint64_t>{0, 1, 2});
  CHECK(t.max() == 3);
  CHECK(t.total() == 3);
}

TEST_CASE("sparsity examples") {
  CHECK(is_sparse_up_to(Language::explicit_set("L", 2, ws({"00", "01", "11"})), 2, parse_poly("n+1")));
  CHECK(is_sparse_up_to(Language::explicit_set("E", 6, {}), 6, parse_poly("0")));
  // Independent check: the full language has 2^l words at length l; l=1 gives 2 > 1.
  const Poly sq = parse_poly("n^2");
  bool expected = true;
  for (std::size_t l = 0; l <= 4; ++l) expected = expected && (1u << l) <= sq(l);
  CHECK(is_sparse_up_to(full_language(4), 4, sq) == expected);
  CHECK(!expected);
}

TEST_CASE("unary classification") {
  CHECK(is_unary(Language::explicit_set("U", 3, ws({"1", "111"})), 3));
  CHECK(!is_unary(Language::explicit_set("B", 3, ws({"10"})), 3));
  CHECK(is_unary(Language::explicit_set("E", 3, ws({""})), 3));
}

TEST_CASE("tally encoding examples") {
  const Language zero = tally_encode(Language::explicit_set("Z", 1, ws({"0"})), 8);
  CHECK(zero.explicit_members() == ws({"11"}));
  const Language one = tally_encode(Language::explicit_set("O", 1, ws({"1"})), 8);
  CHECK(one.explicit_members() == ws({"111"}));
  CHECK(tally_encode(Language::explicit_set("E", 1, {}), 8).explicit_members().empty());
  CHECK(is_unary(zero, 8));
  CHECK_THROWS_AS(tally_encode(Language::explicit_set("O", 1, ws({"1"})), 2), HorizonExceeded);
}

TEST_CASE("tally code matches the reference and inverts") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& s : ref::all_binary(len)) {
      const Word x = w(s.c_str());
      CHECK(tally_code(x) == ref::tally(s));
      CHECK(tally_decode(tally_code(x)) == x);
    }
  }
}

TEST_CASE("kinds agree with a reference on every word") {
  const Language P = Language::predicate("P", 5, parse_expr("x[1] ^ len(x) == 3"));
  const Language N = Language::np_verifier(
      "N", 5, NpMachine{parse_expr("(x[0] ^ c[1]) & c[0]"), Poly({2, 1})});
  for (std::size_t len = 0; len <= 5; ++len) {
    auto p_ref = ref::members(
        [len](const std::string& s) { return s.size() >= 2 && ((s[1] == '1') != (len == 3)); }, len);
    // Some c with c[0] = 1 and c[1] != x[0] always exists once x[0] does.
    auto n_ref = ref::members([](const std::string& s) { return !s.empty(); }, len);
    std::vector<Word> p_want, n_want;
    for (auto& s : p_ref) p_want.push_back(w(s.c_str()));
    for (auto& s : n_ref) n_want.push_back(w(s.c_str()));
    CHECK(members_at(P, len) == p_want);
    CHECK(members_at(N, len) == n_want);
  }
}

TEST_CASE("derived languages answer from the closure or the enumerator") {
  const Language D = Language::derived(
      "odd", 4, [](const Word& x) { return x.size() % 2 == 1 && x.is_unary(); }, {}, true);
  CHECK(members_at(D, 3) == ws({"111"}));
  CHECK(members_at(D, 2).empty());
  CHECK(members_up_to(D, 4) == ws({"1", "111"}));
}
