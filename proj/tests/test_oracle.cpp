#include <doctest.h>

#include <sstream>

#include "advlab/errors.hpp"
#include "advlab/oracle.hpp"
#include "advlab/random.hpp"

using namespace advlab;

namespace {

Word w(const char* s) { return Word::parse(s); }

Language single(const char* name, const char* word, std::size_t horizon) {
  return Language::explicit_set(name, horizon, {w(word)});
}

}  // namespace

TEST_CASE("query answers membership and records it") {
  OracleHandle h(single("L", "0110", 4));
  CHECK(h.query_count() == 0);
  CHECK(h.query(w("0110")));
  CHECK(h.query_count() == 1);
  CHECK(!h.query(w("0111")));
  REQUIRE(h.transcript().size() == 2);
  CHECK(h.transcript()[0] == QueryRecord{w("0110"), true});
  CHECK(h.transcript()[1] == QueryRecord{w("0111"), false});
}

TEST_CASE("budget trips on query budget + 1") {
  OracleHandle h(single("L", "0", 2), 2);
  h.query(w("0"));
  h.query(w("1"));
  try {
    h.query(w("00"));
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(e.budget() == 2);
    CHECK(e.query() == "00");
  }
  CHECK(h.query_count() == 2);

  OracleHandle zero(single("L", "0", 2), 0);
  CHECK_THROWS_AS(zero.query(w("0")), BudgetExhausted);
}

TEST_CASE("horizon errors propagate from the handle") {
  OracleHandle h(single("L", "0", 2));
  CHECK_THROWS_AS(h.query(w("000")), HorizonExceeded);
}

TEST_CASE("fresh resets the counter but keeps language and budget") {
  OracleHandle h(single("L", "01", 2), 7);
  for (const char* q : {"0", "1", "01", "10", "11"}) h.query(w(q));
  const OracleHandle f = h.fresh();
  CHECK(f.query_count() == 0);
  CHECK(f.transcript().empty());
  CHECK(f.budget() == 7);
  OracleHandle g = f;
  CHECK(g.query(w("01")));
  CHECK(!g.query(w("10")));
}

TEST_CASE("combine routes on the leading bit") {
  const Language c = combine(single("A", "0", 1), single("B", "1", 1));
  CHECK(c.horizon() == 2);
  CHECK(membership(c, w("00")));
  CHECK(membership(c, w("11")));
  CHECK(!membership(c, w("01")));
  CHECK(!membership(c, w("10")));
  CHECK(!membership(c, w("")));
  CHECK(!membership(c, w("#0")));

  const Language empty = combine(Language::explicit_set("E", 2, {}), Language::explicit_set("F", 2, {}));
  for (std::size_t l = 0; l <= 3; ++l) CHECK(members_at(empty, l).empty());
}

TEST_CASE("combined census is the shifted sum") {
  Rng rng(11);
  const Language a = gen_sparse_language(rng, 6, parse_poly("n"));
  const Language b = gen_sparse_language(rng, 6, parse_poly("2*n"));
  const Language c = combine(a, b);
  const CensusTable ca = census(a, 6), cb = census(b, 6), cc = census(c, 7);
  CHECK(cc[0] == 0);
  for (std::size_t l = 1; l <= 7; ++l) CHECK(cc[l] == ca[l - 1] + cb[l - 1]);
  for (std::size_t l = 1; l <= 7; ++l) {
    CHECK(cc[l] <= combined_bound(parse_poly("n"), parse_poly("2*n"), l));
  }
}

TEST_CASE("transcripts serialize and replay") {
  const Language L = single("L", "0#1", 3);
  OracleHandle h(L);
  for (const char* q : {"0#1", "", "1", "0#1"}) h.query(w(q));
  std::stringstream io;
  write_transcript(io, h.transcript());
  CHECK(io.str() == "0#1\t1\n\t0\n1\t0\n0#1\t1\n");
  const Transcript back = read_transcript(io);
  CHECK(back == h.transcript());
  CHECK(replay_matches(L, back));
  CHECK(!replay_matches(single("M", "1", 3), back));

  std::stringstream bad("01\t2\n");
  CHECK_THROWS_AS(read_transcript(bad), std::invalid_argument);
}
