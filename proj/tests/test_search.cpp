#include <doctest.h>

#include <set>

#include "advlab/errors.hpp"
#include "advlab/np_sim.hpp"
#include "advlab/oracle.hpp"
#include "advlab/random.hpp"
#include "advlab/search.hpp"
#include "oracles.hpp"

using namespace advlab;

namespace {

Word w(const char* s) { return Word::parse(s); }

std::vector<Word> ws(std::initializer_list<const char*> xs) {
  std::vector<Word> out;
  for (const char* x : xs) out.push_back(w(x));
  return out;
}

// Prefix oracle straight from a member set, bypassing the library's prefix languages.
PrefixProbe reference_probe(std::set<std::string> members) {
  return PrefixProbe([members](std::size_t length, const Word& p) {
    return ref::some_member_extends(members, length, p.str());
  });
}

}  // namespace

TEST_CASE("descent examples") {
  OracleHandle h(prefix_language_exact(Language::explicit_set("L", 4, ws({"0110"})), 4));
  PrefixProbe probe = PrefixProbe::over(h);
  const auto found = extend_prefix(probe, 4, w(""));
  REQUIRE(found);
  CHECK(found->str() == "0110");
  CHECK(probe.queries() <= 1 + 2 * 5);
  CHECK(probe.queries() == h.query_count());

  OracleHandle e(prefix_language_exact(Language::explicit_set("E", 2, {}), 2));
  PrefixProbe dead = PrefixProbe::over(e);
  CHECK(!extend_prefix(dead, 2, w("")));
  CHECK(dead.queries() == 1);

  OracleHandle b(prefix_language_exact(Language::explicit_set("B", 2, ws({"00", "01"})), 2));
  PrefixProbe zero_first = PrefixProbe::over(b);
  CHECK(extend_prefix(zero_first, 2, w("0"))->str() == "00");
}

TEST_CASE("descent transcript follows zero before one") {
  OracleHandle h(prefix_language_exact(Language::explicit_set("L", 3, ws({"101"})), 3));
  PrefixProbe probe = PrefixProbe::over(h);
  CHECK(extend_prefix(probe, 3, w(""))->str() == "101");
  std::vector<std::string> asked;
  for (const auto& r : h.transcript()) asked.push_back(r.query.str());
  CHECK(asked == std::vector<std::string>{"111#", "111#0", "111#1", "111#10", "111#100", "111#101"});
}

TEST_CASE("descent propagates budget exhaustion") {
  OracleHandle h(prefix_language_exact(Language::explicit_set("L", 4, ws({"1111"})), 4), 3);
  PrefixProbe probe = PrefixProbe::over(h);
  CHECK_THROWS_AS(extend_prefix(probe, 4, w("")), BudgetExhausted);
}

TEST_CASE("enumeration examples") {
  OracleHandle a(prefix_language_exact(Language::explicit_set("A", 2, ws({"00", "01", "11"})), 2));
  PrefixProbe pa = PrefixProbe::over(a);
  CHECK(enumerate_sparse(pa, 2) == ws({"00", "01", "11"}));

  OracleHandle e(prefix_language_exact(Language::explicit_set("E", 5, {}), 5));
  PrefixProbe pe = PrefixProbe::over(e);
  CHECK(enumerate_sparse(pe, 5).empty());
  CHECK(pe.queries() == 1);

  OracleHandle f(prefix_language_exact(Language::predicate("F", 2, Expr::constant(true)), 2));
  PrefixProbe pf = PrefixProbe::over(f);
  CHECK(enumerate_sparse(pf, 2) == ws({"00", "01", "10", "11"}));
  CHECK(pf.queries() <= 60);
  CHECK(pf.queries() <= enumeration_bound(2, 4));
}

TEST_CASE("trie state after a run") {
  PrefixProbe probe = reference_probe({"010", "011"});
  const TrieState t = enumerate_sparse_trie(probe, 3);
  CHECK(t.length == 3);
  CHECK(t.found == ws({"010", "011"}));
  CHECK(t.frontier.empty());
  for (const Word& p : t.explored) CHECK(p.size() <= 3);
  CHECK(t.explored.count(w("1")) == 1);
}

TEST_CASE("layered enumeration examples") {
  PrefixProbe a = reference_probe({"1", "00"});
  const LayeredEnumeration r = enumerate_up_to(a, 2);
  CHECK(r.members == ws({"1", "00"}));
  CHECK(r.members_by_length == std::vector<std::uint64_t>{0, 1, 1});

  PrefixProbe e = reference_probe({});
  const LayeredEnumeration empty = enumerate_up_to(e, 8);
  CHECK(empty.members.empty());
  CHECK(empty.total_queries() == 9);
  CHECK(e.queries() == 9);
}

TEST_CASE("layered enumeration over a handle family stays within its bound") {
  // At most three members per length.
  Rng rng(3);
  std::set<Word> chosen;
  for (std::size_t l = 0; l <= 10; ++l) {
    const std::size_t k = std::min<std::size_t>(3, std::size_t{1} << l);
    std::set<Word> layer;
    while (layer.size() < k) layer.insert(rng.word(l));
    chosen.insert(layer.begin(), layer.end());
  }
  const Language L = Language::explicit_set("L", 10, {chosen.begin(), chosen.end()});
  std::vector<OracleHandle> family;
  for (std::size_t l = 0; l <= 10; ++l) family.emplace_back(prefix_language_exact(L, l));
  PrefixProbe probe = PrefixProbe::over_family(family);
  const LayeredEnumeration r = enumerate_up_to(probe, 10);
  CHECK(r.members == members_up_to(L, 10));
  CHECK(r.total_queries() <= 1936);
  CHECK(layered_enumeration_bound(10, 3) == 1936);
  for (std::size_t l = 0; l <= 10; ++l) {
    CHECK(r.queries_by_length[l] == family[l].query_count());
    CHECK(r.queries_by_length[l] <= enumeration_bound(l, r.members_by_length[l]));
  }
}

TEST_CASE("routed probes prepend the routing bit") {
  const Language L = Language::explicit_set("L", 2, ws({"10"}));
  OracleHandle h(combine(prefix_language_exact(L, 2), Language::explicit_set("E", 1, {})));
  PrefixProbe probe = PrefixProbe::routed(h, Symbol::Zero);
  CHECK(enumerate_sparse(probe, 2) == ws({"10"}));
  CHECK(h.transcript().front().query.str() == "011#");
}

TEST_CASE("greedy descent over the cumulative oracle skips members that prefix others") {
  // Descent that runs until no child is certified, as over the cumulative form.
  const Language L = Language::explicit_set("L", 2, ws({"0", "01", "1"}));
  const Language C = prefix_language_cumulative(L, 2);
  auto certified = [&](const Word& p) { return membership(C, prefix_query(2, p)); };
  auto descend = [&](Word p) {
    for (;;) {
      if (p.size() < 2 && certified(p.with(Symbol::Zero))) {
        p = p.with(Symbol::Zero);
      } else if (p.size() < 2 && certified(p.with(Symbol::One))) {
        p = p.with(Symbol::One);
      } else {
        return p;
      }
    }
  };
  // It stops at a member, but "0" is walked past on the way to "01".
  CHECK(descend(w("")).str() == "01");
  CHECK(membership(L, descend(w(""))));
  CHECK(descend(w("1")).str() == "1");
}
