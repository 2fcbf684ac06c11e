#include <doctest.h>

#include <set>

#include "advlab/errors.hpp"
#include "advlab/np_machine.hpp"
#include "advlab/np_sim.hpp"
#include "oracles.hpp"

using namespace advlab;

namespace {

Word w(const char* s) { return Word::parse(s); }

NpMachine machine(const char* verifier, const char* cert_len) {
  return NpMachine{parse_expr(verifier), parse_poly(cert_len)};
}

}  // namespace

TEST_CASE("certificate search examples") {
  const auto found = find_certificate(machine("c[0] & x[0]", "1"), w("1"));
  REQUIRE(found);
  CHECK(found->str() == "1");
  CHECK(!exists_certificate(machine("c[0] & !c[0]", "1"), w("1")));
  CHECK(!exists_certificate(machine("c[0] & !c[0]", "1"), w("0101")));
  try {
    exists_certificate(machine("c[0]", "n"), Word::zeros(25));
    FAIL("expected CertificateSpaceTooLarge");
  } catch (const CertificateSpaceTooLarge& e) {
    CHECK(e.bits() == 25);
    CHECK(e.cap() == kDefaultCertificateCap);
  }
}

TEST_CASE("the recorded witness is the lexicographically first") {
  const NpMachine m = machine("c[1] & (c[0] | c[2])", "3");
  CHECK(find_certificate(m, w(""))->str() == "011");
  CHECK(find_witness(m.verifier, w(""), 3) == 0b011);
  CHECK(find_witness_serial(m.verifier, w(""), 3) == 0b011);
}

TEST_CASE("certificate references beyond the declared length are errors") {
  CHECK_THROWS_AS(exists_certificate(machine("c[2]", "2"), w("0")), IndexOutOfRange);
}

TEST_CASE("a lower cap is honored") {
  CHECK_THROWS_AS(find_certificate(machine("c[0]", "5"), w(""), 4), CertificateSpaceTooLarge);
  CHECK(find_certificate(machine("c[0]", "5"), w(""), 5));
}

TEST_CASE("prefix query format") {
  CHECK(prefix_query(4, w("01")).str() == "1111#01");
  CHECK(prefix_query(0, w("")).str() == "#");
  const auto parsed = parse_prefix_query(w("11#0"));
  REQUIRE(parsed);
  CHECK(parsed->first == 2);
  CHECK(parsed->second.str() == "0");
  CHECK(!parse_prefix_query(w("10#0")));
  CHECK(!parse_prefix_query(w("11")));
  CHECK(!parse_prefix_query(w("11#0#")));
}

TEST_CASE("exact prefix language examples") {
  const Language a = prefix_language_exact(Language::explicit_set("A", 4, {w("0110")}), 4);
  CHECK(membership(a, w("1111#01")));
  CHECK(!membership(a, w("1111#1")));
  CHECK(membership(a, w("1111#")));
  CHECK(membership(a, w("1111#0110")));

  const Language none = prefix_language_exact(Language::explicit_set("N", 4, {w("011")}), 2);
  CHECK(!membership(none, w("11#")));

  const Language b = prefix_language_exact(Language::explicit_set("B", 2, {w("00"), w("01")}), 2);
  CHECK(membership(b, w("11#0")));
  CHECK(membership(b, w("11#00")));
  CHECK(!membership(b, w("11#1")));
}

TEST_CASE("malformed prefix queries are non-members") {
  const Language a = prefix_language_exact(Language::explicit_set("A", 2, {w("01")}), 2);
  for (const char* q : {"", "0", "1#0", "111#0", "1#01", "11", "01#0", "11#0#"}) {
    CAPTURE(q);
    CHECK(!membership(a, w(q)));
  }
}

TEST_CASE("np prefix language examples") {
  const Language a = np_prefix_language(machine("x[0] & c[0]", "1"), 2);
  CHECK(membership(a, w("11#1")));
  CHECK(membership(a, w("11#10")));
  CHECK(!membership(a, w("11#0")));
  CHECK(!membership(a, w("11#01")));

  const Language b = np_prefix_language(machine("x[0] & x[1] & c[0]", "1"), 2);
  CHECK(!membership(b, w("11#10")));
  CHECK(membership(b, w("11#11")));
  CHECK(membership(b, w("11#")));

  const Language dead = np_prefix_language(machine("c[0] & !c[0]", "1"), 3);
  for (std::size_t len = 0; len <= 3; ++len) {
    for (const auto& p : ref::all_binary(len)) CHECK(!membership(dead, prefix_query(3, w(p.c_str()))));
  }
}

TEST_CASE("np prefix membership respects the cap on the joint search") {
  // 10 free input bits plus 12 certificate bits exceed 20.
  CHECK_THROWS_AS(np_prefix_member(machine("c[0]", "12"), 10, w("")), SearchSpaceTooLarge);
  CHECK_NOTHROW(np_prefix_member(machine("c[0]", "12"), 10, w("01")));
}

TEST_CASE("np prefix family routes by header length") {
  const NpMachine m = machine("x[0] & c[0]", "1");
  const Language all = np_prefix_language_all(m, 3);
  for (std::size_t l = 0; l <= 3; ++l) {
    const Language one = np_prefix_language(m, l);
    for (std::size_t len = 0; len <= l; ++len) {
      for (const auto& p : ref::all_binary(len)) {
        const Word q = prefix_query(l, w(p.c_str()));
        CHECK(membership(all, q) == membership(one, q));
      }
    }
  }
}

TEST_CASE("cumulative prefix language covers all lengths up to n") {
  const Language L = Language::explicit_set("L", 3, {w("0"), w("01"), w("110")});
  const Language c = prefix_language_cumulative(L, 3);
  CHECK(membership(c, w("111#0")));
  CHECK(membership(c, w("111#01")));
  CHECK(membership(c, w("111#11")));
  CHECK(!membership(c, w("111#10")));
  CHECK(!membership(c, w("111#000")));
}
