#include "advlab/np_sim.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>
#include <unordered_set>

#include "advlab/errors.hpp"

namespace advlab {

namespace {

using PrefixSet = std::unordered_set<Word>;

void add_prefixes(PrefixSet& set, const Word& x) {
  for (std::size_t k = 0; k <= x.size(); ++k) set.insert(x.prefix(k));
}

void require_binary(const std::vector<Word>& members, const std::string& name) {
  for (const Word& x : members) {
    if (!x.is_binary()) {
      throw std::invalid_argument("prefix language of '" + name + "' needs binary members");
    }
  }
}

}  // namespace

Word prefix_query(std::size_t length, const Word& prefix) {
  return Word::ones(length).with(Symbol::Sep) + prefix;
}

std::optional<std::pair<std::size_t, Word>> parse_prefix_query(const Word& w) {
  const auto sep = w.str().find('#');
  if (sep == std::string::npos) return std::nullopt;
  const Word header = w.prefix(sep);
  const Word prefix = w.suffix_from(sep + 1);
  if (!header.is_unary() || !prefix.is_binary() || prefix.size() > header.size()) {
    return std::nullopt;
  }
  return std::pair{header.size(), prefix};
}

Language prefix_language_exact(const Language& L, std::size_t length) {
  auto layer = members_at(L, length);
  require_binary(layer, L.name());
  auto prefixes = std::make_shared<PrefixSet>();
  for (const Word& x : layer) add_prefixes(*prefixes, x);

  auto contains = [prefixes, length](const Word& w) {
    const auto q = parse_prefix_query(w);
    return q && q->first == length && prefixes->count(q->second) > 0;
  };
  auto enumerate = [prefixes, length](std::size_t t) {
    std::vector<Word> out;
    if (t < length + 1 || t > 2 * length + 1) return out;
    const std::size_t plen = t - length - 1;
    for (const Word& p : *prefixes) {
      if (p.size() == plen) out.push_back(prefix_query(length, p));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return Language::derived("prefix(" + L.name() + "," + std::to_string(length) + ")",
                           2 * length + 1, std::move(contains), std::move(enumerate));
}

Language prefix_language_cumulative(const Language& L, std::size_t n) {
  auto members = members_up_to(L, n);
  require_binary(members, L.name());
  auto prefixes = std::make_shared<PrefixSet>();
  for (const Word& x : members) add_prefixes(*prefixes, x);

  auto contains = [prefixes, n](const Word& w) {
    const auto q = parse_prefix_query(w);
    return q && q->first == n && prefixes->count(q->second) > 0;
  };
  return Language::derived("prefix_cumulative(" + L.name() + "," + std::to_string(n) + ")",
                           2 * n + 1, std::move(contains));
}

bool np_prefix_member(const NpMachine& m, std::size_t length, const Word& prefix,
                      std::size_t cap) {
  if (!prefix.is_binary() || prefix.size() > length) return false;
  if (length < m.verifier.min_input_length()) return false;
  const std::uint64_t cert_bits = m.cert_len(length);
  const std::uint64_t free_bits = (length - prefix.size()) + cert_bits;
  if (cert_bits > cap || free_bits > cap || free_bits > 63) {
    throw CertificateSpaceTooLarge(
        static_cast<std::size_t>(std::min<std::uint64_t>(free_bits, std::numeric_limits<std::size_t>::max())),
        cap);
  }
  if (auto i = m.verifier.max_cert_index(); i && *i >= cert_bits) {
    throw IndexOutOfRange("c[" + std::to_string(*i) + "]", static_cast<std::size_t>(cert_bits));
  }
  const Expr joint = bind_input_prefix(m.verifier, prefix, length);
  return find_witness(joint, Word(), static_cast<std::size_t>(free_bits)).has_value();
}

Language np_prefix_language(const NpMachine& m, std::size_t length, std::size_t cap) {
  auto contains = [m, length, cap](const Word& w) {
    const auto q = parse_prefix_query(w);
    return q && q->first == length && np_prefix_member(m, length, q->second, cap);
  };
  auto enumerate = [m, length, cap](std::size_t t) {
    std::vector<Word> out;
    if (t < length + 1 || t > 2 * length + 1) return out;
    for (const Word& p : binary_words(t - length - 1)) {
      if (np_prefix_member(m, length, p, cap)) out.push_back(prefix_query(length, p));
    }
    return out;
  };
  return Language::derived("np_prefix(" + print_expr(m.verifier) + "," + std::to_string(length) + ")",
                           2 * length + 1, std::move(contains), std::move(enumerate));
}

Language np_prefix_language_all(const NpMachine& m, std::size_t max_length, std::size_t cap) {
  auto contains = [m, max_length, cap](const Word& w) {
    const auto q = parse_prefix_query(w);
    return q && q->first <= max_length && np_prefix_member(m, q->first, q->second, cap);
  };
  auto enumerate = [m, max_length, cap](std::size_t t) {
    std::vector<Word> out;
    for (std::size_t length = 0; length <= max_length; ++length) {
      if (t < length + 1 || t > 2 * length + 1) continue;
      for (const Word& p : binary_words(t - length - 1)) {
        if (np_prefix_member(m, length, p, cap)) out.push_back(prefix_query(length, p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return Language::derived("np_prefix_all(" + print_expr(m.verifier) + ")", 2 * max_length + 1,
                           std::move(contains), std::move(enumerate));
}

}  // namespace advlab
