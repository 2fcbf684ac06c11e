#include "advlab/search.hpp"

#include <algorithm>

#include <numeric>
#include <stdexcept>

#include "advlab/np_sim.hpp"

namespace advlab {

PrefixProbe PrefixProbe::over(OracleHandle& handle) {
  return PrefixProbe([&handle](std::size_t length, const Word& prefix) {
    return handle.query(prefix_query(length, prefix));
  });
}

PrefixProbe PrefixProbe::routed(OracleHandle& handle, Symbol route) {
  return PrefixProbe([&handle, route](std::size_t length, const Word& prefix) {
    return handle.query(Word().with(route) + prefix_query(length, prefix));
  });
}

PrefixProbe PrefixProbe::over_family(std::vector<OracleHandle>& family) {
  return PrefixProbe([&family](std::size_t length, const Word& prefix) {
    if (length >= family.size()) throw std::out_of_range("no prefix oracle for that length");
    return family[length].query(prefix_query(length, prefix));
  });
}

std::optional<Word> extend_prefix(PrefixProbe& probe, std::size_t length, const Word& start) {
  if (start.size() > length) throw std::invalid_argument("start prefix longer than target length");
  if (!probe(length, start)) return std::nullopt;
  Word current = start;
  while (current.size() < length) {
    if (Word next = current.with(Symbol::Zero); probe(length, next)) {
      current = std::move(next);
    } else if (Word other = current.with(Symbol::One); probe(length, other)) {
      current = std::move(other);
    } else {
      // A certified prefix always extends; only an inconsistent oracle lands here.
      return std::nullopt;
    }
  }
  return current;
}

std::uint64_t enumeration_bound(std::size_t length, std::uint64_t members) {
  return 4 * (static_cast<std::uint64_t>(length) + 1) * (members + 1);
}

TrieState enumerate_sparse_trie(PrefixProbe& probe, std::size_t length) {
  TrieState trie;
  trie.length = length;
  trie.frontier.insert(Word());
  while (!trie.frontier.empty()) {
    const Word start = *trie.frontier.begin();
    trie.frontier.erase(trie.frontier.begin());
    trie.explored.insert(start);
    const auto member = extend_prefix(probe, length, start);
    if (!member) continue;
    for (std::size_t depth = start.size(); depth < length; ++depth) {
      trie.explored.insert(member->prefix(depth + 1));
      const Symbol other = (*member)[depth] == Symbol::Zero ? Symbol::One : Symbol::Zero;
      Word sibling = member->prefix(depth).with(other);
      if (!trie.explored.count(sibling)) trie.frontier.insert(std::move(sibling));
    }
    trie.found.push_back(*member);
  }
  std::sort(trie.found.begin(), trie.found.end());
  return trie;
}

std::vector<Word> enumerate_sparse(PrefixProbe& probe, std::size_t length) {
  return enumerate_sparse_trie(probe, length).found;
}

std::uint64_t LayeredEnumeration::total_queries() const {
  return std::accumulate(queries_by_length.begin(), queries_by_length.end(), std::uint64_t{0});
}

LayeredEnumeration enumerate_up_to(PrefixProbe& probe, std::size_t n) {
  LayeredEnumeration result;
  for (std::size_t length = 0; length <= n; ++length) {
    const std::uint64_t before = probe.queries();
    auto layer = enumerate_sparse(probe, length);
    result.queries_by_length.push_back(probe.queries() - before);
    result.members_by_length.push_back(layer.size());
    result.members.insert(result.members.end(), layer.begin(), layer.end());
  }
  return result;
}

std::uint64_t layered_enumeration_bound(std::size_t n, std::uint64_t max_members) {
  const std::uint64_t side = static_cast<std::uint64_t>(n) + 1;
  return 4 * side * side * (max_members + 1);
}

}  // namespace advlab
