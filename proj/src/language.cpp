#include "advlab/language.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "advlab/errors.hpp"
#include "parallel.hpp"

namespace advlab {

struct Language::Impl {
  std::string name;
  std::size_t horizon = 0;
  LanguageKind kind = LanguageKind::Explicit;
  std::vector<Word> members;  // Explicit, ShortLex-sorted
  std::optional<Expr> expr;   // Predicate
  std::optional<NpMachine> machine;
  std::size_t cert_cap = kDefaultCertificateCap;
  Membership contains;  // Derived
  Enumerator enumerate;
  bool binary_only = false;
};

namespace {

// Brute force stops being "desk scale" past this many candidate words.
constexpr std::uint64_t kMaxBruteForceWords = std::uint64_t{1} << 26;

const Language::Enumerator kNoEnumerator{};

std::uint64_t candidate_count(std::size_t length, bool binary_only, const std::string& name) {
  const std::uint64_t base = binary_only ? 2 : 3;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    count *= base;
    if (count > kMaxBruteForceWords) {
      throw SearchSpaceTooLarge("brute-force enumeration of '" + name + "' at length " +
                                    std::to_string(length),
                                length, 0);
    }
  }
  return count;
}

// i-th word of the given length in lexicographic order ('#' < '0' < '1').
Word candidate(std::uint64_t index, std::size_t length, bool binary_only) {
  if (binary_only) return Word::from_bits(index, length);
  std::string text(length, '#');
  static constexpr char kDigits[] = {'#', '0', '1'};
  for (std::size_t i = length; i-- > 0;) {
    text[i] = kDigits[index % 3];
    index /= 3;
  }
  return Word::parse(text);
}

void check_horizon(const Language& L, std::size_t length) {
  if (length > L.horizon()) throw HorizonExceeded(L.name(), length, L.horizon());
}

}  // namespace

Language Language::explicit_set(std::string name, std::size_t horizon, std::vector<Word> members) {
  std::sort(members.begin(), members.end(), ShortLex{});
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("explicit set '" + name + "' has duplicate members");
  }
  if (!members.empty() && members.back().size() > horizon) {
    throw std::invalid_argument("explicit set '" + name + "' has a member longer than its horizon");
  }
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->horizon = horizon;
  impl->kind = LanguageKind::Explicit;
  impl->members = std::move(members);
  return Language(std::move(impl));
}

Language Language::predicate(std::string name, std::size_t horizon, Expr expr) {
  if (expr.max_cert_index()) {
    throw std::invalid_argument("predicate '" + name + "' references certificate bits");
  }
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->horizon = horizon;
  impl->kind = LanguageKind::Predicate;
  impl->expr = std::move(expr);
  impl->binary_only = true;
  return Language(std::move(impl));
}

Language Language::np_verifier(std::string name, std::size_t horizon, NpMachine machine,
                               std::size_t cert_cap) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->horizon = horizon;
  impl->kind = LanguageKind::NpVerifier;
  impl->expr = machine.verifier;
  impl->machine = std::move(machine);
  impl->cert_cap = cert_cap;
  impl->binary_only = true;
  return Language(std::move(impl));
}

Language Language::derived(std::string name, std::size_t horizon, Membership contains,
                           Enumerator enumerate, bool binary_only) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->horizon = horizon;
  impl->kind = LanguageKind::Derived;
  impl->contains = std::move(contains);
  impl->enumerate = std::move(enumerate);
  impl->binary_only = binary_only;
  return Language(std::move(impl));
}

const std::string& Language::name() const { return impl_->name; }
std::size_t Language::horizon() const { return impl_->horizon; }
LanguageKind Language::kind() const { return impl_->kind; }
const std::vector<Word>& Language::explicit_members() const { return impl_->members; }
const Expr* Language::expression() const { return impl_->expr ? &*impl_->expr : nullptr; }
const NpMachine* Language::machine() const { return impl_->machine ? &*impl_->machine : nullptr; }
std::size_t Language::cert_cap() const { return impl_->cert_cap; }
bool Language::binary_only() const { return impl_->binary_only; }

const Language::Enumerator& Language::enumerator() const {
  return impl_->kind == LanguageKind::Derived ? impl_->enumerate : kNoEnumerator;
}

bool Language::contains_unchecked(const Word& w) const {
  switch (impl_->kind) {
    case LanguageKind::Explicit:
      return std::binary_search(impl_->members.begin(), impl_->members.end(), w, ShortLex{});
    case LanguageKind::Predicate:
      if (!w.is_binary() || w.size() < impl_->expr->min_input_length()) return false;
      return eval_packed(*impl_->expr, w, 0, 0);
    case LanguageKind::NpVerifier:
      return exists_certificate(*impl_->machine, w, impl_->cert_cap);
    case LanguageKind::Derived:
      if (impl_->binary_only && !w.is_binary()) return false;
      return impl_->contains(w);
  }
  return false;
}

bool membership(const Language& L, const Word& w) {
  check_horizon(L, w.size());
  return L.contains_unchecked(w);
}

std::vector<Word> members_at_serial(const Language& L, std::size_t length) {
  check_horizon(L, length);
  if (L.kind() == LanguageKind::Explicit) {
    const auto& all = L.explicit_members();
    auto lo = std::partition_point(all.begin(), all.end(),
                                   [&](const Word& w) { return w.size() < length; });
    auto hi = std::partition_point(lo, all.end(), [&](const Word& w) { return w.size() == length; });
    return {lo, hi};
  }
  if (const auto& enumerate = L.enumerator()) return enumerate(length);
  const std::uint64_t count = candidate_count(length, L.binary_only(), L.name());
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    Word w = candidate(i, length, L.binary_only());
    if (L.contains_unchecked(w)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> members_at(const Language& L, std::size_t length) {
  check_horizon(L, length);
  if (L.kind() == LanguageKind::Explicit || L.enumerator()) return members_at_serial(L, length);
  const bool binary = L.binary_only();
  const std::uint64_t count = candidate_count(length, binary, L.name());
  std::vector<char> hit(count, 0);
  detail::parallel_for(static_cast<std::int64_t>(count), [&](std::int64_t i) {
    hit[i] = L.contains_unchecked(candidate(static_cast<std::uint64_t>(i), length, binary)) ? 1 : 0;
  });
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (hit[i]) out.push_back(candidate(i, length, binary));
  }
  return out;
}

std::vector<Word> members_up_to(const Language& L, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= n; ++l) {
    auto layer = members_at(L, l);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

std::uint64_t CensusTable::max() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::uint64_t CensusTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

CensusTable census(const Language& L, std::size_t n) {
  check_horizon(L, n);
  CensusTable table;
  table.counts.reserve(n + 1);
  for (std::size_t l = 0; l <= n; ++l) table.counts.push_back(members_at(L, l).size());
  return table;
}

bool is_sparse_up_to(const Language& L, std::size_t n, const Poly& bound) {
  const CensusTable table = census(L, n);
  for (std::size_t l = 0; l <= n; ++l) {
    if (table.counts[l] > bound(l)) return false;
  }
  return true;
}

bool is_unary(const Language& L, std::size_t n) {
  check_horizon(L, n);
  if (L.kind() == LanguageKind::Explicit) {
    return std::all_of(L.explicit_members().begin(), L.explicit_members().end(),
                       [&](const Word& w) { return w.size() > n || w.is_unary(); });
  }
  for (std::size_t l = 0; l <= n; ++l) {
    for (const Word& w : members_at(L, l)) {
      if (!w.is_unary()) return false;
    }
  }
  return true;
}

std::uint64_t tally_code(const Word& x) {
  if (!x.is_binary()) throw std::invalid_argument("tally_code needs a binary word");
  if (x.size() >= 63) throw std::invalid_argument("tally_code: word too long");
  std::uint64_t code = 1;
  for (std::size_t i = 0; i < x.size(); ++i) code = (code << 1) | (x.bit(i) ? 1U : 0U);
  return code;
}

Word tally_decode(std::uint64_t code) {
  if (code == 0) throw std::invalid_argument("tally_decode: 0 is not a code");
  std::size_t width = 0;
  while ((code >> (width + 1)) != 0) ++width;
  return Word::from_bits(code, width);
}

Language tally_encode(const Language& L, std::size_t horizon) {
  std::vector<Word> unary;
  for (const Word& x : members_up_to(L, L.horizon())) {
    if (!x.is_binary()) {
      throw std::invalid_argument("tally_encode: '" + L.name() + "' has a non-binary member");
    }
    const std::uint64_t code = tally_code(x);
    if (code > horizon) throw HorizonExceeded("tally(" + L.name() + ")", code, horizon);
    unary.push_back(Word::ones(code));
  }
  return Language::explicit_set("tally(" + L.name() + ")", horizon, std::move(unary));
}

}  // namespace advlab
