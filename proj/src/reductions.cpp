#include "advlab/reductions.hpp"

#include <algorithm>
#include <limits>

#include "advlab/errors.hpp"
#include "advlab/np_sim.hpp"
#include "advlab/search.hpp"

namespace advlab {

namespace {

// Lookup oracles decide by their own range rule, not by horizon.
constexpr std::size_t kUnboundedHorizon = std::numeric_limits<std::size_t>::max() / 2;

void require_sparse(const Language& L, std::size_t n_max, const Poly& bound) {
  const CensusTable table = census(L, n_max);
  for (std::size_t l = 0; l <= n_max; ++l) {
    if (table.counts[l] > bound(l)) throw SparsityViolated(L.name(), l, table.counts[l], bound(l));
  }
}

Language list_lookup(std::shared_ptr<const std::vector<Word>> sorted, std::size_t max_length) {
  auto contains = [sorted, max_length](const Word& w) {
    if (w.size() > max_length) {
      throw QueryOutOfDeclaredRange("query of length " + std::to_string(w.size()) +
                                    " exceeds the listed range " + std::to_string(max_length));
    }
    return std::binary_search(sorted->begin(), sorted->end(), w, ShortLex{});
  };
  return Language::derived("list", kUnboundedHorizon, std::move(contains));
}

}  // namespace

MachineRun run_machine(const DecisionMachine& m, const Word& x, std::span<OracleHandle> oracles) {
  std::uint64_t before = 0;
  for (const auto& h : oracles) before += h.query_count();
  MachineRun run;
  run.answer = m.body(x, oracles);
  for (const auto& h : oracles) run.queries += h.query_count();
  run.queries -= before;
  run.bound = m.query_poly(x.size());
  return run;
}

Word encode_member_list(std::vector<Word> members) {
  std::sort(members.begin(), members.end(), ShortLex{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() == 1 && members.front().empty()) return Word::parse("#");
  return join(members);
}

std::vector<Word> decode_member_list(const Word& encoded) {
  if (encoded.empty()) return {};
  auto members = split(encoded);
  std::sort(members.begin(), members.end(), ShortLex{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

UnaryCompilation advice_to_unary(const BoundedAdviceSolver& s, std::size_t n_max) {
  Language oracle = advice_language(s.family, n_max);
  const Poly length = s.family.length();
  auto user = s.user;
  DecisionMachine machine{
      [length, user](const Word& x, std::span<OracleHandle> oracles) {
        return user(x, reconstruct_advice(oracles[0], x.size(), length));
      },
      length, 1};
  return {std::move(machine), std::move(oracle)};
}

UnaryCompilation advice_to_sparse(const BoundedAdviceSolver& s, std::size_t n_max) {
  UnaryCompilation compiled = advice_to_unary(s, n_max);
  require_sparse(compiled.oracle, compiled.oracle.horizon(), Poly::constant(1));
  return compiled;
}

BoundedAdviceSolver unary_to_advice(const DecisionMachine& m, const Language& oracle,
                                    const Poly& q_max) {
  AdviceFamily family(q_max, [oracle, q_max](std::size_t n) {
    return unary_advice_bits(oracle, static_cast<std::size_t>(q_max(n)));
  });
  auto body = m.body;
  auto user = [body](const Word& x, const Word& advice) {
    auto contains = [advice](const Word& w) {
      if (!w.is_unary()) return false;
      if (w.empty() || w.size() > advice.size()) {
        throw QueryOutOfDeclaredRange("unary query of length " + std::to_string(w.size()) +
                                      " outside the advice range 1.." +
                                      std::to_string(advice.size()));
      }
      return advice.bit(w.size() - 1);
    };
    OracleHandle lookup(Language::derived("unary-advice", kUnboundedHorizon, std::move(contains)));
    return body(x, std::span<OracleHandle>(&lookup, 1));
  };
  return BoundedAdviceSolver{std::move(family), std::move(user)};
}

void GeneratorLog::record(std::size_t n, GeneratorStats stats) {
  std::lock_guard lock(mutex_);
  by_length_[n] = stats;
}

std::map<std::size_t, GeneratorStats> GeneratorLog::snapshot() const {
  std::lock_guard lock(mutex_);
  return by_length_;
}

SparseAdviceCompilation sparse_to_advice(const DecisionMachine& m, const Language& oracle,
                                         const Poly& bound, std::size_t n_max) {
  require_sparse(oracle, n_max, bound);

  // These stand in for the NP prefix oracle; built once per length.
  auto prefix_oracles = std::make_shared<std::vector<Language>>();
  for (std::size_t l = 0; l <= n_max; ++l) prefix_oracles->push_back(prefix_language_exact(oracle, l));

  auto log = std::make_shared<GeneratorLog>();
  const Poly n_plus_2 = Poly({2, 1});
  const Poly advice_length = n_plus_2 * n_plus_2 * bound + Poly::constant(1);

  auto generator = [prefix_oracles, log, n_max](std::size_t n) {
    if (n > n_max) throw HorizonExceeded("sparse advice", n, n_max);
    std::vector<OracleHandle> family;
    for (std::size_t l = 0; l <= n; ++l) family.emplace_back((*prefix_oracles)[l]);
    PrefixProbe probe = PrefixProbe::over_family(family);
    LayeredEnumeration found = enumerate_up_to(probe, n);
    const std::uint64_t s =
        *std::max_element(found.members_by_length.begin(), found.members_by_length.end());
    log->record(n, {found.total_queries(), s, layered_enumeration_bound(n, s)});
    return encode_member_list(std::move(found.members));
  };

  auto body = m.body;
  auto user = [body](const Word& x, const Word& advice) {
    auto members = std::make_shared<const std::vector<Word>>(decode_member_list(advice));
    OracleHandle lookup(list_lookup(std::move(members), x.size()));
    return body(x, std::span<OracleHandle>(&lookup, 1));
  };

  return {BoundedAdviceSolver{AdviceFamily(advice_length, std::move(generator), false),
                              std::move(user)},
          std::move(log)};
}

bool census_direct(const OracleNpMachine& k, const Language& oracle, const Word& x,
                   std::size_t cap) {
  const std::uint64_t bits = k.cert_len(x.size());
  if (bits > cap || bits > 63) throw CertificateSpaceTooLarge(static_cast<std::size_t>(bits), cap);
  const OracleNpMachine::Ask ask = [&oracle](const Word& y) { return membership(oracle, y); };
  const std::uint64_t space = std::uint64_t{1} << bits;
  for (std::uint64_t c = 0; c < space; ++c) {
    if (k.verify(x, Word::from_bits(c, static_cast<std::size_t>(bits)), ask)) return true;
  }
  return false;
}

bool CensusCache::lookup(std::size_t length, std::vector<Word>& out) const {
  std::lock_guard lock(mutex_);
  auto it = layers_.find(length);
  if (it == layers_.end()) return false;
  out = it->second;
  return true;
}

void CensusCache::store(std::size_t length, std::vector<Word> members) {
  std::lock_guard lock(mutex_);
  layers_.emplace(length, std::move(members));
}

CensusCompilation census_compile(const OracleNpMachine& k, const NpMachine& sparse_oracle,
                                 const Poly& bound, std::size_t n_max, std::size_t cap) {
  const Language L = Language::np_verifier("L", n_max, sparse_oracle, cap);
  require_sparse(L, n_max, bound);

  std::uint64_t final_horizon = n_max + 1;
  for (std::size_t l = 0; l <= n_max; ++l) final_horizon += (l + 1) * bound(l);

  auto final_contains = [k, cap](const Word& w) {
    const auto sep = w.str().find('#');
    if (sep == std::string::npos) return false;
    const Word x = w.prefix(sep);
    const Word list = w.suffix_from(sep + 1);
    if (!x.is_binary()) return false;
    const auto members = decode_member_list(list);
    for (const Word& y : members) {
      if (!y.is_binary() || y.size() > x.size()) return false;
    }
    const std::uint64_t bits = k.cert_len(x.size());
    if (bits > cap || bits > 63) throw CertificateSpaceTooLarge(static_cast<std::size_t>(bits), cap);
    const OracleNpMachine::Ask ask = [&members, &x](const Word& y) {
      if (y.size() > x.size()) {
        throw QueryOutOfDeclaredRange("oracle question longer than the input");
      }
      return std::binary_search(members.begin(), members.end(), y, ShortLex{});
    };
    const std::uint64_t space = std::uint64_t{1} << bits;
    for (std::uint64_t c = 0; c < space; ++c) {
      if (k.verify(x, Word::from_bits(c, static_cast<std::size_t>(bits)), ask)) return true;
    }
    return false;
  };
  Language final_language =
      Language::derived("census_final(" + k.description + ")",
                        static_cast<std::size_t>(final_horizon), std::move(final_contains));
  Language oracle = combine(np_prefix_language_all(sparse_oracle, n_max, cap), final_language);

  auto cache = std::make_shared<CensusCache>();
  DecisionMachine::Body body = [cache](const Word& x, std::span<OracleHandle> oracles) {
    OracleHandle& handle = oracles[0];
    PrefixProbe probe = PrefixProbe::routed(handle, Symbol::Zero);
    std::vector<Word> all;
    for (std::size_t l = 0; l <= x.size(); ++l) {
      std::vector<Word> layer;
      if (!cache->lookup(l, layer)) {
        layer = enumerate_sparse(probe, l);
        cache->store(l, layer);
      }
      all.insert(all.end(), layer.begin(), layer.end());
    }
    Word query = Word().with(Symbol::One) + x;
    query.push_back(Symbol::Sep).append(encode_member_list(std::move(all)));
    return handle.query(query);
  };
  const Poly n_plus_1 = Poly({1, 1});
  Poly query_poly =
      Poly::constant(4) * n_plus_1 * n_plus_1 * (bound + Poly::constant(1)) + Poly::constant(1);
  return {DecisionMachine{std::move(body), std::move(query_poly), 1}, std::move(oracle),
          std::move(final_language), std::move(cache)};
}

}  // namespace advlab
