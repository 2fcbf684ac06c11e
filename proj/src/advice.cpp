#include "advlab/advice.hpp"

#include <memory>

#include <algorithm>
#include <stdexcept>

#include "advlab/errors.hpp"

namespace advlab {

AdviceFamily AdviceFamily::from_table(Poly length, std::map<std::size_t, Word> table) {
  for (const auto& [n, bits] : table) {
    if (!bits.is_binary() || bits.size() > length(n)) {
      throw std::invalid_argument("advice table entry for n=" + std::to_string(n) +
                                  " is not a binary word of at most " + std::to_string(length(n)) +
                                  " bits");
    }
  }
  auto shared = std::make_shared<const std::map<std::size_t, Word>>(std::move(table));
  Poly len = length;
  return AdviceFamily(std::move(length), [shared, len](std::size_t n) {
    Word a;
    if (auto it = shared->find(n); it != shared->end()) a = it->second;
    return a + Word::zeros(len(n) - a.size());
  });
}

Word AdviceFamily::advice(std::size_t n) const {
  Word a = generator_(n);
  const std::uint64_t expected = length_(n);
  if (exact_ ? (a.size() != expected || !a.is_binary()) : a.size() > expected) {
    throw std::logic_error("advice generator broke its length contract at n=" + std::to_string(n));
  }
  return a;
}

const Word& SolverRun::advice_for(std::size_t n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, solver_->family.advice(n)).first;
  return it->second;
}

bool SolverRun::decide(const Word& x) { return solver_->user(x, advice_for(x.size())); }

std::uint64_t pair_index(std::uint64_t n, std::uint64_t m) {
  const std::uint64_t s = n + m;
  return s * (s + 1) / 2 + m;
}

Poly advice_query_bound(const Poly& length) {
  const Poly s = Poly::identity() + length;
  return s * s + s + length;
}

Language advice_language(const AdviceFamily& f, std::size_t n_max) {
  if (!f.exact()) throw std::invalid_argument("advice_language needs an exact-length family");
  std::vector<Word> members;
  std::uint64_t horizon = advice_query_bound(f.length())(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Word a = f.advice(n);
    for (std::size_t m = 1; m <= a.size(); ++m) {
      const std::uint64_t k = pair_index(n, m);
      horizon = std::max(horizon, k);
      if (a.bit(m - 1)) members.push_back(Word::ones(k));
    }
  }
  return Language::explicit_set("advice(" + f.length().str() + ")",
                                static_cast<std::size_t>(std::max<std::uint64_t>(horizon, 1)),
                                std::move(members));
}

Word reconstruct_advice(OracleHandle& h, std::size_t n, const Poly& length) {
  Word a;
  const std::uint64_t bits = length(n);
  for (std::uint64_t m = 1; m <= bits; ++m) {
    a.push_back(h.query(Word::ones(pair_index(n, m))) ? Symbol::One : Symbol::Zero);
  }
  return a;
}

Word unary_advice_bits(const Language& L, std::size_t q_max) {
  if (q_max > L.horizon()) throw HorizonExceeded(L.name(), q_max, L.horizon());
  Word a;
  for (std::size_t m = 1; m <= q_max; ++m) {
    a.push_back(L.contains_unchecked(Word::ones(m)) ? Symbol::One : Symbol::Zero);
  }
  return a;
}

}  // namespace advlab
