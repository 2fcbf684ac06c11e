#include "advlab/random.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "advlab/errors.hpp"
#include "advlab/reductions.hpp"

namespace advlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = bound * (std::numeric_limits<std::uint64_t>::max() / bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

Word Rng::word(std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(coin() ? Symbol::One : Symbol::Zero);
  return w;
}

Language gen_sparse_language(std::uint64_t seed, std::size_t n_max, const Poly& cap) {
  Rng rng(seed);
  return gen_sparse_language(rng, n_max, cap);
}

Language gen_sparse_language(Rng& rng, std::size_t n_max, const Poly& cap) {
  std::vector<Word> members;
  for (std::size_t l = 0; l <= n_max; ++l) {
    const std::uint64_t space = std::uint64_t{1} << l;
    const std::uint64_t limit = cap(l);
    if (limit > space) {
      throw InvalidCap("cap(" + std::to_string(l) + ") = " + std::to_string(limit) +
                       " exceeds the " + std::to_string(space) + " words of that length");
    }
    const std::uint64_t count = rng.between(0, limit);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < count) chosen.insert(rng.below(space));
    for (std::uint64_t v : chosen) members.push_back(Word::from_bits(v, l));
  }
  return Language::explicit_set("sparse", n_max, std::move(members));
}

Language gen_dense_language(Rng& rng, std::size_t n_max) {
  std::vector<Word> members;
  for (std::size_t l = 0; l <= n_max; ++l) {
    for (const Word& w : binary_words(l)) {
      if (rng.coin()) members.push_back(w);
    }
  }
  return Language::explicit_set("dense", n_max, std::move(members));
}

Expr random_expr(Rng& rng, const ExprShape& shape) {
  const bool must_leaf = shape.max_depth <= 1;
  if (must_leaf || rng.chance(1, 3)) {
    std::vector<int> kinds{0};
    if (shape.input_bits > 0) kinds.insert(kinds.end(), {1, 1, 1});
    if (shape.cert_bits > 0) kinds.insert(kinds.end(), {2, 2, 2});
    if (shape.max_len_guard > 0) kinds.push_back(3);
    switch (kinds[rng.below(kinds.size())]) {
      case 1:
        return Expr::input_bit(rng.below(shape.input_bits));
      case 2:
        return Expr::cert_bit(rng.below(shape.cert_bits));
      case 3:
        return Expr::len_eq(rng.between(0, shape.max_len_guard));
      default:
        return Expr::constant(rng.coin());
    }
  }
  ExprShape inner = shape;
  inner.max_depth = shape.max_depth - 1;
  switch (rng.below(4)) {
    case 0:
      return !random_expr(rng, inner);
    case 1: {
      Expr a = random_expr(rng, inner);
      return a & random_expr(rng, inner);
    }
    case 2: {
      Expr a = random_expr(rng, inner);
      return a | random_expr(rng, inner);
    }
    default: {
      Expr a = random_expr(rng, inner);
      return a ^ random_expr(rng, inner);
    }
  }
}

AdviceFamily random_advice_family(Rng& rng, std::size_t n_max) {
  const Poly length({rng.between(0, 4), rng.between(0, 2)});
  std::map<std::size_t, Word> table;
  for (std::size_t n = 0; n <= n_max; ++n) table.emplace(n, rng.word(length(n)));
  return AdviceFamily::from_table(length, std::move(table));
}

BoundedAdviceSolver random_advice_solver(Rng& rng, std::size_t n_max) {
  AdviceFamily family = random_advice_family(rng, n_max);
  const std::uint64_t salt = rng.below(64);
  auto user = [salt](const Word& x, const Word& advice) {
    bool parity = false;
    for (std::size_t i = 0; i < x.size(); ++i) parity ^= x.bit(i);
    if (advice.empty()) return parity;
    const std::uint64_t slot = (tally_code(x) + salt) % advice.size();
    return advice.bit(slot) != parity;
  };
  return {std::move(family), std::move(user)};
}

namespace {

enum class Shape { Whole, DropFirst, DropLast, Reverse, Complement, Prefix };

template <typename Differs>
bool oracle_matters(std::size_t n_max, const Differs& differs) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const Word& x : binary_words(n)) {
      if (differs(x)) return true;
    }
  }
  return false;
}

Word shape_query(Shape shape, std::size_t k, const Word& x) {
  switch (shape) {
    case Shape::Whole:
      return x;
    case Shape::DropFirst:
      return x.empty() ? x : x.suffix_from(1);
    case Shape::DropLast:
      return x.empty() ? x : x.prefix(x.size() - 1);
    case Shape::Reverse: {
      std::string s = x.str();
      std::reverse(s.begin(), s.end());
      return Word::parse(s);
    }
    case Shape::Complement: {
      Word out;
      for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.bit(i) ? Symbol::Zero : Symbol::One);
      return out;
    }
    case Shape::Prefix:
      return x.prefix(std::min(k, x.size()));
  }
  return x;
}

}  // namespace

DecisionMachine random_sparse_oracle_machine(Rng& rng, std::size_t n_max, const Language* oracle) {
  DecisionMachine machine;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t questions = rng.between(1, 3);
    std::vector<std::pair<Shape, std::size_t>> shapes;
    for (std::size_t q = 0; q < questions; ++q) {
      shapes.emplace_back(static_cast<Shape>(rng.below(6)), rng.between(0, n_max));
    }
    // The first answer always matters, so the oracle is never ignored outright.
    Expr decide = Expr::cert_bit(0) ^ random_expr(rng, {3, 0, questions, n_max});
    auto body = [shapes, decide](const Word& x, std::span<OracleHandle> oracles) {
      std::uint64_t answers = 0;
      for (const auto& [shape, k] : shapes) {
        answers = (answers << 1) | (oracles[0].query(shape_query(shape, k, x)) ? 1U : 0U);
      }
      return eval_packed(decide, x, answers, shapes.size());
    };
    machine = DecisionMachine{std::move(body), Poly::constant(questions), 1};
    if (!oracle) break;
    const Language empty = Language::explicit_set("empty", oracle->horizon(), {});
    if (oracle_matters(n_max, [&](const Word& x) {
          OracleHandle live(*oracle), none(empty);
          return run_machine(machine, x, std::span(&live, 1)).answer !=
                 run_machine(machine, x, std::span(&none, 1)).answer;
        })) {
      break;
    }
  }
  return machine;
}

namespace {

enum class CensusShape { Whole, DropFirst, CertPrefix, XorCert };

Word census_query(CensusShape shape, const Word& x, const Word& c) {
  switch (shape) {
    case CensusShape::Whole:
      return x;
    case CensusShape::DropFirst:
      return x.empty() ? x : x.suffix_from(1);
    case CensusShape::CertPrefix:
      return c.prefix(std::min(c.size(), x.size()));
    case CensusShape::XorCert: {
      if (c.empty()) return x;
      Word out;
      for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x.bit(i) != c.bit(i % c.size()) ? Symbol::One : Symbol::Zero);
      }
      return out;
    }
  }
  return x;
}

}  // namespace

CensusInstance random_census_instance(Rng& rng, std::size_t n_max, const Poly& cap,
                                      const Poly* cert_len) {
  NpMachine oracle;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 10000) throw InvalidCap("no sparse NP language found under cap " + cap.str());
    const std::size_t oracle_cert = rng.between(0, 3);
    const std::size_t literals = rng.between(1, 3);
    Expr verifier = Expr::constant(true);
    for (std::size_t i = 0; i < literals; ++i) {
      Expr bit = Expr::input_bit(rng.below(4));
      verifier = verifier & (rng.coin() ? bit : !bit);
    }
    verifier = verifier & random_expr(rng, {3, 4, oracle_cert, 0});
    oracle = NpMachine{verifier, Poly::constant(oracle_cert)};
    // Empty oracles make the compiled machine trivially right; skip them.
    const Language L = Language::np_verifier("L", n_max, oracle);
    if (census(L, n_max).total() > 0 && is_sparse_up_to(L, n_max, cap)) break;
  }

  const Language live = Language::np_verifier("L", n_max, oracle);
  const Language empty = Language::explicit_set("empty", n_max, {});
  OracleNpMachine machine;
  // Redraw machines whose answers never depend on the oracle, within a budget.
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly k_cert = Poly::constant(rng.between(0, 3));
    if (rng.chance(1, 5)) k_cert = Poly::identity();
    if (cert_len) k_cert = *cert_len;
    const std::size_t fixed_cert = std::min<std::uint64_t>(k_cert(0), 8);

    const std::size_t questions = rng.between(1, 2);
    std::vector<CensusShape> shapes;
    for (std::size_t q = 0; q < questions; ++q) {
      shapes.push_back(static_cast<CensusShape>(rng.below(4)));
    }
    // Input bits of `decide` are the oracle answers; certificate bits are k's.
    const Expr decide = Expr::input_bit(0) ^ random_expr(rng, {3, questions, fixed_cert, 0});

    machine.cert_len = k_cert;
    machine.description = print_expr(decide);
    machine.verify = [shapes, decide](const Word& x, const Word& c,
                                       const OracleNpMachine::Ask& ask) {
      Word answers;
      for (CensusShape shape : shapes) {
        answers.push_back(ask(census_query(shape, x, c)) ? Symbol::One : Symbol::Zero);
      }
      return eval_expr(decide, answers, c);
    };
    if (oracle_matters(n_max, [&](const Word& x) {
          return census_direct(machine, live, x) != census_direct(machine, empty, x);
        })) {
      break;
    }
  }
  return {std::move(oracle), std::move(machine)};
}

}  // namespace advlab
