#include <doctest.h>

#include <omp.h>

#include "advlab/harness.hpp"
#include "advlab/language.hpp"
#include "advlab/np_machine.hpp"
#include "advlab/random.hpp"
#include "../src/parallel.hpp"

using namespace advlab;

TEST_CASE("parallel brute force matches the serial kernel") {
  Rng rng(3);
  for (int i = 0; i < 8; ++i) {
    const Language P = Language::predicate("P", 14, random_expr(rng, {5, 6, 0, 14}));
    const Language N = Language::np_verifier("N", 13, NpMachine{random_expr(rng, {5, 5, 4, 13}), Poly({4})});
    for (std::size_t l : {0, 5, 11, 13}) {
      CHECK(members_at(P, l) == members_at_serial(P, l));
      CHECK(members_at(N, l) == members_at_serial(N, l));
    }
  }
}

TEST_CASE("parallel witness search returns the serial first witness") {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const Expr v = random_expr(rng, {6, 3, 18, 0});
    const Word x = rng.word(3);
    CHECK(find_witness(v, x, 18) == find_witness_serial(v, x, 18));
  }
  // Only the last certificate works: the scan must cover every block.
  Expr all = Expr::constant(true);
  for (std::size_t j = 0; j < 17; ++j) all = all & Expr::cert_bit(j);
  CHECK(find_witness(all, Word(), 17) == (std::uint64_t{1} << 17) - 1);
  CHECK(!find_witness(all & !Expr::cert_bit(0), Word(), 17));
}

TEST_CASE("parallel trials match serial trials") {
  for (Experiment e : {Experiment::Enumerate, Experiment::Census, Experiment::AdviceRoundtrip}) {
    ExperimentConfig cfg;
    cfg.experiment = e;
    cfg.n_max = 5;
    cfg.trials = 6;
    cfg.seed = 17;
    CHECK(run_experiment(cfg) == run_experiment_serial(cfg));
  }
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  std::vector<int> hit(5000, 0);
  try {
    detail::parallel_for(5000, [&](std::int64_t i) {
      hit[static_cast<std::size_t>(i)] = 1;
      if (i == 4000 || i == 2500) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "2500");
  }
  CHECK(omp_get_max_threads() >= 1);
}
