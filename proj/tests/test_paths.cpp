#include <doctest.h>

#include "oracles.hpp"
#include "tourney/generate.hpp"
#include "tourney/paths.hpp"

using namespace tourney;

TEST_CASE("redei_path") {
  SUBCASE("transitive four descends by score") {
    const auto p = redei_path(oracle::transitive(4));
    CHECK(p.order == std::vector<int>{3, 2, 1, 0});
  }

  SUBCASE("3-cycle yields one of its three paths") {
    const auto p = redei_path(oracle::three_cycle());
    CHECK(is_complete_path(oracle::three_cycle(), p.order));
  }

  SUBCASE("single vertex") {
    CHECK(redei_path(tournament_from_arcs(1, {})).order == std::vector<int>{0});
  }

  SUBCASE("always valid, n <= 5 exhaustive") {
    for (int n = 1; n <= 5; ++n)
      for (const Tournament& t : AllTournaments(n))
        CHECK(is_complete_path(t, redei_path(t).order));
  }

  SUBCASE("always valid on larger random tournaments") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Tournament t = random_tournament(12, Seed{seed});
      CHECK(is_complete_path(t, redei_path(t).order));
    }
  }
}

TEST_CASE("count_complete_paths") {
  SUBCASE("transitive tournaments have exactly one") {
    for (int n = 1; n <= 8; ++n) CHECK(count_complete_paths(oracle::transitive(n)) == 1);
  }

  SUBCASE("3-cycle has three") { CHECK(count_complete_paths(oracle::three_cycle()) == 3); }

  SUBCASE("rotational five: odd, agrees with the DP oracle") {
    const Tournament t = oracle::rotational(5);
    const std::uint64_t c = count_complete_paths(t);
    CHECK(c % 2 == 1);
    CHECK(c == oracle::complete_path_count_dp(t));
  }

  SUBCASE("permutation scan equals DP oracle on random n = 7") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Tournament t = random_tournament(7, Seed{seed});
      CHECK(count_complete_paths(t) == oracle::complete_path_count_dp(t));
    }
  }

  SUBCASE("factorial guard") {
    try {
      (void)count_complete_paths(random_tournament(9, Seed{0}));
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TooLarge);
    }
  }
}

TEST_CASE("triple count formulas") {
  SUBCASE("3-cycle") {
    CHECK(transitive_triples_count(oracle::three_cycle()) == 0);
    CHECK(cyclic_triples_count(oracle::three_cycle()) == 1);
  }

  SUBCASE("transitive n has all triples transitive") {
    for (int n = 3; n <= 7; ++n) {
      const std::uint64_t all = static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;
      CHECK(transitive_triples_count(oracle::transitive(n)) == all);
      CHECK(cyclic_triples_count(oracle::transitive(n)) == 0);
    }
  }

  SUBCASE("regular five splits 5 and 5") {
    CHECK(transitive_triples_count(oracle::rotational(5)) == 5);
    CHECK(cyclic_triples_count(oracle::rotational(5)) == 5);
  }

  SUBCASE("formula equals enumeration, n <= 5 exhaustive") {
    for (int n = 1; n <= 5; ++n)
      for (const Tournament& t : AllTournaments(n)) {
        const auto direct = oracle::triple_counts(t);
        CHECK(transitive_triples_count(t) == direct.transitive);
        CHECK(cyclic_triples_count(t) == direct.cyclic);
      }
  }

  SUBCASE("conservation on random tournaments") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Tournament t = random_tournament(10, Seed{seed});
      CHECK(transitive_triples_count(t) + cyclic_triples_count(t) == 120);
    }
  }
}

TEST_CASE("max_cyclic_triples") {
  CHECK(max_cyclic_triples(1) == 0);
  CHECK(max_cyclic_triples(2) == 0);
  CHECK(max_cyclic_triples(3) == 1);
  CHECK(max_cyclic_triples(4) == 2);
  CHECK(max_cyclic_triples(5) == 5);
  CHECK(max_cyclic_triples(6) == 8);
  CHECK(max_cyclic_triples(7) == 14);

  SUBCASE("zero vertices refused") {
    CHECK_THROWS_AS((void)max_cyclic_triples(0), Error);
  }

  SUBCASE("witness search attains the formula, n <= 5") {
    for (int n = 3; n <= 5; ++n) {
      const auto ex = max_cyclic_witness(n);
      CHECK(ex.count == max_cyclic_triples(n));
      CHECK(cyclic_triples_count(ex.witness) == ex.count);
    }
  }
}

TEST_CASE("transitivity_report") {
  SUBCASE("transitive five: all views agree on yes") {
    const auto rep = transitivity_report(oracle::transitive(5), true);
    CHECK(rep.is_transitive);
    CHECK_FALSE(rep.has_cycle);
    CHECK(rep.complete_path_count == 1);
    CHECK(rep.score_is_identity_staircase);
    CHECK(rep.transitive_triples == 10);
    CHECK(rep.cyclic_triples == 0);
  }

  SUBCASE("3-cycle: all views agree on no") {
    const auto rep = transitivity_report(oracle::three_cycle(), true);
    CHECK_FALSE(rep.is_transitive);
    CHECK(rep.has_cycle);
    CHECK(rep.complete_path_count == 3);
    CHECK_FALSE(rep.score_is_identity_staircase);
    CHECK(rep.transitive_triples == 0);
  }

  SUBCASE("one vertex is vacuously transitive") {
    const auto rep = transitivity_report(tournament_from_arcs(1, {}), true);
    CHECK(rep.is_transitive);
    CHECK(rep.complete_path_count == 1);
    CHECK(rep.score_is_identity_staircase);
  }

  SUBCASE("path count only on request") {
    CHECK_FALSE(transitivity_report(oracle::three_cycle(), false).complete_path_count.has_value());
  }

  SUBCASE("count request past the guard") {
    CHECK_THROWS_AS((void)transitivity_report(random_tournament(9, Seed{1}), true), Error);
  }
}
