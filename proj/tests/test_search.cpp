#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "sforge/search.hpp"

using namespace sforge;

TEST_SUITE("search") {

TEST_CASE("sampler hits the documented shells") {
  const auto table = CenterDensityTable::defaults();
  {
    SplitMix64 rng(1);
    const double W = candidate_norm(20, 2, table);  // ~4.806
    CHECK(sample_candidate(W, 2, rng) == std::vector<int>{1, 5});
  }
  {
    SplitMix64 rng(2);
    CHECK(sample_candidate(std::sqrt(2.0), 2, rng) == std::vector<int>{1, 1});
  }
}

TEST_CASE("sampler ranges for k = 3") {
  SplitMix64 rng(3);
  std::set<int> seen_v2;
  for (int trial = 0; trial < 400; ++trial) {
    const std::vector<int> v = sample_candidate(10.0, 3, rng);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1);
    CHECK(v[1] >= 1);
    CHECK(v[1] <= 7);  // floor(sqrt((100 - 1) / 2))
    CHECK(v[2] ==
          static_cast<int>(std::llround(std::sqrt(99.0 - v[1] * v[1]))));
    seen_v2.insert(v[1]);
  }
  CHECK(seen_v2.size() == 7);  // every admissible v2 shows up
}

TEST_CASE("sampler soundness") {
  SplitMix64 rng(4);
  for (double W : {2.0, 5.5, 17.3, 120.0}) {
    for (int k : {2, 3, 5, 8}) {
      if (W < std::sqrt(static_cast<double>(k))) continue;
      for (int trial = 0; trial < 50; ++trial) {
        const std::vector<int> v = sample_candidate(W, k, rng);
        CHECK(v[0] == 1);
        double norm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) CHECK(v[i] >= v[i - 1]);
          norm += static_cast<double>(v[i]) * v[i];
        }
        norm = std::sqrt(norm);
        CHECK(norm >= W - 1.0);
        CHECK(norm <= W + 1.0);
      }
    }
  }
  SplitMix64 rng2(5);
  CHECK_THROWS_AS(sample_candidate(0.5, 3, rng2), SearchError);
  CHECK_THROWS_AS(sample_candidate(1.2, 8, rng2), SearchError);
}

TEST_CASE("heuristic finds the published small designs") {
  SearchConfig cfg;
  cfg.M = 20;
  cfg.n = 4;
  cfg.Q = 8;
  cfg.seed = 1;
  const SearchResult res = heuristic_search(cfg);
  CHECK(res.best_b == std::vector<int>{1, 5});
  CHECK(res.best_d == doctest::Approx(0.917).epsilon(1e-3));
  CHECK(res.evaluated == 1);  // the k = 2 shell holds a single candidate

  SearchConfig tiny;
  tiny.M = 4;
  tiny.n = 2;
  tiny.Q = 1;
  const SearchResult r2 = heuristic_search(tiny);
  CHECK(r2.best_b == std::vector<int>{1});
  CHECK(r2.best_d == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("heuristic is deterministic and worker-independent") {
  SearchConfig cfg;
  cfg.M = 64;
  cfg.n = 8;
  cfg.Q = 32;
  cfg.seed = 99;
  cfg.parallel_workers = 1;
  const SearchResult serial = heuristic_search(cfg);
  cfg.parallel_workers = 4;
  const SearchResult parallel = heuristic_search(cfg);
  CHECK(serial.best_b == parallel.best_b);
  CHECK(serial.best_d == parallel.best_d);
  CHECK(serial.evaluated == parallel.evaluated);
  CHECK(serial.duplicates_skipped == parallel.duplicates_skipped);
  CHECK(serial.best_x == parallel.best_x);
}

TEST_CASE("best_d is nondecreasing in Q (nested streams)") {
  double prev = 0.0;
  for (long long Q : {4, 8, 16, 32, 64}) {
    SearchConfig cfg;
    cfg.M = 30;
    cfg.n = 6;
    cfg.Q = Q;
    cfg.seed = 5;
    const SearchResult res = heuristic_search(cfg);
    CHECK(res.best_d >= prev);
    prev = res.best_d;
  }
}

TEST_CASE("heuristic never beats the exhaustive optimum") {
  for (int M : {10, 24, 50, 100}) {
    SearchConfig cfg;
    cfg.M = M;
    cfg.n = 4;
    cfg.Q = 64;
    cfg.seed = 3;
    const SearchResult h = heuristic_search(cfg);
    const SearchResult e = exhaustive_search(M, 4);
    CHECK(h.best_d <= e.best_d + 1e-9);
    // at M = 10 the shell holds exactly the optimal class
    if (M == 10) CHECK(h.best_d == doctest::Approx(e.best_d).epsilon(1e-12));
  }
}

TEST_CASE("exhaustive reproduces the known optima") {
  const SearchResult r10 = exhaustive_search(10, 4);
  CHECK(r10.best_d == doctest::Approx(1.224744871).epsilon(1e-6));
  CHECK(r10.best_b == std::vector<int>{1, 3});
  const SearchResult r20 = exhaustive_search(20, 4);
  CHECK(r20.best_d == doctest::Approx(0.959).epsilon(1e-3));
  const SearchResult r10_6 = exhaustive_search(10, 6);
  CHECK(r10_6.best_d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("isometry dedup does not change the optimum") {
  const auto table = CenterDensityTable::defaults();
  for (int M : {12, 18, 25}) {
    const SearchResult with = exhaustive_search(M, 4, 0, table, true);
    const SearchResult without = exhaustive_search(M, 4, 0, table, false);
    CHECK(with.best_d == without.best_d);
    CHECK(with.best_b == without.best_b);
    CHECK(with.evaluated <= without.evaluated);
  }
}

TEST_CASE("exhaustive guard refuses huge spaces with an estimate") {
  bool threw = false;
  try {
    exhaustive_search(4000, 6);
  } catch (const SearchError& e) {
    threw = true;
    const std::string what = e.what();
    CHECK(what.find("guard") != std::string::npos);
    CHECK(what.find("estimate") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("search-space estimate") {
  CHECK(estimate_search_space(16, 16) == doctest::Approx(35184372088832.0));
  CHECK(estimate_search_space(2, 2) == doctest::Approx(1.0));
  CHECK(estimate_search_space(10, 4) == doctest::Approx(156.25));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(1000) == 400);
  CHECK(euler_phi(97) == 96);
}

}  // TEST_SUITE
