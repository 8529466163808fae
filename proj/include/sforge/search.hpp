#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sforge/bounds.hpp"
#include "sforge/generator.hpp"
#include "sforge/ivp.hpp"
#include "sforge/rng.hpp"

namespace sforge {

class SearchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  int M = 2;
  int n = 4;                 // even
  long long Q = 512;         // distinct candidates to test
  std::uint64_t seed = 0;
  int parallel_workers = 0;  // 0 = all available threads, 1 = serial reference
};

struct SearchResult {
  std::vector<int> best_b;   // canonical form of the winner
  double best_d = 0.0;
  std::vector<double> best_x;
  std::vector<double> best_y;
  long long evaluated = 0;           // distinct candidates tested
  long long duplicates_skipped = 0;  // isometric repeats dropped before the IVP
  double d_check = 0.0;
  double ratio = 0.0;                // best_d / d_check
};

/// One shell candidate: v_1 = 1, coordinates nondecreasing, each middle
/// coordinate drawn uniformly from the integer range that leaves the
/// remaining coordinates room inside the shell of radius W, and the last
/// coordinate rounded onto the shell.  Resamples on an empty range and
/// raises SearchError once W is structurally too small for k.
std::vector<int> sample_candidate(double W, int k, SplitMix64& rng);

/// Shell-constrained random search.  The candidate stream is derived purely
/// from (seed, Q): runs with larger Q extend the stream, so best_d is
/// nondecreasing in Q, and the result does not depend on the worker count.
SearchResult heuristic_search(const SearchConfig& cfg,
                              const CenterDensityTable& table);
SearchResult heuristic_search(const SearchConfig& cfg);

/// Isometry-reduced brute force over 1 <= b_j <= M/2; exact optimum over
/// cyclic codes.  Refuses (with the size estimate attached) when the raw
/// enumeration would exceed 10^7 candidates.  `dedup_isometric = false`
/// evaluates every enumerated candidate instead of one per canonical class
/// (test hook; the result must not change).
SearchResult exhaustive_search(int M, int n, int workers,
                               const CenterDensityTable& table,
                               bool dedup_isometric = true);
SearchResult exhaustive_search(int M, int n, int workers = 0);

/// M^n / (2^n phi(M)): size of the reduced brute-force search space.
double estimate_search_space(int M, int n);

long long euler_phi(long long m);

}  // namespace sforge
