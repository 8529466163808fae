#include "sforge/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>

namespace sforge {

namespace {

constexpr int kMaxResample = 64;
// total sampling attempts per run; bounds the dedup loop when the shell holds
// fewer than Q isometry classes
constexpr long long kAttemptFactor = 32;

int resolve_workers(int workers) {
  return workers > 0 ? workers : omp_get_max_threads();
}

struct Candidate {
  std::vector<int> b;  // canonical form; 0 means identity block
};

CyclicGenerator make_generator(int M, int n, const std::vector<int>& canon) {
  std::vector<int> b = canon;
  for (int& v : b)
    if (v == 0) v = M;  // identity block spelled as M for the constructor
  return CyclicGenerator::create(M, n, std::move(b));
}

bool better(double d1, const std::vector<int>& b1, double d2,
            const std::vector<int>& b2) {
  if (d1 != d2) return d1 > d2;
  return b1 < b2;  // deterministic tie-break: lexicographically smallest
}

// Evaluates the IVP for every candidate.  workers == 1 is the serial
// reference path; the OpenMP path must produce identical results (solves are
// pure and the reduction below is order-independent).
std::vector<IVPSolution> evaluate_candidates(
    int M, int n, const std::vector<std::vector<int>>& cands, int workers) {
  std::vector<IVPSolution> sols(cands.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < cands.size(); ++i)
      sols[i] = solve_ivp(make_generator(M, n, cands[i]));
    return sols;
  }
  std::exception_ptr error;
  const int threads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cands.size());
       ++i) {
    try {
      sols[i] = solve_ivp(make_generator(M, n, cands[i]));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return sols;
}

SearchResult reduce_best(int M, int n,
                         const std::vector<std::vector<int>>& cands,
                         int workers) {
  const std::vector<IVPSolution> sols =
      evaluate_candidates(M, n, cands, workers);
  std::size_t best = 0;
  for (std::size_t i = 1; i < sols.size(); ++i)
    if (better(sols[i].d, cands[i], sols[best].d, cands[best])) best = i;
  SearchResult res;
  res.best_b = cands[best];
  res.best_d = sols[best].d;
  res.best_x = sols[best].x;
  res.best_y = sols[best].y;
  res.evaluated = static_cast<long long>(cands.size());
  return res;
}

}  // namespace

std::vector<int> sample_candidate(double W, int k, SplitMix64& rng) {
  if (k < 2) throw std::invalid_argument("sample_candidate requires k >= 2");
  if (W < 1.0)
    throw SearchError("candidate shell radius W < 1 leaves no room for v_1");
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    std::vector<int> v(k);
    v[0] = 1;
    double budget = W * W - 1.0;
    bool ok = true;
    for (int p = 2; p <= k - 1; ++p) {
      const int slots = k - p + 1;  // coordinates p..k still to place
      const long long hi = static_cast<long long>(
          std::floor(std::sqrt(std::max(0.0, budget) / slots)));
      const long long lo = v[p - 2];
      if (hi < lo) {
        ok = false;
        break;
      }
      v[p - 1] = static_cast<int>(rng.uniform_int(lo, hi));
      budget -= static_cast<double>(v[p - 1]) * v[p - 1];
    }
    if (!ok) continue;
    long long last = std::llround(std::sqrt(std::max(0.0, budget)));
    if (last < v[k - 2]) last = v[k - 2];  // rounding guard (k = 2, W < sqrt 2)
    v[k - 1] = static_cast<int>(last);
    return v;
  }
  std::ostringstream msg;
  msg << "shell sampler failed: W = " << W << " is too small for k = " << k;
  throw SearchError(msg.str());
}

SearchResult heuristic_search(const SearchConfig& cfg,
                              const CenterDensityTable& table) {
  if (cfg.M < 2) throw std::invalid_argument("heuristic search requires M >= 2");
  if (cfg.n < 2 || cfg.n % 2 != 0)
    throw std::invalid_argument("heuristic search requires even n >= 2");
  if (cfg.Q < 1) throw std::invalid_argument("Q must be at least 1");

  const int k = cfg.n / 2;
  const BoundInfo bound = bound_info(cfg.M, k, table);

  std::vector<std::vector<int>> cands;
  long long duplicates = 0;
  if (k == 1) {
    // the shell prescribes the single candidate b = (1)
    cands.push_back(canonical_b(cfg.M, std::vector<int>{1}));
  } else {
    // keep the all-ones candidate reachable when the clamped bound pushes W
    // under sqrt(k) at tiny M
    const double W = std::max(bound.W, std::sqrt(static_cast<double>(k)));
    const std::vector<int> units = units_mod(cfg.M);
    SplitMix64 rng(cfg.seed);
    std::set<std::vector<int>> seen;
    const long long cap = kAttemptFactor * cfg.Q;
    for (long long attempt = 0;
         attempt < cap && static_cast<long long>(cands.size()) < cfg.Q;
         ++attempt) {
      const std::vector<int> v = sample_candidate(W, k, rng);
      std::vector<int> canon = canonical_b(cfg.M, v, units);
      if (seen.insert(canon).second)
        cands.push_back(std::move(canon));
      else
        ++duplicates;
    }
    if (cands.empty())
      throw SearchError("no valid candidates sampled from the shell");
  }

  SearchResult res = reduce_best(cfg.M, cfg.n, cands, cfg.parallel_workers);
  res.duplicates_skipped = duplicates;
  res.d_check = bound.d_check;
  res.ratio = res.best_d / bound.d_check;
  return res;
}

SearchResult heuristic_search(const SearchConfig& cfg) {
  return heuristic_search(cfg, CenterDensityTable::defaults());
}

SearchResult exhaustive_search(int M, int n, int workers,
                               const CenterDensityTable& table,
                               bool dedup_isometric) {
  if (M < 2) throw std::invalid_argument("exhaustive search requires M >= 2");
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("exhaustive search requires even n >= 2");
  const int k = n / 2;
  const int half = M / 2;
  const double raw = std::pow(static_cast<double>(half), k);
  if (raw > 1e7) {
    std::ostringstream msg;
    msg << "exhaustive search refused: " << raw
        << " raw candidates exceed the 1e7 guard (reduced-space estimate "
        << estimate_search_space(M, n) << ")";
    throw SearchError(msg.str());
  }

  const std::vector<int> units = units_mod(M);
  const int threads = resolve_workers(workers);

  // nondecreasing exponent vectors; sorting is part of the canonical form, so
  // nothing is lost
  std::set<std::vector<int>> classes;
  long long valid = 0;
#pragma omp parallel num_threads(threads) if (workers != 1)
  {
    std::set<std::vector<int>> local;
    long long local_valid = 0;
#pragma omp for schedule(dynamic) nowait
    for (int b1 = 1; b1 <= half; ++b1) {
      std::vector<int> v(k);
      v[0] = b1;
      int pos = 1;
      if (k == 1) {
        long long g = std::gcd(static_cast<long long>(b1),
                               static_cast<long long>(M));
        if (g == 1) {
          ++local_valid;
          local.insert(canonical_b(M, v, units));
        }
        continue;
      }
      for (int j = 1; j < k; ++j) v[j] = b1;  // odometer over v[1..k-1]
      while (true) {
        long long g = M;
        for (int x : v) g = std::gcd(g, static_cast<long long>(x));
        if (g == 1) {
          ++local_valid;
          local.insert(canonical_b(M, v, units));
        }
        // advance
        pos = k - 1;
        while (pos >= 1) {
          if (v[pos] < half) {
            ++v[pos];
            for (int j = pos + 1; j < k; ++j) v[j] = v[pos];
            break;
          }
          --pos;
        }
        if (pos < 1) break;
      }
    }
#pragma omp critical
    {
      classes.merge(local);
      valid += local_valid;
    }
  }
  if (classes.empty())
    throw SearchError("no valid generators in the enumeration range");

  std::vector<std::vector<int>> cands;
  if (dedup_isometric) {
    cands.assign(classes.begin(), classes.end());
  } else {
    // evaluate every valid candidate, reported under its canonical form so
    // results stay comparable with the deduplicated run
    for (int b1 = 1; b1 <= half; ++b1) {
      std::vector<int> v(k);
      v[0] = b1;
      for (int j = 1; j < k; ++j) v[j] = b1;
      while (true) {
        long long g = M;
        for (int x : v) g = std::gcd(g, static_cast<long long>(x));
        if (g == 1) cands.push_back(canonical_b(M, v, units));
        int pos = k - 1;
        while (pos >= 1) {
          if (v[pos] < half) {
            ++v[pos];
            for (int j = pos + 1; j < k; ++j) v[j] = v[pos];
            break;
          }
          --pos;
        }
        if (pos < 1 || k == 1) break;
      }
    }
  }

  SearchResult res = reduce_best(M, n, cands, workers);
  res.duplicates_skipped = valid - static_cast<long long>(classes.size());
  if (M >= 2) {
    const BoundInfo bound = bound_info(M, k, table);
    res.d_check = bound.d_check;
    res.ratio = res.best_d / bound.d_check;
  }
  return res;
}

SearchResult exhaustive_search(int M, int n, int workers) {
  return exhaustive_search(M, n, workers, CenterDensityTable::defaults());
}

long long euler_phi(long long m) {
  if (m < 1) throw std::invalid_argument("phi is defined for positive m");
  long long result = m;
  long long x = m;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

double estimate_search_space(int M, int n) {
  if (M < 2) throw std::invalid_argument("estimate requires M >= 2");
  return std::pow(static_cast<double>(M), n) /
         (std::pow(2.0, n) * static_cast<double>(euler_phi(M)));
}

}  // namespace sforge
