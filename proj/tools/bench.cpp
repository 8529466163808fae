// Timing harness comparing the serial reference kernels against their OpenMP
// counterparts.  The parallel paths must reproduce the serial results
// bit-for-bit; any mismatch aborts the run.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "sforge/generator.hpp"
#include "sforge/search.hpp"

using namespace sforge;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::fixed
            << std::setprecision(3) << std::setw(10) << serial_s
            << std::setw(10) << parallel_s << std::setprecision(2)
            << std::setw(8) << serial_s / parallel_s
            << (equal ? "identical" : "MISMATCH") << '\n';
  if (!equal) {
    std::cerr << "parallel kernel diverged from the serial reference\n";
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int workers = 0;
  if (argc > 1) workers = std::atoi(argv[1]);
  const int threads = workers > 0 ? workers : omp_get_max_threads();

  std::cout << "threads: " << threads << "\n\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::setw(10)
            << "serial" << std::setw(10) << "parallel" << std::setw(8)
            << "speedup" << "check\n";

  {
    const auto g = CyclicGenerator::create(8192, 8, {1, 3, 5, 7});
    std::vector<double> x(8, 0.0);
    for (int j = 0; j < 4; ++j) x[2 * j] = 0.5;
    const GroupCode code = orbit(g, x);

    auto t0 = clock_type::now();
    const double serial = min_distance_direct(code);
    const double ts = seconds_since(t0);

    t0 = clock_type::now();
    const double parallel = min_distance_direct_omp(code, threads);
    const double tp = seconds_since(t0);
    report("pairwise min distance (M=8192)", ts, tp, serial == parallel);
  }

  {
    auto t0 = clock_type::now();
    const SearchResult serial = exhaustive_search(400, 4, 1);
    const double ts = seconds_since(t0);

    t0 = clock_type::now();
    const SearchResult parallel = exhaustive_search(400, 4, threads);
    const double tp = seconds_since(t0);
    report("exhaustive search (M=400, n=4)", ts, tp,
           serial.best_d == parallel.best_d &&
               serial.best_b == parallel.best_b);
  }

  {
    SearchConfig cfg;
    cfg.M = 256;
    cfg.n = 48;
    cfg.Q = 256;
    cfg.seed = 42;

    cfg.parallel_workers = 1;
    auto t0 = clock_type::now();
    const SearchResult serial = heuristic_search(cfg);
    const double ts = seconds_since(t0);

    cfg.parallel_workers = threads;
    t0 = clock_type::now();
    const SearchResult parallel = heuristic_search(cfg);
    const double tp = seconds_since(t0);
    report("heuristic search (M=256, n=48)", ts, tp,
           serial.best_d == parallel.best_d &&
               serial.best_b == parallel.best_b);
  }

  return 0;
}
