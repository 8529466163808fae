#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "sforge/catalog.hpp"

namespace sforge {

/// Rate/efficiency coordinates of a code: rho = 2 asin(d/2) (radians),
/// K = (1 - rho) log2 M, R = (2/n) log2 M.
struct EfficiencyPoint {
  int M = 0;
  int n = 0;
  double d = 0.0;
  double rho = 0.0;
  double K = 0.0;
  double R = 0.0;
};

EfficiencyPoint efficiency_point(int M, int n, double d);

struct BaselineCode {
  int M = 0;
  double d = 0.0;
  bool cyclic = false;
};

/// Regular simplex: M = n + 1 points at pairwise distance sqrt(2M/(M-1)).
BaselineCode simplex_baseline(int n);

/// Biorthogonal code: M = 2n points at distance sqrt(2); realizable as a
/// cyclic group code only in odd dimension.  n = 1 degenerates to the
/// antipodal pair (d = 2).
BaselineCode biorthogonal_baseline(int n);

/// (log2 M, d / d_check) sorted by M; records must share n and carry a
/// positive d_check.
std::vector<std::pair<double, double>> ratio_series(
    const std::vector<CodeRecord>& records);

/// Chart CSV: `M,n,d,rho,K,R,series` with one row per record plus simplex and
/// biorthogonal baseline rows for every dimension present.
void write_chart_csv(std::ostream& out, const std::vector<CodeRecord>& records);

/// Ratio CSV: `log2M,ratio,n`, records grouped by dimension.
void write_ratio_csv(std::ostream& out, const std::vector<CodeRecord>& records);

}  // namespace sforge
