#include "sforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace sforge {

EfficiencyPoint efficiency_point(int M, int n, double d) {
  if (M < 1 || n < 1) throw std::invalid_argument("M and n must be positive");
  if (d < 0.0 || d > 2.0)
    throw std::invalid_argument("distance must lie in [0, 2]");
  EfficiencyPoint p;
  p.M = M;
  p.n = n;
  p.d = d;
  p.rho = 2.0 * std::asin(d / 2.0);
  const double log2M = std::log2(static_cast<double>(M));
  p.K = (1.0 - p.rho) * log2M;
  p.R = 2.0 / n * log2M;
  return p;
}

BaselineCode simplex_baseline(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BaselineCode c;
  c.M = n + 1;
  c.d = std::sqrt(2.0 * c.M / (c.M - 1));
  c.cyclic = true;
  return c;
}

BaselineCode biorthogonal_baseline(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  BaselineCode c;
  c.M = 2 * n;
  c.d = n == 1 ? 2.0 : std::sqrt(2.0);
  c.cyclic = n % 2 != 0;
  return c;
}

std::vector<std::pair<double, double>> ratio_series(
    const std::vector<CodeRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("ratio series needs at least one record");
  const int n = records.front().n;
  std::vector<const CodeRecord*> sorted;
  for (const CodeRecord& r : records) {
    if (r.n != n)
      throw std::invalid_argument("ratio series records must share n");
    if (!(r.d_check > 0.0))
      throw std::invalid_argument("ratio series needs positive d_check");
    sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CodeRecord* a, const CodeRecord* b) {
                     return a->M < b->M;
                   });
  std::vector<std::pair<double, double>> out;
  out.reserve(sorted.size());
  for (const CodeRecord* r : sorted)
    out.emplace_back(std::log2(static_cast<double>(r->M)), r->d / r->d_check);
  return out;
}

void write_chart_csv(std::ostream& out,
                     const std::vector<CodeRecord>& records) {
  out << "M,n,d,rho,K,R,series\n";
  std::set<int> dims;
  for (const CodeRecord& r : records) {
    const EfficiencyPoint p = efficiency_point(r.M, r.n, r.d);
    out << p.M << ',' << p.n << ',' << p.d << ',' << p.rho << ',' << p.K << ','
        << p.R << ",code\n";
    dims.insert(r.n);
  }
  for (int n : dims) {
    const BaselineCode s = simplex_baseline(n);
    const EfficiencyPoint ps = efficiency_point(s.M, n, s.d);
    out << ps.M << ',' << n << ',' << ps.d << ',' << ps.rho << ',' << ps.K
        << ',' << ps.R << ",simplex\n";
    const BaselineCode b = biorthogonal_baseline(n);
    const EfficiencyPoint pb = efficiency_point(b.M, n, b.d);
    out << pb.M << ',' << n << ',' << pb.d << ',' << pb.rho << ',' << pb.K
        << ',' << pb.R << ",biorthogonal\n";
  }
}

void write_ratio_csv(std::ostream& out,
                     const std::vector<CodeRecord>& records) {
  out << "log2M,ratio,n\n";
  std::map<int, std::vector<CodeRecord>> by_n;
  for (const CodeRecord& r : records) by_n[r.n].push_back(r);
  for (const auto& [n, group] : by_n)
    for (const auto& [log2M, ratio] : ratio_series(group))
      out << log2M << ',' << ratio << ',' << n << '\n';
}

}  // namespace sforge
