#include "sforge/generator.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sforge {

namespace {

constexpr double kUnitNormTol = 1e-12;

long long group_gcd(int M, const std::vector<int>& b) {
  long long g = M;
  for (int bj : b) g = std::gcd(g, static_cast<long long>(bj % M));
  return g;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

CyclicGenerator CyclicGenerator::create(int M, int n, std::vector<int> b,
                                        std::optional<int> mu) {
  if (M < 1) throw std::invalid_argument("group order M must be positive");
  if (n < 2) throw std::invalid_argument("dimension n must be at least 2");
  const int k = n / 2;
  if (static_cast<int>(b.size()) != k)
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " rotation exponents, got " +
                                std::to_string(b.size()));
  for (int bj : b)
    if (bj < 0 || bj > M)
      throw std::invalid_argument("rotation exponent " + std::to_string(bj) +
                                  " outside [0, M]");
  if (group_gcd(M, b) != 1)
    throw std::invalid_argument("gcd(b_1, ..., b_k, M) != 1: " + format_b(b) +
                                " generates a group of order < " +
                                std::to_string(M));
  CyclicGenerator g;
  g.M = M;
  g.n = n;
  g.k = k;
  g.b = std::move(b);
  if (n % 2 == 0) {
    if (mu.has_value())
      throw std::invalid_argument("mu is only meaningful in odd dimension");
    g.mu = +1;
  } else {
    g.mu = mu.value_or(+1);
    if (g.mu != 1 && g.mu != -1)
      throw std::invalid_argument("mu must be +1 or -1");
    if (g.mu == -1 && M % 2 != 0)
      throw std::invalid_argument(
          "mu = -1 requires even M (otherwise g^M != I)");
  }
  return g;
}

Mat rotation_block(int b_j, int M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  const long long r = ((static_cast<long long>(b_j) % M) + M) % M;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / M;
  Mat m(2, 2);
  const double c = std::cos(angle), s = std::sin(angle);
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

Mat generator_matrix(const CyclicGenerator& g) {
  Mat m(g.n, g.n);
  for (int j = 0; j < g.k; ++j) {
    const Mat r = rotation_block(g.b[j], g.M);
    m.at(2 * j, 2 * j) = r.at(0, 0);
    m.at(2 * j, 2 * j + 1) = r.at(0, 1);
    m.at(2 * j + 1, 2 * j) = r.at(1, 0);
    m.at(2 * j + 1, 2 * j + 1) = r.at(1, 1);
  }
  if (g.odd_dim()) m.at(g.n - 1, g.n - 1) = g.mu;
  return m;
}

void apply_generator(const CyclicGenerator& g, std::span<double> p) {
  for (int j = 0; j < g.k; ++j) {
    const long long r = g.b[j] % g.M;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / g.M;
    const double c = std::cos(angle), s = std::sin(angle);
    const double a = p[2 * j], bb = p[2 * j + 1];
    p[2 * j] = c * a - s * bb;
    p[2 * j + 1] = s * a + c * bb;
  }
  if (g.odd_dim()) p[g.n - 1] *= g.mu;
}

GroupCode orbit(const CyclicGenerator& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.n)
    throw std::invalid_argument("initial vector has wrong dimension");
  if (std::fabs(norm(x) - 1.0) > kUnitNormTol)
    throw std::invalid_argument("initial vector is not unit norm");

  GroupCode code;
  code.g = g;
  code.x.assign(x.begin(), x.end());
  code.points.resize(static_cast<std::size_t>(g.M) * g.n);

  // Precomputed block rotations; the generic apply_generator recomputes the
  // trig per call and is too slow inside this loop.
  std::vector<double> cs(g.k), sn(g.k);
  for (int j = 0; j < g.k; ++j) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(g.b[j] % g.M) / g.M;
    cs[j] = std::cos(angle);
    sn[j] = std::sin(angle);
  }

  std::vector<double> p(x.begin(), x.end());
  for (int i = 0; i < g.M; ++i) {
    std::copy(p.begin(), p.end(),
              code.points.begin() + static_cast<std::size_t>(i) * g.n);
    if (i + 1 == g.M) break;
    for (int j = 0; j < g.k; ++j) {
      const double a = p[2 * j], bb = p[2 * j + 1];
      p[2 * j] = cs[j] * a - sn[j] * bb;
      p[2 * j + 1] = sn[j] * a + cs[j] * bb;
    }
    if (g.odd_dim()) p[g.n - 1] *= g.mu;
    if ((i + 1) % 1024 == 0) {
      const double nn = norm(p);
      for (double& v : p) v /= nn;
    }
  }
  return code;
}

double min_distance_direct(const GroupCode& code) {
  const int M = code.size(), n = code.dim();
  if (M < 2) return std::numeric_limits<double>::infinity();
  const double* pts = code.points.data();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j) {
      const double* a = pts + static_cast<std::size_t>(i) * n;
      const double* b = pts + static_cast<std::size_t>(j) * n;
      double s = 0.0;
      for (int t = 0; t < n; ++t) {
        const double d = a[t] - b[t];
        s += d * d;
      }
      best = std::min(best, s);
    }
  return std::sqrt(best);
}

double min_distance_direct_omp(const GroupCode& code, int workers) {
  if (workers == 1) return min_distance_direct(code);
  const int M = code.size(), n = code.dim();
  if (M < 2) return std::numeric_limits<double>::infinity();
  const double* pts = code.points.data();
  double best = std::numeric_limits<double>::infinity();
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) \
    reduction(min : best)
  for (int i = 0; i < M; ++i) {
    double local = std::numeric_limits<double>::infinity();
    const double* a = pts + static_cast<std::size_t>(i) * n;
    for (int j = i + 1; j < M; ++j) {
      const double* b = pts + static_cast<std::size_t>(j) * n;
      double s = 0.0;
      for (int t = 0; t < n; ++t) {
        const double d = a[t] - b[t];
        s += d * d;
      }
      local = std::min(local, s);
    }
    best = std::min(best, local);
  }
  return std::sqrt(best);
}

DistanceProfile distance_profile(const CyclicGenerator& g) {
  DistanceProfile p;
  p.M = g.M;
  p.cols = g.n - g.k;
  const int rows = p.rows();
  p.m.resize(static_cast<std::size_t>(rows) * p.cols);
  for (int i = 1; i <= rows; ++i) {
    double* row = p.m.data() + static_cast<std::size_t>(i - 1) * p.cols;
    for (int j = 0; j < g.k; ++j) {
      // reduce i*b_j modulo M before the trig call: sin^2(pi x / M) has
      // period M in x and large arguments would cost precision
      const long long r = (static_cast<long long>(i) * (g.b[j] % g.M)) % g.M;
      const double s = std::sin(std::numbers::pi * static_cast<double>(r) / g.M);
      row[j] = 4.0 * s * s;
    }
    if (g.odd_dim()) row[g.k] = (g.mu == 1 || i % 2 == 0) ? 0.0 : 4.0;
  }
  return p;
}

double profile_min(const DistanceProfile& p, std::span<const double> y) {
  if (static_cast<int>(y.size()) != p.cols)
    throw std::invalid_argument("squared-radii vector has wrong length");
  double best = std::numeric_limits<double>::infinity();
  const int rows = p.rows();
  for (int i = 0; i < rows; ++i) {
    const double* row = p.m.data() + static_cast<std::size_t>(i) * p.cols;
    double s = 0.0;
    for (int j = 0; j < p.cols; ++j) s += row[j] * y[j];
    best = std::min(best, s);
  }
  return best;
}

std::vector<double> squared_radii(const CyclicGenerator& g,
                                  std::span<const double> x) {
  std::vector<double> y(g.n - g.k);
  for (int j = 0; j < g.k; ++j)
    y[j] = x[2 * j] * x[2 * j] + x[2 * j + 1] * x[2 * j + 1];
  if (g.odd_dim()) y[g.k] = x[g.n - 1] * x[g.n - 1];
  return y;
}

double min_distance_orbit(const CyclicGenerator& g, std::span<const double> x) {
  if (std::fabs(norm(x) - 1.0) > kUnitNormTol)
    throw std::invalid_argument("initial vector is not unit norm");
  const DistanceProfile p = distance_profile(g);
  const std::vector<double> y = squared_radii(g, x);
  return std::sqrt(profile_min(p, y));
}

std::vector<int> units_mod(int M) {
  std::vector<int> u;
  for (int v = 1; v < M; ++v)
    if (std::gcd(v, M) == 1) u.push_back(v);
  if (u.empty()) u.push_back(1);  // M = 1
  return u;
}

std::vector<int> canonical_b(int M, std::span<const int> b,
                             std::span<const int> units) {
  std::vector<int> best, cur(b.size());
  for (int u : units) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const long long c =
          (static_cast<long long>(u) * (((b[j] % M) + M) % M)) % M;
      cur[j] = static_cast<int>(std::min(c, static_cast<long long>(M) - c));
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

std::vector<int> canonical_b(int M, std::span<const int> b) {
  const std::vector<int> units = units_mod(M);
  return canonical_b(M, b, units);
}

CyclicGenerator canonical_form(const CyclicGenerator& g) {
  if (g.odd_dim())
    throw std::invalid_argument("canonical_form is defined for even n");
  return CyclicGenerator::create(g.M, g.n, canonical_b(g.M, g.b));
}

std::string format_b(std::span<const int> b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ',';
    os << b[i];
  }
  os << ')';
  return os.str();
}

}  // namespace sforge
