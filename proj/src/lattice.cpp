#include "sforge/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>

namespace sforge {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Hermite-style row reduction of the (k+1) x k generator stack
// {b, M e_1, ..., M e_k} down to an upper-triangular basis with positive
// diagonal and canonically reduced entries above it.
std::vector<std::vector<long long>> hermite_basis(int M,
                                                  const std::vector<int>& b) {
  const int k = static_cast<int>(b.size());
  std::vector<std::vector<long long>> rows(k + 1,
                                           std::vector<long long>(k, 0));
  for (int j = 0; j < k; ++j) rows[0][j] = b[j] % M;
  for (int j = 0; j < k; ++j) rows[1 + j][j] = M;

  int top = 0;
  for (int col = 0; col < k; ++col) {
    while (true) {
      int pivot = -1;
      for (int r = top; r <= k; ++r)
        if (rows[r][col] != 0 &&
            (pivot < 0 ||
             std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])))
          pivot = r;
      if (pivot < 0) throw std::logic_error("rank-deficient lattice stack");
      std::swap(rows[top], rows[pivot]);
      bool clean = true;
      for (int r = top + 1; r <= k; ++r) {
        if (rows[r][col] == 0) continue;
        const long long q = rows[r][col] / rows[top][col];
        for (int j = 0; j < k; ++j) rows[r][j] -= q * rows[top][j];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][col] < 0)
      for (int j = 0; j < k; ++j) rows[top][j] = -rows[top][j];
    for (int r = 0; r < top; ++r) {
      const long long q = floor_div(rows[r][col], rows[top][col]);
      if (q != 0)
        for (int j = 0; j < k; ++j) rows[r][j] -= q * rows[top][j];
    }
    ++top;
  }
  rows.resize(k);
  return rows;
}

}  // namespace

AssociatedLattice associated_lattice(const CyclicGenerator& g) {
  if (g.odd_dim())
    throw std::invalid_argument(
        "the associated lattice is defined for even dimension");
  AssociatedLattice lat;
  lat.M = g.M;
  lat.k = g.k;
  lat.basis = hermite_basis(g.M, g.b);
  lat.representatives.reserve(g.M);
  for (int i = 0; i < g.M; ++i) {
    std::vector<int> p(g.k);
    for (int j = 0; j < g.k; ++j)
      p[j] = static_cast<int>(
          (static_cast<long long>(i) * (g.b[j] % g.M)) % g.M);
    lat.representatives.push_back(std::move(p));
  }
  return lat;
}

bool lattice_contains(const AssociatedLattice& lat,
                      std::span<const long long> v) {
  if (static_cast<int>(v.size()) != lat.k)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<long long> r(v.begin(), v.end());
  for (int col = 0; col < lat.k; ++col) {
    const long long d = lat.basis[col][col];
    if (r[col] % d != 0) return false;
    const long long q = r[col] / d;
    for (int j = 0; j < lat.k; ++j) r[j] -= q * lat.basis[col][j];
  }
  for (long long x : r)
    if (x != 0) return false;
  return true;
}

double min_folded_norm(const AssociatedLattice& lat) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rep : lat.representatives) {
    bool zero = true;
    double s = 0.0;
    for (int c : rep) {
      if (c != 0) zero = false;
      const double f = std::min(c, lat.M - c);
      s += f * f;
    }
    if (!zero) best = std::min(best, s);
  }
  return std::sqrt(best);
}

std::vector<std::vector<double>> scaled_lattice(const AssociatedLattice& lat,
                                                std::span<const double> radii) {
  if (static_cast<int>(radii.size()) != lat.k)
    throw std::invalid_argument("expected one radius per lattice dimension");
  for (double r : radii)
    if (!(r > 0.0))
      throw std::invalid_argument(
          "torus radii must be positive (zero collapses the torus)");
  std::vector<std::vector<double>> out;
  out.reserve(lat.representatives.size());
  for (const auto& rep : lat.representatives) {
    std::vector<double> p(lat.k);
    for (int j = 0; j < lat.k; ++j)
      p[j] = 2.0 * std::numbers::pi * radii[j] / lat.M * rep[j];
    out.push_back(std::move(p));
  }
  return out;
}

TorusMap TorusMap::create(std::vector<double> radii, int M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  double s = 0.0;
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("torus radii must be positive");
    s += r * r;
  }
  if (std::fabs(s - 1.0) > 1e-9)
    throw std::invalid_argument("torus radii must have unit norm");
  TorusMap tm;
  tm.radii = std::move(radii);
  tm.M = M;
  return tm;
}

std::vector<double> torus_map(const TorusMap& tm, std::span<const double> y) {
  if (y.size() != tm.radii.size())
    throw std::invalid_argument("point dimension mismatch");
  std::vector<double> out(2 * y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double angle = y[j] / tm.radii[j];
    out[2 * j] = tm.radii[j] * std::cos(angle);
    out[2 * j + 1] = tm.radii[j] * std::sin(angle);
  }
  return out;
}

void write_lattice_csv(std::ostream& out, const AssociatedLattice& lat,
                       double shell_radius, bool extend) {
  if (lat.k < 2)
    throw std::invalid_argument("lattice plots need at least two dimensions");
  out << "px,py,tag\n";
  const double lo = -static_cast<double>(lat.M) / 4.0;
  const double hi = 5.0 * static_cast<double>(lat.M) / 4.0;
  for (const auto& rep : lat.representatives) {
    if (extend) {
      for (int zx = -1; zx <= 1; ++zx)
        for (int zy = -1; zy <= 1; ++zy) {
          const double px = rep[0] + zx * lat.M;
          const double py = rep[1] + zy * lat.M;
          if (px >= lo && px < hi && py >= lo && py < hi)
            out << px << ',' << py << ",rep\n";
        }
    } else {
      out << rep[0] << ',' << rep[1] << ",rep\n";
    }
  }
  const int samples = 128;
  for (int s = 0; s <= samples; ++s) {
    const double theta = std::numbers::pi / 2.0 * s / samples;
    out << shell_radius * std::cos(theta) << ','
        << shell_radius * std::sin(theta) << ",shell\n";
  }
}

}  // namespace sforge
