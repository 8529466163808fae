#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"
#include "sforge/bounds.hpp"

using namespace sforge;

namespace {

// Gram matrices of the densest known lattices in dimensions 1..8 (root
// lattices; Cartan matrices have minimal vectors of norm 2 among the basis
// rows, confirmed below by coefficient-box enumeration).
struct GramLattice {
  int k;
  const char* name;
  std::vector<std::vector<double>> gram;
};

std::vector<std::vector<double>> cartan(
    int k, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) g[i][i] = 2.0;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = -1.0;
  return g;
}

std::vector<GramLattice> root_lattices() {
  return {
      {1, "Z", {{1.0}}},
      {2, "A2", cartan(2, {{0, 1}})},
      {3, "A3", cartan(3, {{0, 1}, {1, 2}})},
      {4, "D4", cartan(4, {{0, 1}, {1, 2}, {1, 3}})},
      {5, "D5", cartan(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}})},
      {6, "E6", cartan(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}})},
      {7, "E7", cartan(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}})},
      {8, "E8",
       cartan(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}})},
  };
}

double det(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  double d = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// shortest nonzero vector over the coefficient box {-2..2}^k
double min_norm_sq(const std::vector<std::vector<double>>& g) {
  const int k = static_cast<int>(g.size());
  std::vector<int> c(k, -2);
  double best = 1e300;
  while (true) {
    bool zero = true;
    for (int v : c)
      if (v != 0) zero = false;
    if (!zero) {
      double q = 0.0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) q += c[i] * g[i][j] * c[j];
      best = std::min(best, q);
    }
    int i = 0;
    while (i < k && c[i] == 2) c[i++] = -2;
    if (i == k) break;
    ++c[i];
  }
  return best;
}

std::string temp_csv(const std::string& body) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("sforge-density-" + std::to_string(::getpid()) + "-" +
                     std::to_string(counter++) + ".csv");
  std::ofstream out(path);
  out << body;
  return path.string();
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("default table pins the classical densities") {
  const auto t = CenterDensityTable::defaults();
  CHECK(t.lambda(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.lambda(2) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(t.lambda(3) == doctest::Approx(1.0 / (4.0 * std::sqrt(2.0))).epsilon(1e-15));
  CHECK(t.lambda(4) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(t.lambda(8) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(t.lambda(24) == doctest::Approx(1.0).epsilon(1e-15));
  for (int k = 1; k <= 24; ++k) {
    CHECK(t.lambda(k) > 0.0);
    CHECK(t.lambda(k) <= 1.0);
  }
  CHECK(t.source(2) == "A2");
  CHECK_THROWS_AS(t.lambda(0), ConfigError);
  CHECK_THROWS_AS(t.lambda(25), ConfigError);
}

TEST_CASE("Gram-matrix oracle reproduces the table for k <= 8") {
  const auto t = CenterDensityTable::defaults();
  for (const GramLattice& lat : root_lattices()) {
    const double vol = std::sqrt(det(lat.gram));
    const double mn = min_norm_sq(lat.gram);
    const double delta = std::pow(std::sqrt(mn) / 2.0, lat.k) / vol;
    CAPTURE(lat.name);
    CHECK(delta == doctest::Approx(t.lambda(lat.k)).epsilon(1e-12));
  }
}

TEST_CASE("target distance reproduces the published bounds") {
  const auto t = CenterDensityTable::defaults();
  CHECK(target_distance(10, 2, t) == doctest::Approx(1.474).epsilon(7e-4));
  CHECK(target_distance(20, 3, t) == doctest::Approx(1.465).epsilon(7e-4));
  CHECK(target_distance(1000, 2, t) == doctest::Approx(0.150).epsilon(7e-3));
  CHECK(std::fabs(target_distance(1000, 2, t) - 0.150) < 0.001);
}

TEST_CASE("round trip through the point-count bound") {
  const auto t = CenterDensityTable::defaults();
  for (int k : {1, 2, 3, 8, 24}) {
    for (int M : {150, 400, 1000, 5000}) {
      const double d = target_distance(M, k, t);
      CHECK(max_points_bound(d, k, t) ==
            doctest::Approx(static_cast<double>(M)).epsilon(1e-6));
    }
  }
  CHECK(max_points_bound(1.474, 2, t) == doctest::Approx(10.0).epsilon(2e-3));
  CHECK_THROWS_AS(max_points_bound(2.0, 2, t), std::invalid_argument);
  CHECK_THROWS_AS(max_points_bound(0.0, 2, t), std::invalid_argument);
}

TEST_CASE("target distance decreases in M") {
  const auto t = CenterDensityTable::defaults();
  for (int k : {1, 2, 3, 12, 24}) {
    double prev = 1e9;
    for (int M = 140; M <= 4000; M += 130) {
      const double d = target_distance(M, k, t);
      CHECK(d < prev);
      prev = d;
    }
  }
}

TEST_CASE("candidate norm values and identity") {
  const auto t = CenterDensityTable::defaults();
  CHECK(candidate_norm(20, 2, t) == doctest::Approx(4.8056).epsilon(1e-4));
  CHECK(candidate_norm(10, 2, t) == doctest::Approx(3.3981).epsilon(1e-4));
  const BoundInfo info = bound_info(20, 2, t);
  CHECK(info.W ==
        doctest::Approx((2.0 * 20 * std::sqrt(2.0) / M_PI) *
                        std::asin(info.d_check / 4.0)).epsilon(1e-12));
  // the published shell example: ||(1,5)|| within 10% of W
  CHECK(std::fabs(std::sqrt(26.0) - info.W) / info.W < 0.10);
}

TEST_CASE("vacuous bounds clamp to the sphere diameter") {
  const auto t = CenterDensityTable::defaults();
  const BoundInfo tiny = bound_info(2, 2, t);
  CHECK(tiny.d_check == 2.0);
  CHECK(tiny.vacuous);
  const BoundInfo big = bound_info(64, 24, t);  // 48-dimensional small-M case
  CHECK(big.d_check == 2.0);
  CHECK(big.vacuous);
  CHECK(big.W == doctest::Approx((2.0 * 64 * std::sqrt(24.0) / M_PI) *
                                 std::asin(0.5)));
  const BoundInfo ok = bound_info(256, 24, t);
  CHECK_FALSE(ok.vacuous);
}

TEST_CASE("density override file") {
  const std::string good = temp_csv("k,lambda,source\n2,0.25,test-lattice\n");
  const auto t = CenterDensityTable::with_overrides(good);
  CHECK(t.lambda(2) == doctest::Approx(0.25));
  CHECK(t.source(2) == "test-lattice");
  CHECK(t.lambda(3) ==
        doctest::Approx(CenterDensityTable::defaults().lambda(3)));

  CHECK_THROWS_AS(CenterDensityTable::with_overrides(
                      temp_csv("k,lambda,source\n25,0.5,bad\n")),
                  ConfigError);
  CHECK_THROWS_AS(CenterDensityTable::with_overrides(
                      temp_csv("k,lambda,source\n2,-1,bad\n")),
                  ConfigError);
  CHECK_THROWS_AS(CenterDensityTable::with_overrides(
                      temp_csv("wrong,header\n")),
                  ConfigError);
  CHECK_THROWS_AS(CenterDensityTable::with_overrides("/nonexistent/x.csv"),
                  ConfigError);
}

}  // TEST_SUITE
