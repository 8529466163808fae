#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "sforge/generator.hpp"
#include "sforge/ivp.hpp"
#include "sforge/lattice.hpp"
#include "sforge/rng.hpp"

using namespace sforge;

namespace {

long long det_ll(std::vector<std::vector<long long>> a) {
  // triangular by construction
  long long d = 1;
  for (std::size_t i = 0; i < a.size(); ++i) d *= a[i][i];
  return d;
}

double set_hausdorff(const std::vector<std::vector<double>>& A,
                     const std::vector<std::vector<double>>& B) {
  double worst = 0.0;
  for (const auto& a : A) {
    double best = 1e300;
    for (const auto& b : B) {
      double s = 0.0;
      for (std::size_t t = 0; t < a.size(); ++t) {
        const double d = a[t] - b[t];
        s += d * d;
      }
      best = std::min(best, s);
    }
    worst = std::max(worst, std::sqrt(best));
  }
  return worst;
}

std::multiset<long long> folded_norms(const AssociatedLattice& lat) {
  std::multiset<long long> out;
  for (const auto& rep : lat.representatives) {
    long long s = 0;
    for (int c : rep) {
      const long long f = std::min<long long>(c, lat.M - c);
      s += f * f;
    }
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("representatives trace the exponent orbit") {
  const auto g = CyclicGenerator::create(25, 4, {1, 2});
  const AssociatedLattice lat = associated_lattice(g);
  REQUIRE(lat.representatives.size() == 25);
  std::set<std::vector<int>> distinct;
  for (int i = 0; i < 25; ++i) {
    CHECK(lat.representatives[i] ==
          std::vector<int>{i % 25, (2 * i) % 25});
    distinct.insert(lat.representatives[i]);
  }
  CHECK(distinct.size() == 25);

  const auto diag = CyclicGenerator::create(4, 4, {1, 1});
  const AssociatedLattice dl = associated_lattice(diag);
  for (int i = 0; i < 4; ++i)
    CHECK(dl.representatives[i] == std::vector<int>{i, i});
}

TEST_CASE("basis spans b and M Z^k with index M") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int M = 2 + static_cast<int>(rng.next() % 60);
    const int k = 2 + static_cast<int>(rng.next() % 3);
    std::vector<int> b(k);
    for (int& v : b) v = 1 + static_cast<int>(rng.next() % M);
    long long g = M;
    for (int v : b) g = std::gcd(g, static_cast<long long>(v % M));
    if (g != 1) continue;
    const auto gen = CyclicGenerator::create(M, 2 * k, b);
    const AssociatedLattice lat = associated_lattice(gen);

    // vol = M^{k-1} (index of M Z^k is M)
    long long expect = 1;
    for (int i = 0; i < k - 1; ++i) expect *= M;
    CHECK(det_ll(lat.basis) == expect);

    std::vector<long long> bb(b.begin(), b.end());
    for (long long& v : bb) v %= M;
    CHECK(lattice_contains(lat, bb));
    for (int j = 0; j < k; ++j) {
      std::vector<long long> e(k, 0);
      e[j] = M;
      CHECK(lattice_contains(lat, e));
    }
    // every representative is a member
    const AssociatedLattice& L = lat;
    const auto& rep = L.representatives[rng.next() % L.representatives.size()];
    std::vector<long long> rv(rep.begin(), rep.end());
    CHECK(lattice_contains(L, rv));
  }
}

TEST_CASE("shortest folded representative for the shell example") {
  const auto g = CyclicGenerator::create(20, 4, {1, 5});
  const AssociatedLattice lat = associated_lattice(g);
  // oracle: enumerate representatives with +-M shifts
  double best = 1e300;
  for (int i = 1; i < 20; ++i) {
    const double c1 = std::min((i) % 20, 20 - (i) % 20);
    const double c2 = std::min((5 * i) % 20, 20 - (5 * i) % 20);
    best = std::min(best, c1 * c1 + c2 * c2);
  }
  CHECK(min_folded_norm(lat) == doctest::Approx(std::sqrt(best)));
  // the minimum sits at the representative (4, 0), not at b itself
  CHECK(min_folded_norm(lat) == doctest::Approx(4.0));
  // ||b|| is the sampled shell norm instead
  CHECK(std::sqrt(26.0) == doctest::Approx(5.0990195));
}

TEST_CASE("scaled lattice and the identity scaling") {
  const auto g = CyclicGenerator::create(4, 2, {1});
  const AssociatedLattice lat = associated_lattice(g);
  const auto pts = scaled_lattice(lat, std::vector<double>{1.0});
  REQUIRE(pts.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(pts[i][0] == doctest::Approx(i * std::numbers::pi / 2.0));

  // radii M/(2 pi) reproduce the integer lattice points (test-only scaling,
  // deliberately not unit norm)
  const auto g25 = CyclicGenerator::create(25, 4, {1, 2});
  const AssociatedLattice lat25 = associated_lattice(g25);
  const double r = 25.0 / (2.0 * std::numbers::pi);
  const auto ident = scaled_lattice(lat25, std::vector<double>{r, r});
  for (std::size_t i = 0; i < ident.size(); ++i) {
    CHECK(ident[i][0] == doctest::Approx(lat25.representatives[i][0]));
    CHECK(ident[i][1] == doctest::Approx(lat25.representatives[i][1]));
  }

  CHECK_THROWS_AS(scaled_lattice(lat25, std::vector<double>{0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("torus map basics") {
  const double r = std::sqrt(0.5);
  const TorusMap tm = TorusMap::create({r, r}, 10);
  const auto at_zero = torus_map(tm, std::vector<double>{0.0, 0.0});
  CHECK(at_zero[0] == doctest::Approx(r));
  CHECK(at_zero[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(at_zero[2] == doctest::Approx(r));

  SplitMix64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> y = {(rng.next() % 1000) / 100.0,
                                   (rng.next() % 1000) / 100.0};
    const auto p = torus_map(tm, y);
    double s = 0.0;
    for (double v : p) s += v * v;
    CHECK(std::sqrt(s) == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(TorusMap::create({0.6, 0.6}, 10), std::invalid_argument);
  CHECK_THROWS_AS(TorusMap::create({-std::sqrt(0.5), std::sqrt(0.5)}, 10),
                  std::invalid_argument);
}

TEST_CASE("torus image of the scaled lattice is the orbit") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int M = 2 + static_cast<int>(rng.next() % 120);
    const int k = 2 + static_cast<int>(rng.next() % 3);
    std::vector<int> b(k);
    for (int& v : b) v = 1 + static_cast<int>(rng.next() % M);
    long long g = M;
    for (int v : b) g = std::gcd(g, static_cast<long long>(v % M));
    if (g != 1) continue;
    const auto gen = CyclicGenerator::create(M, 2 * k, b);

    std::vector<double> radii(k);
    double s = 0.0;
    for (double& v : radii) {
      v = 0.15 + (rng.next() % 1000) / 1000.0;
      s += v * v;
    }
    for (double& v : radii) v /= std::sqrt(s);
    // torus radii must square-sum to one exactly enough for the factory
    const TorusMap tm = TorusMap::create(radii, M);

    std::vector<double> x(2 * k, 0.0);
    for (int j = 0; j < k; ++j) x[2 * j] = tm.radii[j];
    double nx = 0.0;
    for (double v : x) nx += v * v;
    for (double& v : x) v /= std::sqrt(nx);

    const GroupCode code = orbit(gen, x);
    std::vector<std::vector<double>> orbit_pts;
    for (int i = 0; i < M; ++i)
      orbit_pts.emplace_back(code.point(i).begin(), code.point(i).end());

    const AssociatedLattice lat = associated_lattice(gen);
    std::vector<std::vector<double>> image;
    for (const auto& sp : scaled_lattice(lat, tm.radii))
      image.push_back(torus_map(tm, sp));

    CHECK(set_hausdorff(image, orbit_pts) < 1e-9);
    CHECK(set_hausdorff(orbit_pts, image) < 1e-9);
  }
}

TEST_CASE("isometric generators share folded-norm multisets") {
  const auto a = associated_lattice(CyclicGenerator::create(25, 4, {1, 2}));
  const auto b = associated_lattice(CyclicGenerator::create(25, 4, {3, 11}));
  CHECK(folded_norms(a) == folded_norms(b));
}

TEST_CASE("lattice csv layout") {
  const auto g = CyclicGenerator::create(25, 4, {1, 2});
  const AssociatedLattice lat = associated_lattice(g);
  std::ostringstream out;
  write_lattice_csv(out, lat, 4.8, false);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "px,py,tag");
  int reps = 0, shell = 0;
  while (std::getline(in, line)) {
    if (line.find(",rep") != std::string::npos) ++reps;
    if (line.find(",shell") != std::string::npos) ++shell;
  }
  CHECK(reps == 25);
  CHECK(shell > 0);

  std::ostringstream ext;
  write_lattice_csv(ext, lat, 4.8, true);
  std::istringstream in2(ext.str());
  std::getline(in2, line);
  int ext_reps = 0;
  while (std::getline(in2, line))
    if (line.find(",rep") != std::string::npos) ++ext_reps;
  CHECK(ext_reps > 25);  // periodic copies joined the window
}

}  // TEST_SUITE
