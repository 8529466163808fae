#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sforge/matrix.hpp"

namespace sforge {

/// Generator of a cyclic subgroup of orthogonal matrices in pseudo-diagonal
/// form: k = floor(n/2) planar rotation blocks with angles 2*pi*b_j/M, plus a
/// trailing +-1 entry when the dimension is odd.
///
/// Exponents live in [0, M]; 0 and M both denote the identity block.  The
/// group has order exactly M iff gcd(b_1, ..., b_k, M) = 1 (identity blocks
/// count as M) and, for odd dimension, mu^M = 1.
struct CyclicGenerator {
  int M = 1;
  int n = 2;
  int k = 1;
  std::vector<int> b;
  int mu = +1;  // trailing entry for odd n; fixed to +1 for even n

  bool odd_dim() const { return n % 2 != 0; }

  // Validating factory; throws std::invalid_argument on anything that would
  // not generate a group of order exactly M.  mu defaults to +1; mu = -1 is
  // accepted only for odd n with even M (otherwise g^M != I).
  static CyclicGenerator create(int M, int n, std::vector<int> b,
                                std::optional<int> mu = std::nullopt);
};

/// Planar rotation by 2*pi*b_j/M (exponent wraps modulo M).
Mat rotation_block(int b_j, int M);

/// Block-diagonal n x n orthogonal matrix for the generator.
Mat generator_matrix(const CyclicGenerator& g);

/// Orbit of a unit initial vector under the group.
struct GroupCode {
  CyclicGenerator g;
  std::vector<double> x;       // initial vector, length n
  std::vector<double> points;  // M*n, one point per row

  int size() const { return g.M; }
  int dim() const { return g.n; }
  std::span<const double> point(int i) const {
    return {points.data() + static_cast<std::size_t>(i) * g.n,
            static_cast<std::size_t>(g.n)};
  }
};

/// Materializes {g^i x : i = 0..M-1} by repeated application of the generator
/// (renormalizing every 1024 steps); requires ||x|| = 1 within 1e-12.
GroupCode orbit(const CyclicGenerator& g, std::span<const double> x);

/// One application of the generator to a point, in place.
void apply_generator(const CyclicGenerator& g, std::span<double> p);

/// Exhaustive O(M^2) pairwise minimum distance.  Returns +infinity for codes
/// with fewer than two points.  Serial reference implementation; the _omp
/// variant is the parallel kernel and returns bit-identical results.
double min_distance_direct(const GroupCode& code);
double min_distance_direct_omp(const GroupCode& code, int workers = 0);

/// Coefficients of f_i(y) = ||g^i x - x||^2 as a linear function of the
/// squared radii y: 4 sin^2(pi i b_j / M) for rotation blocks and the exact
/// odd-coordinate term (1 - mu^i)^2 in {0, 4}.  Only rows i = 1..floor(M/2)
/// are stored; indices above the fold read the mirror row, so f_i = f_{M-i}
/// holds exactly.
struct DistanceProfile {
  int M = 1;
  int cols = 0;           // n - k
  std::vector<double> m;  // rows() * cols, row-major

  int rows() const { return M / 2; }
  double coeff(int i, int j) const {  // i in [1, M-1]
    const int folded = std::min(i, M - i);
    return m[static_cast<std::size_t>(folded - 1) * cols + j];
  }
};

DistanceProfile distance_profile(const CyclicGenerator& g);

/// min_i f_i(y); +infinity when the profile has no rows (M < 2).
double profile_min(const DistanceProfile& p, std::span<const double> y);

/// Squared radii of x: y_j = x_{2j-1}^2 + x_{2j}^2, plus x_n^2 for odd n.
std::vector<double> squared_radii(const CyclicGenerator& g,
                                  std::span<const double> x);

/// Group-element route to the minimum distance: sqrt(min_i f_i(y(x))).
/// Must agree with min_distance_direct(orbit(g, x)) within 1e-9.
double min_distance_orbit(const CyclicGenerator& g, std::span<const double> x);

/// Units modulo M (all of [1, M) coprime to M; {1} for M = 1).
std::vector<int> units_mod(int M);

/// Isometry-class representative of an exponent vector: over all units u
/// modulo M, reduce u*b mod M, fold each coordinate to [0, M/2], sort, and
/// keep the lexicographically smallest result.  Exponents equal to M fold
/// to 0.  Two exponent vectors with equal canonical forms generate isometric
/// codes.
std::vector<int> canonical_b(int M, std::span<const int> b,
                             std::span<const int> units);
std::vector<int> canonical_b(int M, std::span<const int> b);

/// canonical_b wrapped back into a generator; even dimension only.
CyclicGenerator canonical_form(const CyclicGenerator& g);

/// "(1,5)" formatting for exponent vectors.
std::string format_b(std::span<const int> b);

}  // namespace sforge
