#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sforge/generator.hpp"

namespace sforge {

/// Integer lattice of exponent vectors representing the group elements:
/// generated by b together with M Z^k, so it contains M Z^k with index M.
struct AssociatedLattice {
  int M = 0;
  int k = 0;
  std::vector<std::vector<long long>> basis;     // k rows, upper triangular HNF
  std::vector<std::vector<int>> representatives; // the M points in [0, M)^k
};

/// Representatives are the orbit of b modulo M; the basis is the Hermite
/// reduction of {b, M e_1, ..., M e_k}.  Even dimension only.
AssociatedLattice associated_lattice(const CyclicGenerator& g);

/// Integer membership test against the triangular basis.
bool lattice_contains(const AssociatedLattice& lat,
                      std::span<const long long> v);

/// Shortest nonzero representative after folding each coordinate to the
/// centered interval (minimum over the M shifts of +-M per coordinate).
double min_folded_norm(const AssociatedLattice& lat);

/// Componentwise scaling y_j -> (2 pi x_j / M) y_j.  Radii must be positive;
/// unit norm is not required here (the torus map enforces it).
std::vector<std::vector<double>> scaled_lattice(const AssociatedLattice& lat,
                                                std::span<const double> radii);

/// Flat-torus parametrization with radii x_i, sum x_i^2 = 1.
struct TorusMap {
  std::vector<double> radii;
  int M = 0;

  static TorusMap create(std::vector<double> radii, int M);
};

/// psi_x(y) = (x_1 cos(y_1/x_1), x_1 sin(y_1/x_1), ..., x_k cos(y_k/x_k),
/// x_k sin(y_k/x_k)); always unit norm.
std::vector<double> torus_map(const TorusMap& tm, std::span<const double> y);

/// Plot data: `px,py,tag` rows with tag in {rep, shell}.  Representatives are
/// projected to their first two coordinates; shell rows sample the arc of the
/// given radius.  `extend` adds periodic copies covering [-M/4, 5M/4)^2.
void write_lattice_csv(std::ostream& out, const AssociatedLattice& lat,
                       double shell_radius, bool extend);

}  // namespace sforge
