#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace sforge {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Center densities of the best known lattice packings in dimensions 1..24,
/// overridable from a CSV file with header `k,lambda,source` (rows replace
/// the built-in entries).
class CenterDensityTable {
 public:
  static constexpr int kMaxDim = 24;

  static CenterDensityTable defaults();
  static CenterDensityTable with_overrides(const std::string& csv_path);

  double lambda(int k) const;
  const std::string& source(int k) const;

 private:
  CenterDensityTable() = default;
  std::array<double, kMaxDim + 1> lambda_{};
  std::array<std::string, kMaxDim + 1> source_{};
};

struct BoundInfo {
  int M = 0;
  int k = 0;
  double lambda_k = 0.0;
  double d_check = 0.0;  // target distance, clamped to the sphere diameter
  double W = 0.0;        // candidate shell norm, (2 M sqrt(k) / pi) asin(d_check/4)
  bool vacuous = false;  // the raw bound exceeded 2 and was clamped
};

double center_density(int k, const CenterDensityTable& table);

/// Target distance for a 2k-dimensional code with M points:
/// 4 sin((pi^k Lambda_k / (M k^{k/2}))^{1/k}), clamped to 2 when vacuous.
double target_distance(int M, int k, const CenterDensityTable& table);

/// Sphere-packing bound on the number of points at minimum distance d:
/// pi^k Lambda_k / (asin(d/4)^k k^{k/2}).  Inverts target_distance.
double max_points_bound(double d, int k, const CenterDensityTable& table);

/// Shell norm at which generator exponent candidates are sampled.
double candidate_norm(int M, int k, const CenterDensityTable& table);

BoundInfo bound_info(int M, int k, const CenterDensityTable& table);

}  // namespace sforge
