#include "sforge/bounds.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sforge {

namespace {

struct Entry {
  int k;
  double lambda;
  const char* source;
};

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

// Best known lattice packings per dimension (center density delta =
// (min norm / 2)^k / vol).  Root lattices up to 8, laminated/Kappa above.
const Entry kDefaults[] = {
    {1, 0.5, "Z"},
    {2, 1.0 / (2.0 * kSqrt3), "A2"},
    {3, 1.0 / (4.0 * kSqrt2), "D3"},
    {4, 0.125, "D4"},
    {5, 1.0 / (8.0 * kSqrt2), "D5"},
    {6, 1.0 / (8.0 * kSqrt3), "E6"},
    {7, 0.0625, "E7"},
    {8, 0.0625, "E8"},
    {9, 1.0 / (16.0 * kSqrt2), "Lambda9"},
    {10, 1.0 / (16.0 * kSqrt3), "Lambda10"},
    {11, 1.0 / (18.0 * kSqrt3), "K11"},
    {12, 1.0 / 27.0, "K12"},
    {13, 9.0 / 256.0, "K13"},
    {14, 1.0 / (16.0 * kSqrt3), "Lambda14"},
    {15, 1.0 / (16.0 * kSqrt2), "Lambda15"},
    {16, 0.0625, "Lambda16"},
    {17, 1.0 / (8.0 * kSqrt2), "Lambda17"},
    {18, 1.0 / (4.0 * kSqrt6), "Lambda18"},
    {19, 0.125, "Lambda19"},
    {20, 1.0 / (4.0 * kSqrt2), "Lambda20"},
    {21, 1.0 / (2.0 * kSqrt6), "Lambda21"},
    {22, 1.0 / (2.0 * kSqrt3), "Lambda22"},
    {23, 0.5, "Lambda23"},
    {24, 1.0, "Leech"},
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void check_k(int k) {
  if (k < 1 || k > CenterDensityTable::kMaxDim)
    throw ConfigError("lattice dimension k = " + std::to_string(k) +
                      " outside [1, " +
                      std::to_string(CenterDensityTable::kMaxDim) + "]");
}

}  // namespace

CenterDensityTable CenterDensityTable::defaults() {
  CenterDensityTable t;
  for (const Entry& e : kDefaults) {
    t.lambda_[e.k] = e.lambda;
    t.source_[e.k] = e.source;
  }
  return t;
}

CenterDensityTable CenterDensityTable::with_overrides(
    const std::string& csv_path) {
  CenterDensityTable t = defaults();
  std::ifstream in(csv_path);
  if (!in) throw ConfigError("cannot open density table: " + csv_path);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "k,lambda,source")
    throw ConfigError(csv_path + ": expected header `k,lambda,source`");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::string kf, lf, sf;
    if (!std::getline(row, kf, ',') || !std::getline(row, lf, ','))
      throw ConfigError(csv_path + ":" + std::to_string(lineno) +
                        ": malformed row");
    std::getline(row, sf);
    int k = 0;
    double lambda = 0.0;
    try {
      k = std::stoi(trim(kf));
      lambda = std::stod(trim(lf));
    } catch (const std::exception&) {
      throw ConfigError(csv_path + ":" + std::to_string(lineno) +
                        ": malformed row");
    }
    check_k(k);
    if (!(lambda > 0.0) || lambda > 1.0)
      throw ConfigError(csv_path + ":" + std::to_string(lineno) +
                        ": lambda must lie in (0, 1]");
    t.lambda_[k] = lambda;
    t.source_[k] = trim(sf);
  }
  return t;
}

double CenterDensityTable::lambda(int k) const {
  check_k(k);
  if (!(lambda_[k] > 0.0))
    throw ConfigError("no center density entry for k = " + std::to_string(k));
  return lambda_[k];
}

const std::string& CenterDensityTable::source(int k) const {
  check_k(k);
  return source_[k];
}

double center_density(int k, const CenterDensityTable& table) {
  return table.lambda(k);
}

double target_distance(int M, int k, const CenterDensityTable& table) {
  return bound_info(M, k, table).d_check;
}

double max_points_bound(double d, int k, const CenterDensityTable& table) {
  if (!(d > 0.0) || d >= 2.0)
    throw std::invalid_argument("distance must lie in (0, 2)");
  const double lambda = table.lambda(k);
  const double ln = k * std::log(std::numbers::pi) + std::log(lambda) -
                    k * std::log(std::asin(d / 4.0)) -
                    0.5 * k * std::log(static_cast<double>(k));
  return std::exp(ln);
}

double candidate_norm(int M, int k, const CenterDensityTable& table) {
  return bound_info(M, k, table).W;
}

BoundInfo bound_info(int M, int k, const CenterDensityTable& table) {
  if (M < 2) throw std::invalid_argument("bound requires M >= 2");
  BoundInfo info;
  info.M = M;
  info.k = k;
  info.lambda_k = table.lambda(k);
  const double ln_arg =
      (k * std::log(std::numbers::pi) + std::log(info.lambda_k) -
       std::log(static_cast<double>(M)) -
       0.5 * k * std::log(static_cast<double>(k))) /
      k;
  const double arg = std::exp(ln_arg);
  if (arg >= std::numbers::pi / 2.0) {
    // sin is no longer monotone here and the bound exceeds the sphere
    // diameter either way
    info.d_check = 2.0;
    info.vacuous = true;
  } else {
    double d = 4.0 * std::sin(arg);
    if (d > 2.0) {
      d = 2.0;
      info.vacuous = true;
    }
    info.d_check = d;
  }
  info.W = (2.0 * M * std::sqrt(static_cast<double>(k)) / std::numbers::pi) *
           std::asin(info.d_check / 4.0);
  return info;
}

}  // namespace sforge
