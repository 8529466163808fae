#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sforge/generator.hpp"

namespace sforge {

/// min c.w  subject to  A w <= rhs, w >= 0, with dense row-major A.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::size_t num_rows = 0;
  std::vector<double> c;    // num_vars
  std::vector<double> A;    // num_rows * num_vars
  std::vector<double> rhs;  // num_rows

  double at(std::size_t row, std::size_t var) const {
    return A[row * num_vars + var];
  }
};

class LpError : public std::runtime_error {
 public:
  enum class Kind { infeasible, unbounded, iteration_limit, inconsistent };
  LpError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct LpSolution {
  std::vector<double> w;
  double objective = 0.0;
  long long iterations = 0;
};

/// Initial-vector problem as an LP in w = (t, y_1..y_{n-k}): maximize t
/// subject to t <= f_i(y) for i = 1..floor(M/2) and y on the unit simplex
/// (stated as a pair of <= rows).  floor(M/2) + 2 rows, n - k + 1 variables.
LinearProgram build_ivp_lp(const DistanceProfile& profile);

/// Dense dual-simplex solve of the stated form.  The LP family has many rows
/// and few columns, so the solver pivots on the dual basis (one row per
/// primal variable) and prices the constraint rows; Bland's rule takes over
/// after 10 * num_rows degenerate pivots.  Infeasible/unbounded inputs
/// signal construction bugs and surface as LpError.
LpSolution solve_lp(const LinearProgram& lp);

struct IVPSolution {
  std::vector<double> y;       // optimal squared radii, sums to 1
  double t = 0.0;              // optimal min_i f_i(y) = d^2
  std::vector<double> x;       // zero-phase initial vector
  double d = 0.0;              // sqrt(t)
  std::vector<int> active_set; // 1-based i with f_i(y) = t
};

/// distance_profile -> build_ivp_lp -> solve_lp -> zero-phase initial vector.
/// M = 1 yields the documented +infinity sentinel.
IVPSolution solve_ivp(const CyclicGenerator& g);

}  // namespace sforge
