#include "sforge/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sforge {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kPivotTol = 1e-11;

// Revised simplex on the dual of the stated LP:
//
//   (P)  min c.w   s.t.  A w <= rhs, w >= 0        (many rows, few columns)
//   (D)  min rhs.p s.t.  A^T p >= -c, p >= 0       (few rows, many columns)
//
// The dual basis has one row per primal variable, so pivoting stays tiny
// while pricing streams over the constraint rows of A (which are the dual
// columns, contiguous in row-major storage).  The optimal primal w is read
// off the dual multipliers at termination.
class DualSimplex {
 public:
  explicit DualSimplex(const LinearProgram& lp)
      : lp_(lp),
        R_(lp.num_vars),
        m_(lp.num_rows),
        degen_limit_(std::max<long long>(50, 10 * static_cast<long long>(m_))),
        iter_limit_(200 * static_cast<long long>(R_ + m_) + 10000) {}

  LpSolution solve() {
    init_basis();
    if (artificial_count_ > 0) {
      phase_ = 1;
      run_phase();
      double infeas = 0.0;
      for (std::size_t r = 0; r < R_; ++r)
        if (is_artificial(basis_[r])) infeas += xb_[r];
      if (infeas > 1e-7)
        throw LpError(LpError::Kind::unbounded,
                      "LP is unbounded or infeasible (no dual-feasible "
                      "point); the construction is broken");
      expel_artificials();
    }
    phase_ = 2;
    run_phase();
    return extract();
  }

 private:
  // variable ids: [0, m_) dual columns p_j, [m_, m_+R_) surplus, rest artificial
  bool is_surplus(std::size_t id) const { return id >= m_ && id < m_ + R_; }
  bool is_artificial(std::size_t id) const { return id >= m_ + R_; }

  double cost(std::size_t id) const {
    if (phase_ == 1) return is_artificial(id) ? 1.0 : 0.0;
    if (id < m_) return lp_.rhs[id];
    return 0.0;
  }

  // dense column of the (sign-normalized) dual constraint system
  void column(std::size_t id, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    if (id < m_) {
      const double* row = lp_.A.data() + id * R_;
      for (std::size_t r = 0; r < R_; ++r) out[r] = sigma_[r] * row[r];
    } else if (is_surplus(id)) {
      const std::size_t r = id - m_;
      out[r] = -sigma_[r];
    } else {
      out[id - m_ - R_] = 1.0;
    }
  }

  void init_basis() {
    sigma_.assign(R_, 1.0);
    rhs_.assign(R_, 0.0);
    for (std::size_t r = 0; r < R_; ++r) {
      double v = -lp_.c[r];
      if (v < 0) {
        sigma_[r] = -1.0;
        v = -v;
      }
      rhs_[r] = v;
    }
    basis_.resize(R_);
    binv_.assign(R_ * R_, 0.0);
    xb_ = rhs_;
    artificial_count_ = 0;
    for (std::size_t r = 0; r < R_; ++r) {
      if (rhs_[r] <= kFeasTol) {
        // surplus column is -sigma * e_r; basic at value 0
        basis_[r] = m_ + r;
        binv_[r * R_ + r] = -sigma_[r];
        xb_[r] = 0.0;
      } else if (sigma_[r] < 0) {
        // flipped row: surplus enters with +1 and is feasible as-is
        basis_[r] = m_ + r;
        binv_[r * R_ + r] = 1.0;
      } else {
        basis_[r] = m_ + R_ + r;
        binv_[r * R_ + r] = 1.0;
        ++artificial_count_;
      }
    }
  }

  void compute_pi(std::vector<double>& pi) const {
    pi.assign(R_, 0.0);
    for (std::size_t q = 0; q < R_; ++q) {
      const double cb = cost(basis_[q]);
      if (cb == 0.0) continue;
      const double* row = binv_.data() + q * R_;
      for (std::size_t r = 0; r < R_; ++r) pi[r] += cb * row[r];
    }
  }

  // most negative reduced cost (Dantzig) or first negative (Bland);
  // artificials never re-enter
  std::size_t price(const std::vector<double>& pi, bool bland) const {
    std::vector<double> pis(R_);
    for (std::size_t r = 0; r < R_; ++r) pis[r] = pi[r] * sigma_[r];
    std::size_t enter = kNone;
    double best = -kFeasTol;
    for (std::size_t j = 0; j < m_; ++j) {
      const double* row = lp_.A.data() + j * R_;
      double dot = 0.0;
      for (std::size_t r = 0; r < R_; ++r) dot += pis[r] * row[r];
      const double d = cost(j) - dot;
      if (d < best) {
        best = d;
        enter = j;
        if (bland) return enter;
      }
    }
    for (std::size_t r = 0; r < R_; ++r) {
      const double d = cost(m_ + r) + pi[r] * sigma_[r];
      if (d < best) {
        best = d;
        enter = m_ + r;
        if (bland) return enter;
      }
    }
    return enter;
  }

  // returns leaving row or kNone when the entering direction is unbounded
  std::size_t ratio_test(const std::vector<double>& u, bool bland) const {
    std::size_t leave = kNone;
    double best_ratio = 0.0;
    for (std::size_t q = 0; q < R_; ++q) {
      if (u[q] <= kPivotTol) continue;
      const double ratio = xb_[q] / u[q];
      if (leave == kNone || ratio < best_ratio - 1e-12) {
        leave = q;
        best_ratio = ratio;
      } else if (ratio < best_ratio + 1e-12) {
        if (bland) {
          if (basis_[q] < basis_[leave]) leave = q;
        } else if (u[q] > u[leave]) {
          leave = q;
        }
      }
    }
    return leave;
  }

  void pivot(std::size_t enter, std::size_t leave,
             const std::vector<double>& u) {
    const double piv = u[leave];
    double* lrow = binv_.data() + leave * R_;
    for (std::size_t r = 0; r < R_; ++r) lrow[r] /= piv;
    const double theta = xb_[leave] / piv;
    for (std::size_t q = 0; q < R_; ++q) {
      if (q == leave || u[q] == 0.0) continue;
      double* row = binv_.data() + q * R_;
      for (std::size_t r = 0; r < R_; ++r) row[r] -= u[q] * lrow[r];
      xb_[q] -= u[q] * theta;
      if (xb_[q] < 0.0 && xb_[q] > -1e-12) xb_[q] = 0.0;
    }
    xb_[leave] = theta;
    basis_[leave] = enter;
  }

  void run_phase() {
    std::vector<double> pi, col(R_), u(R_);
    long long degen_streak = 0;
    bool bland = false;
    while (true) {
      if (++iterations_ > iter_limit_)
        throw LpError(LpError::Kind::iteration_limit,
                      "simplex iteration limit exceeded");
      compute_pi(pi);
      const std::size_t enter = price(pi, bland);
      if (enter == kNone) return;  // optimal for this phase
      column(enter, col);
      for (std::size_t q = 0; q < R_; ++q) {
        const double* row = binv_.data() + q * R_;
        double s = 0.0;
        for (std::size_t r = 0; r < R_; ++r) s += row[r] * col[r];
        u[q] = s;
      }
      const std::size_t leave = ratio_test(u, bland);
      if (leave == kNone) {
        if (phase_ == 1)
          throw LpError(LpError::Kind::inconsistent,
                        "phase-1 objective unbounded");
        // dual unbounded <=> primal infeasible
        throw LpError(LpError::Kind::infeasible,
                      "LP constraints are infeasible; the construction is "
                      "broken");
      }
      const double step = xb_[leave] / u[leave];
      pivot(enter, leave, u);
      if (step <= kFeasTol) {
        if (++degen_streak > degen_limit_) bland = true;
      } else {
        degen_streak = 0;
        bland = false;
      }
    }
  }

  // drive any leftover zero-valued artificials out of the basis
  void expel_artificials() {
    std::vector<double> col(R_), brow(R_);
    for (std::size_t q = 0; q < R_; ++q) {
      if (!is_artificial(basis_[q])) continue;
      const double* row = binv_.data() + q * R_;
      std::copy(row, row + R_, brow.begin());
      bool pivoted = false;
      for (std::size_t id = 0; id < m_ + R_ && !pivoted; ++id) {
        bool in_basis = false;
        for (std::size_t t = 0; t < R_; ++t)
          if (basis_[t] == id) in_basis = true;
        if (in_basis) continue;
        column(id, col);
        double val = 0.0;
        for (std::size_t r = 0; r < R_; ++r) val += brow[r] * col[r];
        if (std::fabs(val) > kPivotTol) {
          std::vector<double> u(R_);
          for (std::size_t t = 0; t < R_; ++t) {
            const double* trow = binv_.data() + t * R_;
            double s = 0.0;
            for (std::size_t r = 0; r < R_; ++r) s += trow[r] * col[r];
            u[t] = s;
          }
          pivot(id, q, u);
          pivoted = true;
        }
      }
      if (!pivoted)
        throw LpError(LpError::Kind::inconsistent,
                      "redundant dual row: artificial cannot leave the basis");
    }
  }

  LpSolution extract() const {
    std::vector<double> pi;
    compute_pi(pi);
    LpSolution sol;
    sol.w.assign(R_, 0.0);
    for (std::size_t r = 0; r < R_; ++r) {
      double v = sigma_[r] * pi[r];
      if (v < 0.0) {
        if (v < -1e-7)
          throw LpError(LpError::Kind::inconsistent,
                        "negative primal value recovered from the dual");
        v = 0.0;
      }
      sol.w[r] = v;
    }
    double dual_obj = 0.0;
    for (std::size_t q = 0; q < R_; ++q)
      dual_obj += cost(basis_[q]) * xb_[q];
    double primal_obj = 0.0;
    for (std::size_t r = 0; r < R_; ++r) primal_obj += lp_.c[r] * sol.w[r];
    if (std::fabs(primal_obj + dual_obj) >
        1e-6 * std::max(1.0, std::fabs(dual_obj)))
      throw LpError(LpError::Kind::inconsistent,
                    "strong duality violated in the recovered solution");
    sol.objective = primal_obj;
    sol.iterations = iterations_;
    return sol;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const LinearProgram& lp_;
  std::size_t R_;
  std::size_t m_;
  long long degen_limit_;
  long long iter_limit_;
  int phase_ = 1;
  long long iterations_ = 0;
  std::size_t artificial_count_ = 0;
  std::vector<double> sigma_;   // row sign normalization
  std::vector<double> rhs_;     // normalized dual right-hand side
  std::vector<std::size_t> basis_;
  std::vector<double> binv_;    // R x R dense basis inverse
  std::vector<double> xb_;      // basic values
};

}  // namespace

LinearProgram build_ivp_lp(const DistanceProfile& profile) {
  const std::size_t cols = profile.cols;
  LinearProgram lp;
  lp.num_vars = cols + 1;
  lp.num_rows = static_cast<std::size_t>(profile.rows()) + 2;
  lp.c.assign(lp.num_vars, 0.0);
  lp.c[0] = -1.0;  // maximize t
  lp.A.assign(lp.num_rows * lp.num_vars, 0.0);
  lp.rhs.assign(lp.num_rows, 0.0);
  // sum(y) = 1 as a pair of inequalities
  for (std::size_t j = 0; j < cols; ++j) {
    lp.A[0 * lp.num_vars + 1 + j] = 1.0;
    lp.A[1 * lp.num_vars + 1 + j] = -1.0;
  }
  lp.rhs[0] = 1.0;
  lp.rhs[1] = -1.0;
  // t - f_i(y) <= 0
  for (int i = 1; i <= profile.rows(); ++i) {
    double* row = lp.A.data() + (static_cast<std::size_t>(i) + 1) * lp.num_vars;
    row[0] = 1.0;
    for (std::size_t j = 0; j < cols; ++j)
      row[1 + j] = -profile.coeff(i, static_cast<int>(j));
  }
  return lp;
}

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.num_vars == 0 || lp.num_rows == 0)
    throw std::invalid_argument("empty linear program");
  if (lp.c.size() != lp.num_vars || lp.rhs.size() != lp.num_rows ||
      lp.A.size() != lp.num_rows * lp.num_vars)
    throw std::invalid_argument("inconsistent LP dimensions");
  DualSimplex solver(lp);
  return solver.solve();
}

IVPSolution solve_ivp(const CyclicGenerator& g) {
  IVPSolution sol;
  const int cols = g.n - g.k;
  if (g.M == 1) {
    // single-point code: no pair exists, distance is the +infinity sentinel
    sol.y.assign(cols, 0.0);
    sol.y[0] = 1.0;
    sol.t = std::numeric_limits<double>::infinity();
    sol.d = std::numeric_limits<double>::infinity();
    sol.x.assign(g.n, 0.0);
    sol.x[0] = 1.0;
    return sol;
  }
  const DistanceProfile profile = distance_profile(g);
  const LinearProgram lp = build_ivp_lp(profile);
  const LpSolution ls = solve_lp(lp);

  sol.y.assign(ls.w.begin() + 1, ls.w.end());
  double sum = 0.0;
  for (double& v : sol.y) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-7)
    throw LpError(LpError::Kind::inconsistent,
                  "recovered squared radii do not lie on the simplex");
  // evaluate t on the profile rather than trusting the LP objective verbatim
  sol.t = profile_min(profile, sol.y);
  if (std::fabs(sol.t - ls.w[0]) > 1e-6 * std::max(1.0, sol.t))
    throw LpError(LpError::Kind::inconsistent,
                  "LP optimum disagrees with the evaluated profile minimum");
  sol.d = std::sqrt(std::max(0.0, sol.t));

  sol.x.assign(g.n, 0.0);
  for (int j = 0; j < g.k; ++j) sol.x[2 * j] = std::sqrt(sol.y[j]);
  if (g.odd_dim()) sol.x[g.n - 1] = std::sqrt(sol.y[g.k]);

  for (int i = 1; i <= profile.rows(); ++i) {
    double fi = 0.0;
    for (int j = 0; j < cols; ++j) fi += profile.coeff(i, j) * sol.y[j];
    if (std::fabs(fi - sol.t) <= 1e-7) sol.active_set.push_back(i);
  }
  return sol;
}

}  // namespace sforge
