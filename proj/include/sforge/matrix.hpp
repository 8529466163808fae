#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace sforge {

// Minimal dense row-major matrix; just enough for building and checking the
// pseudo-diagonal generators.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline Mat matmul(const Mat& x, const Mat& y) {
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const double v = x.at(i, k);
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

inline Mat transpose(const Mat& x) {
  Mat out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    worst = std::max(worst, std::fabs(x.a[i] - y.a[i]));
  return worst;
}

}  // namespace sforge
