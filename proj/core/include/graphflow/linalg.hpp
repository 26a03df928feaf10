#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphflow/errors.hpp"
#include "graphflow/rational.hpp"

namespace graphflow::detail {

inline constexpr double kPivotThreshold = 1e-12;

inline bool pivot_too_small(double pivot) { return scalar_abs(pivot) <= kPivotThreshold; }
inline bool pivot_too_small(const Rational& pivot) { return pivot == 0; }

/// Gaussian elimination with partial pivoting; solves a X = b for several
/// right-hand sides at once. Works on doubles and exact rationals.
template <typename T>
std::vector<std::vector<T>> solve_linear_multi(std::vector<std::vector<T>> a,
                                               std::vector<std::vector<T>> rhs) {
  int n = static_cast<int>(a.size());
  int m = n == 0 ? 0 : static_cast<int>(rhs[0].size());
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    for (int r = col + 1; r < n; ++r)
      if (scalar_abs(a[r][col]) > scalar_abs(a[pivot_row][col])) pivot_row = r;
    if (pivot_too_small(a[pivot_row][col])) {
      double residual = to_double(scalar_abs(a[pivot_row][col]));
      throw Error(ErrorCode::SingularSystem,
                  "singular linear system, pivot magnitude " + std::to_string(residual) +
                      " at column " + std::to_string(col + 1));
    }
    std::swap(a[pivot_row], a[col]);
    std::swap(rhs[pivot_row], rhs[col]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      T factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      for (int c = 0; c < m; ++c) rhs[r][c] -= factor * rhs[col][c];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int c = 0; c < m; ++c) {
      T sum = rhs[col][c];
      for (int k = col + 1; k < n; ++k) sum -= a[col][k] * rhs[k][c];
      rhs[col][c] = sum / a[col][col];
    }
  }
  return rhs;
}

template <typename T>
std::vector<T> solve_linear(std::vector<std::vector<T>> a, const std::vector<T>& b) {
  std::vector<std::vector<T>> rhs;
  rhs.reserve(b.size());
  for (const T& x : b) rhs.push_back({x});
  auto solution = solve_linear_multi(std::move(a), std::move(rhs));
  std::vector<T> out;
  out.reserve(solution.size());
  for (auto& row : solution) out.push_back(std::move(row[0]));
  return out;
}

template <typename T>
std::vector<std::vector<T>> mat_mul(const std::vector<std::vector<T>>& a,
                                    const std::vector<std::vector<T>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<T>> c(n, std::vector<T>(n, T(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == T(0)) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

template <typename T>
std::vector<T> vec_mat(const std::vector<T>& v, const std::vector<std::vector<T>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<T> out(n, T(0));
  for (int i = 0; i < n; ++i) {
    if (v[i] == T(0)) continue;
    for (int j = 0; j < n; ++j) out[j] += v[i] * a[i][j];
  }
  return out;
}

}  // namespace graphflow::detail
