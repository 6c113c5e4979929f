#pragma once

// Determinants and symmetric factorizations used by the connecting-matrix
// machinery. Exact scalars go through fraction-free (Bareiss) elimination;
// floating-point scalars through partially pivoted LU.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "jacobi_bc/error.hpp"
#include "jacobi_bc/matrix.hpp"
#include "jacobi_bc/scalar.hpp"

namespace jbc {

namespace detail {

template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / prev;  // exact division
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign > 0 ? det : T(-det);
}

template <class T>
T lu_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (m(piv, k) == T(0)) return T(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T l = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

template <class T>
T determinant(const Matrix<T>& m) {
  if constexpr (is_exact_v<T>) {
    return detail::bareiss_determinant(m);
  } else {
    return detail::lu_determinant(m);
  }
}

// Natural-order LDL^T of a symmetric matrix. For the rotated connecting
// matrix the k-th pivot is det C̄^k / det C̄^{k-1}, so the first bad pivot
// names the first horizon at which the data stops being admissible.
template <class T>
struct Ldlt {
  Matrix<T> lower;        // unit lower triangular, valid up to `rank`
  std::vector<T> pivots;  // d_1..d_rank
  std::size_t rank = 0;   // number of accepted pivots
  bool positive_definite = false;
  double min_relative_pivot = std::numeric_limits<double>::infinity();

  // 1-based first failing leading dimension; 0 when positive definite.
  std::size_t failing_dimension() const {
    return positive_definite ? 0 : rank + 1;
  }
};

// Default relative-pivot threshold: pivot d_k must exceed
// kPivotTolerance * C_kk. Scale invariant under diagonal congruence.
inline constexpr double kPivotTolerance = 1e-12;

template <class T>
Ldlt<T> ldlt(const Matrix<T>& c, double rel_tol = kPivotTolerance) {
  const std::size_t n = c.rows();
  Ldlt<T> out;
  out.lower = Matrix<T>::identity(n);
  out.pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    T d = c(k, k);
    for (std::size_t j = 0; j < k; ++j)
      d -= out.lower(k, j) * out.lower(k, j) * out.pivots[j];

    bool ok;
    if constexpr (is_exact_v<T>) {
      ok = sgn(d) > 0;
      const double diag = to_double(c(k, k));
      if (diag > 0)
        out.min_relative_pivot =
            std::min(out.min_relative_pivot, to_double(d) / diag);
      else
        out.min_relative_pivot = std::min(out.min_relative_pivot, to_double(d));
    } else {
      const double diag = to_double(c(k, k));
      const double rel = diag > 0 ? to_double(d) / diag : -1.0;
      out.min_relative_pivot = std::min(out.min_relative_pivot, rel);
      ok = diag > 0 && rel > rel_tol;
    }
    if (!ok) return out;

    out.pivots.push_back(d);
    for (std::size_t i = k + 1; i < n; ++i) {
      T s = c(i, k);
      for (std::size_t j = 0; j < k; ++j)
        s -= out.lower(i, j) * out.lower(k, j) * out.pivots[j];
      out.lower(i, k) = s / d;
    }
    out.rank = k + 1;
  }
  out.positive_definite = true;
  return out;
}

// Solve C x = rhs for symmetric positive definite C.
template <class T>
std::vector<T> solve_spd(const Matrix<T>& c, const std::vector<T>& rhs,
                         double rel_tol = kPivotTolerance) {
  const Ldlt<T> f = ldlt(c, rel_tol);
  if (!f.positive_definite) {
    throw NotPositiveDefinite(
        f.failing_dimension(),
        "matrix is not positive definite at leading dimension " +
            std::to_string(f.failing_dimension()));
  }
  const std::size_t n = c.rows();
  std::vector<T> x = rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lower(i, j) * x[j];
  for (std::size_t i = 0; i < n; ++i) x[i] /= f.pivots[i];
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lower(j, i) * x[j];
  return x;
}

}  // namespace jbc
