#pragma once

// Exact and high-precision determinants of dense Eigen matrices:
//  - bareiss_det: fraction-free elimination over a ring with exact division
//    (Int, IntPolynomial); all intermediate divisions are exact.
//  - field_det:   Gaussian elimination over an exact field (Rational,
//    Cyclotomic); pivots chosen for sparsity and small operand size.
//  - float_det:   partially pivoted LU for floating scalars (Real, Complex).

#include "xxzlbf/cyclotomic.hpp"
#include "xxzlbf/polynomial.hpp"
#include "xxzlbf/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace xxz {

// Exact ring division used by bareiss_det; further overloads (e.g. for
// Laurent polynomials) are picked up by argument-dependent lookup.
inline Int ring_divide(const Int& num, const Int& den) {
  Int q, r;
  mp::divide_qr(num, den, q, r);
  if (r != 0) throw NumericalError("bareiss_det: inexact integer division");
  return q;
}

inline IntPolynomial ring_divide(const IntPolynomial& num, const IntPolynomial& den) {
  auto q = num.divide_exact(den);
  if (!q) throw NumericalError("bareiss_det: inexact polynomial division");
  return *q;
}

// Fraction-free (Bareiss) determinant over an exact ring.  The input matrix
// is taken by value and used as workspace.
template <class S>
S bareiss_det(Mat<S> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ArgumentError("bareiss_det: matrix must be square");
  if (n == 0) return S(1);
  int sign = 1;
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!(a(r, k) == S(0))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return S(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = ring_divide(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  S det = a(n - 1, n - 1);
  return sign < 0 ? S(-det) : det;
}

// Exact Gaussian elimination determinant over a field.
template <class S>
S field_det(Mat<S> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ArgumentError("field_det: matrix must be square");
  S det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!(a(r, k) == S(0))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return S(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    const S inv = S(1) / a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == S(0)) continue;
      const S f = a(i, k) * inv;
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      a(i, k) = S(0);
    }
  }
  return det;
}

// Exact determinant of a rational matrix: clears denominators row by row,
// runs integer Bareiss elimination, and restores the scale.  Much faster
// than field_det for dense rational matrices.
inline Rational exact_det(const Mat<Rational>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ArgumentError("exact_det: matrix must be square");
  Mat<Int> cleared(n, n);
  Int scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int row_lcm = 1;
    for (Eigen::Index j = 0; j < n; ++j)
      row_lcm = mp::lcm(row_lcm, Int(mp::denominator(a(i, j))));
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational scaled = a(i, j) * Rational(row_lcm);
      cleared(i, j) = mp::numerator(scaled);
    }
    scale *= row_lcm;
  }
  return Rational(bareiss_det<Int>(std::move(cleared))) / Rational(scale);
}

// LU determinant with partial pivoting for Real or Complex scalars.
template <class S>
S float_det(Mat<S> a) {
  using std::abs;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw ArgumentError("float_det: matrix must be square");
  S det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    auto best = abs(a(k, k));
    for (Eigen::Index r = k + 1; r < n; ++r) {
      auto mag = abs(a(r, k));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0) return S(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    const S inv = S(1) / a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == S(0)) continue;
      const S f = a(i, k) * inv;
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace xxz
