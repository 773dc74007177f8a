#pragma once

#include "symrank/types.hpp"

#include <utility>
#include <vector>

namespace symrank {

template <class Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;   // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan over an exact field. Pivot: first nonzero entry in the
/// current column, scanning rows top-down.
template <class Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index k = c; k < cols; ++k) m(r, k) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index k = c; k < cols; ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right kernel as matrix columns; each basis vector has a 1 in
/// its own free coordinate and 0 in the other free coordinates.
template <class Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
  const auto ech = rref<Scalar>(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : ech.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis(fc, k) = Scalar(1);
    for (size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, fc);
  }
  return basis;
}

/// Any solution of m x = rhs, or nothing when the system is inconsistent.
template <class Scalar>
bool solve_exact(const Matrix<Scalar>& m, const Vector<Scalar>& rhs, Vector<Scalar>& x) {
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  const auto ech = rref<Scalar>(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return false;
  x = Vector<Scalar>::Zero(m.cols());
  for (size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return true;
}

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers, which changes neither rank nor kernel.
int bareiss_rank(const RationalMatrix& m);

/// Determinant by Bareiss elimination on the integer-scaled matrix.
Rational determinant(const RationalMatrix& m);

/// Throws ErrorKind::invalid when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace symrank
