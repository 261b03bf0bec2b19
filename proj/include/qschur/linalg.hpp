#pragma once

#include <optional>
#include <vector>

#include "qschur/eigen_support.hpp"

namespace qschur {

/// Reduced row echelon form with the pivot columns in increasing order.
template <class S>
struct Echelon {
  Mat<S> reduced;
  std::vector<Eigen::Index> pivots;
};

/// Gauss-Jordan elimination. Pivot: first nonzero entry of the column
/// scanning rows top-down, columns left to right.
template <class S>
Echelon<S> row_reduce(Mat<S> m) {
  using Eigen::Index;
  Echelon<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Index c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Eigen::Index rank(const Mat<S>& m) {
  return static_cast<Eigen::Index>(row_reduce<S>(m).pivots.size());
}

/// Some x with m x = b, free variables set to zero; nullopt when b is not in
/// the column space.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  using Eigen::Index;
  Mat<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Echelon<S> e = row_reduce<S>(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Constant(m.cols(), S(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    x(e.pivots[k]) = e.reduced(static_cast<Index>(k), m.cols());
  return x;
}

/// Basis of {x : m x = 0}: one vector per free column in index order, with a
/// 1 in that column and zeros in the other free columns.
template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& m) {
  using Eigen::Index;
  Echelon<S> e = row_reduce<S>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<S>> out;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> x = Vec<S>::Constant(m.cols(), S(0));
    x(f) = S(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      x(e.pivots[k]) = -e.reduced(static_cast<Index>(k), f);
    out.push_back(std::move(x));
  }
  return out;
}

/// Determinant of a square matrix by elimination.
template <class S>
S determinant(Mat<S> m) {
  using Eigen::Index;
  S det(1);
  for (Index col = 0; col < m.cols(); ++col) {
    Index p = col;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) return S(0);
    if (p != col) {
      m.row(p).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const S inv = S(1) / m(col, col);
    for (Index r = col + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      const S f = m(r, col) * inv;
      for (Index c = col; c < m.cols(); ++c)
        if (!is_zero(m(col, c))) m(r, c) = m(r, c) - f * m(col, c);
    }
  }
  return det;
}

/// Inverse of a square matrix; nullopt when singular.
template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  const Eigen::Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  Echelon<S> e = row_reduce<S>(std::move(aug));
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<std::size_t>(n - 1)] >= n))
    return std::nullopt;
  return Mat<S>(e.reduced.rightCols(n));
}

/// Product that skips zero entries; exact scalars make zero tests cheap and
/// the matrices here are mostly sparse.
template <class S>
Mat<S> multiply(const Mat<S>& a, const Mat<S>& b) {
  using Eigen::Index;
  Mat<S> out = Mat<S>::Constant(a.rows(), b.cols(), S(0));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    }
  return out;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Entrywise image of a Laurent matrix in the field of S.
template <class S>
Mat<S> specialize_matrix(const LaurentMatrix& m, const FieldContext& ctx) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = specialize_as<S>(m(i, j), ctx);
  return out;
}

/// Entrywise value of a Q(v) matrix at v = q; nullopt if a denominator
/// vanishes there.
std::optional<Mat<Rational>> evaluate_matrix(const Mat<RatFunc>& m, const Rational& q);

/// Rank over Q(v). A rational evaluation point attaining min(rows, cols)
/// certifies full rank; otherwise falls back to elimination over Q(v).
Eigen::Index generic_rank(const Mat<RatFunc>& m);

/// Conversions between Q(v) and FieldValue matrices.
FieldMatrix to_field(const Mat<RatFunc>& m);
Mat<RatFunc> to_ratfunc(const FieldMatrix& m);
Mat<RatFunc> to_ratfunc(const LaurentMatrix& m);

}  // namespace qschur
