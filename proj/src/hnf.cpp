#include "qschur/hnf.hpp"

#include "qschur/linalg.hpp"

namespace qschur {

namespace {

using Eigen::Index;

void axpy_col(LaurentMatrix& m, Index dst, const LaurentPoly& q, Index src) {
  for (Index r = 0; r < m.rows(); ++r)
    if (!m(r, src).is_zero()) m(r, dst) -= q * m(r, src);
}

void scale_col(LaurentMatrix& m, Index c, const LaurentPoly& u) {
  for (Index r = 0; r < m.rows(); ++r)
    if (!m(r, c).is_zero()) m(r, c) = m(r, c) * u;
}

void swap_cols(LaurentMatrix& m, Index a, Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

}  // namespace

HnfResult hnf_column_basis(const LaurentMatrix& g) {
  LaurentMatrix a = g;
  LaurentMatrix t = LaurentMatrix::Identity(g.cols(), g.cols());
  HnfResult out;
  Index k = 0;
  for (Index r = 0; r < a.rows() && k < a.cols(); ++r) {
    // Euclidean reduction of row r across the active columns k..end.
    while (true) {
      Index p = -1;
      int nonzero = 0;
      for (Index c = k; c < a.cols(); ++c) {
        if (a(r, c).is_zero()) continue;
        ++nonzero;
        if (p < 0 || a(r, c).span() < a(r, p).span()) p = c;
      }
      if (p < 0) break;
      if (nonzero == 1) {
        swap_cols(a, k, p);
        swap_cols(t, k, p);
        break;
      }
      for (Index c = k; c < a.cols(); ++c) {
        if (c == p || a(r, c).is_zero()) continue;
        const LaurentPoly q = divmod(a(r, c), a(r, p)).first;
        axpy_col(a, c, q, p);
        axpy_col(t, c, q, p);
      }
    }
    if (a(r, k).is_zero()) continue;
    LaurentPoly unit;
    unit_normalize(a(r, k), &unit);
    const LaurentPoly inv = LaurentPoly::monomial(-unit.low(), Rational(1) / unit.leading());
    scale_col(a, k, inv);
    scale_col(t, k, inv);
    for (Index c = 0; c < k; ++c) {
      if (a(r, c).is_zero()) continue;
      const LaurentPoly q = divmod(a(r, c), a(r, k)).first;
      if (q.is_zero()) continue;
      axpy_col(a, c, q, k);
      axpy_col(t, c, q, k);
    }
    out.pivot_rows.push_back(r);
    ++k;
  }
  out.basis = a.leftCols(k);
  out.transform = t.leftCols(k);
  return out;
}

std::optional<std::vector<LaurentPoly>> hnf_coordinates(const HnfResult& h, const Vec<LaurentPoly>& column) {
  Vec<LaurentPoly> rest = column;
  std::vector<LaurentPoly> coords(h.pivot_rows.size());
  for (std::size_t k = 0; k < h.pivot_rows.size(); ++k) {
    const Index r = h.pivot_rows[k];
    const Index c = static_cast<Index>(k);
    auto [q, rem] = divmod(rest(r), h.basis(r, c));
    if (!rem.is_zero()) return std::nullopt;
    coords[k] = q;
    if (q.is_zero()) continue;
    for (Index i = 0; i < rest.size(); ++i)
      if (!h.basis(i, c).is_zero()) rest(i) -= q * h.basis(i, c);
  }
  for (Index i = 0; i < rest.size(); ++i)
    if (!rest(i).is_zero()) return std::nullopt;
  return coords;
}

bool hnf_certifies(const HnfResult& h, const LaurentMatrix& g) {
  if (!equal<LaurentPoly>(multiply<LaurentPoly>(g, h.transform), h.basis)) return false;
  for (Index c = 0; c < g.cols(); ++c)
    if (!hnf_coordinates(h, g.col(c))) return false;
  return true;
}

}  // namespace qschur
