#include "qschur/linalg.hpp"

#include <algorithm>

namespace qschur {

std::optional<Mat<Rational>> evaluate_matrix(const Mat<RatFunc>& m, const Rational& q) {
  Mat<Rational> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const RatFunc& f = m(i, j);
      if (f.is_zero()) {
        out(i, j) = 0;
        continue;
      }
      Rational den = f.den().evaluate(q);
      if (den == 0) return std::nullopt;
      out(i, j) = f.num().evaluate(q) / den;
    }
  return out;
}

Eigen::Index generic_rank(const Mat<RatFunc>& m) {
  const Eigen::Index full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  // Evaluation never raises rank, so a full-rank sample proves full generic rank.
  static const Rational points[] = {Rational(3, 2), Rational(7, 3), Rational(11, 5)};
  for (const Rational& q : points) {
    auto at = evaluate_matrix(m, q);
    if (!at) continue;
    if (rank<Rational>(*at) == full) return full;
    break;
  }
  return rank<RatFunc>(m);
}

FieldMatrix to_field(const Mat<RatFunc>& m) {
  FieldMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = FieldValue(m(i, j));
  return out;
}

Mat<RatFunc> to_ratfunc(const FieldMatrix& m) {
  Mat<RatFunc> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).as_ratfunc();
  return out;
}

Mat<RatFunc> to_ratfunc(const LaurentMatrix& m) {
  Mat<RatFunc> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
  return out;
}

}  // namespace qschur
