#pragma once

#include <optional>
#include <vector>

#include "qschur/eigen_support.hpp"

namespace qschur {

/// Column echelon basis of the Q[v, v^-1]-module spanned by the columns of G.
/// Pivot entries are unit-normalized (lowest exponent 0, leading coefficient
/// 1) and entries left of a pivot are reduced modulo it. G * transform ==
/// basis holds exactly.
struct HnfResult {
  LaurentMatrix basis;
  LaurentMatrix transform;
  /// Row of the pivot of each basis column, strictly increasing.
  std::vector<Eigen::Index> pivot_rows;
};

HnfResult hnf_column_basis(const LaurentMatrix& g);

/// Coordinates of `column` in the echelon basis by successive Euclidean
/// division; nullopt if some remainder is nonzero.
std::optional<std::vector<LaurentPoly>> hnf_coordinates(const HnfResult& h, const Vec<LaurentPoly>& column);

/// True when every column of g lies in the span of h.basis and every basis
/// column equals g * transform.
bool hnf_certifies(const HnfResult& h, const LaurentMatrix& g);

}  // namespace qschur
