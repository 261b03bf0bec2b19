#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qschur/hnf.hpp"
#include "qschur/straightening.hpp"

namespace qschur {

using QvMatrix = Mat<RatFunc>;
using QvVector = Vec<RatFunc>;

/// Raising (E) or lowering (F) divided power.
enum class Side { E, F };

/// A Q[v, v^-1]-basis of the divided-power lattice in one weight space.
struct IntegralBasis {
  HnfResult hnf;
  /// Column k holds the word coefficients of the k-th basis vector.
  LaurentMatrix combos;
  /// combos^T * gram * combos.
  LaurentMatrix gram;
};

struct WeightSpace {
  Weight mu;
  /// Alive words of weight mu, sorted by (length, factor sequence).
  std::vector<DividedWord> words;
  std::map<DividedWord, Eigen::Index> index;
  LaurentMatrix gram;
  /// Indices into `words`; the selected words form a Q(v)-basis.
  std::vector<Eigen::Index> generic_basis;
  Eigen::Index rank = 0;
  /// First coordinate of this space in the module's generic coordinates.
  Eigen::Index offset = 0;
  QvMatrix basis_gram;
  QvMatrix basis_gram_inverse;
};

/// Alive words grouped by weight; every weight of the context gets an entry.
std::map<Weight, std::vector<DividedWord>> enumerate_words(const ModuleContext& ctx);

/// Gram matrix of gram_entry over a word list.
LaurentMatrix build_gram(const Straightener& s, const std::vector<DividedWord>& words);

/// Greedy pass in list order: a word is kept when its Gram column is
/// independent of the columns already kept.
std::vector<Eigen::Index> select_generic_basis(const LaurentMatrix& gram);

/// The cell module of highest weight lambda with exact generator actions in
/// the generic basis. Weight spaces are ordered by depth below lambda, then
/// lexicographically descending.
class CellModule {
 public:
  CellModule(const RootDatum& datum, const Weight& lambda, const Caps& caps = {});
  CellModule(const CellModule&) = delete;
  CellModule& operator=(const CellModule&) = delete;

  [[nodiscard]] const Weight& lambda() const { return lambda_; }
  [[nodiscard]] const RootDatum& datum() const { return straightener_.context().datum(); }
  [[nodiscard]] const Straightener& straightener() const { return straightener_; }
  [[nodiscard]] const std::vector<WeightSpace>& spaces() const { return spaces_; }
  /// nullptr when mu carries no weight space.
  [[nodiscard]] const WeightSpace* space(const Weight& mu) const;
  [[nodiscard]] Eigen::Index dim() const { return dim_; }
  /// Weight -> rank, nonzero entries only.
  [[nodiscard]] std::map<Weight, long> character() const;

  /// Generic coordinates (within the space of mu) of a vector of weight mu.
  /// Throws CoordinateFailure if v is not in the span of the basis.
  [[nodiscard]] QvVector coordinates(const WeightSpace& ws, const WordVector& v) const;

  /// Matrix of E_i^(a) or F_i^(a) on the whole module.
  [[nodiscard]] const QvMatrix& action(Side side, int i, int a) const;
  /// Projector onto the mu weight space; zero if absent.
  [[nodiscard]] QvMatrix idempotent(const Weight& mu) const;
  /// Block diagonal Gram matrix in the generic basis.
  [[nodiscard]] const QvMatrix& gram_matrix() const { return full_gram_; }
  [[nodiscard]] const QvMatrix& gram_inverse() const { return full_gram_inverse_; }

  /// Computed on first request.
  [[nodiscard]] const IntegralBasis& integral_basis(const WeightSpace& ws) const;
  /// E_i^(a) or F_i^(a) from the integral basis of `src` into that of the
  /// target space, as a Laurent matrix; nullopt when the target is absent.
  [[nodiscard]] std::optional<LaurentMatrix> integral_action(Side side, int i, int a, const WeightSpace& src) const;

  /// E_i^(a) or F_i^(a) applied to a word combination.
  [[nodiscard]] WordVector apply(Side side, int i, int a, const WordVector& v) const;

 private:
  [[nodiscard]] Vec<LaurentPoly> pairing_vector(const WeightSpace& ws, const WordVector& v) const;

  Weight lambda_;
  Straightener straightener_;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, std::size_t> by_weight_;
  Eigen::Index dim_ = 0;
  QvMatrix full_gram_;
  QvMatrix full_gram_inverse_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<Side, int, int>, std::unique_ptr<QvMatrix>> actions_;
  mutable std::map<Weight, std::unique_ptr<IntegralBasis>> integral_;
};

}  // namespace qschur
