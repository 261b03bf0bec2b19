#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qschur/eigen_support.hpp"
#include "qschur/errors.hpp"

namespace qschur {

/// Integer coordinates in the X-basis of a root datum. std::vector gives the
/// lexicographic order used for every tie-break.
using Weight = std::vector<int>;
using WeightSet = std::set<Weight>;

/// Engine limits. The rank and orbit caps bound module construction; the
/// remaining values bound verification depth.
struct Caps {
  int max_rank = 4;
  long max_orbit = 10000;
  int max_divided_power = 3;
  int samples = 50;
  int cyclotomic_bound = 50;
};

/// Symmetric form on the index set: dot(i, j) = i.j, d_i = i.i / 2,
/// a(i, j) = 2 i.j / i.i.
struct CartanDatum {
  IntMatrix dot;
  IntMatrix a;
  std::vector<int> d;

  [[nodiscard]] int rank() const { return static_cast<int>(d.size()); }
  /// Validates the Cartan axioms and positive definiteness; throws
  /// NotFiniteType or ConfigError.
  static CartanDatum from_dot(const IntMatrix& dot);
};

class RootDatum {
 public:
  /// Simply connected datum of a single type ("A", 3) or a product written as
  /// "A1xB2". Throws ConfigError for unknown names.
  static RootDatum preset(std::string_view type, int rank);
  static RootDatum preset(std::string_view name);
  /// Explicit datum: columns of alpha and alphav are the simple roots and
  /// coroots in X-coordinates. Throws PairingMismatch unless
  /// alphav^T alpha == a.
  static RootDatum from_matrices(const IntMatrix& dot, const IntMatrix& alpha, const IntMatrix& alphav);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const CartanDatum& cartan() const { return cartan_; }
  /// Number of simple roots.
  [[nodiscard]] int r() const { return cartan_.rank(); }
  /// Rank of X.
  [[nodiscard]] int n() const { return static_cast<int>(alpha_.rows()); }
  [[nodiscard]] int a(int i, int j) const { return cartan_.a(i, j); }
  [[nodiscard]] int d(int i) const { return cartan_.d[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const IntMatrix& alpha_matrix() const { return alpha_; }
  [[nodiscard]] const IntMatrix& alphav_matrix() const { return alphav_; }
  [[nodiscard]] Weight alpha(int i) const;
  [[nodiscard]] Weight alphav(int i) const;

  /// <alpha_i^v, mu>.
  [[nodiscard]] int pairing(int i, const Weight& mu) const;
  /// <h, mu> for h in X^v-coordinates.
  [[nodiscard]] static int pairing(const Weight& h, const Weight& mu);
  [[nodiscard]] std::vector<int> pairings(const Weight& mu) const;
  [[nodiscard]] bool is_dominant(const Weight& mu) const;
  [[nodiscard]] Weight reflect(int i, const Weight& mu) const;
  /// mu + sum c_i alpha_i.
  [[nodiscard]] Weight add_roots(const Weight& mu, const std::vector<int>& c, int sign = 1) const;
  [[nodiscard]] Weight zero() const { return Weight(static_cast<std::size_t>(n()), 0); }

  struct DominantRep {
    Weight dominant;
    /// Indices in application order: reflecting `dominant` by word[0], then
    /// word[1], ... yields the input weight. Never longer than necessary.
    std::vector<int> word;
  };
  [[nodiscard]] DominantRep dominant_representative(const Weight& mu) const;
  [[nodiscard]] Weight dominant_conjugate(const Weight& mu) const { return dominant_representative(mu).dominant; }
  /// Orbit sorted lexicographically. Throws CapExceeded past max_orbit.
  [[nodiscard]] std::vector<Weight> weyl_orbit(const Weight& mu, long max_orbit = 10000) const;
  /// The antidominant element of the orbit of lambda.
  [[nodiscard]] Weight w0(const Weight& lambda) const;

  /// Coordinates c with mu == sum c_i alpha_i, if mu lies in the root lattice.
  [[nodiscard]] std::optional<std::vector<int>> root_coordinates(const Weight& mu) const;
  /// mu <= lambda in the dominance order.
  [[nodiscard]] bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  [[nodiscard]] bool dominance_less(const Weight& mu, const Weight& lambda) const {
    return mu != lambda && dominance_leq(mu, lambda);
  }

  /// Positive roots in root coordinates, by height then lexicographically.
  [[nodiscard]] const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  /// Positive roots in X-coordinates, same order.
  [[nodiscard]] std::vector<Weight> positive_roots_x() const;
  [[nodiscard]] BigInt weyl_order() const;

  /// (x, y) for x, y in root coordinates, normalised so (alpha_i, alpha_i) = 2 d_i.
  [[nodiscard]] long root_form(const std::vector<int>& x, const std::vector<int>& y) const;
  /// (mu, beta) for mu in X and beta in root coordinates.
  [[nodiscard]] long mixed_form(const Weight& mu, const std::vector<int>& beta) const;

 private:
  void finish();

  std::string name_;
  CartanDatum cartan_;
  IntMatrix alpha_;
  IntMatrix alphav_;
  Mat<Rational> cartan_inverse_;
  std::vector<std::vector<int>> positive_roots_;
};

/// Dominant weights closed under dominant predecessors.
struct SaturatedSet {
  /// Lexicographically descending.
  std::vector<Weight> elements;

  [[nodiscard]] bool contains(const Weight& w) const;
  [[nodiscard]] std::size_t size() const { return elements.size(); }
  [[nodiscard]] bool empty() const { return elements.empty(); }
};

/// Smallest saturated set containing the seeds; throws NonDominantSeed.
SaturatedSet saturate(const RootDatum& datum, const std::vector<Weight>& seeds);
/// Dominant mu <= lambda.
std::vector<Weight> dominant_predecessors(const RootDatum& datum, const Weight& lambda);
/// True when pi is closed under dominant predecessors and all dominant.
bool is_saturated(const RootDatum& datum, const SaturatedSet& pi);

/// Enumeration of pi in which earlier weights are never dominated by later
/// ones, so every prefix is successor-closed.
struct CosaturatedFlag {
  std::vector<Weight> order;
};

/// Repeatedly takes the lexicographically least maximal remaining element.
CosaturatedFlag build_flag(const RootDatum& datum, const SaturatedSet& pi);
/// Checks the prefix condition: mu in prefix, lambda in pi, lambda >= mu
/// implies lambda in prefix.
bool is_cosaturated_flag(const RootDatum& datum, const SaturatedSet& pi, const CosaturatedFlag& flag);

/// Union of the Weyl orbits of pi; throws CapExceeded past caps.max_orbit.
WeightSet orbit_union(const RootDatum& datum, const std::vector<Weight>& pi, long max_orbit = 10000);

/// Multiplicities of the dominant weights of the irreducible module of
/// highest weight lambda, by Freudenthal's recursion.
std::map<Weight, long> dominant_character(const RootDatum& datum, const Weight& lambda);
/// Full character: every weight with its multiplicity.
std::map<Weight, long> freudenthal_character(const RootDatum& datum, const Weight& lambda);
/// Weyl's product formula; independent of the recursion.
BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda);

std::string weight_to_string(const Weight& w);

}  // namespace qschur
