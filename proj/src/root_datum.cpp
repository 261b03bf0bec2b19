#include "qschur/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

#include "qschur/linalg.hpp"

namespace qschur {

namespace {

using Eigen::Index;

IntMatrix chain_cartan(int r) {
  IntMatrix a = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) a(i, i) = 2;
  for (int i = 0; i + 1 < r; ++i) a(i, i + 1) = a(i + 1, i) = -1;
  return a;
}

struct Simple {
  IntMatrix a;
  std::vector<int> d;
};

Simple simple_type(char type, int r) {
  Simple s;
  s.d.assign(static_cast<std::size_t>(r), 1);
  auto need = [&](bool ok) {
    if (!ok) throw ConfigError(std::string("unsupported preset ") + type + std::to_string(r));
  };
  switch (type) {
    case 'A':
      need(r >= 1);
      s.a = chain_cartan(r);
      break;
    case 'B':
      need(r >= 2);
      s.a = chain_cartan(r);
      s.a(r - 1, r - 2) = -2;
      std::fill(s.d.begin(), s.d.end() - 1, 2);
      break;
    case 'C':
      need(r >= 2);
      s.a = chain_cartan(r);
      s.a(r - 2, r - 1) = -2;
      s.d.back() = 2;
      break;
    case 'D':
      need(r >= 3);
      s.a = chain_cartan(r);
      s.a(r - 2, r - 1) = s.a(r - 1, r - 2) = 0;
      s.a(r - 3, r - 1) = s.a(r - 1, r - 3) = -1;
      break;
    case 'E': {
      need(r >= 6 && r <= 8);
      s.a = IntMatrix::Zero(r, r);
      for (int i = 0; i < r; ++i) s.a(i, i) = 2;
      auto link = [&](int i, int j) { s.a(i - 1, j - 1) = s.a(j - 1, i - 1) = -1; };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      need(r == 4);
      s.a = chain_cartan(4);
      s.a(2, 1) = -2;
      s.d = {2, 2, 1, 1};
      break;
    case 'G':
      need(r == 2);
      s.a = chain_cartan(2);
      s.a(0, 1) = -3;
      s.d = {1, 3};
      break;
    default:
      need(false);
  }
  return s;
}

std::vector<std::pair<char, int>> parse_preset_name(std::string_view name) {
  std::vector<std::pair<char, int>> parts;
  std::string s;
  for (char ch : name)
    if (ch != ' ') s += ch;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('x', pos);
    std::string piece = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (piece.size() < 2 || !std::isalpha(static_cast<unsigned char>(piece[0])))
      throw ConfigError("bad preset name '" + std::string(name) + "'");
    for (std::size_t k = 1; k < piece.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(piece[k])))
        throw ConfigError("bad preset name '" + std::string(name) + "'");
    parts.emplace_back(static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0]))), std::stoi(piece.substr(1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

CartanDatum CartanDatum::from_dot(const IntMatrix& dot) {
  const Index r = dot.rows();
  if (dot.cols() != r || r == 0) throw ConfigError("Cartan dot matrix must be square and nonempty");
  CartanDatum c;
  c.dot = dot;
  c.a = IntMatrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) {
    if (dot(i, i) <= 0 || dot(i, i) % 2 != 0)
      throw NotFiniteType("diagonal entry i.i must be a positive even integer");
    c.d.push_back(dot(i, i) / 2);
    for (Index j = 0; j < r; ++j) {
      if (dot(i, j) != dot(j, i)) throw ConfigError("Cartan dot matrix must be symmetric");
      if (i == j) continue;
      if ((2 * dot(i, j)) % dot(i, i) != 0 || dot(i, j) > 0)
        throw NotFiniteType("2 i.j / i.i must be a nonpositive integer for i != j");
    }
    for (Index j = 0; j < r; ++j) c.a(i, j) = 2 * dot(i, j) / dot(i, i);
  }
  for (Index k = 1; k <= r; ++k) {
    Mat<Rational> minor(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) minor(i, j) = dot(i, j);
    if (determinant<Rational>(minor) <= 0)
      throw NotFiniteType("dot form is not positive definite (leading minor " + std::to_string(k) + ")");
  }
  return c;
}

RootDatum RootDatum::preset(std::string_view type, int rank) {
  return preset(std::string(type) + std::to_string(rank));
}

RootDatum RootDatum::preset(std::string_view name) {
  const auto parts = parse_preset_name(name);
  int total = 0;
  std::vector<Simple> pieces;
  for (auto [type, r] : parts) {
    pieces.push_back(simple_type(type, r));
    total += r;
  }
  IntMatrix dot = IntMatrix::Zero(total, total);
  int off = 0;
  std::string label;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const Simple& s = pieces[p];
    const int r = static_cast<int>(s.d.size());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) dot(off + i, off + j) = s.d[static_cast<std::size_t>(i)] * s.a(i, j);
    off += r;
    if (p) label += "x";
    label += std::string(1, parts[p].first) + std::to_string(parts[p].second);
  }
  RootDatum out;
  out.cartan_ = CartanDatum::from_dot(dot);
  out.alpha_ = out.cartan_.a;
  out.alphav_ = IntMatrix::Identity(total, total);
  out.name_ = label;
  out.finish();
  return out;
}

RootDatum RootDatum::from_matrices(const IntMatrix& dot, const IntMatrix& alpha, const IntMatrix& alphav) {
  RootDatum out;
  out.cartan_ = CartanDatum::from_dot(dot);
  const Index r = dot.rows();
  if (alpha.cols() != r || alphav.cols() != r || alpha.rows() != alphav.rows() || alpha.rows() == 0)
    throw ConfigError("alpha and alphav must both be n x r with r = rank of the Cartan matrix");
  const IntMatrix pairing = alphav.transpose() * alpha;
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      if (pairing(i, j) != out.cartan_.a(i, j))
        throw PairingMismatch("<alpha_" + std::to_string(i + 1) + "^v, alpha_" + std::to_string(j + 1) +
                              "> = " + std::to_string(pairing(i, j)) + " but a_ij = " +
                              std::to_string(out.cartan_.a(i, j)));
  out.alpha_ = alpha;
  out.alphav_ = alphav;
  out.name_ = "explicit";
  out.finish();
  return out;
}

void RootDatum::finish() {
  const int rr = r();
  Mat<Rational> a(rr, rr);
  for (int i = 0; i < rr; ++i)
    for (int j = 0; j < rr; ++j) a(i, j) = cartan_.a(i, j);
  cartan_inverse_ = *inverse<Rational>(a);

  // Closure of the simple roots under reflections, in root coordinates.
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rr; ++i) {
    std::vector<int> e(static_cast<std::size_t>(rr), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (roots.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> b = queue.front();
    queue.pop_front();
    for (int i = 0; i < rr; ++i) {
      int p = 0;
      for (int j = 0; j < rr; ++j) p += cartan_.a(i, j) * b[static_cast<std::size_t>(j)];
      std::vector<int> s = b;
      s[static_cast<std::size_t>(i)] -= p;
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  positive_roots_.clear();
  for (const auto& b : roots)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) positive_roots_.push_back(b);
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
}

Weight RootDatum::alpha(int i) const {
  Weight w(static_cast<std::size_t>(n()));
  for (int k = 0; k < n(); ++k) w[static_cast<std::size_t>(k)] = alpha_(k, i);
  return w;
}

Weight RootDatum::alphav(int i) const {
  Weight w(static_cast<std::size_t>(n()));
  for (int k = 0; k < n(); ++k) w[static_cast<std::size_t>(k)] = alphav_(k, i);
  return w;
}

int RootDatum::pairing(int i, const Weight& mu) const {
  int s = 0;
  for (int k = 0; k < n(); ++k) s += alphav_(k, i) * mu[static_cast<std::size_t>(k)];
  return s;
}

int RootDatum::pairing(const Weight& h, const Weight& mu) {
  int s = 0;
  for (std::size_t k = 0; k < h.size(); ++k) s += h[k] * mu[k];
  return s;
}

std::vector<int> RootDatum::pairings(const Weight& mu) const {
  std::vector<int> p(static_cast<std::size_t>(r()));
  for (int i = 0; i < r(); ++i) p[static_cast<std::size_t>(i)] = pairing(i, mu);
  return p;
}

bool RootDatum::is_dominant(const Weight& mu) const {
  for (int i = 0; i < r(); ++i)
    if (pairing(i, mu) < 0) return false;
  return true;
}

Weight RootDatum::reflect(int i, const Weight& mu) const {
  const int p = pairing(i, mu);
  Weight out = mu;
  for (int k = 0; k < n(); ++k) out[static_cast<std::size_t>(k)] -= p * alpha_(k, i);
  return out;
}

Weight RootDatum::add_roots(const Weight& mu, const std::vector<int>& c, int sign) const {
  Weight out = mu;
  for (int i = 0; i < r(); ++i) {
    const int ci = sign * c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    for (int k = 0; k < n(); ++k) out[static_cast<std::size_t>(k)] += ci * alpha_(k, i);
  }
  return out;
}

RootDatum::DominantRep RootDatum::dominant_representative(const Weight& mu) const {
  DominantRep rep{mu, {}};
  while (true) {
    int i = 0;
    while (i < r() && pairing(i, rep.dominant) >= 0) ++i;
    if (i == r()) break;
    rep.dominant = reflect(i, rep.dominant);
    rep.word.push_back(i);
  }
  std::reverse(rep.word.begin(), rep.word.end());
  return rep;
}

std::vector<Weight> RootDatum::weyl_orbit(const Weight& mu, long max_orbit) const {
  WeightSet seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < r(); ++i) {
      Weight s = reflect(i, w);
      if (seen.insert(s).second) {
        if (static_cast<long>(seen.size()) > max_orbit)
          throw CapExceeded("Weyl orbit of " + weight_to_string(mu) + " exceeds " + std::to_string(max_orbit));
        queue.push_back(std::move(s));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Weight RootDatum::w0(const Weight& lambda) const {
  Weight neg = lambda;
  for (auto& x : neg) x = -x;
  Weight dom = dominant_conjugate(neg);
  for (auto& x : dom) x = -x;
  return dom;
}

std::optional<std::vector<int>> RootDatum::root_coordinates(const Weight& mu) const {
  const auto p = pairings(mu);
  std::vector<int> c(static_cast<std::size_t>(r()));
  for (int i = 0; i < r(); ++i) {
    Rational s = 0;
    for (int j = 0; j < r(); ++j) s += cartan_inverse_(i, j) * p[static_cast<std::size_t>(j)];
    if (s.get_den() != 1) return std::nullopt;
    c[static_cast<std::size_t>(i)] = static_cast<int>(s.get_num().get_si());
  }
  if (add_roots(zero(), c) != mu) return std::nullopt;
  return c;
}

bool RootDatum::dominance_leq(const Weight& mu, const Weight& lambda) const {
  Weight diff = lambda;
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= mu[k];
  auto c = root_coordinates(diff);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

std::vector<Weight> RootDatum::positive_roots_x() const {
  std::vector<Weight> out;
  for (const auto& b : positive_roots_) out.push_back(add_roots(zero(), b));
  return out;
}

BigInt RootDatum::weyl_order() const {
  // |W_k| = |W_k . e_k| * |W_{k-1}| in pairing coordinates, where W_k is
  // generated by s_1..s_k and e_k is fixed exactly by s_1..s_{k-1}.
  BigInt order = 1;
  const int rr = r();
  for (int k = 0; k < rr; ++k) {
    std::vector<int> e(static_cast<std::size_t>(rr), 0);
    e[static_cast<std::size_t>(k)] = 1;
    std::set<std::vector<int>> seen{e};
    std::deque<std::vector<int>> queue{e};
    while (!queue.empty()) {
      auto p = queue.front();
      queue.pop_front();
      for (int i = 0; i <= k; ++i) {
        const int pi = p[static_cast<std::size_t>(i)];
        if (pi == 0) continue;
        auto s = p;
        for (int j = 0; j < rr; ++j) s[static_cast<std::size_t>(j)] -= pi * cartan_.a(j, i);
        if (seen.insert(s).second) queue.push_back(std::move(s));
      }
    }
    order *= static_cast<unsigned long>(seen.size());
  }
  return order;
}

long RootDatum::root_form(const std::vector<int>& x, const std::vector<int>& y) const {
  long s = 0;
  for (int i = 0; i < r(); ++i)
    for (int j = 0; j < r(); ++j)
      s += static_cast<long>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)] * cartan_.dot(i, j);
  return s;
}

long RootDatum::mixed_form(const Weight& mu, const std::vector<int>& beta) const {
  long s = 0;
  for (int j = 0; j < r(); ++j)
    s += static_cast<long>(beta[static_cast<std::size_t>(j)]) * d(j) * pairing(j, mu);
  return s;
}

bool SaturatedSet::contains(const Weight& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

std::vector<Weight> dominant_predecessors(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) throw NonDominantSeed("weight " + weight_to_string(lambda) + " is not dominant");
  Weight diff = lambda;
  const Weight low = datum.w0(lambda);
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= low[k];
  const std::vector<int> m = *datum.root_coordinates(diff);
  std::vector<Weight> out;
  std::vector<int> n(m.size(), 0);
  // Dominant mu <= lambda dominates w0(lambda), so 0 <= n <= m.
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == m.size()) {
      Weight mu = datum.add_roots(lambda, n, -1);
      if (datum.is_dominant(mu)) out.push_back(std::move(mu));
      return;
    }
    for (int x = 0; x <= m[i]; ++x) {
      n[i] = x;
      walk(i + 1);
    }
    n[i] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SaturatedSet saturate(const RootDatum& datum, const std::vector<Weight>& seeds) {
  WeightSet all;
  for (const auto& s : seeds) {
    if (static_cast<int>(s.size()) != datum.n())
      throw ConfigError("weight " + weight_to_string(s) + " has the wrong number of coordinates");
    for (auto& mu : dominant_predecessors(datum, s)) all.insert(std::move(mu));
  }
  SaturatedSet out;
  out.elements.assign(all.rbegin(), all.rend());
  return out;
}

bool is_saturated(const RootDatum& datum, const SaturatedSet& pi) {
  for (const auto& l : pi.elements) {
    if (!datum.is_dominant(l)) return false;
    for (const auto& mu : dominant_predecessors(datum, l))
      if (!pi.contains(mu)) return false;
  }
  return true;
}

CosaturatedFlag build_flag(const RootDatum& datum, const SaturatedSet& pi) {
  std::vector<Weight> rest(pi.elements.begin(), pi.elements.end());
  std::sort(rest.begin(), rest.end());
  CosaturatedFlag flag;
  while (!rest.empty()) {
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const bool maximal = std::none_of(rest.begin(), rest.end(), [&](const Weight& o) {
        return datum.dominance_less(*it, o);
      });
      if (maximal) {
        flag.order.push_back(*it);
        rest.erase(it);
        break;
      }
    }
  }
  return flag;
}

bool is_cosaturated_flag(const RootDatum& datum, const SaturatedSet& pi, const CosaturatedFlag& flag) {
  if (flag.order.size() != pi.size()) return false;
  for (const auto& w : flag.order)
    if (!pi.contains(w)) return false;
  for (std::size_t j = 0; j < flag.order.size(); ++j)
    for (std::size_t k = j + 1; k < flag.order.size(); ++k)
      if (datum.dominance_less(flag.order[j], flag.order[k])) return false;
  return true;
}

WeightSet orbit_union(const RootDatum& datum, const std::vector<Weight>& pi, long max_orbit) {
  WeightSet out;
  for (const auto& l : pi) {
    for (auto& w : datum.weyl_orbit(l, max_orbit)) out.insert(std::move(w));
    if (static_cast<long>(out.size()) > max_orbit)
      throw CapExceeded("W-orbit union exceeds " + std::to_string(max_orbit) + " weights");
  }
  return out;
}

std::map<Weight, long> dominant_character(const RootDatum& datum, const Weight& lambda) {
  std::vector<Weight> doms = dominant_predecessors(datum, lambda);
  auto height = [&](const Weight& mu) {
    Weight diff = lambda;
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= mu[k];
    auto c = *datum.root_coordinates(diff);
    return std::accumulate(c.begin(), c.end(), 0);
  };
  std::stable_sort(doms.begin(), doms.end(), [&](const Weight& x, const Weight& y) { return height(x) < height(y); });
  std::map<Weight, long> mult;
  const WeightSet dom_set(doms.begin(), doms.end());
  const auto lp = datum.pairings(lambda);
  for (const Weight& mu : doms) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Weight diff = lambda;
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= mu[k];
    const auto gamma = *datum.root_coordinates(diff);
    // |lambda + rho|^2 - |mu + rho|^2 = 2 (lambda + rho, gamma) - (gamma, gamma).
    long lr = 0;
    for (int j = 0; j < datum.r(); ++j)
      lr += static_cast<long>(gamma[static_cast<std::size_t>(j)]) * datum.d(j) * (lp[static_cast<std::size_t>(j)] + 1);
    const long denom = 2 * lr - datum.root_form(gamma, gamma);
    long num = 0;
    for (const auto& beta : datum.positive_roots()) {
      Weight nu = mu;
      for (int k = 1;; ++k) {
        nu = datum.add_roots(nu, beta);
        const Weight dom = datum.dominant_conjugate(nu);
        if (!dom_set.count(dom)) break;
        num += mult.at(dom) * datum.mixed_form(nu, beta);
      }
    }
    if (denom <= 0 || (2 * num) % denom != 0)
      throw RankMismatch("Freudenthal recursion produced a non-integral multiplicity");
    mult[mu] = 2 * num / denom;
  }
  return mult;
}

std::map<Weight, long> freudenthal_character(const RootDatum& datum, const Weight& lambda) {
  std::map<Weight, long> out;
  for (const auto& [mu, m] : dominant_character(datum, lambda)) {
    if (m == 0) continue;
    for (auto& w : datum.weyl_orbit(mu, 1L << 40)) out[w] = m;
  }
  return out;
}

BigInt weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  Rational prod = 1;
  const auto lp = datum.pairings(lambda);
  for (const auto& beta : datum.positive_roots()) {
    long top = 0, bottom = 0;
    for (int j = 0; j < datum.r(); ++j) {
      top += static_cast<long>(beta[static_cast<std::size_t>(j)]) * datum.d(j) * (lp[static_cast<std::size_t>(j)] + 1);
      bottom += static_cast<long>(beta[static_cast<std::size_t>(j)]) * datum.d(j);
    }
    prod *= Rational(BigInt(top), BigInt(bottom));
  }
  prod.canonicalize();
  return prod.get_num();
}

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

}  // namespace qschur
