#include "qschur/report.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "qschur/linalg.hpp"
#include "qschur/specialization.hpp"

namespace qschur {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError((where.empty() ? std::string("/") : where) + ": " + what);
}

void only_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail(where + "/" + key, "unknown key");
}

int int_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(int_at(j[k], where + "/" + std::to_string(k)));
  return out;
}

IntMatrix int_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k < j.size(); ++k) rows.push_back(int_list(j[k], where + "/" + std::to_string(k)));
  const std::size_t cols = rows[0].size();
  if (cols == 0) fail(where + "/0", "empty row");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(where + "/" + std::to_string(r), "ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return m;
}

template <class Fn>
Json matrix_json(Eigen::Index rows, Eigen::Index cols, Fn&& entry) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < cols; ++c) row.push_back(entry(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json character_json(const std::map<Weight, long>& ch) {
  Json out = Json::array();
  for (const auto& [mu, m] : ch) out.push_back({{"weight", weight_json(mu)}, {"multiplicity", m}});
  return out;
}

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

Json check_json(const Check& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"cases", c.cases}, {"detail", c.detail}};
}

Json determinant_json(const GramDeterminantRecord& r) {
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back({{"ell", f.ell}, {"exponent", f.exponent}});
  return {{"det", r.det.to_string()}, {"cyclotomic_factors", factors}, {"residual", r.residual.to_string()}};
}

std::string side_name(Side s) { return s == Side::E ? "E" : "F"; }

SaturatedSet config_pi(const RootDatum& dt, const JobConfig& c) { return saturate(dt, c.seeds); }

/// Lambdas selected by the options, in flag order.
std::vector<Weight> selected_lambdas(const RootDatum& dt, const SaturatedSet& pi, const RunOptions& o) {
  if (o.lambda) {
    if (!pi.contains(*o.lambda)) throw ConfigError("lambda " + weight_to_string(*o.lambda) + " is not in pi");
    return {*o.lambda};
  }
  return build_flag(dt, pi).order;
}

Json module_json(const CellModule& m, bool matrices) {
  const RootDatum& dt = m.datum();
  Json spaces = Json::array();
  for (const auto& ws : m.spaces()) {
    Json words = Json::array();
    for (const auto& w : ws.words) words.push_back(word_json(w));
    Json basis = Json::array();
    for (auto k : ws.generic_basis) basis.push_back(k);
    spaces.push_back({{"mu", weight_json(ws.mu)}, {"words", words}, {"generic_basis", basis}, {"rank", ws.rank}});
  }
  Json out = {{"lambda", weight_json(m.lambda())},
              {"dim", m.dim()},
              {"weyl_dimension", weyl_dimension(dt, m.lambda()).get_str()},
              {"character", character_json(m.character())},
              {"weight_spaces", spaces}};
  if (matrices) {
    Json acts = Json::array();
    for (int i = 0; i < dt.r(); ++i)
      for (Side side : {Side::E, Side::F})
        acts.push_back({{"generator", side_name(side)}, {"i", i + 1}, {"matrix", ratfunc_matrix_json(m.action(side, i, 1))}});
    out["actions"] = acts;
  }
  return out;
}

Json gram_json(const CellModule& m, int bound) {
  Json spaces = Json::array();
  for (const auto& ws : m.spaces()) {
    const IntegralBasis& ib = m.integral_basis(ws);
    Json words = Json::array();
    for (const auto& w : ws.words) words.push_back(word_json(w));
    Json basis = Json::array();
    for (auto k : ws.generic_basis) basis.push_back(k);
    spaces.push_back({{"mu", weight_json(ws.mu)},
                      {"words", words},
                      {"gram", laurent_matrix_json(ws.gram)},
                      {"generic_basis", basis},
                      {"determinant", determinant_json(gram_determinant(m, ws, bound))},
                      {"integral_basis", laurent_matrix_json(ib.combos)},
                      {"integral_gram", laurent_matrix_json(ib.gram)},
                      {"lattice_discriminant", determinant_json(lattice_discriminant(m, ws, bound))}});
  }
  return {{"lambda", weight_json(m.lambda())}, {"weight_spaces", spaces}};
}

Json datum_payload(const RootDatum& dt) {
  Json roots = Json::array();
  for (const auto& r : dt.positive_roots()) roots.push_back(r);
  return {{"name", dt.name()},
          {"rank", dt.r()},
          {"lattice_rank", dt.n()},
          {"cartan", int_matrix_json(dt.cartan().a)},
          {"d", dt.cartan().d},
          {"alpha", int_matrix_json(dt.alpha_matrix())},
          {"alphav", int_matrix_json(dt.alphav_matrix())},
          {"weyl_order", dt.weyl_order().get_str()},
          {"positive_roots", roots},
          {"positive_roots_x", weights_json(dt.positive_roots_x())}};
}

Json saturate_payload(const RootDatum& dt, const JobConfig& c) {
  const SaturatedSet pi = config_pi(dt, c);
  Json orbits = Json::array();
  for (const auto& w : pi.elements)
    orbits.push_back({{"weight", weight_json(w)}, {"size", dt.weyl_orbit(w, c.caps.max_orbit).size()}});
  return {{"pi", weights_json(pi.elements)},
          {"flag", weights_json(build_flag(dt, pi).order)},
          {"orbit_sizes", orbits},
          {"orbit_union_size", orbit_union(dt, pi.elements, c.caps.max_orbit).size()}};
}

Json cellbasis_payload(const SchurAlgebra& s, const RunOptions& o) {
  Json elements = Json::array();
  for (const auto& b : s.cellular_basis(o.basis)) {
    Json e = {{"lambda", weight_json(b.lambda)}, {"left", word_vector_json(b.left)}, {"right", word_vector_json(b.right)}};
    if (o.matrices) {
      Json blocks = Json::array();
      for (std::size_t k = 0; k < b.matrix.blocks.size(); ++k)
        if (!is_zero_matrix<RatFunc>(b.matrix.blocks[k]))
          blocks.push_back({{"lambda", weight_json(s.flag().order[k])}, {"matrix", ratfunc_matrix_json(b.matrix.blocks[k])}});
      e["blocks"] = blocks;
    }
    elements.push_back(std::move(e));
  }
  return {{"basis", o.basis == BasisChoice::Generic ? "generic" : "integral"},
          {"flag", weights_json(s.flag().order)},
          {"dim", s.dim()},
          {"elements", elements}};
}

std::vector<SpecializedModule> specialize_all(const SchurAlgebra& s, const FieldContext& ctx) {
  std::vector<SpecializedModule> out;
  for (std::size_t k = 0; k < s.module_count(); ++k) out.push_back(specialize_module(s.module(k), ctx));
  return out;
}

Json specialize_payload(const SchurAlgebra& s, const FieldContext& ctx) {
  Json modules = Json::array();
  for (const auto& sp : specialize_all(s, ctx)) {
    Json weights = Json::array();
    for (const auto& w : sp.weights) {
      Json radical = Json::array();
      for (const auto& r : w.radical) {
        Json vec = Json::array();
        for (Eigen::Index k = 0; k < r.size(); ++k) vec.push_back(r(k).to_string());
        radical.push_back(vec);
      }
      weights.push_back({{"mu", weight_json(w.mu)},
                         {"delta_rank", w.delta_rank},
                         {"rank", w.rank},
                         {"gram", field_matrix_json(w.gram)},
                         {"radical", radical}});
    }
    modules.push_back({{"lambda", weight_json(sp.lambda)},
                       {"dim_delta", sp.dim_delta},
                       {"dim_l", sp.dim_l},
                       {"char_delta", character_json(sp.char_delta)},
                       {"char_l", character_json(sp.char_l)},
                       {"weights", weights}});
  }
  return {{"field", ctx.to_string()}, {"modules", modules}};
}

Json decomp_payload(const SchurAlgebra& s, const FieldContext& ctx, int bound) {
  const auto specialized = specialize_all(s, ctx);
  const DecompositionMatrix d = decomposition_matrix(s, specialized);
  Json dims = Json::array();
  for (const auto& sp : specialized) dims.push_back({{"lambda", weight_json(sp.lambda)}, {"dim_delta", sp.dim_delta}, {"dim_l", sp.dim_l}});
  const SemisimplicityReport rep = semisimplicity_report(s, ctx, bound);
  Json vanishing = Json::array();
  for (const auto& lambda : d.order)
    for (const auto& v : rep.vanishing.at(lambda))
      vanishing.push_back({{"lambda", weight_json(lambda)}, {"mu", weight_json(v.mu)}, {"factor", v.factor}});
  return {{"field", ctx.to_string()},
          {"order", weights_json(d.order)},
          {"matrix", d.d},
          {"dimensions", dims},
          {"semisimple", rep.semisimple},
          {"quasihereditary_witness", rep.quasihereditary_witness},
          {"vanishing", vanishing}};
}

CommandResult verify_result(const SchurAlgebra& s, const FieldContext& ctx) {
  bool ok = true;
  auto suite = [&](const VerificationReport& r) {
    Json out = Json::array();
    for (const auto& c : r.checks) out.push_back(check_json(c));
    ok = ok && r.passed();
    return out;
  };
  Json payload = {{"relations", suite(verify_relations(s))}, {"cellularity", suite(verify_cellularity(s))}};
  if (ctx.kind != FieldContext::Kind::Generic) {
    Json radical = Json::array();
    for (std::size_t k = 0; k < s.module_count(); ++k) {
      const CellModule& m = s.module(k);
      const Check c = radical_submodule_check(m, specialize_module(m, ctx), s.caps().max_divided_power);
      ok = ok && c.passed;
      radical.push_back({{"lambda", weight_json(m.lambda())}, {"check", check_json(c)}});
    }
    payload["specialization"] = {{"field", ctx.to_string()}, {"radical_submodule", radical}};
  }
  payload["passed"] = ok;
  return {payload, ok ? 0 : 1};
}

}  // namespace

Json weight_json(const Weight& w) { return Json(w); }

Json word_json(const DividedWord& w) {
  Json out = Json::array();
  for (const auto& [i, a] : w) out.push_back({i + 1, a});
  return out;
}

Json word_vector_json(const WordVector& v) {
  Json out = Json::array();
  for (const auto& [w, c] : v) out.push_back({{"word", word_json(w)}, {"coeff", c.to_string()}});
  return out;
}

Json laurent_matrix_json(const LaurentMatrix& m) {
  return matrix_json(m.rows(), m.cols(), [&](auto r, auto c) { return m(r, c).to_string(); });
}
Json ratfunc_matrix_json(const QvMatrix& m) {
  return matrix_json(m.rows(), m.cols(), [&](auto r, auto c) { return m(r, c).to_string(); });
}
Json field_matrix_json(const FieldMatrix& m) {
  return matrix_json(m.rows(), m.cols(), [&](auto r, auto c) { return m(r, c).to_string(); });
}
Json int_matrix_json(const IntMatrix& m) {
  return matrix_json(m.rows(), m.cols(), [&](auto r, auto c) { return m(r, c); });
}

JobConfig parse_config(const Json& doc) {
  JobConfig c;
  only_keys(doc, "", {"datum", "pi", "field", "caps", "out"});
  if (!doc.contains("datum")) fail("/datum", "missing");
  const Json& d = doc["datum"];
  only_keys(d, "/datum", {"preset", "rank", "cartan", "alpha", "alphav"});
  if (d.contains("preset") == d.contains("cartan")) fail("/datum", "give exactly one of preset and cartan");
  if (d.contains("preset")) {
    if (!d["preset"].is_string()) fail("/datum/preset", "expected a string");
    c.preset = d["preset"].get<std::string>();
    if (d.contains("rank")) c.rank = int_at(d["rank"], "/datum/rank");
    if (d.contains("alpha") || d.contains("alphav")) fail("/datum", "alpha and alphav need an explicit cartan");
  } else {
    if (d.contains("rank")) fail("/datum/rank", "rank goes with preset");
    c.cartan = int_matrix(d["cartan"], "/datum/cartan");
    if (d.contains("alpha") != d.contains("alphav")) fail("/datum", "give both alpha and alphav or neither");
    if (d.contains("alpha")) {
      c.alpha = int_matrix(d["alpha"], "/datum/alpha");
      c.alphav = int_matrix(d["alphav"], "/datum/alphav");
    }
  }
  if (doc.contains("pi")) {
    only_keys(doc["pi"], "/pi", {"seeds"});
    if (doc["pi"].contains("seeds")) {
      const Json& s = doc["pi"]["seeds"];
      if (!s.is_array()) fail("/pi/seeds", "expected an array of weights");
      for (std::size_t k = 0; k < s.size(); ++k) c.seeds.push_back(int_list(s[k], "/pi/seeds/" + std::to_string(k)));
    }
  }
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) fail("/field", "expected a string");
    try {
      c.field = FieldContext::parse(doc["field"].get<std::string>());
    } catch (const ConfigError& e) {
      fail("/field", e.what());
    }
  }
  if (doc.contains("caps")) {
    const Json& k = doc["caps"];
    only_keys(k, "/caps", {"max_rank", "max_orbit", "max_divided_power", "samples", "cyclotomic_bound"});
    auto positive = [&](const char* key, auto& slot) {
      if (!k.contains(key)) return;
      const int v = int_at(k[key], std::string("/caps/") + key);
      if (v < 1) fail(std::string("/caps/") + key, "must be positive");
      slot = v;
    };
    positive("max_rank", c.caps.max_rank);
    positive("max_orbit", c.caps.max_orbit);
    positive("max_divided_power", c.caps.max_divided_power);
    positive("samples", c.caps.samples);
    positive("cyclotomic_bound", c.caps.cyclotomic_bound);
  }
  if (doc.contains("out")) {
    if (!doc["out"].is_string()) fail("/out", "expected a string");
    c.out = doc["out"].get<std::string>();
  }
  return c;
}

JobConfig parse_config_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_config(doc);
}

Json config_to_json(const JobConfig& c) {
  Json datum = Json::object();
  if (c.preset) datum["preset"] = *c.preset;
  if (c.rank) datum["rank"] = *c.rank;
  if (c.cartan) datum["cartan"] = int_matrix_json(*c.cartan);
  if (c.alpha) datum["alpha"] = int_matrix_json(*c.alpha);
  if (c.alphav) datum["alphav"] = int_matrix_json(*c.alphav);
  Json seeds = Json::array();
  for (const auto& s : c.seeds) seeds.push_back(weight_json(s));
  Json out = {{"datum", datum},
              {"pi", {{"seeds", seeds}}},
              {"field", c.field.to_string()},
              {"caps",
               {{"max_rank", c.caps.max_rank},
                {"max_orbit", c.caps.max_orbit},
                {"max_divided_power", c.caps.max_divided_power},
                {"samples", c.caps.samples},
                {"cyclotomic_bound", c.caps.cyclotomic_bound}}}};
  if (c.out) out["out"] = *c.out;
  return out;
}

IntMatrix symmetrize_cartan(const IntMatrix& a) {
  const Eigen::Index r = a.rows();
  if (a.cols() != r || r == 0) throw ConfigError("Cartan matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < r; ++i) {
    if (a(i, i) != 2) throw NotFiniteType("Cartan diagonal entries must be 2");
    for (Eigen::Index j = 0; j < r; ++j)
      if (i != j && (a(i, j) > 0 || (a(i, j) == 0) != (a(j, i) == 0)))
        throw NotFiniteType("off-diagonal Cartan entries must be nonpositive with symmetric zero pattern");
  }
  // Propagate d_j = d_i a_ij / a_ji along each connected component.
  std::vector<Rational> d(static_cast<std::size_t>(r), Rational(0));
  for (Eigen::Index root = 0; root < r; ++root) {
    if (d[static_cast<std::size_t>(root)] != 0) continue;
    d[static_cast<std::size_t>(root)] = 1;
    std::vector<Eigen::Index> stack{root};
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < r; ++j) {
        if (i == j || a(i, j) == 0) continue;
        const Rational dj = d[static_cast<std::size_t>(i)] * a(i, j) / Rational(a(j, i));
        Rational& slot = d[static_cast<std::size_t>(j)];
        if (slot == 0) {
          slot = dj;
          stack.push_back(j);
        } else if (slot != dj) {
          throw NotFiniteType("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  mpz_class den = 1;
  for (const auto& x : d) den = lcm(den, mpz_class(x.get_den()));
  mpz_class g = 0;
  for (const auto& x : d) g = gcd(g, mpz_class(x * den));
  IntMatrix dot(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const mpz_class di = mpz_class(d[static_cast<std::size_t>(i)] * den) / g;
    for (Eigen::Index j = 0; j < r; ++j) dot(i, j) = static_cast<int>(di.get_si()) * a(i, j);
  }
  return dot;
}

RootDatum resolve_datum(const JobConfig& c) {
  RootDatum dt = [&] {
    if (c.preset) {
      if (!c.rank) return RootDatum::preset(*c.preset);
      const bool has_digits = !c.preset->empty() && std::isdigit(static_cast<unsigned char>(c.preset->back()));
      if (!has_digits) return RootDatum::preset(*c.preset, *c.rank);
      RootDatum p = RootDatum::preset(*c.preset);
      if (p.r() != *c.rank) throw ConfigError("datum.rank disagrees with preset " + *c.preset);
      return p;
    }
    const IntMatrix dot = symmetrize_cartan(*c.cartan);
    if (c.alpha) return RootDatum::from_matrices(dot, *c.alpha, *c.alphav);
    const Eigen::Index r = dot.rows();
    return RootDatum::from_matrices(dot, *c.cartan, IntMatrix::Identity(r, r));
  }();
  if (dt.r() > c.caps.max_rank)
    throw CapExceeded("rank " + std::to_string(dt.r()) + " exceeds max_rank " + std::to_string(c.caps.max_rank));
  return dt;
}

Weight parse_weight(std::string_view text) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string piece(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad weight coordinate '" + piece + "'");
    }
    if (used != piece.size()) throw ConfigError("bad weight coordinate '" + piece + "'");
    w.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

bool is_config_error(const Error& e) {
  static const std::set<std::string> kinds = {"ConfigError",     "NotFiniteType", "PairingMismatch",
                                              "NonDominantSeed", "CapExceeded",   "UnsupportedCharacteristic"};
  return kinds.count(e.kind()) != 0;
}

CommandResult run_command(const std::string& command, const JobConfig& config, const RunOptions& options) {
  if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
    throw ConfigError("unknown command '" + command + "'");
  const RootDatum dt = resolve_datum(config);
  if (options.lambda && static_cast<int>(options.lambda->size()) != dt.n())
    throw ConfigError("lambda has " + std::to_string(options.lambda->size()) + " coordinates, expected " +
                      std::to_string(dt.n()));
  CommandResult result;
  Json payload;
  if (command == "datum") {
    payload = datum_payload(dt);
  } else if (command == "saturate") {
    payload = saturate_payload(dt, config);
  } else if (command == "module" || command == "gram") {
    const SaturatedSet pi = config_pi(dt, config);
    Json modules = Json::array();
    for (const auto& lambda : selected_lambdas(dt, pi, options)) {
      CellModule m(dt, lambda, config.caps);
      modules.push_back(command == "module" ? module_json(m, options.matrices)
                                            : gram_json(m, config.caps.cyclotomic_bound));
    }
    payload = {{"modules", modules}};
  } else {
    const SaturatedSet pi = config_pi(dt, config);
    if (pi.empty()) throw ConfigError("pi is empty");
    const SchurAlgebra s(dt, pi, config.caps, options.threads);
    if (command == "cellbasis") {
      payload = cellbasis_payload(s, options);
    } else if (command == "specialize") {
      payload = specialize_payload(s, config.field);
    } else if (command == "decomp") {
      payload = decomp_payload(s, config.field, config.caps.cyclotomic_bound);
    } else {
      result = verify_result(s, config.field);
      payload = std::move(result.report);
    }
  }
  result.report = {{"command", command},
                   {"config", config_to_json(config)},
                   {"engine", {{"name", kEngineName}, {"version", kEngineVersion}}},
                   {"payload", std::move(payload)}};
  if (options.lambda) result.report["lambda"] = weight_json(*options.lambda);
  return result;
}

std::string serialize_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace qschur
