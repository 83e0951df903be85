#include "zakframe/io.hpp"

#include <fstream>
#include <limits>

namespace zakframe::io {

namespace {

std::string join(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string join(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(join(path, key), "missing");
  return *it;
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(field, "integer out of range");
  return static_cast<int>(v);
}

double as_double(const json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError(field, "expected a number");
  return j.get<double>();
}

const json& as_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array");
  return j;
}

std::vector<int> int_list(const json& j, const std::string& field) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i) out.push_back(as_int(j[i], join(field, i)));
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& field) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i) out.push_back(int_list(j[i], join(field, i)));
  return out;
}

// Runs a library constructor, reporting its complaint against `field`.
template <class F>
auto at_field(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(field, e.what());
  }
}

InductionSetting parse_semidirect(const json& doc) {
  const std::vector<int> factors = int_list(require(require(doc, "H", ""), "factors", "/H"), "/H/factors");
  if (factors.empty()) throw ParseError("/H/factors", "empty");
  for (int f : factors)
    if (f != factors.front()) throw ParseError("/H/factors", "semidirect H must be Z_d^m (all factors equal)");

  SemidirectSpec spec;
  spec.modulus = factors.front();
  spec.rank = static_cast<int>(factors.size());
  const json& k = require(doc, "K", "");
  if (k.contains("table")) {
    const auto table = int_table(k["table"], "/K/table");
    spec.complement = at_field("/K/table", [&] { return FiniteGroup::from_table(table); });
  } else {
    const int order = as_int(require(k, "order", "/K"), "/K/order");
    if (order < 1) throw ParseError("/K/order", "must be >= 1");
    spec.complement = FiniteGroup::cyclic(order);
  }
  const json& action = as_array(require(doc, "action", ""), "/action");
  for (std::size_t i = 0; i < action.size(); ++i) spec.action.push_back(int_table(action[i], join("/action", i)));
  return at_field("/action", [&] { return build_semidirect(spec); });
}

InductionSetting parse_cayley(const json& doc) {
  const auto table = int_table(require(doc, "table", ""), "/table");
  FiniteGroup g = at_field("/table", [&] { return FiniteGroup::from_table(table); });
  const json& h = require(doc, "H", "");
  const std::vector<int> factors = int_list(require(h, "factors", "/H"), "/H/factors");
  const std::vector<int> elements = int_list(require(h, "elements", "/H"), "/H/elements");
  SubgroupEmbedding emb = at_field("/H", [&] { return SubgroupEmbedding(g, AbelianGroup(factors), elements); });
  if (doc.contains("reps")) {
    const std::vector<int> reps = int_list(doc["reps"], "/reps");
    Transversal omega = at_field("/reps", [&] { return Transversal(g, emb, reps); });
    return InductionSetting(std::move(g), std::move(emb), std::move(omega));
  }
  Transversal omega = Transversal::canonical(g, emb);
  return InductionSetting(std::move(g), std::move(emb), std::move(omega));
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, std::string("invalid JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << doc.dump(2) << '\n';
}

InductionSetting parse_group(const json& doc) {
  const json& kind_j = require(doc, "kind", "");
  if (!kind_j.is_string()) throw ParseError("/kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "semidirect") return parse_semidirect(doc);
  if (kind == "cayley") return parse_cayley(doc);
  if (kind == "heisenberg") {
    const int d = as_int(require(doc, "d", ""), "/d");
    return at_field("/d", [&] { return build_heisenberg(d).setting; });
  }
  if (kind == "affine") {
    const int q = as_int(require(doc, "q", ""), "/q");
    std::optional<std::vector<int>> modulus;
    if (doc.contains("modulus")) modulus = int_list(doc["modulus"], "/modulus");
    return at_field("/q", [&] { return build_affine(q, modulus).setting; });
  }
  throw ParseError("/kind", "unknown group kind '" + kind + "'");
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx parse_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError(field, "expected [re, im]");
  return {as_double(j[0], join(field, 0)), as_double(j[1], join(field, 1))};
}

json to_json(std::span<const cplx> v) {
  json out = json::array();
  for (cplx z : v) out.push_back(to_json(z));
  return out;
}

CVector parse_vector(const json& j, const std::string& field) {
  CVector out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i) out.push_back(parse_complex(j[i], join(field, i)));
  return out;
}

std::vector<CVector> parse_vectors(const json& j, const std::string& field) {
  std::vector<CVector> out;
  for (std::size_t i = 0; i < as_array(j, field).size(); ++i) out.push_back(parse_vector(j[i], join(field, i)));
  return out;
}

json to_json(const ZakArray& z) {
  json data = json::array();
  for (int a = 0; a < z.num_characters(); ++a) data.push_back(to_json(z.fiber(a)));
  return {{"characters", z.characters}, {"reps", z.reps}, {"data", data}};
}

ZakArray parse_zak(const json& j, const std::string& field) {
  ZakArray z;
  z.characters = int_table(require(j, "characters", field), join(field, "characters"));
  z.reps = int_list(require(j, "reps", field), join(field, "reps"));
  const std::vector<CVector> rows = parse_vectors(require(j, "data", field), join(field, "data"));
  if (rows.size() != z.characters.size()) throw ParseError(join(field, "data"), "one row per character expected");
  z.data = CMatrix(rows.size(), z.reps.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != z.reps.size()) throw ParseError(join(join(field, "data"), a), "row length != number of reps");
    for (std::size_t i = 0; i < rows[a].size(); ++i) z.data(a, i) = rows[a][i];
  }
  return z;
}

json to_json(const MonomialMatrix& m) { return {{"perm", m.perm()}, {"phases", to_json(m.phases())}}; }

json to_json(const FrameReport& r) {
  json gram = json::array();
  for (std::size_t i = 0; i < r.gram.rows(); ++i) gram.push_back(to_json(r.gram.row(i)));
  return {{"n", r.n},
          {"d", r.d},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"coherence_sq_min", r.coherence_sq_min},
          {"coherence_sq_max", r.coherence_sq_max},
          {"welch_sq", r.welch_sq},
          {"unit_norm", r.unit_norm},
          {"tight", r.tight},
          {"equiangular", r.equiangular},
          {"spanning", r.spanning},
          {"etf", r.etf},
          {"gram", gram}};
}

json to_json(const EtfCriterion& c) {
  json out = {{"stabilizer_size", c.stabilizer_size},
              {"reduction_size", c.reduction_size},
              {"degenerate", c.degenerate},
              {"two_valued", c.two_valued},
              {"c_observed", c.c_observed},
              {"c_expected", c.c_expected},
              {"coset_spread", c.coset_spread},
              {"cyclic", c.cyclic},
              {"equiangular", c.equiangular},
              {"etf", c.etf},
              {"agree", c.agree},
              {"g_abs_sq", c.g_abs_sq},
              {"frame", to_json(c.frame)}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json to_json(const ProjectiveOrbit& o) {
  json vectors = json::array();
  for (const CVector& v : o.vectors) vectors.push_back(to_json(v));
  return {{"alpha", o.alpha},
          {"fiducial", to_json(o.fiducial)},
          {"stabilizer", o.stabilizer},
          {"representatives", o.representatives},
          {"vectors", vectors}};
}

json to_json(const RangeFunction& r) {
  json bases = json::array();
  for (const auto& basis : r.bases) {
    json m = json::array();
    for (const CVector& v : basis) m.push_back(to_json(v));
    bases.push_back(m);
  }
  std::vector<int> dims;
  for (std::size_t a = 0; a < r.bases.size(); ++a) dims.push_back(r.dimension(static_cast<int>(a)));
  return {{"fiber_dim", r.fiber_dim}, {"dimensions", dims}, {"bases", bases}};
}

json to_json(const FiberBounds& b) {
  json fibers = json::array();
  for (std::size_t a = 0; a < b.per_fiber.size(); ++a) {
    json row = {{"alpha", a}, {"dimension", b.dimensions[a]}};
    if (b.per_fiber[a]) {
      row["lower"] = b.per_fiber[a]->first;
      row["upper"] = b.per_fiber[a]->second;
    } else {
      row["lower"] = nullptr;
      row["upper"] = nullptr;
    }
    fibers.push_back(row);
  }
  return {{"lower", b.lower}, {"upper", b.upper}, {"fibers", fibers}};
}

json to_json(const PaleyReport& r) {
  return {{"q", r.q},
          {"n", r.n},
          {"d", r.d},
          {"tight_constant", r.tight_constant},
          {"tight_spread", r.tight_spread},
          {"coherence_sq_min", r.coherence_sq_min},
          {"coherence_sq_max", r.coherence_sq_max},
          {"expected_coherence_sq", r.expected_coherence_sq},
          {"etf", r.criterion.etf},
          {"criterion", to_json(r.criterion)},
          {"representatives", r.orbit.representatives},
          {"g_fiber_residual", r.g_fiber_residual},
          {"difference_counts", r.difference_counts},
          {"difference_set_ok", r.difference_set_ok},
          {"g_abs_sq_fiber_residual", r.g_abs_sq_fiber_residual},
          {"product_identity_residual", r.product_identity_residual},
          {"constant_fiber_residual", r.constant_fiber_residual},
          {"indicator_fiber_residual", r.indicator_fiber_residual},
          {"g_abs_sq_residual", r.g_abs_sq_residual},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

json to_json(const SicCandidate& c) {
  return {{"d", c.d},
          {"fiducial", to_json(c.fiducial)},
          {"certified", c.certified},
          {"quartic_residual", c.quartic_residual},
          {"gram_residual", c.gram_residual},
          {"reduction_size", c.reduction_size},
          {"merit", c.merit},
          {"seed", c.seed},
          {"restart", c.restart},
          {"restarts_run", c.restarts_run},
          {"iterations", c.iterations},
          {"merit_trace_length", c.merit_trace.size()}};
}

}  // namespace zakframe::io
