#include "mjac/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mjac/error.hpp"

namespace mjac {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail("field '" + what + "' must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_label(const Json& j, const std::string& what) {
  if (!j.is_string()) fail("field '" + what + "' must be a string label");
  return j.get<std::string>();
}

std::vector<std::string> labels_of(const Json& j, const std::string& what) {
  if (!j.is_array()) fail("field '" + what + "' must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_label(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Json decimal(std::uint64_t v) { return std::to_string(v); }

Json rational_fields(const Rational& v) {
  return Json{{"num", to_decimal(v.get_num())}, {"den", to_decimal(v.get_den())}, {"approx", v.get_d()}};
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.label, e.tail, e.head}));
  return Json{{"vertices", g.vertex_count}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.vertex_count = as_size(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) fail("field 'edges' must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 3) fail("field '" + where + "' must be [label, u, v]");
    g.edges.push_back({as_label(e[0], where + "[0]"), as_size(e[1], where + "[1]"), as_size(e[2], where + "[2]")});
  }
  g.validate();
  return g;
}

Json matroid_to_json(const RegularMatroid& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.matrix()(i, k));
    rows.push_back(row);
  }
  return Json{{"rank", m.rank()}, {"ground", m.ground()}, {"rows", rows}};
}

RegularMatroid matroid_from_json(const Json& j) {
  const std::size_t r = as_size(field(j, "rank"), "rank");
  std::vector<std::string> ground = labels_of(field(j, "ground"), "ground");
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != r)
    fail("field 'rows' must hold exactly 'rank' = " + std::to_string(r) + " rows");
  IntMatrix a(r, ground.size());
  for (std::size_t i = 0; i < r; ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != ground.size())
      fail("field '" + where + "' must have one entry per ground element");
    for (std::size_t k = 0; k < ground.size(); ++k) {
      const Json& v = rows[i][k];
      if (!v.is_number_integer()) fail("field '" + where + "[" + std::to_string(k) + "]' must be an integer");
      const long long x = v.get<long long>();
      if (x < -1 || x > 1)
        fail("field '" + where + "[" + std::to_string(k) + "]' must be -1, 0 or 1");
      a(i, k) = static_cast<int>(x);
    }
  }
  return RegularMatroid(std::move(a), std::move(ground));
}

Json poly_to_json(const MultilinearPoly& p, const std::vector<std::string>& labels) {
  if (labels.size() != p.var_count()) fail("label count does not match the variable count");
  Json terms = Json::array();
  for (const auto& [mask, coeff] : p.terms()) {
    Json support = Json::array();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (mask & bit(i)) support.push_back(labels[i]);
    terms.push_back(Json{{"support", support}, {"coeff", to_decimal(coeff)}});
  }
  Json out{{"vars", labels}, {"terms", terms}};
  if (auto d = p.degree()) out["degree"] = *d;
  return out;
}

LabelledPoly poly_from_json(const Json& j) {
  LabelledPoly out;
  out.vars = labels_of(field(j, "vars"), "vars");
  if (out.vars.size() > kMaxGround) fail("at most 64 variables are supported");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < out.vars.size(); ++i)
    if (!index.emplace(out.vars[i], i).second) fail("duplicate variable '" + out.vars[i] + "'");
  out.poly = MultilinearPoly(out.vars.size());
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail("field 'terms' must be an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    Mask mask = 0;
    for (const auto& label : labels_of(field(terms[t], "support"), where + ".support")) {
      auto it = index.find(label);
      if (it == index.end()) fail("field '" + where + ".support' names unknown variable '" + label + "'");
      if (mask & bit(it->second)) fail("field '" + where + ".support' repeats '" + label + "'");
      mask |= bit(it->second);
    }
    const Json& c = field(terms[t], "coeff");
    Integer coeff;
    if (c.is_number_integer()) {
      coeff = Integer(std::to_string(c.get<long long>()));
    } else if (!c.is_string() || coeff.set_str(c.get<std::string>(), 10) != 0) {
      fail("field '" + where + ".coeff' must be a decimal integer string");
    }
    out.poly.add_term(mask, coeff);
  }
  return out;
}

LengthMap length_map_from_json(const Json& j, const std::vector<std::string>& ground) {
  if (!j.is_object()) fail("length map must be an object {label: length}");
  std::set<std::string> known(ground.begin(), ground.end());
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) fail("length map names unknown element '" + key + "'");
  std::vector<unsigned> values;
  for (const auto& label : ground) {
    auto it = j.find(label);
    if (it == j.end()) fail("length map is missing element '" + label + "'");
    if (!it->is_number_integer() || it->get<long long>() < 1 || it->get<long long>() > 1'000'000)
      fail("length of '" + label + "' must be a positive integer");
    values.push_back(it->get<unsigned>());
  }
  return LengthMap(std::move(values));
}

Json length_map_to_json(const LengthMap& lam, const std::vector<std::string>& ground) {
  Json out = Json::object();
  for (std::size_t i = 0; i < ground.size(); ++i) out[ground[i]] = lam[i];
  return out;
}

Json group_to_json(const AbelianGroup& g) {
  // Small factors as JSON numbers, anything beyond int64 as a decimal string.
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) {
    if (fits_int64(d)) factors.push_back(d.get_si());
    else factors.push_back(to_decimal(d));
  }
  return Json{{"invariant_factors", factors}, {"order", to_decimal(g.order())}};
}

Json count_to_json(const CountReport& r) {
  Json out{{"p", r.p},
           {"n_vars", r.n_vars},
           {"affine_zeros", decimal(r.affine_zeros)},
           {"projective_points", decimal(r.projective_points)}};
  if (r.torus_zeros) out["torus_zeros"] = decimal(*r.torus_zeros);
  return out;
}

Json density_to_json(const DensityReport& r) {
  Json out = rational_fields(r.value);
  out["p"] = r.p;
  out["mode"] = to_string(r.mode);
  out["trivial"] = r.trivial;
  if (r.raw_den != 0) {
    out["raw_num"] = to_decimal(r.raw_num);
    out["raw_den"] = to_decimal(r.raw_den);
  }
  if (!r.matroid_id.empty()) out["matroid"] = r.matroid_id;
  if (r.empirical_height) out["height"] = *r.empirical_height;
  if (r.affine_zeros) out["affine_zeros"] = decimal(*r.affine_zeros);
  if (r.projective_points) out["projective_points"] = decimal(*r.projective_points);
  if (r.torus_zeros) out["torus_zeros"] = decimal(*r.torus_zeros);
  return out;
}

Json sandwich_to_json(const SandwichReport& s) {
  return Json{{"check", "sandwich"},
              {"height", s.height_cap},
              {"t", s.t},
              {"l", s.l},
              {"empirical", rational_fields(s.empirical)},
              {"limit", rational_fields(s.limit)},
              {"lower", rational_fields(s.lower)},
              {"upper", rational_fields(s.upper)},
              {"holds", s.holds}};
}

Json asymptotic_to_json(const AsymptoticReport& a) {
  return Json{{"check", "asymptotic"},
              {"density", rational_fields(a.density)},
              {"deviation", rational_fields(a.deviation)},
              {"bound", rational_fields(a.bound)},
              {"C", to_decimal(a.constant)},
              {"holds", a.holds}};
}

Json bound_to_json(const BoundReport& b) {
  return Json{{"p", b.p},
              {"ground_size", b.ground_size},
              {"degree", b.degree},
              {"projective_points", decimal(b.projective_points)},
              {"lower", to_decimal(b.lower)},
              {"upper", to_decimal(b.upper)},
              {"proof_lower", to_decimal(b.proof_lower)},
              {"proof_upper", to_decimal(b.proof_upper)},
              {"f", to_decimal(b.f_value)},
              {"g", to_decimal(b.g_value)},
              {"fg_holds", b.fg_sandwich_holds()},
              {"C", to_decimal(b.big_o)},
              {"holds", b.sandwich_holds()}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

InputDocument read_document(const Json& j) {
  if (!j.is_object()) fail("input must be a JSON object");
  const bool g = j.contains("edges"), m = j.contains("rows"), p = j.contains("terms");
  const int kinds = int(g) + int(m) + int(p);
  if (kinds == 0) fail("unrecognised input: expected one of the keys 'edges', 'rows' or 'terms'");
  if (kinds > 1) fail("ambiguous input: more than one of 'edges', 'rows', 'terms' present");
  try {
    if (g) return graph_from_json(j);
    if (m) return matroid_from_json(j);
    return poly_from_json(j);
  } catch (const Json::exception& e) {
    fail(std::string("schema violation: ") + e.what());
  }
}

InputDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return read_document(parse_json_text(ss.str()));
}

RegularMatroid as_matroid(const InputDocument& doc) {
  if (auto g = std::get_if<Graph>(&doc)) return incidence_matroid(*g);
  if (auto m = std::get_if<RegularMatroid>(&doc)) return *m;
  fail("this command needs a graph or matroid, not a polynomial");
}

}  // namespace mjac
