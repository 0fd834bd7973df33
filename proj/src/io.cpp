#include "incalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "incalg/errors.hpp"

namespace incalg::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_index(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer index, got " + j.dump());
  return j.get<int>();
}

std::string as_string(const json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Rational literal(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an exact literal, got " + j.dump());
}

RingElem scalar_from(const RingSpec& ring, const json& j) {
  const auto r = literal(j);
  if (ring.over_rationals()) return RingElem(ring, r);
  try {
    return RingElem::from_rational(ring, r);
  } catch (const Error&) {
    throw ParseError("literal " + r.str() + " has no residue modulo " + std::to_string(ring.modulus()));
  }
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Preorder poset_from_json(const json& j) {
  const int n = as_index(field(j, "n"));
  if (n < 0) throw ParseError("negative element count");
  std::vector<IndexPair> pairs;
  const auto& rel = field(j, "relations");
  if (!rel.is_array()) throw ParseError("'relations' must be an array");
  for (const auto& r : rel) {
    if (!r.is_array() || r.size() != 2) throw ParseError("relation must be a pair [i, j]");
    pairs.emplace_back(as_index(r[0]), as_index(r[1]));
  }
  return build_preorder(n, pairs);
}

json poset_to_json(const Preorder& p) {
  json rel = json::array();
  for (const auto& [s, t] : p.pairs()) {
    if (s != t) rel.push_back({s, t});
  }
  return {{"n", p.size()}, {"relations", rel}};
}

RingElem elem_from_json(const RingSpec& ring, const json& j) {
  if (!ring.is_matrix()) return scalar_from(ring, j);
  if (!j.is_array()) {
    // a bare literal stands for the scalar matrix
    return RingElem::from_rational(ring, literal(j));
  }
  const int k = ring.order();
  if (static_cast<int>(j.size()) != k) throw ParseError("matrix value must have " + std::to_string(k) + " rows");
  std::vector<RingElem> entries;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != k) throw ParseError("matrix row must have " + std::to_string(k) + " entries");
    for (const auto& v : row) entries.push_back(scalar_from(ring.base(), v));
  }
  return pack_block(ring.base(), k, entries);
}

json elem_to_json(const RingElem& a) {
  if (!a.spec().is_matrix()) return a.str();
  json rows = json::array();
  for (int i = 0; i < a.spec().order(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.spec().order(); ++j) row.push_back(a.entry(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

RingSpec function_ring(const json& j) { return RingSpec::parse(as_string(field(j, "ring"))); }

IncidenceFunction function_from_json(const AlgebraPtr& algebra, const json& j) {
  const auto ring = function_ring(j);
  if (!(ring == algebra->ring())) {
    throw ParseError("function over " + ring.str() + " where " + algebra->ring().str() + " was expected");
  }
  IncidenceFunction f(algebra);
  const auto& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  for (const auto& e : entries) {
    f.add(as_index(field(e, "from")), as_index(field(e, "to")), elem_from_json(ring, field(e, "value")));
  }
  return f;
}

json function_to_json(const IncidenceFunction& f) {
  json entries = json::array();
  for (const auto& [k, v] : f.entries()) entries.push_back({{"from", k.first}, {"to", k.second}, {"value", elem_to_json(v)}});
  return {{"ring", f.ring().str()}, {"entries", entries}};
}

CocycleInput cocycle_from_json(const RingSpec& ring, const json& j) {
  CocycleInput in;
  if (j.contains("mode")) {
    const auto mode = as_string(j.at("mode"));
    if (mode == "full") {
      in.mode = CocycleMode::Full;
    } else if (mode == "tree") {
      in.mode = CocycleMode::TreeOnly;
    } else {
      throw ParseError("mode must be 'full' or 'tree'");
    }
  }
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  for (const auto& e : edges) {
    in.assignment[{as_index(field(e, "from")), as_index(field(e, "to"))}] = elem_from_json(ring, field(e, "value"));
  }
  return in;
}

json edges_to_json(const AlgebraPtr& algebra, const std::vector<RingElem>& values) {
  json edges = json::array();
  const auto& g = algebra->graph();
  for (std::size_t e = 0; e < values.size(); ++e) {
    edges.push_back({{"from", g.edges[e].first}, {"to", g.edges[e].second}, {"value", elem_to_json(values[e])}});
  }
  return edges;
}

json cocycle_to_json(const MultCocycle& c) { return {{"edges", edges_to_json(c.algebra, c.values)}, {"mode", "full"}}; }
json cocycle_to_json(const AddCocycle& c) { return {{"edges", edges_to_json(c.algebra, c.values)}, {"mode", "full"}}; }

std::string basis_label(int s, int t) {
  return s == t ? "e_" + std::to_string(s) : "e_" + std::to_string(s) + "_" + std::to_string(t);
}

IndexPair parse_basis_label(const std::string& label, int n) {
  const auto bad = [&] { return ParseError("malformed basis label '" + label + "'"); };
  if (label.rfind("e_", 0) != 0) throw bad();
  const auto rest = label.substr(2);
  const auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const auto us = rest.find('_');
  if (us != std::string::npos) {
    const auto a = rest.substr(0, us);
    const auto b = rest.substr(us + 1);
    if (!digits(a) || !digits(b)) throw bad();
    return {std::stoi(a), std::stoi(b)};
  }
  if (!digits(rest)) throw bad();
  if (rest.size() == 2 && n <= 10) return {rest[0] - '0', rest[1] - '0'};
  const int x = std::stoi(rest);
  return {x, x};
}

AutTable table_from_json(const AlgebraPtr& source, const AlgebraPtr& target, const json& j) {
  if (!j.is_array()) throw ParseError("a table is an array of {basis, image}");
  std::vector<std::optional<IncidenceFunction>> images(source->pairs().size());
  for (const auto& row : j) {
    const auto [s, t] = parse_basis_label(as_string(field(row, "basis")), source->size());
    const int k = source->pair_index(s, t);
    if (k < 0) throw ParseError("basis element " + basis_label(s, t) + " is not in the source algebra");
    if (images[static_cast<std::size_t>(k)]) throw ParseError("basis element " + basis_label(s, t) + " listed twice");
    images[static_cast<std::size_t>(k)] = function_from_json(target, field(row, "image"));
  }
  AutTable table{source, target, {}};
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k]) {
      throw Error(ErrorCode::ShapeMismatch, "no image for " + basis_label(source->pairs()[k].first, source->pairs()[k].second));
    }
    table.images.push_back(*images[k]);
  }
  return table;
}

json table_to_json(const AutTable& t) {
  json rows = json::array();
  const auto& pairs = t.source->pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    rows.push_back({{"basis", basis_label(pairs[k].first, pairs[k].second)}, {"image", function_to_json(t.images[k])}});
  }
  return rows;
}

json permutation_to_json(const Permutation& p) { return json(p); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a permutation is an array of indices");
  Permutation p;
  for (const auto& v : j) p.push_back(as_index(v));
  return p;
}

json poset_info(const AlgebraPtr& algebra) {
  const auto& q = algebra->quotient();
  const auto& g = algebra->graph();
  const auto& f = algebra->forest();
  const auto edge_list = [&](const std::vector<int>& ids) {
    json out = json::array();
    for (int e : ids) out.push_back({g.edges[static_cast<std::size_t>(e)].first, g.edges[static_cast<std::size_t>(e)].second});
    return out;
  };
  json edges = json::array();
  for (const auto& [x, y] : g.edges) edges.push_back({x, y});
  json tris = json::array();
  for (const auto& t : algebra->triangles()) tris.push_back({t.x, t.z, t.y});
  json info = {{"n", algebra->size()},
               {"classes", q.classes},
               {"edges", edges},
               {"m", g.m()},
               {"components", g.components},
               {"lambda", g.lambda},
               {"tree_edges", edge_list(f.tree_edges)},
               {"chords", edge_list(f.chords)},
               {"fundamental_cycles", f.fundamental_cycles},
               {"triangles", tris},
               {"max_interval_length", algebra->max_length()}};
  if (q.size() <= 10) info["automorphisms"] = poset_automorphisms(q);
  return info;
}

json structural_to_json(const Structural& s) {
  json matrix = json::array();
  json pattern = json::array();
  for (int i = 0; i < s.matrix.size(); ++i) {
    json row = json::array();
    json prow = json::array();
    for (int j = 0; j < s.matrix.size(); ++j) {
      row.push_back(elem_to_json(s.matrix(i, j)));
      prow.push_back(s.pattern(i, j) ? 1 : 0);
    }
    matrix.push_back(row);
    pattern.push_back(prow);
  }
  return {{"matrix", matrix},
          {"pattern", pattern},
          {"tau", s.tau},
          {"blocks", s.blocks},
          {"block_upper_triangular", is_block_upper_triangular(permute_pattern(s.pattern, s.tau), s.blocks)}};
}

namespace {

json elems(const std::vector<RingElem>& v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(elem_to_json(a));
  return out;
}

}  // namespace

json mult_decomposition_to_json(const MultDecomposition& d) {
  json out = {{"vertex_units", elems(d.vertex_units)},
              {"residue", cocycle_to_json(d.residue)},
              {"is_inner", d.is_inner}};
  if (!d.is_inner) {
    out["failing_cycle"] = d.failing_cycle;
    out["cycle_weight"] = elem_to_json(d.cycle_weight);
  }
  return out;
}

json aut_decomposition_to_json(const AutDecomposition& d) {
  json out = {{"tau", d.tau},
              {"inner_delta", function_to_json(d.inner_delta)},
              {"cocycle", cocycle_to_json(d.cocycle)},
              {"vertex_units", elems(d.vertex_units)},
              {"residue", cocycle_to_json(d.residue)},
              {"is_inner", d.is_inner}};
  if (!d.is_inner) {
    out["failing_cycle"] = d.failing_cycle;
    out["cycle_weight"] = elem_to_json(d.cycle_weight);
  }
  return out;
}

json add_decomposition_to_json(const AddDecomposition& d) {
  json out = {{"potentials", elems(d.potentials)}, {"residue", cocycle_to_json(d.residue)}, {"is_inner", d.is_inner}};
  if (!d.is_inner) {
    out["failing_cycle"] = d.failing_cycle;
    out["cycle_weight"] = elem_to_json(d.cycle_weight);
  }
  return out;
}

json deriv_space_to_json(const DerivSpaceReport& r) {
  json basis = json::array();
  for (const auto& v : r.kernel_basis) basis.push_back(elems(v));
  json out = {{"m", r.m},
              {"lambda", r.lambda},
              {"rank", r.rank},
              {"dim_psi", r.dim_psi},
              {"dim_psi0", r.dim_psi0},
              {"dim_out", r.dim_out},
              {"all_inner", r.all_inner},
              {"kernel_basis", basis}};
  if (!r.warnings.empty()) out["warnings"] = r.warnings;
  return out;
}

json brute_report_to_json(const BruteReport& r) {
  return {{"dim_k", r.dim_k}, {"dim_center", r.dim_center}, {"dim_der", r.dim_der}, {"dim_inn", r.dim_inn}, {"dim_out", r.dim_out}};
}

json types_to_json(const Reduction& r) {
  json out = json::array();
  for (const auto& t : r.types) {
    out.push_back({{"id", t.id},
                   {"class", t.point ? "T0" : "T1"},
                   {"representative", {t.representative.first, t.representative.second}},
                   {"members", t.members}});
  }
  return out;
}

json coefficients_to_json(const CoefTable& t) {
  json out = json::array();
  for (const auto& [key, n] : t) out.push_back({{"t", key[0]}, {"r", key[1]}, {"s", key[2]}, {"count", n}});
  return out;
}

ReducedElem reduced_from_json(const Reduction& r, const json& j) {
  if (j.contains("entries")) return project(r, function_from_json(r.algebra, j));
  const auto ring = function_ring(j);
  if (!(ring == r.algebra->ring())) throw ParseError("reduced element over " + ring.str());
  const auto& values = field(j, "values");
  if (!values.is_array() || static_cast<int>(values.size()) != r.count()) {
    throw ParseError("'values' must hold one value per type (" + std::to_string(r.count()) + ")");
  }
  ReducedElem a{ring, {}};
  for (const auto& v : values) a.values.push_back(elem_from_json(ring, v));
  return a;
}

json reduced_to_json(const ReducedElem& a) { return {{"ring", a.ring.str()}, {"values", elems(a.values)}}; }

}  // namespace incalg::io
