// Canonical JSON forms of graphs, components and catalogs, plus the
// append-only JSON Lines snapshot file used by `catalog --out`.
//
// Rationals are always strings "p/q" in lowest terms with q > 0.
#pragma once

#include "kollar/catalog.hpp"
#include "kollar/component.hpp"
#include "kollar/dual_graph.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <string>

namespace kollar {

using json = nlohmann::ordered_json;

inline json to_json(const DualGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"self", v.self_int}});
  json es = json::array();
  for (const auto& [a, b] : g.edges()) es.push_back(json::array({g.vertex(a).id, g.vertex(b).id}));
  return {{"vertices", vs}, {"edges", es}};
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

inline json rational_json(const Rational& r) { return to_fraction_string(r); }

inline json to_json(const DiscrepancyVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) out[v.ids[i]] = to_fraction_string(v.values[i]);
  return out;
}

/// "tail" or "node:k" for the node between v_k and v_{k+1}.
inline std::string location_token(const BlowupLocation& loc) {
  if (std::holds_alternative<TailInterior>(loc)) return "tail";
  const auto& n = std::get<Node>(loc);
  return "node:" + n.first.substr(1);
}

inline BlowupLocation location_from_token(const std::string& token) {
  if (token == "tail") return TailInterior{vertex_label(1)};
  if (token.rfind("node:", 0) == 0) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(token.substr(5), &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used > 0 && used + 5 == token.size()) return node_location(k);
  }
  throw InvalidLocation("expected 'tail' or 'node:<k>', got '" + token + "'");
}

inline json to_json(const ExtractionChoice& c) {
  struct {
    json operator()(const VertexExtraction& v) const {
      return {{"kind", "vertex"}, {"type", std::string(1, to_char(v.kind))}, {"m", v.m}, {"vertex", v.vertex}};
    }
    json operator()(const PointBlowupExtraction& p) const {
      return {{"kind", "blowup"}, {"type", "A"}, {"m", p.m}, {"location", location_token(p.location)}};
    }
    json operator()(const ChainVertexExtraction& c) const {
      return {{"kind", "chain_vertex"}, {"n", c.n}, {"q", c.q}, {"vertex", c.vertex}};
    }
    json operator()(const GraphExtraction& g) const { return {{"kind", "graph"}, {"marked", g.marked}}; }
  } v;
  return std::visit(v, c);
}

inline ExtractionChoice extraction_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "vertex") {
    const auto t = parse_ade_kind(j.at("type").get<std::string>());
    if (!t) throw InvalidParameters("bad ADE type in source");
    return VertexExtraction{*t, j.at("m").get<int>(), j.at("vertex").get<int>()};
  }
  if (kind == "blowup")
    return PointBlowupExtraction{j.at("m").get<int>(), location_from_token(j.at("location").get<std::string>())};
  if (kind == "chain_vertex")
    return ChainVertexExtraction{j.at("n").get<long long>(), j.at("q").get<long long>(), j.at("vertex").get<int>()};
  if (kind == "graph") return GraphExtraction{j.at("marked").get<std::string>()};
  throw InvalidParameters("unknown source kind '" + kind + "'");
}

inline json to_json(const Different& d) {
  json out = json::array();
  for (const auto& p : d.points) out.push_back({{"label", p.label}, {"index", integer_json(p.index)}});
  return out;
}

inline json to_json(const KollarComponent& c) {
  return {{"source", to_json(c.source)},
          {"diff", to_json(c.different)},
          {"delta", rational_json(c.delta)},
          {"alpha", rational_json(c.alpha)},
          {"key", c.canonical_key}};
}

inline KollarComponent component_from_json(const json& j) {
  KollarComponent c;
  c.source = extraction_from_json(j.at("source"));
  for (const auto& p : j.at("diff"))
    c.different.points.push_back({p.at("label").get<std::string>(), integer_from_json(p.at("index"))});
  c.delta = parse_rational(j.at("delta").get<std::string>());
  c.alpha = parse_rational(j.at("alpha").get<std::string>());
  c.canonical_key = j.at("key").get<std::string>();
  return c;
}

inline json to_json(const TheoremReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back({{"first", v.first}, {"second", v.second}, {"sum", rational_json(v.sum)}});
  return {{"pairs", r.pairs}, {"max_sum", r.max_sum ? rational_json(*r.max_sum) : json(nullptr)}, {"violations", vs}};
}

inline TheoremReport report_from_json(const json& j) {
  TheoremReport r;
  r.pairs = j.at("pairs").get<std::size_t>();
  if (!j.at("max_sum").is_null()) r.max_sum = parse_rational(j.at("max_sum").get<std::string>());
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("first").get<std::string>(), v.at("second").get<std::string>(),
                            parse_rational(v.at("sum").get<std::string>())});
  return r;
}

inline json to_json(const Catalog& cat, const TheoremReport& report) {
  json cs = json::array();
  for (const auto& c : cat.components()) cs.push_back(to_json(c));
  return {{"singularity", descriptor(cat.singularity())}, {"components", cs}, {"report", to_json(report)}};
}

inline json to_json(const Catalog& cat) { return to_json(cat, verify_theorem(cat)); }

inline Catalog catalog_from_json(const json& j) {
  Catalog cat(parse_singularity(j.at("singularity").get<std::string>()));
  for (const auto& c : j.at("components"))
    if (!cat.add(component_from_json(c))) throw InvalidParameters("duplicate component key in catalog JSON");
  return cat;
}

inline json to_json(const FamilyReport& r) {
  json vs = json::array();
  for (const auto& [name, v] : r.violations)
    vs.push_back({{"singularity", name}, {"first", v.first}, {"second", v.second}, {"sum", rational_json(v.sum)}});
  return {{"family", std::string(1, to_char(r.kind))},
          {"max_m", r.max_m},
          {"singularities", r.singularities.size()},
          {"pairs", r.pairs},
          {"max_sum", r.max_sum ? rational_json(*r.max_sum) : json(nullptr)},
          {"violations", vs}};
}

/// Appends one catalog snapshot as a single JSON line.
inline void append_snapshot(const std::string& path, const json& snapshot) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for appending");
  out << snapshot.dump() << '\n';
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

/// Latest snapshot per singularity descriptor.
inline std::map<std::string, json> load_snapshots(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::map<std::string, json> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    const std::string key = j.at("singularity").get<std::string>();
    out[key] = std::move(j);
  }
  return out;
}

}  // namespace kollar
