// Weighted dual graphs of configurations of exceptional curves.
//
// Every vertex stands for a smooth rational curve; edges are transversal
// intersection points of multiplicity one. Graphs can only be produced by
// the builders below (ADE resolutions, chains, point blow-ups), which keeps
// the genus-zero assumption true by construction.
#pragma once

#include "kollar/errors.hpp"
#include "kollar/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kollar {

enum class AdeKind { A, D, E };

inline char to_char(AdeKind kind) {
  switch (kind) {
    case AdeKind::A: return 'A';
    case AdeKind::D: return 'D';
    case AdeKind::E: return 'E';
  }
  return '?';
}

inline std::optional<AdeKind> parse_ade_kind(std::string_view s) {
  if (s == "A") return AdeKind::A;
  if (s == "D") return AdeKind::D;
  if (s == "E") return AdeKind::E;
  return std::nullopt;
}

struct Vertex {
  std::string id;
  int self_int = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Smooth point on a curve that lies on no other exceptional curve.
struct TailInterior {
  std::string vertex;
  friend bool operator==(const TailInterior&, const TailInterior&) = default;
};

/// Intersection point of two adjacent curves.
struct Node {
  std::string first;
  std::string second;
  friend bool operator==(const Node&, const Node&) = default;
};

using BlowupLocation = std::variant<TailInterior, Node>;

inline std::string to_string(const BlowupLocation& loc) {
  if (const auto* t = std::get_if<TailInterior>(&loc)) return "tail:" + t->vertex;
  const auto& n = std::get<Node>(loc);
  return "node:" + n.first + "," + n.second;
}

class DualGraph;
DualGraph build_chain(std::span<const int> self_ints);
DualGraph blow_up(const DualGraph& g, const BlowupLocation& loc);

class DualGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  DualGraph() = default;

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }

  bool adjacent(std::size_t i, std::size_t j) const {
    return edges_.count({std::min(i, j), std::max(i, j)}) != 0;
  }

  std::optional<std::size_t> index_of(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].id == id) return i;
    return std::nullopt;
  }

  /// Like index_of, but throws InvalidParameters for unknown ids.
  std::size_t require(std::string_view id) const {
    if (auto i = index_of(id)) return *i;
    throw InvalidParameters("no vertex with id '" + std::string(id) + "'");
  }

  /// Connected components of the graph with `removed` deleted, each listed in
  /// vertex order; components are ordered by their first vertex.
  std::vector<std::vector<std::size_t>> components_without(std::optional<std::size_t> removed) const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < size(); ++s) {
      if (comp[s] >= 0 || (removed && s == *removed)) continue;
      const int c = static_cast<int>(out.size());
      std::vector<std::size_t> members;
      std::vector<std::size_t> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (std::size_t w : adjacency_[v]) {
          if (comp[w] >= 0 || (removed && w == *removed)) continue;
          comp[w] = c;
          stack.push_back(w);
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  DualGraph(std::vector<Vertex> vertices, std::set<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)), adjacency_(vertices_.size()) {
    for (const auto& [a, b] : edges_) {
      if (a >= b || b >= vertices_.size()) throw std::logic_error("malformed edge");
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    std::set<std::string_view> ids;
    for (const auto& v : vertices_)
      if (!ids.insert(v.id).second) throw std::logic_error("duplicate vertex id " + v.id);
    if (!vertices_.empty() && components_without(std::nullopt).size() != 1)
      throw std::logic_error("dual graph must be connected");
  }

  friend DualGraph build_ade(AdeKind kind, int m);
  friend DualGraph build_chain(std::span<const int> self_ints);
  friend DualGraph blow_up(const DualGraph& g, const BlowupLocation& loc);

  std::vector<Vertex> vertices_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

inline std::string vertex_label(int k) { return "v" + std::to_string(k); }

/// Minimal resolution graph of a Du Val singularity, all curves (-2).
///
/// Labeling: A_m is the chain v1..vm. D_m is the chain v1..v_{m-2} with
/// v_{m-1} and v_m both attached to v_{m-2} (the fork). E_m is the chain
/// v1..v_{m-1} with v_m attached to v3 (the fork).
inline DualGraph build_ade(AdeKind kind, int m) {
  const bool ok = (kind == AdeKind::A && m >= 1) || (kind == AdeKind::D && m >= 4) ||
                  (kind == AdeKind::E && m >= 6 && m <= 8);
  if (!ok)
    throw InvalidParameters(std::string("no Du Val graph of type ") + to_char(kind) + std::to_string(m));
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) vs.push_back({vertex_label(i), -2});
  std::set<DualGraph::Edge> es;
  auto link = [&](int a, int b) {  // 1-based labels
    es.insert({static_cast<std::size_t>(std::min(a, b) - 1), static_cast<std::size_t>(std::max(a, b) - 1)});
  };
  switch (kind) {
    case AdeKind::A:
      for (int i = 1; i < m; ++i) link(i, i + 1);
      break;
    case AdeKind::D:
      for (int i = 1; i < m - 2; ++i) link(i, i + 1);
      link(m - 2, m - 1);
      link(m - 2, m);
      break;
    case AdeKind::E:
      for (int i = 1; i < m - 1; ++i) link(i, i + 1);
      link(3, m);
      break;
  }
  return DualGraph(std::move(vs), std::move(es));
}

/// Index (1-based label) of the degree-3 vertex of D_m / E_m; nullopt for A_m.
inline std::optional<int> fork_label(AdeKind kind, int m) {
  switch (kind) {
    case AdeKind::A: return std::nullopt;
    case AdeKind::D: return m - 2;
    case AdeKind::E: return 3;
  }
  return std::nullopt;
}

/// Chain v1..vr with the given self-intersections. An empty list gives the
/// empty graph (a smooth point).
inline DualGraph build_chain(std::span<const int> self_ints) {
  std::vector<Vertex> vs;
  std::set<DualGraph::Edge> es;
  for (std::size_t i = 0; i < self_ints.size(); ++i) {
    vs.push_back({vertex_label(static_cast<int>(i) + 1), self_ints[i]});
    if (i > 0) es.insert({i - 1, i});
  }
  return DualGraph(std::move(vs), std::move(es));
}

inline DualGraph build_chain(std::initializer_list<int> self_ints) {
  return build_chain(std::span<const int>(self_ints.begin(), self_ints.size()));
}

inline IntMatrix intersection_matrix(const DualGraph& g) {
  IntMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertex(i).self_int;
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = 1;
    m(b, a) = 1;
  }
  return m;
}

inline bool is_contractible(const DualGraph& g) { return is_contractible(intersection_matrix(g)); }

/// Order of the local fundamental group of the contracted configuration,
/// i.e. |det| of its intersection matrix. The empty graph gives 1.
inline Integer group_order(const IntMatrix& m) {
  if (!is_contractible(m)) throw NotContractible("intersection matrix is not negative definite");
  return abs(determinant(m));
}

inline Integer group_order(const DualGraph& g) { return group_order(intersection_matrix(g)); }

/// Blow-up of a point on the configuration. The new (-1)-curve is
/// appended last, with id "b(<vertex>)" or "b(<u>,<v>)".
inline DualGraph blow_up(const DualGraph& g, const BlowupLocation& loc) {
  std::vector<Vertex> vs = g.vertices();
  std::set<DualGraph::Edge> es = g.edges();
  const std::size_t w = vs.size();
  std::string fresh;
  if (const auto* t = std::get_if<TailInterior>(&loc)) {
    const auto v = g.index_of(t->vertex);
    if (!v) throw InvalidLocation("no curve '" + t->vertex + "' to blow up on");
    vs[*v].self_int -= 1;
    es.insert({*v, w});
    fresh = "b(" + t->vertex + ")";
  } else {
    const auto& n = std::get<Node>(loc);
    const auto u = g.index_of(n.first);
    const auto v = g.index_of(n.second);
    if (!u || !v || !g.adjacent(*u, *v))
      throw InvalidLocation("no intersection point between '" + n.first + "' and '" + n.second + "'");
    const auto [lo, hi] = std::minmax(*u, *v);
    es.erase({lo, hi});
    vs[lo].self_int -= 1;
    vs[hi].self_int -= 1;
    es.insert({lo, w});
    es.insert({hi, w});
    fresh = "b(" + vs[lo].id + "," + vs[hi].id + ")";
  }
  std::string id = fresh;
  for (int suffix = 2; g.index_of(id); ++suffix) id = fresh + "#" + std::to_string(suffix);
  vs.push_back({id, -1});
  return DualGraph(std::move(vs), std::move(es));
}

}  // namespace kollar
