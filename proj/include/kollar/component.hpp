// Kollár components of surface singularities: differents, delta and alpha
// of the exceptional curve of a plt blow-up.
#pragma once

#include "kollar/alpha.hpp"
#include "kollar/discrepancy.hpp"
#include "kollar/dual_graph.hpp"
#include "kollar/errors.hpp"
#include "kollar/hirzebruch_jung.hpp"
#include "kollar/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace kollar {

/// One point of the different, with coefficient (index - 1) / index.
struct DifferentPoint {
  std::string label;
  Integer index;
  Rational coefficient() const { return Rational(Integer(index - 1), index); }
  friend bool operator==(const DifferentPoint&, const DifferentPoint&) = default;
};

struct Different {
  std::vector<DifferentPoint> points;

  Rational degree() const {
    Rational d = 0;
    for (const auto& p : points) d += p.coefficient();
    return d;
  }

  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    for (const auto& p : points) out.push_back(p.coefficient());
    return out;
  }

  /// Indices in ascending order, convenient for table comparisons.
  std::vector<Integer> sorted_indices() const {
    std::vector<Integer> out;
    for (const auto& p : points) out.push_back(p.index);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Different&, const Different&) = default;
};

/// Marks one curve of a Du Val minimal resolution and contracts the rest.
struct VertexExtraction {
  AdeKind kind;
  int m;
  int vertex;  // 1-based label under the build_ade convention
  friend bool operator==(const VertexExtraction&, const VertexExtraction&) = default;
};

/// Blows up a point on the A_m resolution, then contracts all old curves.
struct PointBlowupExtraction {
  int m;
  BlowupLocation location;
  friend bool operator==(const PointBlowupExtraction&, const PointBlowupExtraction&) = default;
};

/// Marks one curve of the Hirzebruch-Jung chain of 1/n(1,q).
struct ChainVertexExtraction {
  long long n;
  long long q;
  int vertex;
  friend bool operator==(const ChainVertexExtraction&, const ChainVertexExtraction&) = default;
};

/// Any other (graph, marked curve) handed to the general engine.
struct GraphExtraction {
  std::string marked;
  friend bool operator==(const GraphExtraction&, const GraphExtraction&) = default;
};

using ExtractionChoice =
    std::variant<VertexExtraction, PointBlowupExtraction, ChainVertexExtraction, GraphExtraction>;

inline std::string to_string(const ExtractionChoice& c) {
  struct {
    std::string operator()(const VertexExtraction& v) const {
      return std::string(1, to_char(v.kind)) + std::to_string(v.m) + " vertex " + vertex_label(v.vertex);
    }
    std::string operator()(const PointBlowupExtraction& p) const {
      return "A" + std::to_string(p.m) + " blowup " + kollar::to_string(p.location);
    }
    std::string operator()(const ChainVertexExtraction& c) const {
      return "1/" + std::to_string(c.n) + "(1," + std::to_string(c.q) + ") vertex " + vertex_label(c.vertex);
    }
    std::string operator()(const GraphExtraction& g) const { return "graph vertex " + g.marked; }
  } v;
  return std::visit(v, c);
}

struct KollarComponent {
  Different different;
  Rational delta;
  Rational alpha;
  ExtractionChoice source;
  std::string canonical_key;
};

/// Normal form of the graph rooted at `marked`: two markings of one tree
/// share a key exactly when a weight-preserving automorphism swaps them.
inline std::string canonical_key(const DualGraph& g, std::string_view marked) {
  const std::size_t root = g.require(marked);
  std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
    std::vector<std::string> children;
    for (std::size_t w : g.neighbors(v))
      if (w != parent) children.push_back(encode(w, v));
    std::sort(children.begin(), children.end());
    std::string s = "(" + std::to_string(g.vertex(v).self_int);
    for (const auto& c : children) s += c;
    return s + ")";
  };
  return encode(root, g.size());
}

namespace detail {

/// Blows down the -1 curves of `comp` (valence at most two) and checks that
/// what remains is a chain meeting vertex `e` once, at an end. Returns the
/// attaching vertex of the minimal model.
inline std::size_t end_attachment(const DualGraph& g, std::size_t e, const std::vector<std::size_t>& comp,
                                  std::string_view marked) {
  std::map<std::size_t, int> self;
  std::map<std::size_t, std::set<std::size_t>> adj;
  for (std::size_t v : comp) {
    self[v] = g.vertex(v).self_int;
    for (std::size_t w : g.neighbors(v)) {
      adj[v].insert(w);
      if (w == e) adj[e].insert(v);
    }
  }
  for (bool changed = true; changed && self.size() > 1;) {
    changed = false;
    for (auto [v, s] : self) {
      if (s != -1 || adj[v].size() > 2) continue;
      const std::vector<std::size_t> nb(adj[v].begin(), adj[v].end());
      for (std::size_t w : nb) {
        adj[w].erase(v);
        if (w != e) ++self[w];
      }
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      self.erase(v);
      adj.erase(v);
      changed = true;
      break;
    }
  }
  std::vector<std::size_t> touching;
  for (const auto& [v, s] : self)
    if (adj[v].count(e)) touching.push_back(v);
  if (touching.size() != 1)
    throw UnsupportedConfiguration("a contracted component meets '" + std::string(marked) + "' " +
                                   std::to_string(touching.size()) + " times");
  for (const auto& [v, s] : self) {
    const std::size_t inner = adj[v].size() - adj[v].count(e);
    const bool end = self.size() == 1 ? inner == 0 : inner == 1;
    if (inner > 2 || (v == touching.front() && !end))
      throw UnsupportedConfiguration("contracted component through '" + g.vertex(v).id +
                                     "' is not a chain attached at an end");
  }
  return touching.front();
}

}  // namespace detail

/// Different of the extraction of `marked`: one point per contracted chain,
/// with index the order of that chain's local group.
inline Different different_of(const DualGraph& g, const detail::ContractedLattice& lat, const PltCheck& plt) {
  const std::size_t e = lat.marked;
  if (!plt.plt)
    throw NotPlt("extraction of '" + g.vertex(e).id + "' is not plt (coefficient " +
                     to_display_string(*plt.max_coefficient) + " at '" + plt.worst_vertex + "')",
                 plt.worst_vertex, plt.log_canonical);
  Different out;
  for (const auto& comp : g.components_without(e)) {
    const std::size_t attach = detail::end_attachment(g, e, comp, g.vertex(e).id);
    const Rational det = lat.block_determinant(comp);
    const Integer index = abs(numerator_of(det));
    if (index > 1) out.points.push_back({g.vertex(attach).id, index});
  }
  return out;
}

inline Different different_of(const DualGraph& g, std::string_view marked) {
  const detail::ContractedLattice lat(g, g.require(marked));
  return different_of(g, lat, plt_check(g, lat));
}

/// General engine: the Kollár component obtained by contracting every curve
/// of `g` except `marked`.
inline KollarComponent component_from_graph(const DualGraph& g, std::string_view marked,
                                            ExtractionChoice source) {
  const detail::ContractedLattice lat(g, g.require(marked));
  const PltCheck plt = plt_check(g, lat);
  KollarComponent out;
  out.different = different_of(g, lat, plt);
  const Boundary boundary(out.different.coefficients());
  out.delta = delta(g, lat, plt, boundary.degree());
  out.alpha = alpha_p1(boundary);
  out.source = std::move(source);
  out.canonical_key = canonical_key(g, marked);
  return out;
}

inline KollarComponent component_from_graph(const DualGraph& g, std::string_view marked) {
  return component_from_graph(g, marked, GraphExtraction{std::string(marked)});
}

struct Fork {};
/// Either a 1-based vertex label or the fork of a D/E graph.
using VertexSelector = std::variant<int, Fork>;

/// Vertex extraction on a Du Val resolution. A_m vertices k and m+1-k are
/// identified (the result always records k <= (m+1)/2). On D and E only the
/// fork is plt; any other vertex raises NotPlt.
inline KollarComponent extract_vertex(AdeKind kind, int m, VertexSelector which) {
  const DualGraph g = build_ade(kind, m);
  int k = 0;
  if (std::holds_alternative<Fork>(which)) {
    const auto f = fork_label(kind, m);
    if (!f) throw InvalidParameters("A" + std::to_string(m) + " has no fork");
    k = *f;
  } else {
    k = std::get<int>(which);
    if (k < 1 || k > m)
      throw InvalidParameters("vertex " + std::to_string(k) + " is not on " + std::string(1, to_char(kind)) +
                              std::to_string(m));
    if (kind == AdeKind::A) k = std::min(k, m + 1 - k);
  }
  return component_from_graph(g, vertex_label(k), VertexExtraction{kind, m, k});
}

/// Point blow-up extraction on A_m. Accepts a tail point (on v1 or vm) or
/// the node between v_k and v_{k+1}; the node k is identified with m-k and
/// both tails with v1.
inline KollarComponent extract_blowup(int m, const BlowupLocation& loc) {
  const DualGraph g = build_ade(AdeKind::A, m);
  BlowupLocation canonical;
  if (const auto* t = std::get_if<TailInterior>(&loc)) {
    const auto v = g.index_of(t->vertex);
    if (!v || (*v != 0 && *v + 1 != g.size()))
      throw InvalidLocation("'" + t->vertex + "' is not a tail curve of A" + std::to_string(m));
    canonical = TailInterior{vertex_label(1)};
  } else {
    const auto& n = std::get<Node>(loc);
    const auto u = g.index_of(n.first);
    const auto v = g.index_of(n.second);
    if (!u || !v || !g.adjacent(*u, *v))
      throw InvalidLocation("no node between '" + n.first + "' and '" + n.second + "' on A" + std::to_string(m));
    int k = static_cast<int>(std::min(*u, *v)) + 1;
    k = std::min(k, m - k);
    canonical = Node{vertex_label(k), vertex_label(k + 1)};
  }
  const DualGraph up = blow_up(g, canonical);
  return component_from_graph(up, up.vertex(up.size() - 1).id, PointBlowupExtraction{m, canonical});
}

/// Convenience for the node between v_k and v_{k+1}.
inline BlowupLocation node_location(int k) { return Node{vertex_label(k), vertex_label(k + 1)}; }

/// Extraction marking vertex k of the Hirzebruch-Jung chain of 1/n(1,q).
inline KollarComponent extract_chain_vertex(const CyclicQuotient& s, int k) {
  const DualGraph g = resolution_graph(s);
  if (k < 1 || static_cast<std::size_t>(k) > g.size())
    throw InvalidParameters("vertex " + std::to_string(k) + " is not on the chain of " + s.descriptor());
  return component_from_graph(g, vertex_label(k), ChainVertexExtraction{s.n(), s.q(), k});
}

/// The surface and marked curve behind a recorded extraction. GraphExtraction
/// does not remember its graph and raises InvalidParameters.
struct RealizedExtraction {
  DualGraph graph;
  std::string marked;
};

inline RealizedExtraction realize(const ExtractionChoice& source) {
  if (const auto* v = std::get_if<VertexExtraction>(&source))
    return {build_ade(v->kind, v->m), vertex_label(v->vertex)};
  if (const auto* p = std::get_if<PointBlowupExtraction>(&source)) {
    DualGraph up = blow_up(build_ade(AdeKind::A, p->m), p->location);
    std::string marked = up.vertex(up.size() - 1).id;
    return {std::move(up), std::move(marked)};
  }
  if (const auto* c = std::get_if<ChainVertexExtraction>(&source))
    return {resolution_graph(CyclicQuotient(c->n, c->q)), vertex_label(c->vertex)};
  throw InvalidParameters("a bare graph extraction cannot be rebuilt from its source");
}

}  // namespace kollar
