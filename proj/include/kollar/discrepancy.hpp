// Discrepancies, boundary coefficients of extraction pairs, the plt test,
// numerical pullbacks through contractions and the log Fano degree.
//
// Adjunction on a smooth rational curve C gives K.C = -C^2 - 2; every
// formula below relies on that (all curves in scope are rational).
#pragma once

#include "kollar/dual_graph.hpp"
#include "kollar/errors.hpp"
#include "kollar/lattice.hpp"
#include "kollar/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kollar {

/// Exact rational value per vertex, in graph vertex order.
struct DiscrepancyVector {
  std::vector<std::string> ids;
  std::vector<Rational> values;

  std::size_t size() const noexcept { return ids.size(); }
  bool empty() const noexcept { return ids.empty(); }

  const Rational& at(std::string_view id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return values[i];
    throw std::out_of_range("no coefficient for '" + std::string(id) + "'");
  }

  bool all_zero() const {
    for (const auto& v : values)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const DiscrepancyVector&, const DiscrepancyVector&) = default;
};

namespace detail {

/// The curves contracted when every curve except `marked` is blown down.
struct ContractedLattice {
  std::size_t marked;
  std::vector<std::size_t> indices;  // vertex order, marked excluded
  LdlFactorization factorization;

  ContractedLattice(const DualGraph& g, std::size_t marked_index)
      : marked(marked_index), indices(others(g, marked_index)), factorization(build(g, marked_index)) {
    if (!factorization.negative_definite())
      throw NotContractible("curves other than '" + g.vertex(marked).id + "' do not contract");
  }

  DiscrepancyVector solve(const DualGraph& g, const std::vector<Rational>& rhs) const {
    DiscrepancyVector out;
    out.values = factorization.solve(rhs);
    for (std::size_t i : indices) out.ids.push_back(g.vertex(i).id);
    return out;
  }

  std::size_t position(std::size_t vertex) const { return vertex < marked ? vertex : vertex - 1; }

  /// Determinant of the block spanned by one connected component. The matrix
  /// is block diagonal, so this is the product of that component's pivots.
  Rational block_determinant(std::span<const std::size_t> component) const {
    Rational det = 1;
    for (std::size_t v : component) det *= factorization.pivots()[position(v)];
    return det;
  }

  /// Sum of the solution entries over curves meeting the marked curve.
  Rational adjacent_sum(const DualGraph& g, const DiscrepancyVector& v) const {
    Rational s = 0;
    for (std::size_t a = 0; a < indices.size(); ++a)
      if (g.adjacent(indices[a], marked)) s += v.values[a];
    return s;
  }

 private:
  static LdlFactorization build(const DualGraph& g, std::size_t marked) {
    std::vector<long long> diag;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != marked) diag.push_back(g.vertex(i).self_int);
    auto pos = [marked](std::size_t v) { return v < marked ? v : v - 1; };
    std::vector<std::tuple<std::size_t, std::size_t, long long>> off;
    for (const auto& [a, b] : g.edges())
      if (a != marked && b != marked) off.emplace_back(pos(a), pos(b), 1);
    return LdlFactorization(diag, off);
  }

  static std::vector<std::size_t> others(const DualGraph& g, std::size_t marked) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != marked) out.push_back(i);
    return out;
  }
};

inline long long meets(const DualGraph& g, std::size_t i, std::size_t j) { return g.adjacent(i, j) ? 1 : 0; }

}  // namespace detail

/// The vector a with K_W = f^*K + sum a_i E_i on the resolution W.
inline DiscrepancyVector canonical_discrepancies(const DualGraph& g) {
  const IntMatrix m = intersection_matrix(g);
  LdlFactorization f(m);
  if (!m.empty() && !f.negative_definite()) throw NotContractible("graph is not negative definite");
  std::vector<Rational> rhs;
  for (const auto& v : g.vertices()) rhs.emplace_back(-v.self_int - 2);
  DiscrepancyVector out;
  out.values = f.solve(rhs);
  for (const auto& v : g.vertices()) out.ids.push_back(v.id);
  return out;
}

/// Coefficients c_i with K_W + E~ + sum c_i F_i numerically trivial on every
/// contracted curve F_j, i.e. the pullback of K_Y + E_Y.
inline DiscrepancyVector pair_log_coefficients(const DualGraph& g, const detail::ContractedLattice& lat) {
  std::vector<Rational> rhs;
  for (std::size_t j : lat.indices)
    rhs.emplace_back(g.vertex(j).self_int + 2 - detail::meets(g, j, lat.marked));
  return lat.solve(g, rhs);
}

inline DiscrepancyVector pair_log_coefficients(const DualGraph& g, std::string_view marked) {
  return pair_log_coefficients(g, detail::ContractedLattice(g, g.require(marked)));
}

struct PltCheck {
  bool plt = false;
  /// Worst coefficient is exactly 1: log canonical but not plt.
  bool log_canonical = false;
  /// Largest contracted coefficient; nullopt when nothing is contracted.
  std::optional<Rational> max_coefficient;
  std::string worst_vertex;
  DiscrepancyVector coefficients;
};

inline PltCheck plt_check(const DualGraph& g, const detail::ContractedLattice& lat) {
  PltCheck out;
  out.coefficients = pair_log_coefficients(g, lat);
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    const auto& c = out.coefficients.values[i];
    if (!out.max_coefficient || c > *out.max_coefficient) {
      out.max_coefficient = c;
      out.worst_vertex = out.coefficients.ids[i];
    }
  }
  out.plt = !out.max_coefficient || *out.max_coefficient < 1;
  out.log_canonical = out.max_coefficient && *out.max_coefficient == 1;
  return out;
}

inline PltCheck plt_check(const DualGraph& g, std::string_view marked) {
  return plt_check(g, detail::ContractedLattice(g, g.require(marked)));
}

inline bool is_plt_extraction(const DualGraph& g, std::string_view marked) { return plt_check(g, marked).plt; }

struct MumfordData {
  /// (E~ + sum lambda_i F_i) . F_j = 0 for every contracted F_j.
  DiscrepancyVector lambda;
  /// Self-intersection of the image of the marked curve after contraction.
  Rational e_self;
};

inline MumfordData mumford_pullback(const DualGraph& g, const detail::ContractedLattice& lat) {
  std::vector<Rational> rhs;
  for (std::size_t j : lat.indices) rhs.emplace_back(-detail::meets(g, j, lat.marked));
  MumfordData out;
  out.lambda = lat.solve(g, rhs);
  out.e_self = g.vertex(lat.marked).self_int + lat.adjacent_sum(g, out.lambda);
  return out;
}

inline MumfordData mumford_pullback(const DualGraph& g, std::string_view marked) {
  return mumford_pullback(g, detail::ContractedLattice(g, g.require(marked)));
}

/// (K_Y + E_Y) . E_Y evaluated upstairs as (K_W + E~ + sum c_i F_i) . E~.
/// By adjunction this is the degree of K_E + Diff.
inline Rational log_canonical_degree(const DualGraph& g, std::string_view marked) {
  const detail::ContractedLattice lat(g, g.require(marked));
  const DiscrepancyVector c = pair_log_coefficients(g, lat);
  const int s = g.vertex(lat.marked).self_int;
  return Rational(-s - 2) + Rational(s) + lat.adjacent_sum(g, c);
}

/// Positive delta with -(K_Y + E_Y) = -delta E_Y, from the degree of the
/// different and E_Y^2.
inline Rational delta(const DualGraph& g, const detail::ContractedLattice& lat, const PltCheck& plt,
                      const Rational& diff_degree) {
  if (!plt.plt)
    throw NotPlt("extraction of '" + g.vertex(lat.marked).id + "' is not plt", plt.worst_vertex, plt.log_canonical);
  const Rational room = 2 - diff_degree;
  if (room <= 0) throw NotLogFano("different has degree " + to_display_string(diff_degree) + " >= 2");
  const MumfordData mum = mumford_pullback(g, lat);
  if (mum.e_self >= 0) throw NotContractible("image curve has E^2 = " + to_display_string(mum.e_self));
  return room / -mum.e_self;
}

inline Rational delta(const DualGraph& g, std::string_view marked, const Rational& diff_degree) {
  const detail::ContractedLattice lat(g, g.require(marked));
  return delta(g, lat, plt_check(g, lat), diff_degree);
}

/// Same delta, computed as (K_Y + E_Y).E_Y / E_Y^2 without the different.
inline Rational delta_by_adjunction(const DualGraph& g, std::string_view marked) {
  return log_canonical_degree(g, marked) / mumford_pullback(g, marked).e_self;
}

}  // namespace kollar
