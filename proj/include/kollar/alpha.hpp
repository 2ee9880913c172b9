// Alpha-invariants of log Fano structures on the projective line.
#pragma once

#include "kollar/errors.hpp"
#include "kollar/rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kollar {

/// Boundary sum a_i P_i on P^1 with every a_i in [0,1) and sum a_i < 2,
/// i.e. a klt pair with ample anticanonical class.
class Boundary {
 public:
  Boundary() = default;
  explicit Boundary(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    for (const auto& a : coefficients_) {
      if (a < 0 || a >= 1)
        throw InvalidCoefficient("boundary coefficient " + to_display_string(a) + " is outside [0,1)");
      degree_ += a;
    }
    if (degree_ >= 2)
      throw NotLogFano("boundary degree " + to_display_string(degree_) + " is not below 2");
  }
  Boundary(std::initializer_list<Rational> coefficients) : Boundary(std::vector<Rational>(coefficients)) {}

  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  const Rational& degree() const noexcept { return degree_; }

  /// Largest coefficient; 0 for the empty boundary.
  Rational max_coefficient() const {
    Rational m = 0;
    for (const auto& a : coefficients_) m = std::max(m, a);
    return m;
  }

 private:
  std::vector<Rational> coefficients_;
  Rational degree_ = 0;
};

/// (1 - max a_i) / (2 - sum a_i).
inline Rational alpha_p1(const Boundary& b) { return (1 - b.max_coefficient()) / (2 - b.degree()); }

namespace group {
struct Icosahedral {};
struct Octahedral {};
struct Tetrahedral {};
struct Dihedral { int m; };
struct Cyclic { int m; };
}  // namespace group

/// Finite subgroups of PGL_2(C) up to conjugacy.
using GroupClass = std::variant<group::Icosahedral, group::Octahedral, group::Tetrahedral, group::Dihedral,
                                group::Cyclic>;

inline GroupClass make_dihedral(int m) {
  if (m < 2) throw InvalidParameters("dihedral group needs m >= 2");
  return group::Dihedral{m};
}

inline GroupClass make_cyclic(int m) {
  if (m < 1) throw InvalidParameters("cyclic group needs m >= 1");
  return group::Cyclic{m};
}

inline std::string to_string(const GroupClass& g) {
  struct {
    std::string operator()(group::Icosahedral) const { return "A5"; }
    std::string operator()(group::Octahedral) const { return "S4"; }
    std::string operator()(group::Tetrahedral) const { return "A4"; }
    std::string operator()(group::Dihedral d) const { return "D:" + std::to_string(d.m); }
    std::string operator()(group::Cyclic c) const { return "C:" + std::to_string(c.m); }
  } v;
  return std::visit(v, g);
}

/// Length of the shortest orbit of the group on P^1: the vertices of the
/// icosahedron / octahedron / tetrahedron, the two poles, a fixed point.
inline int smallest_orbit(const GroupClass& g) {
  struct {
    int operator()(group::Icosahedral) const { return 12; }
    int operator()(group::Octahedral) const { return 6; }
    int operator()(group::Tetrahedral) const { return 4; }
    int operator()(group::Dihedral) const { return 2; }
    int operator()(group::Cyclic) const { return 1; }
  } v;
  return std::visit(v, g);
}

/// Invariant alpha of P^1: half the smallest orbit length.
inline Rational alpha_g_p1(const GroupClass& g) { return Rational(smallest_orbit(g), 2); }

/// Brute-force global lct. Enumerates effective divisors D of degree
/// 2 - sum a_i supported on the boundary points plus one extra point, with
/// D split in proportions j_P / q for every q <= denom_bound (q = 1 gives
/// the fully concentrated divisors). For each D the largest admissible
/// lambda is min over the support of (1 - a_P) / D_P; the infimum over the
/// enumeration is returned.
inline Rational lct_oracle(const Boundary& b, int denom_bound) {
  if (denom_bound < 2) throw InvalidParameters("lct_oracle needs denom_bound >= 2");
  std::vector<Rational> points = b.coefficients();
  points.push_back(0);
  const Rational total = 2 - b.degree();
  const std::size_t r = points.size();

  std::optional<Rational> best;
  std::vector<int> parts(r, 0);
  // Distributes `remaining` units over parts[i..r-1].
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int q) {
    if (i + 1 == r) {
      parts[i] = remaining;
      std::optional<Rational> lambda;
      for (std::size_t p = 0; p < r; ++p) {
        if (parts[p] == 0) continue;
        const Rational mass = total * Rational(parts[p], q);
        const Rational bound = (1 - points[p]) / mass;
        if (!lambda || bound < *lambda) lambda = bound;
      }
      if (!best || *lambda < *best) best = lambda;
      return;
    }
    for (int j = 0; j <= remaining; ++j) {
      parts[i] = j;
      rec(i + 1, remaining - j, q);
    }
  };
  for (int q = 1; q <= denom_bound; ++q) rec(0, q, q);
  return *best;
}

}  // namespace kollar
