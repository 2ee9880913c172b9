// Integer intersection matrices and exact symmetric elimination over them.
#pragma once

#include "kollar/rational.hpp"

#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace kollar {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("IntMatrix must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  long long operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  long long& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Principal submatrix on the given row/column indices, in that order.
  IntMatrix principal(std::span<const std::size_t> idx) const {
    IntMatrix out(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<long long> data_;
};

/// Exact A = L D L^T factorization of a symmetric integer matrix without
/// pivoting. Rows are kept sparse, so tree-shaped lattices factor in
/// near-linear time. The k-th pivot equals the ratio of the k-th and
/// (k-1)-th leading principal minors, which makes the sign test for
/// negative definiteness a by-product of the factorization.
class LdlFactorization {
 public:
  explicit LdlFactorization(const IntMatrix& m) : n_(m.size()) {
    if (!m.is_symmetric()) throw std::invalid_argument("LdlFactorization needs a symmetric matrix");
    std::vector<Rational> diag(n_);
    std::vector<std::map<std::size_t, Rational>> upper(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      diag[i] = m(i, i);
      for (std::size_t j = i + 1; j < n_; ++j)
        if (m(i, j) != 0) upper[i].emplace(j, Rational(m(i, j)));
    }
    eliminate(std::move(diag), std::move(upper));
  }

  /// Sparse input: diagonal entries plus off-diagonal entries (i, j, value),
  /// each unordered pair listed once.
  LdlFactorization(std::span<const long long> diagonal,
                   std::span<const std::tuple<std::size_t, std::size_t, long long>> off_diagonal)
      : n_(diagonal.size()) {
    std::vector<Rational> diag(diagonal.begin(), diagonal.end());
    std::vector<std::map<std::size_t, Rational>> upper(n_);
    for (const auto& [i, j, v] : off_diagonal) {
      if (i == j || i >= n_ || j >= n_) throw std::invalid_argument("bad off-diagonal entry");
      if (v != 0) upper[std::min(i, j)][std::max(i, j)] += v;
    }
    eliminate(std::move(diag), std::move(upper));
  }

  std::size_t size() const noexcept { return n_; }

  /// False when some leading principal minor was zero.
  bool complete() const noexcept { return pivots_.size() == n_; }

  const std::vector<Rational>& pivots() const noexcept { return pivots_; }

  bool negative_definite() const {
    if (!complete()) return false;
    for (const auto& p : pivots_)
      if (p >= 0) return false;
    return true;
  }

  /// Product of the pivots. Requires complete().
  Rational determinant() const {
    assert(complete());
    Rational det = 1;
    for (const auto& p : pivots_) det *= p;
    return det;
  }

  /// Solves A x = rhs. Requires complete().
  std::vector<Rational> solve(std::span<const Rational> rhs) const {
    if (!complete()) throw std::logic_error("solve on a singular leading block");
    if (rhs.size() != n_) throw std::invalid_argument("rhs size mismatch");
    std::vector<Rational> x(rhs.begin(), rhs.end());
    for (std::size_t k = 0; k < n_; ++k) {
      if (x[k] == 0) continue;
      for (const auto& [j, l] : lower_[k]) x[j] -= l * x[k];
    }
    for (std::size_t k = 0; k < n_; ++k) x[k] /= pivots_[k];
    for (std::size_t k = n_; k-- > 0;) {
      for (const auto& [j, l] : lower_[k]) x[k] -= l * x[j];
    }
    return x;
  }

 private:
  void eliminate(std::vector<Rational> diag, std::vector<std::map<std::size_t, Rational>> upper) {
    lower_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational d = diag[k];
      if (d == 0) return;  // leading minor vanishes; stop with an incomplete factorization
      pivots_.push_back(d);
      const auto& row = upper[k];
      for (auto it = row.begin(); it != row.end(); ++it) {
        const Rational scaled = it->second / d;
        diag[it->first] -= scaled * it->second;
        for (auto jt = std::next(it); jt != row.end(); ++jt) {
          auto& cell = upper[it->first][jt->first];
          cell -= scaled * jt->second;
          if (cell == 0) upper[it->first].erase(jt->first);
        }
        lower_[k].emplace_back(it->first, scaled);
      }
    }
  }

  std::size_t n_;
  std::vector<Rational> pivots_;
  // lower_[k] holds the nonzero entries L(j, k), j > k.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> lower_;
};

/// Exact determinant. Uses the sparse factorization, falling back to dense
/// elimination with row exchanges when a leading minor vanishes.
inline Integer determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  if (m.is_symmetric()) {
    LdlFactorization f(m);
    if (f.complete()) return numerator_of(f.determinant());
  }
  const std::size_t n = m.size();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      det = -det;
    }
    const Rational pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      const Rational f = a[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return numerator_of(det);
}

/// Negative definiteness via the sign pattern of the leading principal
/// minors. The empty lattice (smooth point) counts as contractible.
inline bool is_contractible(const IntMatrix& m) {
  if (m.empty()) return true;
  if (!m.is_symmetric()) return false;
  return LdlFactorization(m).negative_definite();
}

}  // namespace kollar
