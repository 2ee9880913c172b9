// Cyclic quotient singularities 1/n(1,q) and their Hirzebruch-Jung chains.
#pragma once

#include "kollar/dual_graph.hpp"
#include "kollar/errors.hpp"

#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace kollar {

/// The singularity 1/n(1,q): n >= 2, 1 <= q < n, gcd(n,q) = 1.
class CyclicQuotient {
 public:
  CyclicQuotient(long long n, long long q) : n_(n), q_(q) {
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
      throw InvalidParameters("1/" + std::to_string(n) + "(1," + std::to_string(q) +
                              ") needs n >= 2, 1 <= q < n, gcd(n,q) = 1");
  }

  long long n() const noexcept { return n_; }
  long long q() const noexcept { return q_; }

  /// Du Val (type A_{n-1}) exactly when q = n - 1.
  bool is_du_val() const noexcept { return q_ == n_ - 1; }

  std::string descriptor() const {
    return "1/" + std::to_string(n_) + "(1," + std::to_string(q_) + ")";
  }

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  long long n_;
  long long q_;
};

/// Entries b_1..b_r (all >= 2) of n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)).
inline std::vector<int> hj_chain(const CyclicQuotient& s) {
  std::vector<int> out;
  long long n = s.n();
  long long q = s.q();
  while (q > 0) {
    const long long b = (n + q - 1) / q;
    out.push_back(static_cast<int>(b));
    const long long next = q * b - n;
    n = q;
    q = next;
  }
  return out;
}

/// Inverse of hj_chain: evaluates the negative continued fraction exactly.
inline CyclicQuotient chain_to_pair(std::span<const int> chain) {
  if (chain.empty()) throw InvalidChain("empty chain");
  for (int b : chain)
    if (b < 2) throw InvalidChain("entry " + std::to_string(b) + " < 2");
  // Backwards: value = p/r with p/r = b - 1/(previous value).
  long long p = chain.back();
  long long r = 1;
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    long long np = 0;
    if (__builtin_mul_overflow(static_cast<long long>(chain[i]), p, &np) || __builtin_sub_overflow(np, r, &np))
      throw InvalidChain("continued fraction overflows 64-bit integers");
    r = p;
    p = np;
  }
  return CyclicQuotient(p, r);
}

inline CyclicQuotient chain_to_pair(std::initializer_list<int> chain) {
  return chain_to_pair(std::span<const int>(chain.begin(), chain.size()));
}

/// Minimal resolution graph: chain with self-intersections -b_1..-b_r.
inline DualGraph resolution_graph(const CyclicQuotient& s) {
  std::vector<int> selfs;
  for (int b : hj_chain(s)) selfs.push_back(-b);
  return build_chain(selfs);
}

}  // namespace kollar
