#pragma once

// Reference computations that share no code with the normal-form routines:
// cofactor determinants and gcds of minors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "adel/int_matrix.hpp"
#include "adel/normal_forms.hpp"

namespace adel::oracle {

inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) sub(r - 1, k++) = m(r, c);
    const Integer term = m(0, j) * cofactor_det(sub);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// gcd of all k×k minors (the k-th determinantal divisor); 0 when all vanish.
inline Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  if (k > m.rows() || k > m.cols()) return 0;
  Integer g = 0;
  for (const auto& rs : subsets(m.rows(), k))
    for (const auto& cs : subsets(m.cols(), k)) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_det(sub).get_mpz_t());
    }
  return g;
}

inline std::size_t minor_rank(const IntMatrix& m) {
  std::size_t r = 0;
  while (r < std::min(m.rows(), m.cols()) && sgn(minor_gcd(m, r + 1)) != 0) ++r;
  return r;
}

/// Invariant factors of Z^cols / rowspan(m) as quotients of determinantal divisors.
inline SmithInvariants invariants_by_minors(const IntMatrix& m) {
  SmithInvariants inv;
  const std::size_t r = minor_rank(m);
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    const Integer d = minor_gcd(m, k);
    inv.factors.push_back(d / prev);
    prev = d;
  }
  inv.free_rank = m.cols() - r;
  return inv;
}

/// b lies in the row lattice of a: adding it changes neither the rank nor the
/// top determinantal divisor.
inline bool in_row_lattice(const IntMatrix& a, const IntVector& b) {
  const IntMatrix ab = vstack(a, IntMatrix::row_vector(b));
  const std::size_t r = minor_rank(a);
  if (minor_rank(ab) != r) return false;
  return minor_gcd(a, r) == minor_gcd(ab, r);
}

/// Small random matrix: shapes up to max_dim, entries up to `bound` in absolute
/// value (products through a narrow middle stay under 10^3 for max_dim <= 4),
/// with a share of zeros and of rank-deficient products.
inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> coin(0, 3);
  const std::size_t rows = dim(rng), cols = dim(rng);
  auto fill = [&](std::size_t r, std::size_t c, long b) {
    std::uniform_int_distribution<long> e(-b, b);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(rng) != 0) m(i, j) = e(rng);
    return m;
  };
  if (coin(rng) == 0) {
    // Product through a narrow middle: forces dependent rows.
    const std::size_t mid = std::max<std::size_t>(1, std::min(rows, cols) - 1);
    return fill(rows, mid, 15) * fill(mid, cols, 15);
  }
  return fill(rows, cols, bound);
}

}  // namespace adel::oracle
