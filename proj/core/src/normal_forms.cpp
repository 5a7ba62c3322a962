#include "adel/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace adel {
namespace {

void floor_div(Integer& q, const Integer& a, const Integer& b) {
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Quotient rounded to nearest, so the remainder has |rem| <= |b| / 2.
void round_div(Integer& q, const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  Integer den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && sgn(m(i, j)) != 0) return false;
  return true;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  Integer q;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    // Euclid on the column: bring the smallest nonzero entry to row r and
    // reduce the rows below by rounded quotients until they vanish.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t k = r; k < h.rows(); ++k)
        if (sgn(h(k, col)) != 0 && (best == h.rows() || mpz_cmpabs(h(k, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0)) best = k;
      if (best == h.rows()) break;
      if (best != r) {
        h.swap_rows(r, best);
        u.swap_rows(r, best);
      }
      bool done = true;
      for (std::size_t k = r + 1; k < h.rows(); ++k) {
        if (sgn(h(k, col)) == 0) continue;
        round_div(q, h(k, col), h(r, col));
        q = -q;
        h.add_row_multiple(k, r, q);
        u.add_row_multiple(k, r, q);
        if (sgn(h(k, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, col)) == 0) continue;
    if (sgn(h(r, col)) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (sgn(h(k, col)) == 0) continue;
      floor_div(q, h(k, col), h(r, col));
      if (sgn(q) == 0) continue;
      q = -q;
      h.add_row_multiple(k, r, q);
      u.add_row_multiple(k, r, q);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SmithInvariants::torsion() const {
  std::vector<Integer> t;
  for (const auto& d : factors)
    if (d > 1) t.push_back(d);
  return t;
}

bool SmithInvariants::isomorphic(const SmithInvariants& other) const {
  return free_rank == other.free_rank && torsion() == other.torsion();
}

SmithForm smith_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  for (;;) {
    // Alternate row and column Hermite passes until only the diagonal survives.
    // At least one pass runs so that nonzero entries come first.
    do {
      HermiteForm rows = hnf(out.D);
      out.P = rows.U * out.P;
      HermiteForm cols = hnf(rows.H.transposed());
      out.Q = out.Q * cols.U.transposed();
      out.D = cols.H.transposed();
    } while (!is_diagonal(out.D));
    const std::size_t n = std::min(out.D.rows(), out.D.cols());
    std::size_t rank = 0;
    while (rank < n && sgn(out.D(rank, rank)) != 0) ++rank;
    // Enforce divisibility: adding column j to column i puts d_j below d_i, and
    // the next row pass replaces d_i by gcd(d_i, d_j).
    bool fixed = true;
    for (std::size_t i = 0; i < rank && fixed; ++i)
      for (std::size_t j = i + 1; j < rank; ++j)
        if (!mpz_divisible_p(out.D(j, j).get_mpz_t(), out.D(i, i).get_mpz_t())) {
          for (std::size_t k = 0; k < out.D.rows(); ++k) out.D(k, i) += out.D(k, j);
          for (std::size_t k = 0; k < out.Q.rows(); ++k) out.Q(k, i) += out.Q(k, j);
          fixed = false;
          break;
        }
    if (fixed) {
      out.rank = rank;
      return out;
    }
  }
}

SmithInvariants snf(const IntMatrix& m) {
  SmithForm s = smith_form(m);
  SmithInvariants inv;
  for (std::size_t i = 0; i < s.rank; ++i) inv.factors.push_back(s.D(i, i));
  inv.free_rank = m.cols() - s.rank;
  return inv;
}

std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: A and B must have equal column counts");
  const HermiteForm hf = hnf(a);
  IntMatrix x(b.rows(), a.rows());
  IntVector y(a.rows());
  for (std::size_t row = 0; row < b.rows(); ++row) {
    IntVector residual = b.row_copy(row);
    std::fill(y.begin(), y.end(), Integer(0));
    for (std::size_t i = 0; i < hf.rank; ++i) {
      const std::size_t p = hf.pivot_cols[i];
      for (std::size_t j = (i == 0 ? 0 : hf.pivot_cols[i - 1] + 1); j < p; ++j)
        if (sgn(residual[j]) != 0) return std::nullopt;
      if (sgn(residual[p]) == 0) continue;
      if (!mpz_divisible_p(residual[p].get_mpz_t(), hf.H(i, p).get_mpz_t())) return std::nullopt;
      y[i] = residual[p] / hf.H(i, p);
      const auto hr = hf.H.row(i);
      for (std::size_t j = p; j < residual.size(); ++j)
        if (sgn(hr[j]) != 0) residual[j] -= y[i] * hr[j];
    }
    if (!is_zero(residual)) return std::nullopt;
    const IntVector sol = y * hf.U;
    std::copy(sol.begin(), sol.end(), x.row(row).begin());
  }
  return x;
}

IntMatrix left_kernel(const IntMatrix& a) {
  const HermiteForm hf = hnf(a);
  return hf.U.row_range(hf.rank, a.rows() - hf.rank);
}

IntMatrix row_basis(const IntMatrix& a) {
  const HermiteForm hf = hnf(a);
  return hf.H.row_range(0, hf.rank);
}

}  // namespace adel
