#include "adel/fp_group.hpp"

#include <stdexcept>

namespace adel {

FpAbGroup::FpAbGroup(std::size_t ngens) : FpAbGroup(ngens, IntMatrix(0, ngens)) {}

FpAbGroup::FpAbGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
  if (relations_.cols() != ngens_) throw std::invalid_argument("FpAbGroup: relation width differs from generator count");
  HermiteForm hf = hnf(relations_);
  basis_ = hf.H.row_range(0, hf.rank);
  basis_transform_ = hf.U.row_range(0, hf.rank);
  pivots_ = std::move(hf.pivot_cols);
}

FpAbGroup::Reduction FpAbGroup::reduce(const IntVector& v) const {
  if (v.size() != ngens_) throw std::invalid_argument("FpAbGroup: vector length differs from generator count");
  Reduction out{v, IntVector(relations_.rows())};
  IntVector basis_coeffs(basis_.rows());
  Integer q;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    mpz_fdiv_q(q.get_mpz_t(), out.rep[p].get_mpz_t(), basis_(i, p).get_mpz_t());
    if (sgn(q) == 0) continue;
    basis_coeffs[i] = q;
    const auto row = basis_.row(i);
    for (std::size_t j = p; j < ngens_; ++j)
      if (sgn(row[j]) != 0) out.rep[j] -= q * row[j];
  }
  if (basis_.rows() > 0) out.coefficients = basis_coeffs * basis_transform_;
  return out;
}

IntVector FpAbGroup::canonical_rep(const IntVector& v) const { return reduce(v).rep; }

bool FpAbGroup::is_zero(const IntVector& v) const { return adel::is_zero(canonical_rep(v)); }

bool FpAbGroup::equal(const IntVector& a, const IntVector& b) const { return is_zero(a - b); }

SmithInvariants FpAbGroup::invariants() const { return snf(relations_); }

bool FpAbGroup::is_trivial() const { return invariants().trivial_group(); }

bool GroupHom::well_defined() const {
  if (matrix.rows() != source.ngens() || matrix.cols() != target.ngens()) return false;
  const IntMatrix images = source.relations() * matrix;
  for (std::size_t i = 0; i < images.rows(); ++i)
    if (!target.is_zero(images.row_copy(i))) return false;
  return true;
}

IntVector GroupHom::apply(const IntVector& v) const { return target.canonical_rep(v * matrix); }

IntMatrix preimage_generators(const IntMatrix& m, const IntMatrix& r) {
  if (m.cols() != r.cols()) throw std::invalid_argument("preimage_generators: width mismatch");
  const IntMatrix k = left_kernel(vstack(m, r));
  return k.col_range(0, m.rows());
}

Subquotient subquotient(const IntMatrix& gens, const IntMatrix& denominator) {
  if (gens.cols() != denominator.cols()) throw std::invalid_argument("subquotient: width mismatch");
  IntMatrix basis = row_basis(gens);
  IntMatrix rel = preimage_generators(basis, denominator);
  const std::size_t k = basis.rows();
  return {std::move(basis), FpAbGroup(k, std::move(rel))};
}

Subquotient kernel_group(const GroupHom& f) {
  const IntMatrix gens = preimage_generators(f.matrix, f.target.relations());
  return subquotient(gens, f.source.relations());
}

Subquotient cokernel_group(const GroupHom& f) {
  return subquotient(IntMatrix::identity(f.target.ngens()), vstack(f.target.relations(), f.matrix));
}

Subquotient image_group(const GroupHom& f) { return subquotient(f.matrix, f.target.relations()); }

Subquotient homology_group(const GroupHom& f, const GroupHom& g) {
  if (f.matrix.cols() != g.matrix.rows()) throw std::invalid_argument("homology_group: maps are not composable");
  const IntMatrix ker = preimage_generators(g.matrix, g.target.relations());
  return subquotient(ker, vstack(g.source.relations(), f.matrix));
}

}  // namespace adel
