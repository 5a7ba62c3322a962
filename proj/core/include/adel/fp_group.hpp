#pragma once

#include <cstddef>

#include "adel/int_matrix.hpp"
#include "adel/normal_forms.hpp"

namespace adel {

/// Finitely presented abelian group Z^ngens / rowspan(relations).
///
/// The Hermite form of the relation matrix is computed once at construction;
/// canonical representatives reduce into it, so two vectors denote the same
/// element iff their canonical representatives coincide.
class FpAbGroup {
 public:
  FpAbGroup() = default;
  explicit FpAbGroup(std::size_t ngens);
  FpAbGroup(std::size_t ngens, IntMatrix relations);

  std::size_t ngens() const { return ngens_; }
  const IntMatrix& relations() const { return relations_; }
  /// Nonzero rows of the relation Hermite form.
  const IntMatrix& reduced_relations() const { return basis_; }

  struct Reduction {
    IntVector rep;
    /// v - rep = coefficients · relations()
    IntVector coefficients;
  };

  IntVector canonical_rep(const IntVector& v) const;
  Reduction reduce(const IntVector& v) const;
  bool is_zero(const IntVector& v) const;
  bool equal(const IntVector& a, const IntVector& b) const;

  SmithInvariants invariants() const;
  bool is_trivial() const;

 private:
  std::size_t ngens_ = 0;
  IntMatrix relations_;
  IntMatrix basis_;
  IntMatrix basis_transform_;  // basis_ = basis_transform_ · relations_
  std::vector<std::size_t> pivots_;
};

/// Homomorphism between finitely presented groups, given on generators:
/// generator i of the source maps to row i of `matrix`.
struct GroupHom {
  FpAbGroup source;
  FpAbGroup target;
  IntMatrix matrix;

  /// Relations are sent into relations.
  bool well_defined() const;
  IntVector apply(const IntVector& v) const;
};

/// S / (S ∩ D) for sublattices S (generated by the rows of `gens`) and D
/// (rows of `denominator`) of Z^ambient, presented on a lattice basis of S.
struct Subquotient {
  IntMatrix basis;  // rows span S
  FpAbGroup group;  // on basis.rows() generators
};

Subquotient subquotient(const IntMatrix& gens, const IntMatrix& denominator);

/// Generators of {x : x·M ∈ rowspan(R)}.
IntMatrix preimage_generators(const IntMatrix& m, const IntMatrix& r);

Subquotient kernel_group(const GroupHom& f);
Subquotient cokernel_group(const GroupHom& f);
Subquotient image_group(const GroupHom& f);
/// ker(g) / (ker(g) ∩ im(f)) in the middle group of X -f-> Y -g-> Z.
Subquotient homology_group(const GroupHom& f, const GroupHom& g);

}  // namespace adel
