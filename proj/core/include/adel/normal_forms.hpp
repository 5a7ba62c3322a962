#pragma once

#include <optional>
#include <vector>

#include "adel/int_matrix.hpp"

namespace adel {

/// Row-style Hermite normal form with its left transformation: U·M = H.
///
/// H is in row echelon form with positive pivots, every entry above a pivot
/// lies in [0, pivot), and zero rows sit at the bottom. U is unimodular.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  /// Column of the pivot of row i, for i < rank.
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hnf(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... | dk (all nonzero, unit factors included)
/// and the free rank of Z^cols / rowspan(M).
struct SmithInvariants {
  std::vector<Integer> factors;
  std::size_t free_rank = 0;

  /// Factors greater than one: the torsion part of the group.
  std::vector<Integer> torsion() const;
  bool trivial_group() const { return free_rank == 0 && torsion().empty(); }
  /// Same abelian group up to isomorphism.
  bool isomorphic(const SmithInvariants& other) const;

  friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

SmithInvariants snf(const IntMatrix& m);

/// Smith form with transformations: P·M·Q = D, P and Q unimodular, D diagonal
/// with d1 | d2 | ... and zeros last.
struct SmithForm {
  IntMatrix D;
  IntMatrix P;
  IntMatrix Q;
  std::size_t rank = 0;
};

SmithForm smith_form(const IntMatrix& m);

/// Some X with X·A = B, or nothing when no integer solution exists.
/// Throws std::invalid_argument when A.cols != B.cols.
std::optional<IntMatrix> solve_left(const IntMatrix& a, const IntMatrix& b);

/// Lattice basis (as rows) of {y : y·A = 0}.
IntMatrix left_kernel(const IntMatrix& a);

/// Echelon basis (as rows) of the row lattice of A.
IntMatrix row_basis(const IntMatrix& a);

}  // namespace adel
