#pragma once

#include <optional>
#include <vector>

#include "adel/adelman.hpp"
#include "adel/fp_group.hpp"
#include "adel/normal_forms.hpp"

namespace adel {

/// Hom_Adel(X, Y) as a finitely presented abelian group.
///
/// The group is presented in Smith-reduced form: generator i has order
/// orders[i] (0 for infinite order), and `generators[i]` is a morphism
/// representing it.
struct HomGroupPresentation {
  AdelObject source;
  AdelObject target;
  FpAbGroup group;
  std::vector<Integer> orders;
  std::vector<AdelMorphism> generators;
  SmithInvariants invariants;

  /// Coordinates of a datum middle(X) -> middle(Y) in the generators,
  /// torsion coordinates reduced into [0, order). Nothing when the datum is
  /// not a morphism X -> Y.
  std::optional<IntVector> coordinates(const MatMorphism& datum) const;

  // Layout data used by `coordinates`.
  IntMatrix lattice_basis;   // rows: basis of the lattice of well-defined data
  IntMatrix to_generators;   // lattice coordinates -> generator coordinates
  std::vector<std::size_t> kept;
};

HomGroupPresentation hom_group(const AdelObject& x, const AdelObject& y);

}  // namespace adel
