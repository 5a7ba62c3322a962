#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adel/adelman.hpp"
#include "adel/fp_group.hpp"

namespace adel {

/// Additive functor C(Q,R) -> free abelian groups: vertex v goes to Z^ranks[v],
/// arrow k to matrices[k] (rank(source) x rank(target), acting on row vectors).
struct Representation {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> matrices;
};

/// Shapes are checked (adel::Error on mismatch); true iff every relation
/// evaluates to zero.
bool check_representation(const PathCategory& cat, const Representation& rep);

IntMatrix evaluate(const PathCategory& cat, const Representation& rep, const Path& p);
IntMatrix evaluate(const PathCategory& cat, const Representation& rep, const LinMorphism& f);
IntMatrix evaluate(const PathCategory& cat, const Representation& rep, const MatMorphism& f);
std::size_t evaluated_rank(const Representation& rep, const TupleObject& x);

/// Value of the induced exact functor on an Adel object: the homology of
/// F r -> F a -> F c, presented on a lattice basis of ker Fγ.
struct EvaluatedObject {
  IntMatrix basis;  // rows: generators inside Z^{F a}
  FpAbGroup group;
};

EvaluatedObject eval_object(const Representation& rep, const AdelObject& x);

struct EvaluatedMorphism {
  EvaluatedObject source;
  EvaluatedObject target;
  GroupHom map;
};

EvaluatedMorphism eval_morphism(const Representation& rep, const AdelMorphism& phi);

/// Mismatches between Adel constructions and their counterparts computed
/// directly on abelian groups; empty means agreement.
struct OracleReport {
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
  void merge(const OracleReport& other);
};

OracleReport oracle_kernel(const Representation& rep, const AdelMorphism& phi);
OracleReport oracle_cokernel(const Representation& rep, const AdelMorphism& phi);
OracleReport oracle_homology(const Representation& rep, const AdelMorphism& phi, const AdelMorphism& psi);
/// When the pair is exact in Adel, the evaluated pair must be exact too.
OracleReport oracle_exactness(const Representation& rep, const AdelMorphism& phi, const AdelMorphism& psi);

/// Ranks in [0, max_rank], entries in [-2, 2]. Draws that violate relations
/// are redrawn a few times and then repaired by zeroing arrows (or ranks, for
/// relations between identities) until every relation holds.
Representation random_representation(const PathCategory& cat, std::mt19937_64& rng, std::size_t max_rank = 3);

}  // namespace adel
