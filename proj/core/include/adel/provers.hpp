#pragma once

#include <map>
#include <string>
#include <vector>

#include "adel/adelman.hpp"
#include "adel/homgroups.hpp"

namespace adel {

/// A solved homotopy equation α = σ₁·β + γ·σ₂, kept so it can be re-checked
/// without searching again. Commuting squares ρ·α = ω·ρ′ are stored the same
/// way with γ = 0.
struct Certificate {
  std::string label;
  MatMorphism alpha;
  MatMorphism beta;
  MatMorphism gamma;
  MatMorphism sigma1;
  MatMorphism sigma2;

  bool verify() const;
};

/// Certificate for φ = 0 in Adel.
Certificate zero_certificate(std::string label, const AdelMorphism& phi, const WitnessPair& w);
/// The two commuting squares carried by a morphism.
std::vector<Certificate> morphism_certificates(const std::string& label, const AdelMorphism& phi);

struct ProofCheck {
  std::string description;
  bool passed = false;
  std::string detail;
  std::vector<Certificate> certificates;
};

struct ProofReport {
  std::string lemma;
  std::vector<ProofCheck> checks;

  bool passed() const;
  void add(ProofCheck check) { checks.push_back(std::move(check)); }
};

/// Re-verifies every certificate of every passing check.
bool replay(const ProofReport& report);

/// The snake category: a --alpha--> b --beta--> c --gamma--> d with alpha*beta*gamma = 0.
CategoryRef snake_category();
/// The refined 5-lemma category on i, a, b, c, f, g, h, j.
CategoryRef five_lemma_category();

/// Objects and arrows of the snake diagram.
struct SnakeDiagram {
  CategoryRef cat;
  std::map<std::string, AdelObject> objects;
  std::map<std::string, AdelMorphism> arrows;
  std::vector<std::string> object_order;
  std::vector<std::string> arrow_order;
};

/// `multiplier` scales the connecting arrow [β].
SnakeDiagram snake_diagram(const Integer& multiplier = 1);

ProofReport prove_snake(const Integer& multiplier = 1);

struct SweepPoint {
  Integer s;
  bool exact = false;
  /// The displayed witness pair for the vanishing homology re-verifies.
  bool displayed_witness_verifies = false;
};

std::vector<SweepPoint> exactness_sweep(const std::vector<Integer>& s_values);

ProofReport prove_connecting_uniqueness();
ProofReport prove_refined_five();

/// Comparison T -> H for a candidate t: T -> cokernel of the homology pair,
/// obtained by lifting t along the homology embedding.
std::optional<AdelMorphism> homology_comparison(const Homology& h, const AdelMorphism& t);

}  // namespace adel
