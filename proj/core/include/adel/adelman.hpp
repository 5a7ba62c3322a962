#pragma once

#include <optional>
#include <string>

#include "adel/additive.hpp"

namespace adel {

/// Object of Adel(C(Q,R)⊕): a composable pair r --rho--> a --gamma--> c.
class AdelObject {
 public:
  AdelObject() = default;
  /// Throws adel::Error when rho.target != gamma.source.
  AdelObject(MatMorphism rho, MatMorphism gamma);

  const MatMorphism& rel() const { return rho_; }
  const MatMorphism& corel() const { return gamma_; }
  const TupleObject& relations() const { return rho_.source(); }
  const TupleObject& middle() const { return rho_.target(); }
  const TupleObject& corelations() const { return gamma_.target(); }
  const CategoryRef& category() const { return rho_.category(); }

  std::string to_string() const;

  /// Structural equality of the presenting matrices.
  friend bool operator==(const AdelObject&, const AdelObject&) = default;

 private:
  MatMorphism rho_;
  MatMorphism gamma_;
};

/// Certificate (σ₁, σ₂) that a datum α: a -> b between objects A, B is
/// null-homotopic: α = σ₁·ρ_B + γ_A·σ₂ with σ₁: a -> r_B, σ₂: c_A -> b.
struct WitnessPair {
  MatMorphism sigma1;
  MatMorphism sigma2;
};

/// Morphism {ω, α, ψ}: ρ_A·α = ω·ρ_B and γ_A·ψ = α·γ_B. Witnesses are found
/// (or checked) at construction and kept with the value.
class AdelMorphism {
 public:
  AdelMorphism() = default;

  const AdelObject& source() const { return source_; }
  const AdelObject& target() const { return target_; }
  const MatMorphism& datum() const { return datum_; }
  const MatMorphism& omega() const { return omega_; }
  const MatMorphism& psi() const { return psi_; }
  const CategoryRef& category() const { return datum_.category(); }

  std::string to_string() const { return datum_.to_string(); }

  friend AdelMorphism operator*(const AdelMorphism& f, const AdelMorphism& g);
  friend AdelMorphism operator+(const AdelMorphism& f, const AdelMorphism& g);
  friend AdelMorphism operator-(const AdelMorphism& f, const AdelMorphism& g);
  friend AdelMorphism operator-(const AdelMorphism& f);
  AdelMorphism scaled(const Integer& k) const;

  /// Structural equality (data and witnesses); use is_equal for equality in Adel.
  friend bool operator==(const AdelMorphism&, const AdelMorphism&) = default;

  friend std::optional<AdelMorphism> make_morphism(const AdelObject&, const AdelObject&, const MatMorphism&);
  friend AdelMorphism with_witnesses(const AdelObject&, const AdelObject&, MatMorphism, MatMorphism, MatMorphism);

 private:
  AdelMorphism(AdelObject s, AdelObject t, MatMorphism datum, MatMorphism omega, MatMorphism psi)
      : source_(std::move(s)), target_(std::move(t)), datum_(std::move(datum)),
        omega_(std::move(omega)), psi_(std::move(psi)) {}

  AdelObject source_;
  AdelObject target_;
  MatMorphism datum_;
  MatMorphism omega_;
  MatMorphism psi_;
};

/// Searches for ω and ψ; nothing when the datum is not a morphism.
std::optional<AdelMorphism> make_morphism(const AdelObject& source, const AdelObject& target,
                                          const MatMorphism& datum);
/// Like make_morphism, but throws adel::Error when no witnesses exist.
AdelMorphism morphism(const AdelObject& source, const AdelObject& target, const MatMorphism& datum);
/// Builds a morphism from supplied witnesses; throws adel::Error unless both squares commute.
AdelMorphism with_witnesses(const AdelObject& source, const AdelObject& target, MatMorphism datum,
                            MatMorphism omega, MatMorphism psi);

/// (0 -> x -> 0).
AdelObject emb(const CategoryRef& cat, const TupleObject& x);
/// Datum α with zero witnesses.
AdelMorphism emb(const MatMorphism& alpha);
AdelObject zero_object(const CategoryRef& cat);
AdelMorphism identity(const AdelObject& x);
AdelMorphism zero_morphism(const AdelObject& source, const AdelObject& target);

/// A certificate for φ = 0 in Adel, if there is one.
std::optional<WitnessPair> is_zero_morphism(const AdelMorphism& phi);
/// A certificate for φ − φ′ = 0.
std::optional<WitnessPair> is_equal(const AdelMorphism& phi, const AdelMorphism& phi2);
/// Re-checks a zero certificate by matrix arithmetic.
bool check_zero(const AdelMorphism& phi, const WitnessPair& w);

struct Cokernel {
  AdelObject object;
  AdelMorphism projection;
  /// Certifies φ·projection = 0.
  WitnessPair witness;
};

struct Kernel {
  AdelObject object;
  AdelMorphism embedding;
  /// Certifies embedding·φ = 0.
  WitnessPair witness;
};

Cokernel cokernel(const AdelMorphism& phi);
/// The morphism out of cokernel(φ) induced by τ, given w certifying φ·τ = 0.
AdelMorphism cokernel_colift(const AdelMorphism& phi, const AdelMorphism& tau, const WitnessPair& w);
Kernel kernel(const AdelMorphism& phi);
/// The morphism into kernel(φ) induced by τ, given w certifying τ·φ = 0.
AdelMorphism kernel_lift(const AdelMorphism& phi, const AdelMorphism& tau, const WitnessPair& w);

/// The same datum over the opposite category, arrows reversed.
AdelObject dualize(const AdelObject& x);
AdelMorphism dualize(const AdelMorphism& phi);
/// Turns a certificate for φ = 0 into one for dualize(φ) = 0.
WitnessPair dualize(const WitnessPair& w);

std::optional<WitnessPair> is_zero_object(const AdelObject& x);
bool is_mono(const AdelMorphism& phi);
bool is_epi(const AdelMorphism& phi);
bool is_iso(const AdelMorphism& phi);
/// ι₁ ≤ ι₂ as subobjects of a common target; throws adel::Error on non-monos.
bool subobject_leq(const AdelMorphism& iota1, const AdelMorphism& iota2);

/// An epi ε: A -> B identified with the cokernel of its kernel.
struct EpiComparison {
  Kernel kernel;           // of ε
  Cokernel cokernel;       // of kernel.embedding
  AdelMorphism comparison; // ν: B -> cokernel.object with ε·ν = cokernel.projection
  WitnessPair triangle;    // certifies ε·ν − cokernel.projection = 0
};

/// Throws adel::Error when ε is not an epi.
EpiComparison epi_as_cokernel(const AdelMorphism& epsilon);
/// τ: A -> T with w certifying kernel(ε).embedding·τ = 0 factors as ε·result.
AdelMorphism colift_along_epi(const AdelMorphism& epsilon, const AdelMorphism& tau, const WitnessPair& w);
std::optional<AdelMorphism> colift_along_epi(const AdelMorphism& epsilon, const AdelMorphism& tau);
/// τ: T -> A with w certifying τ·cokernel(ι).projection = 0 factors as result·ι.
AdelMorphism lift_along_mono(const AdelMorphism& iota, const AdelMorphism& tau, const WitnessPair& w);
std::optional<AdelMorphism> lift_along_mono(const AdelMorphism& iota, const AdelMorphism& tau);

/// Homology of X --φ--> Y --ψ--> Z: the image of
/// kernel(ψ).embedding · cokernel(φ).projection.
struct Homology {
  Kernel kernel;        // of ψ
  Cokernel cokernel;    // of φ
  AdelMorphism composite;
  AdelObject object;
  /// object -> cokernel.object, a mono.
  AdelMorphism embedding;
  /// kernel.object -> object, an epi, with corestriction·embedding = composite.
  AdelMorphism corestriction;
};

Homology homology(const AdelMorphism& phi, const AdelMorphism& psi);

struct ExactnessCheck {
  WitnessPair composite_zero;
  /// Present iff the sequence is exact.
  std::optional<WitnessPair> homology_zero;
  bool exact() const { return homology_zero.has_value(); }
};

/// Throws adel::Error when φ·ψ is not zero.
ExactnessCheck check_exactness(const AdelMorphism& phi, const AdelMorphism& psi);
bool is_exact(const AdelMorphism& phi, const AdelMorphism& psi);

/// [β]: (a --α--> b --βγ--> d) -> (a --αβ--> c --γ--> d); throws adel::Error unless αβγ = 0.
AdelMorphism connecting_homomorphism(const MatMorphism& alpha, const MatMorphism& beta, const MatMorphism& gamma);

}  // namespace adel
