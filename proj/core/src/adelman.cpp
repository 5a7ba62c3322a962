#include "adel/adelman.hpp"

#include "adel/error.hpp"

namespace adel {

namespace {

MatMorphism zero(const CategoryRef& c, const TupleObject& s, const TupleObject& t) {
  return MatMorphism::zero(c, s, t);
}

MatMorphism id(const CategoryRef& c, const TupleObject& x) { return MatMorphism::identity(c, x); }

void require_same_category(const AdelMorphism& f, const AdelMorphism& g, const char* what) {
  if (f.category() != g.category()) throw Error(std::string(what) + ": morphisms live in different categories");
}

}  // namespace

AdelObject::AdelObject(MatMorphism rho, MatMorphism gamma) : rho_(std::move(rho)), gamma_(std::move(gamma)) {
  if (rho_.category() != gamma_.category()) throw Error("object: relation and corelation in different categories");
  if (rho_.target() != gamma_.source()) throw Error("object: relation target differs from corelation source");
}

std::string AdelObject::to_string() const {
  const PathCategory& c = *category();
  return "(" + adel::to_string(c, relations()) + " --" + rho_.to_string() + "--> " + adel::to_string(c, middle()) +
         " --" + gamma_.to_string() + "--> " + adel::to_string(c, corelations()) + ")";
}

std::optional<AdelMorphism> make_morphism(const AdelObject& source, const AdelObject& target,
                                          const MatMorphism& datum) {
  if (datum.category() != source.category() || datum.category() != target.category())
    throw Error("morphism: datum lives in another category");
  if (datum.source() != source.middle() || datum.target() != target.middle())
    throw Error("morphism: datum endpoints differ from the middle objects");
  const CategoryRef& c = datum.category();
  const TupleObject none;
  auto omega = decide_homotopy(source.rel() * datum, target.rel(), zero(c, source.relations(), none));
  if (!omega) return std::nullopt;
  auto psi = decide_homotopy(datum * target.corel(), zero(c, none, target.corelations()), source.corel());
  if (!psi) return std::nullopt;
  return AdelMorphism(source, target, datum, std::move(omega->sigma1), std::move(psi->sigma2));
}

AdelMorphism morphism(const AdelObject& source, const AdelObject& target, const MatMorphism& datum) {
  auto m = make_morphism(source, target, datum);
  if (!m) throw Error("morphism: datum " + datum.to_string() + " is not compatible with the relations");
  return *std::move(m);
}

AdelMorphism with_witnesses(const AdelObject& source, const AdelObject& target, MatMorphism datum,
                            MatMorphism omega, MatMorphism psi) {
  if (datum.source() != source.middle() || datum.target() != target.middle())
    throw Error("morphism: datum endpoints differ from the middle objects");
  if (omega.source() != source.relations() || omega.target() != target.relations() ||
      psi.source() != source.corelations() || psi.target() != target.corelations())
    throw Error("morphism: witness endpoints do not fit");
  if (!(source.rel() * datum == omega * target.rel())) throw Error("morphism: relation square does not commute");
  if (!(source.corel() * psi == datum * target.corel())) throw Error("morphism: corelation square does not commute");
  return AdelMorphism(source, target, std::move(datum), std::move(omega), std::move(psi));
}

AdelObject emb(const CategoryRef& cat, const TupleObject& x) {
  const TupleObject none;
  return AdelObject(zero(cat, none, x), zero(cat, x, none));
}

AdelMorphism emb(const MatMorphism& alpha) {
  const CategoryRef& c = alpha.category();
  const TupleObject none;
  return with_witnesses(emb(c, alpha.source()), emb(c, alpha.target()), alpha, zero(c, none, none),
                        zero(c, none, none));
}

AdelObject zero_object(const CategoryRef& cat) { return emb(cat, TupleObject{}); }

AdelMorphism identity(const AdelObject& x) {
  const CategoryRef& c = x.category();
  return with_witnesses(x, x, id(c, x.middle()), id(c, x.relations()), id(c, x.corelations()));
}

AdelMorphism zero_morphism(const AdelObject& source, const AdelObject& target) {
  const CategoryRef& c = source.category();
  return with_witnesses(source, target, zero(c, source.middle(), target.middle()),
                        zero(c, source.relations(), target.relations()),
                        zero(c, source.corelations(), target.corelations()));
}

AdelMorphism operator*(const AdelMorphism& f, const AdelMorphism& g) {
  require_same_category(f, g, "compose");
  if (!(f.target_ == g.source_)) throw Error("compose: target of the first morphism differs from source of the second");
  return AdelMorphism(f.source_, g.target_, f.datum_ * g.datum_, f.omega_ * g.omega_, f.psi_ * g.psi_);
}

AdelMorphism operator+(const AdelMorphism& f, const AdelMorphism& g) {
  require_same_category(f, g, "add");
  if (!(f.source_ == g.source_) || !(f.target_ == g.target_)) throw Error("add: morphisms are not parallel");
  return AdelMorphism(f.source_, f.target_, f.datum_ + g.datum_, f.omega_ + g.omega_, f.psi_ + g.psi_);
}

AdelMorphism operator-(const AdelMorphism& f, const AdelMorphism& g) { return f + (-g); }

AdelMorphism operator-(const AdelMorphism& f) { return f.scaled(-1); }

AdelMorphism AdelMorphism::scaled(const Integer& k) const {
  return AdelMorphism(source_, target_, datum_.scaled(k), omega_.scaled(k), psi_.scaled(k));
}

std::optional<WitnessPair> is_zero_morphism(const AdelMorphism& phi) {
  auto h = decide_homotopy(phi.datum(), phi.target().rel(), phi.source().corel());
  if (!h) return std::nullopt;
  return WitnessPair{std::move(h->sigma1), std::move(h->sigma2)};
}

std::optional<WitnessPair> is_equal(const AdelMorphism& phi, const AdelMorphism& phi2) {
  if (!(phi.source() == phi2.source()) || !(phi.target() == phi2.target()))
    throw Error("is_equal: morphisms are not parallel");
  return is_zero_morphism(phi - phi2);
}

bool check_zero(const AdelMorphism& phi, const WitnessPair& w) {
  return check_homotopy(phi.datum(), phi.target().rel(), phi.source().corel(), {w.sigma1, w.sigma2});
}

Cokernel cokernel(const AdelMorphism& phi) {
  const CategoryRef& c = phi.category();
  const AdelObject& A = phi.source();
  const AdelObject& B = phi.target();
  const TupleObject& a = A.middle();
  const TupleObject& b = B.middle();
  const TupleObject& ca = A.corelations();
  const TupleObject& rb = B.relations();
  const TupleObject& cb = B.corelations();

  AdelObject obj(MatMorphism::block({{B.rel(), zero(c, rb, ca)}, {phi.datum(), A.corel()}}),
                 MatMorphism::block({{B.corel(), zero(c, b, ca)}, {zero(c, ca, cb), id(c, ca)}}));
  AdelMorphism proj = with_witnesses(B, obj, MatMorphism::block({{id(c, b), zero(c, b, ca)}}),
                                     MatMorphism::block({{id(c, rb), zero(c, rb, a)}}),
                                     MatMorphism::block({{id(c, cb), zero(c, cb, ca)}}));
  WitnessPair w{MatMorphism::block({{zero(c, a, rb), id(c, a)}}),
                MatMorphism::block({{zero(c, ca, b), -id(c, ca)}})};
  return {std::move(obj), std::move(proj), std::move(w)};
}

AdelMorphism cokernel_colift(const AdelMorphism& phi, const AdelMorphism& tau, const WitnessPair& w) {
  if (!(tau.source() == phi.target())) throw Error("cokernel_colift: τ does not start at the target of φ");
  if (!check_zero(phi * tau, w)) throw Error("cokernel_colift: witness pair does not certify φ·τ = 0");
  const Cokernel cok = cokernel(phi);
  const AdelObject& T = tau.target();
  return with_witnesses(cok.object, T, MatMorphism::block({{tau.datum()}, {-w.sigma2}}),
                        MatMorphism::block({{tau.omega()}, {w.sigma1}}),
                        MatMorphism::block({{tau.psi()}, {-(w.sigma2 * T.corel())}}));
}

Kernel kernel(const AdelMorphism& phi) {
  const CategoryRef& c = phi.category();
  const AdelObject& A = phi.source();
  const AdelObject& B = phi.target();
  const TupleObject& a = A.middle();
  const TupleObject& b = B.middle();
  const TupleObject& ra = A.relations();
  const TupleObject& ca = A.corelations();
  const TupleObject& rb = B.relations();

  AdelObject obj(MatMorphism::block({{A.rel(), zero(c, ra, rb)}, {zero(c, rb, a), id(c, rb)}}),
                 MatMorphism::block({{A.corel(), phi.datum()}, {zero(c, rb, ca), B.rel()}}));
  AdelMorphism embedding = with_witnesses(obj, A, MatMorphism::block({{id(c, a)}, {zero(c, rb, a)}}),
                                          MatMorphism::block({{id(c, ra)}, {zero(c, rb, ra)}}),
                                          MatMorphism::block({{id(c, ca)}, {zero(c, b, ca)}}));
  WitnessPair w{MatMorphism::block({{zero(c, a, rb)}, {-id(c, rb)}}),
                MatMorphism::block({{zero(c, ca, b)}, {id(c, b)}})};
  return {std::move(obj), std::move(embedding), std::move(w)};
}

AdelMorphism kernel_lift(const AdelMorphism& phi, const AdelMorphism& tau, const WitnessPair& w) {
  if (!(tau.target() == phi.source())) throw Error("kernel_lift: τ does not end at the source of φ");
  if (!check_zero(tau * phi, w)) throw Error("kernel_lift: witness pair does not certify τ·φ = 0");
  const Kernel ker = kernel(phi);
  const AdelObject& T = tau.source();
  return with_witnesses(T, ker.object, MatMorphism::block({{tau.datum(), -w.sigma1}}),
                        MatMorphism::block({{tau.omega(), -(T.rel() * w.sigma1)}}),
                        MatMorphism::block({{tau.psi(), w.sigma2}}));
}

AdelObject dualize(const AdelObject& x) { return AdelObject(x.corel().opposite(), x.rel().opposite()); }

AdelMorphism dualize(const AdelMorphism& phi) {
  return with_witnesses(dualize(phi.target()), dualize(phi.source()), phi.datum().opposite(), phi.psi().opposite(),
                        phi.omega().opposite());
}

WitnessPair dualize(const WitnessPair& w) { return {w.sigma2.opposite(), w.sigma1.opposite()}; }

std::optional<WitnessPair> is_zero_object(const AdelObject& x) { return is_zero_morphism(identity(x)); }

bool is_mono(const AdelMorphism& phi) { return is_zero_object(kernel(phi).object).has_value(); }

bool is_epi(const AdelMorphism& phi) { return is_zero_object(cokernel(phi).object).has_value(); }

bool is_iso(const AdelMorphism& phi) { return is_mono(phi) && is_epi(phi); }

bool subobject_leq(const AdelMorphism& iota1, const AdelMorphism& iota2) {
  if (!(iota1.target() == iota2.target())) throw Error("subobject_leq: subobjects of different objects");
  if (!is_mono(iota1) || !is_mono(iota2)) throw Error("subobject_leq: inputs must be monomorphisms");
  return is_zero_morphism(iota1 * cokernel(iota2).projection).has_value();
}

EpiComparison epi_as_cokernel(const AdelMorphism& epsilon) {
  const CategoryRef& c = epsilon.category();
  const AdelObject& A = epsilon.source();
  const AdelObject& B = epsilon.target();
  const TupleObject& a = A.middle();
  const TupleObject& ra = A.relations();
  const TupleObject& ca = A.corelations();
  const TupleObject& b = B.middle();
  const TupleObject& rb = B.relations();

  // ε is epi iff its cokernel projection vanishes; the witness pair splits as
  // σ₁ = [σ₇ σ₈]: b -> r_b ⊕ a and σ₂ = [σ₅ σ₆]: c_b -> b ⊕ c_a.
  const Cokernel own = cokernel(epsilon);
  auto w = is_zero_morphism(own.projection);
  if (!w) throw Error("epi_as_cokernel: morphism is not an epimorphism");
  const MatMorphism s7 = submatrix(w->sigma1, 0, b.size(), 0, rb.size());
  const MatMorphism s8 = submatrix(w->sigma1, 0, b.size(), rb.size(), a.size());
  const MatMorphism s5 = submatrix(w->sigma2, 0, B.corelations().size(), 0, b.size());
  const MatMorphism s6 = submatrix(w->sigma2, 0, B.corelations().size(), b.size(), ca.size());

  Kernel ker = kernel(epsilon);
  Cokernel cok = cokernel(ker.embedding);
  const MatMorphism& gb = B.corel();
  AdelMorphism nu = morphism(B, cok.object, MatMorphism::block({{s8, -(gb * s6), -(gb * s5)}}));

  const MatMorphism& alpha = epsilon.datum();
  WitnessPair triangle{MatMorphism::block({{zero(c, a, ra), alpha * s8 - id(c, a), alpha * s7}}),
                       MatMorphism::block({{zero(c, ca, a), id(c, ca), zero(c, ca, b)}})};
  if (!check_zero(epsilon * nu - cok.projection, triangle))
    throw Error("epi_as_cokernel: internal error, triangle witness failed");
  return {std::move(ker), std::move(cok), std::move(nu), std::move(triangle)};
}

AdelMorphism colift_along_epi(const AdelMorphism& epsilon, const AdelMorphism& tau, const WitnessPair& w) {
  if (!(tau.source() == epsilon.source())) throw Error("colift_along_epi: τ does not start at the source of ε");
  EpiComparison ec = epi_as_cokernel(epsilon);
  return ec.comparison * cokernel_colift(ec.kernel.embedding, tau, w);
}

std::optional<AdelMorphism> colift_along_epi(const AdelMorphism& epsilon, const AdelMorphism& tau) {
  if (!(tau.source() == epsilon.source())) throw Error("colift_along_epi: τ does not start at the source of ε");
  auto w = is_zero_morphism(kernel(epsilon).embedding * tau);
  if (!w) return std::nullopt;
  return colift_along_epi(epsilon, tau, *w);
}

AdelMorphism lift_along_mono(const AdelMorphism& iota, const AdelMorphism& tau, const WitnessPair& w) {
  if (!(tau.target() == iota.target())) throw Error("lift_along_mono: τ does not end at the target of ι");
  return dualize(colift_along_epi(dualize(iota), dualize(tau), dualize(w)));
}

std::optional<AdelMorphism> lift_along_mono(const AdelMorphism& iota, const AdelMorphism& tau) {
  if (!(tau.target() == iota.target())) throw Error("lift_along_mono: τ does not end at the target of ι");
  auto w = is_zero_morphism(tau * cokernel(iota).projection);
  if (!w) return std::nullopt;
  return lift_along_mono(iota, tau, *w);
}

Homology homology(const AdelMorphism& phi, const AdelMorphism& psi) {
  if (!(phi.target() == psi.source())) throw Error("homology: morphisms are not composable");
  Kernel ker = kernel(psi);
  Cokernel cok = cokernel(phi);
  AdelMorphism composite = ker.embedding * cok.projection;
  const Cokernel image_cok = cokernel(composite);
  Kernel image = kernel(image_cok.projection);
  AdelMorphism corestriction = kernel_lift(image_cok.projection, composite, image_cok.witness);
  return {std::move(ker),          std::move(cok),         std::move(composite),
          std::move(image.object), std::move(image.embedding), std::move(corestriction)};
}

ExactnessCheck check_exactness(const AdelMorphism& phi, const AdelMorphism& psi) {
  if (!(phi.target() == psi.source())) throw Error("is_exact: morphisms are not composable");
  auto zero_composite = is_zero_morphism(phi * psi);
  if (!zero_composite) throw Error("is_exact: the composite is not zero");
  return {*std::move(zero_composite), is_zero_morphism(kernel(psi).embedding * cokernel(phi).projection)};
}

bool is_exact(const AdelMorphism& phi, const AdelMorphism& psi) { return check_exactness(phi, psi).exact(); }

AdelMorphism connecting_homomorphism(const MatMorphism& alpha, const MatMorphism& beta, const MatMorphism& gamma) {
  if (!(alpha * beta * gamma).is_zero()) throw Error("connecting_homomorphism: α·β·γ is not zero");
  const CategoryRef& c = alpha.category();
  AdelObject source(alpha, beta * gamma);
  AdelObject target(alpha * beta, gamma);
  return with_witnesses(source, target, beta, id(c, alpha.source()), id(c, gamma.target()));
}

}  // namespace adel
