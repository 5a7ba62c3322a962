#pragma once

// Seeded random instances over the snake and 5-lemma categories, and the
// checks run on them by both the unit tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "adel/adelman.hpp"
#include "adel/evaluation.hpp"
#include "adel/provers.hpp"

namespace adel::instances {

inline LinMorphism random_lin(const PathCategory& c, Vertex a, Vertex b, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  IntVector v(c.hom_rank(a, b));
  for (auto& x : v) x = coeff(rng);
  return c.make(a, b, std::move(v));
}

inline TupleObject random_tuple(const PathCategory& c, std::mt19937_64& rng, std::size_t max_size = 2) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<std::size_t> vertex(0, c.vertex_count() - 1);
  TupleObject x;
  for (std::size_t n = size(rng); n > 0; --n) x.summands.push_back(Vertex{vertex(rng)});
  return x;
}

inline MatMorphism random_mat(const CategoryRef& cat, const TupleObject& s, const TupleObject& t,
                              std::mt19937_64& rng) {
  std::vector<LinMorphism> entries;
  for (Vertex a : s.summands)
    for (Vertex b : t.summands) entries.push_back(random_lin(*cat, a, b, rng));
  return MatMorphism::from_entries(cat, s, t, std::move(entries));
}

/// A random morphism of Adel: emb of a random matrix, or a kernel embedding
/// or cokernel projection built from one.
inline AdelMorphism random_morphism(const CategoryRef& cat, std::mt19937_64& rng) {
  const TupleObject s = random_tuple(*cat, rng);
  const TupleObject t = random_tuple(*cat, rng);
  const AdelMorphism f = emb(random_mat(cat, s, t, rng));
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return f;
    case 1: return kernel(f).embedding;
    default: return cokernel(f).projection;
  }
}

struct SuiteResult {
  std::size_t instances = 0;
  std::size_t decisions = 0;
  std::vector<std::string> failures;
  void fail(std::size_t seed, const std::string& what) {
    failures.push_back("seed " + std::to_string(seed) + ": " + what);
  }
};

/// One computability instance: certified decisions, universal properties of
/// kernels and cokernels, kernel/cokernel duality, epi-as-cokernel triangles.
inline void computability_instance(std::uint64_t seed, SuiteResult& out) {
  std::mt19937_64 rng(seed);
  const CategoryRef cat = (seed % 2 == 0) ? snake_category() : five_lemma_category();
  const AdelMorphism phi = random_morphism(cat, rng);
  ++out.instances;

  auto certified = [&](const std::string& what, const AdelMorphism& m, const std::optional<WitnessPair>& w) {
    if (!w) return;
    ++out.decisions;
    if (!check_zero(m, *w)) out.fail(seed, what + ": certificate does not re-verify");
  };

  // (a) Every positive decision carries a certificate that re-verifies.
  certified("phi = 0", phi, is_zero_morphism(phi));
  const Kernel k = kernel(phi);
  const Cokernel c = cokernel(phi);
  certified("kernel composite", k.embedding * phi, is_zero_morphism(k.embedding * phi));
  certified("cokernel composite", phi * c.projection, is_zero_morphism(phi * c.projection));
  if (!check_zero(k.embedding * phi, k.witness)) out.fail(seed, "stored kernel witness");
  if (!check_zero(phi * c.projection, c.witness)) out.fail(seed, "stored cokernel witness");
  certified("kernel object zero", identity(k.object), is_zero_object(k.object));
  certified("cokernel object zero", identity(c.object), is_zero_object(c.object));
  if (auto w = is_equal(phi + phi, phi.scaled(2))) {
    certified("phi + phi = 2 phi", phi + phi - phi.scaled(2), w);
  } else {
    out.fail(seed, "phi + phi differs from 2 phi");
  }

  // (b) Universal properties: lift through the kernel, colift through the cokernel.
  const AdelMorphism g = (phi.source().relations().is_zero() && phi.source().corelations().is_zero())
                             ? emb(random_mat(cat, random_tuple(*cat, rng), phi.source().middle(), rng))
                             : identity(phi.source());
  const AdelMorphism tau = kernel(g * phi).embedding * g;
  if (auto w = is_zero_morphism(tau * phi)) {
    ++out.decisions;
    const AdelMorphism lift = kernel_lift(phi, tau, *w);
    if (!is_equal(lift * k.embedding, tau)) out.fail(seed, "kernel lift does not factor tau");
  } else {
    out.fail(seed, "tau * phi should vanish");
  }
  const AdelMorphism h = (phi.target().relations().is_zero() && phi.target().corelations().is_zero())
                             ? emb(random_mat(cat, phi.target().middle(), random_tuple(*cat, rng), rng))
                             : identity(phi.target());
  const AdelMorphism rho = h * cokernel(phi * h).projection;
  if (auto w = is_zero_morphism(phi * rho)) {
    ++out.decisions;
    const AdelMorphism colift = cokernel_colift(phi, rho, *w);
    if (!is_equal(c.projection * colift, rho)) out.fail(seed, "cokernel colift does not factor rho");
  } else {
    out.fail(seed, "phi * rho should vanish");
  }
  if (!is_mono(k.embedding)) out.fail(seed, "kernel embedding is not mono");
  if (!is_epi(c.projection)) out.fail(seed, "cokernel projection is not epi");

  // (c) kernel = dual . cokernel . dual, structurally.
  const Cokernel dc = cokernel(dualize(phi));
  if (!(dualize(dc.object) == k.object)) out.fail(seed, "kernel object differs from the dual cokernel object");
  if (!(dualize(dc.projection) == k.embedding)) out.fail(seed, "kernel embedding differs from the dual projection");

  // (d) Epi-as-cokernel triangle for the constructed projection.
  const EpiComparison ec = epi_as_cokernel(c.projection);
  if (!check_zero(c.projection * ec.comparison - ec.cokernel.projection, ec.triangle))
    out.fail(seed, "epi-as-cokernel triangle does not commute");
  if (!is_iso(ec.comparison)) out.fail(seed, "epi-as-cokernel comparison is not an iso");
}

struct OracleCase {
  CategoryRef cat;
  std::vector<std::pair<std::string, AdelMorphism>> morphisms;
  std::vector<std::pair<std::string, std::pair<AdelMorphism, AdelMorphism>>> pairs;
};

/// Morphisms and zero-composite pairs of the snake diagram.
inline OracleCase snake_case() {
  const SnakeDiagram d = snake_diagram();
  OracleCase oc{d.cat, {}, {}};
  for (const auto& name : d.arrow_order) oc.morphisms.emplace_back(name, d.arrows.at(name));
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"alpha", "b->Coka"},     {"Kerc->c", "gamma"},     {"Kerab->a", "a->Kerc"}, {"a->Kerc", "Kerc->C"},
      {"Kerb->b", "beta"},      {"beta", "c->Cokb"},      {"K->Coka", "Coka->d"},  {"Coka->d", "d->Cokbc"},
      {"Kerab->Kerb", "Kerb->K"}, {"Kerb->K", "K->C"},    {"K->C", "C->Cokb"},     {"C->Cokb", "Cokb->Cokbc"}};
  for (const auto& [x, y] : pairs)
    oc.pairs.push_back({std::string(x) + " | " + y, {d.arrows.at(x), d.arrows.at(y)}});
  return oc;
}

/// Embedded arrows of the 5-lemma category and the zero composites among them.
inline OracleCase five_case() {
  const CategoryRef c = five_lemma_category();
  OracleCase oc{c, {}, {}};
  auto arrow = [&](const char* label) { return emb(MatMorphism::single(c, c->arrow(label))); };
  for (const char* l : {"lambda", "alpha", "beta", "epsilon", "zeta", "iota", "kappa", "mu"})
    oc.morphisms.emplace_back(l, arrow(l));
  oc.pairs.push_back({"alpha | beta", {arrow("alpha"), arrow("beta")}});
  oc.pairs.push_back({"iota | kappa", {arrow("iota"), arrow("kappa")}});
  oc.pairs.push_back({"lambda | alpha*epsilon", {arrow("lambda"), arrow("alpha") * arrow("epsilon")}});
  oc.pairs.push_back({"zeta*kappa | mu", {arrow("zeta") * arrow("kappa"), arrow("mu")}});
  // Non-embedded morphisms: a cokernel projection and a kernel embedding.
  const AdelMorphism delta = cokernel(arrow("lambda")).projection;
  const AdelMorphism eta = kernel(arrow("mu")).embedding;
  oc.morphisms.emplace_back("coker(lambda)", delta);
  oc.morphisms.emplace_back("ker(mu)", eta);
  oc.pairs.push_back({"lambda | coker(lambda)", {arrow("lambda"), delta}});
  oc.pairs.push_back({"ker(mu) | mu", {eta, arrow("mu")}});
  return oc;
}

/// Runs every oracle of `oc` on `count` seeded random representations.
inline OracleReport run_oracles(const OracleCase& oc, std::uint64_t seed, std::size_t count) {
  OracleReport total;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Representation rep = random_representation(*oc.cat, rng, 3);
    auto tag = [&](OracleReport r, const std::string& what) {
      for (auto& m : r.mismatches) m = "rep " + std::to_string(i) + ", " + what + ": " + m;
      total.merge(r);
    };
    if (!check_representation(*oc.cat, rep)) {
      total.mismatches.push_back("rep " + std::to_string(i) + " violates a relation");
      continue;
    }
    for (const auto& [name, f] : oc.morphisms) {
      tag(oracle_kernel(rep, f), name);
      tag(oracle_cokernel(rep, f), name);
    }
    for (const auto& [name, p] : oc.pairs) {
      tag(oracle_homology(rep, p.first, p.second), name);
      tag(oracle_exactness(rep, p.first, p.second), name);
    }
  }
  return total;
}

}  // namespace adel::instances
