#include <doctest.h>

#include <random>

#include "adel/dsl.hpp"
#include "adel/homgroups.hpp"
#include "adel/provers.hpp"
#include "instances.hpp"

using namespace adel;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

AdelObject random_object(const CategoryRef& cat, std::mt19937_64& rng) {
  const AdelMorphism f = emb(instances::random_mat(cat, instances::random_tuple(*cat, rng),
                                                   instances::random_tuple(*cat, rng), rng));
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return f.source();
    case 1: return kernel(f).object;
    default: return cokernel(f).object;
  }
}

}  // namespace

TEST_CASE("connecting morphisms form an infinite cyclic group") {
  const Session s = Session::parse(R"(
category Connecting {
  objects a b c d;
  arrows alpha: a -> b; beta: b -> c; gamma: c -> d;
  relations alpha*beta*gamma = 0;
}
object K = (alpha | beta*gamma);
object C = (alpha*beta | gamma);
)");
  const HomGroupPresentation h = hom_group(s.objects().at("K"), s.objects().at("C"));
  CHECK(h.invariants.free_rank == 1);
  CHECK(h.invariants.torsion().empty());
  REQUIRE(h.generators.size() == 1);
  CHECK(h.orders == std::vector<Integer>{0});
  const MatMorphism beta = parse_matrix(s.category(), "b", "c", "[beta]");
  const AdelMorphism b = morphism(h.source, h.target, beta);
  CHECK((is_equal(h.generators[0], b) || is_equal(h.generators[0], -b)));
  const auto one = h.coordinates(beta);
  REQUIRE(one.has_value());
  REQUIRE(one->size() == 1);
  CHECK(abs((*one)[0]) == 1);
  const auto three = h.coordinates(beta.scaled(-3));
  REQUIRE(three.has_value());
  CHECK((*three)[0] == -3 * (*one)[0]);
  // [beta*gamma] is a datum b -> d, not b -> c.
  CHECK_THROWS_AS(h.coordinates(parse_matrix(s.category(), "b", "d", "[beta*gamma]")), Error);
}

TEST_CASE("vanishing hom groups") {
  const CategoryRef c = snake_category();
  const AdelObject a = emb(c, parse_tuple(*c, "a"));
  const AdelObject b = emb(c, parse_tuple(*c, "b"));
  CHECK(hom_group(b, a).group.is_trivial());
  CHECK(hom_group(a, a).invariants.free_rank == 1);
  const AdelObject coka = cokernel(emb(parse_matrix(c, "a", "b", "[alpha]"))).object;
  // Every map a -> b is a multiple of alpha, which dies in the cokernel.
  CHECK(hom_group(a, coka).group.is_trivial());
  CHECK(hom_group(b, coka).invariants.free_rank == 1);
  CHECK(hom_group(zero_object(c), coka).group.is_trivial());
}

TEST_CASE("torsion in a hom group") {
  const CategoryRef c = build_category(parse_category("category T { objects x y; arrows f: x -> y; }"));
  const AdelObject x = emb(c, parse_tuple(*c, "x"));
  const AdelObject y = emb(c, parse_tuple(*c, "y"));
  const AdelObject t(parse_matrix(c, "x", "y", "[2*f]"), MatMorphism::zero(c, parse_tuple(*c, "y"), TupleObject{}));
  const HomGroupPresentation h = hom_group(x, t);
  CHECK(h.invariants.torsion() == vec({2}));
  CHECK(h.invariants.free_rank == 0);
  REQUIRE(h.generators.size() == 1);
  CHECK(h.orders == std::vector<Integer>{2});
  CHECK_FALSE(is_zero_morphism(h.generators[0]).has_value());
  CHECK(is_zero_morphism(h.generators[0].scaled(2)).has_value());
  CHECK(h.coordinates(parse_matrix(c, "x", "y", "[5*f]")) == vec({1}));
  CHECK(h.coordinates(parse_matrix(c, "x", "y", "[-4*f]")) == vec({0}));
  CHECK(hom_group(y, t).invariants.free_rank == 1);
  CHECK(hom_group(t, y).group.is_trivial());
}

TEST_CASE("data that are not morphisms have no coordinates") {
  const CategoryRef c = snake_category();
  const AdelObject coka = cokernel(emb(parse_matrix(c, "a", "b", "[alpha]"))).object;
  const HomGroupPresentation h = hom_group(coka, emb(c, parse_tuple(*c, "c")));
  CHECK_FALSE(h.coordinates(parse_matrix(c, "b", "c", "[beta]")).has_value());
  CHECK(h.group.is_trivial());
}

TEST_CASE("coordinates agree with equality in Adel") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-3, 3);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const CategoryRef cat = trial % 2 ? snake_category() : five_lemma_category();
    const AdelObject x = random_object(cat, rng);
    const AdelObject y = random_object(cat, rng);
    const HomGroupPresentation h = hom_group(x, y);
    CAPTURE(x.to_string());
    CAPTURE(y.to_string());
    REQUIRE(h.generators.size() == h.orders.size());

    // Each generator has the order it claims.
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
      const AdelMorphism& g = h.generators[i];
      CHECK_FALSE(is_zero_morphism(g).has_value());
      if (h.orders[i] != 0) {
        CHECK(is_zero_morphism(g.scaled(h.orders[i])).has_value());
      } else {
        CHECK_FALSE(is_zero_morphism(g.scaled(2)).has_value());
      }
      IntVector e(h.generators.size());
      e[i] = 1;
      CHECK(h.coordinates(g.datum()) == e);
    }

    // Random combinations of generators: coordinates decide equality.
    std::vector<AdelMorphism> sample;
    std::vector<IntVector> coords;
    for (int k = 0; k < 4 && !h.generators.empty(); ++k) {
      AdelMorphism m = zero_morphism(x, y);
      for (const AdelMorphism& g : h.generators) m = m + g.scaled(small(rng));
      const auto co = h.coordinates(m.datum());
      REQUIRE(co.has_value());
      sample.push_back(m);
      coords.push_back(*co);
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i + 1; j < sample.size(); ++j) {
        CHECK((coords[i] == coords[j]) == is_equal(sample[i], sample[j]).has_value());
        ++compared;
      }
  }
  CHECK(compared > 0);
}
