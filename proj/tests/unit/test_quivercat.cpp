#include <doctest.h>

#include "adel/error.hpp"
#include "adel/quiver.hpp"

using namespace adel;

namespace {

Quiver snake_quiver() {
  return Quiver::from_names({"a", "b", "c", "d"},
                            {{"alpha", "a", "b"}, {"beta", "b", "c"}, {"gamma", "c", "d"}});
}

Path path(const Quiver& q, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> arrows;
  for (const char* l : labels) arrows.push_back(q.arrow_index(l));
  return Path::of_arrows(q, arrows);
}

// Square a -> b -> d, a -> c -> d.
Quiver square_quiver() {
  return Quiver::from_names({"a", "b", "c", "d"}, {{"f", "a", "b"}, {"g", "b", "d"}, {"h", "a", "c"}, {"k", "c", "d"}});
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver::from_names({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"x"}, {{"f", "x", "x"}}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"x", "x"}, {}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"x", "y"}, {{"f", "x", "y"}, {"f", "x", "y"}}), Error);
  CHECK_THROWS_AS(Quiver::from_names({"x"}, {{"f", "x", "z"}}), Error);
  const Quiver q = snake_quiver();
  CHECK(q.vertex_count() == 4);
  CHECK(q.find_arrow("beta") == 1u);
  CHECK_FALSE(q.find_vertex("e").has_value());
}

TEST_CASE("path enumeration") {
  const Quiver q = square_quiver();
  const Vertex a = q.vertex("a"), d = q.vertex("d"), b = q.vertex("b");
  const auto ad = enumerate_paths(q, a, d);
  REQUIRE(ad.size() == 2);
  CHECK(ad[0] == path(q, {"f", "g"}));
  CHECK(ad[1] == path(q, {"h", "k"}));
  const auto aa = enumerate_paths(q, a, a);
  REQUIRE(aa.size() == 1);
  CHECK(aa[0].is_identity());
  CHECK(enumerate_paths(q, d, a).empty());
  CHECK(enumerate_paths(q, b, b).size() == 1);
  CHECK_THROWS_AS(path(q, {"f", "k"}), Error);
}

TEST_CASE("relation closure in the snake category") {
  const Quiver q = snake_quiver();
  const Relation r{{{1, path(q, {"alpha", "beta", "gamma"})}}};
  const CategoryRef c = PathCategory::create(q, {r});
  const Vertex a = q.vertex("a"), b = q.vertex("b"), d = q.vertex("d");
  CHECK(c->hom(a, d).is_trivial());
  CHECK(c->hom(a, b).invariants().free_rank == 1);
  CHECK(c->hom(a, a).invariants().free_rank == 1);
  CHECK(c->hom_rank(b, a) == 0);
  CHECK(c->is_zero(c->compose(c->compose(c->arrow("alpha"), c->arrow("beta")), c->arrow("gamma"))));
  CHECK_FALSE(c->is_zero(c->compose(c->arrow("alpha"), c->arrow("beta"))));
}

TEST_CASE("relations generate two-sided ideals") {
  const Quiver q = snake_quiver();
  // beta = 0 kills every path through beta.
  const Relation r{{{1, path(q, {"beta"})}}};
  const CategoryRef c = PathCategory::create(q, {r});
  CHECK(c->hom(q.vertex("a"), q.vertex("c")).is_trivial());
  CHECK(c->hom(q.vertex("b"), q.vertex("d")).is_trivial());
  CHECK(c->hom(q.vertex("a"), q.vertex("b")).invariants().free_rank == 1);
  const IntMatrix sub = relation_subgroup(q, {r}, q.vertex("a"), q.vertex("d"));
  CHECK(sub == IntMatrix{{1}});
}

TEST_CASE("torsion from a relation with coefficient") {
  const Quiver q = snake_quiver();
  const Relation r{{{2, path(q, {"alpha", "beta"})}}};
  const CategoryRef c = PathCategory::create(q, {r});
  const FpAbGroup& h = c->hom(q.vertex("a"), q.vertex("c"));
  CHECK(h.invariants().torsion() == IntVector{2});
  const LinMorphism ab = c->compose(c->arrow("alpha"), c->arrow("beta"));
  CHECK_FALSE(c->is_zero(ab));
  CHECK(c->is_zero(c->add(ab, ab)));
  CHECK(c->equal(c->scale(ab, 3), ab));
}

TEST_CASE("commutative square") {
  const Quiver q = square_quiver();
  const Relation r{{{1, path(q, {"f", "g"})}, {-1, path(q, {"h", "k"})}}};
  CHECK(r.homogeneous());
  const CategoryRef c = PathCategory::create(q, {r});
  CHECK(c->equal(c->compose(c->arrow("f"), c->arrow("g")), c->compose(c->arrow("h"), c->arrow("k"))));
  CHECK(c->hom(q.vertex("a"), q.vertex("d")).invariants().free_rank == 1);
  const Relation bad{{{1, path(q, {"f"})}, {1, path(q, {"h"})}}};
  CHECK_FALSE(bad.homogeneous());
  CHECK_THROWS_AS(PathCategory::create(q, {bad}), Error);
}

TEST_CASE("composition is diagrammatic, associative and bilinear") {
  const Quiver q = square_quiver();
  const CategoryRef c = PathCategory::create(q, {});
  const LinMorphism f = c->arrow("f"), g = c->arrow("g");
  const LinMorphism fg = c->compose(f, g);
  CHECK(c->to_string(fg) == "f*g");
  CHECK(c->equal(c->compose(c->identity(q.vertex("a")), f), f));
  CHECK(c->equal(c->compose(f, c->identity(q.vertex("b"))), f));
  const LinMorphism hk = c->compose(c->arrow("h"), c->arrow("k"));
  const LinMorphism sum = c->add(fg, c->scale(hk, -2));
  CHECK(c->to_string(sum) == "f*g - 2*h*k");
  CHECK(c->equal(c->compose(c->add(f, f), g), c->scale(fg, 2)));
  CHECK_THROWS_AS(c->compose(g, f), Error);
}

TEST_CASE("opposite categories come in pairs") {
  const Quiver q = snake_quiver();
  const CategoryRef c = PathCategory::create(q, {Relation{{{1, path(q, {"alpha", "beta", "gamma"})}}}});
  const CategoryRef op = PathCategory::opposite(c);
  CHECK(op->is_opposite());
  CHECK(PathCategory::opposite(op) == c);
  CHECK(PathCategory::opposite(c) == op);
  const Vertex a = q.vertex("a"), c_ = q.vertex("c");
  CHECK(op->hom_rank(c_, a) == 1);
  CHECK(op->hom(q.vertex("d"), a).is_trivial());
  const LinMorphism ab = c->compose(c->arrow("alpha"), c->arrow("beta"));
  const LinMorphism back = op->to_opposite(c->to_opposite(ab));
  CHECK(c->equal(back, ab));
}
