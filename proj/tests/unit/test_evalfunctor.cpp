#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "adel/dsl.hpp"
#include "adel/evaluation.hpp"
#include "adel/provers.hpp"
#include "instances.hpp"

using namespace adel;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ADEL_EXAMPLES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("evaluation of paths and matrices") {
  const CategoryRef c = snake_category();
  const Representation rep = parse_representation(*c, slurp("snake.rep"));
  CHECK(check_representation(*c, rep));
  CHECK(evaluate(*c, rep, parse_matrix(c, "a", "c", "[alpha*beta]")) == IntMatrix{{2}});
  CHECK(evaluate(*c, rep, parse_matrix(c, "(a, b)", "(b)", "[3*alpha; -1]")) == IntMatrix{{6}, {-1}});
  CHECK(evaluated_rank(rep, parse_tuple(*c, "(a, b, b)")) == 3);
  CHECK(evaluate(*c, rep, parse_matrix(c, "a", "d", "[0]")) == IntMatrix{{0}});
}

TEST_CASE("values of the snake objects") {
  const Session s = Session::parse(slurp("snake.adel"));
  const Representation rep = parse_representation(*s.category(), slurp("snake.rep"));
  for (const char* name : {"K", "C", "Coka"}) {
    CAPTURE(name);
    const EvaluatedObject v = eval_object(rep, s.objects().at(name));
    CHECK(v.group.invariants().torsion() == vec({2}));
    CHECK(v.group.invariants().free_rank == 0);
  }
  const EvaluatedObject b = eval_object(rep, s.resolve_object("b"));
  CHECK(b.group.invariants().free_rank == 1);
  CHECK(b.group.invariants().torsion().empty());
  // conn evaluates to the identity of Z/2.
  const EvaluatedMorphism conn = eval_morphism(rep, s.adel_morphisms().at("conn"));
  CHECK(conn.map.well_defined());
  CHECK(kernel_group(conn.map).group.is_trivial());
  CHECK(cokernel_group(conn.map).group.is_trivial());
}

TEST_CASE("relations are checked") {
  const CategoryRef c = snake_category();
  Representation rep{{1, 1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{1}}}};
  CHECK_FALSE(check_representation(*c, rep));
  rep.matrices[2] = IntMatrix{{0}};
  CHECK(check_representation(*c, rep));
  rep.matrices[0] = IntMatrix{{1, 0}};
  CHECK_THROWS_AS(check_representation(*c, rep), Error);
  rep.matrices.pop_back();
  CHECK_THROWS_AS(check_representation(*c, rep), Error);
}

TEST_CASE("random representations are valid and seed-determined") {
  for (const CategoryRef& c : {snake_category(), five_lemma_category()}) {
    std::mt19937_64 r1(17), r2(17);
    for (int i = 0; i < 20; ++i) {
      const Representation a = random_representation(*c, r1, 3);
      const Representation b = random_representation(*c, r2, 3);
      CHECK(check_representation(*c, a));
      CHECK(a.ranks == b.ranks);
      CHECK(a.matrices == b.matrices);
      for (std::size_t r : a.ranks) CHECK(r <= 3);
    }
  }
}

TEST_CASE("oracles agree on the snake diagram") {
  const OracleReport r = instances::run_oracles(instances::snake_case(), 11, 8);
  for (const auto& m : r.mismatches) FAIL_CHECK(m);
  CHECK(r.ok());
}

TEST_CASE("oracles agree on the 5-lemma category") {
  const OracleReport r = instances::run_oracles(instances::five_case(), 12, 8);
  for (const auto& m : r.mismatches) FAIL_CHECK(m);
  CHECK(r.ok());
}

TEST_CASE("an inexact pair may become exact after evaluation, never the reverse") {
  const CategoryRef c = snake_category();
  const AdelMorphism alpha = emb(parse_matrix(c, "a", "b", "[alpha]"));
  const AdelMorphism bg = emb(parse_matrix(c, "b", "d", "[beta*gamma]"));
  REQUIRE_FALSE(is_exact(alpha, bg));
  // beta = 1, gamma = 0: F(beta*gamma) = 0 and the homology is Z/2 at b.
  const Representation rep = parse_representation(*c, slurp("snake.rep"));
  const Homology h = homology(alpha, bg);
  CHECK(eval_object(rep, h.object).group.invariants().torsion() == vec({2}));
  CHECK(instances::run_oracles(instances::OracleCase{c, {}, {{"alpha | beta*gamma", {alpha, bg}}}}, 3, 10).ok());
}
