#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "adel/dsl.hpp"
#include "adel/homgroups.hpp"
#include "adel/normal_forms.hpp"
#include "adel/provers.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace adel;

namespace {

using Clock = std::chrono::steady_clock;

enum class Outcome { Pass, Fail, Skip };

struct Result {
  Outcome outcome = Outcome::Pass;
  std::string note;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Result fail(std::string why) { return {Outcome::Fail, std::move(why)}; }

std::string failed_checks(const ProofReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += (out.empty() ? "" : "; ") + c.description;
  return out;
}

Result snake() {
  const auto t0 = Clock::now();
  const ProofReport r = prove_snake();
  const double secs = seconds_since(t0);
  if (!r.passed()) return fail("failed: " + failed_checks(r));
  if (!replay(r)) return fail("certificates do not replay");
  std::size_t certs = 0;
  for (const auto& c : r.checks) certs += c.certificates.size();
  if (secs >= 10) return fail("took " + std::to_string(secs) + " s");
  return {Outcome::Pass, std::to_string(r.checks.size()) + " checks, " + std::to_string(certs) + " certificates"};
}

Result sweep() {
  std::vector<Integer> s;
  for (int k = -3; k <= 3; ++k) s.emplace_back(k);
  std::string exact_at;
  for (const auto& p : exactness_sweep(s)) {
    const bool unit = abs(p.s) == 1;
    if (p.exact) exact_at += (exact_at.empty() ? "" : ", ") + p.s.get_str();
    if (p.exact != unit) return fail("s = " + p.s.get_str() + " has the wrong verdict");
    if (unit && !p.displayed_witness_verifies) return fail("displayed witness fails at s = " + p.s.get_str());
    if (!unit && p.displayed_witness_verifies) return fail("displayed witness verifies at s = " + p.s.get_str());
  }
  return {Outcome::Pass, "exact at {" + exact_at + "}"};
}

Result uniqueness() {
  const SnakeDiagram d = snake_diagram();
  const HomGroupPresentation h = hom_group(d.objects.at("K"), d.objects.at("C"));
  if (h.invariants.free_rank != 1 || !h.invariants.torsion().empty()) return fail("Hom(K, C) is not Z");
  if (h.generators.size() != 1) return fail("expected a single generator");
  const AdelMorphism& beta = d.arrows.at("K->C");
  const AdelMorphism& g = h.generators.front();
  if (!is_equal(g, beta) && !is_equal(g, beta.scaled(-1))) return fail("generator is not +-[beta]");
  if (!hom_group(d.objects.at("b"), d.objects.at("a")).invariants.trivial_group()) return fail("Hom(b, a) != 0");
  if (!hom_group(d.objects.at("d"), d.objects.at("c")).invariants.trivial_group()) return fail("Hom(d, c) != 0");
  const ProofReport r = prove_connecting_uniqueness();
  if (!r.passed() || !replay(r)) return fail("uniqueness report: " + failed_checks(r));
  return {Outcome::Pass, "Hom(K, C) = Z generated by " + g.to_string()};
}

Result five() {
  const auto t0 = Clock::now();
  const ProofReport r = prove_refined_five();
  const double secs = seconds_since(t0);
  if (!r.passed()) return fail("failed: " + failed_checks(r));
  if (!replay(r)) return fail("certificates do not replay");
  if (secs >= 60) return fail("took " + std::to_string(secs) + " s");
  const bool mono = std::any_of(r.checks.begin(), r.checks.end(), [](const ProofCheck& c) {
    return c.passed && c.description == "step 4: the comparison is a monomorphism";
  });
  if (!mono) return fail("no monomorphism verdict");
  return {Outcome::Pass, std::to_string(r.checks.size()) + " checks"};
}

Result oracles() {
  constexpr std::size_t kReps = 20;
  OracleReport total = instances::run_oracles(instances::snake_case(), 11, kReps);
  total.merge(instances::run_oracles(instances::five_case(), 12, kReps));
  if (!total.ok()) return fail(std::to_string(total.mismatches.size()) + " mismatches, first: " + total.mismatches[0]);
  return {Outcome::Pass, std::to_string(2 * kReps) + " representations, 0 mismatches"};
}

Result computability() {
  instances::SuiteResult res;
  for (std::uint64_t seed = 0; seed < 200; ++seed) instances::computability_instance(seed, res);
  if (!res.failures.empty())
    return fail(std::to_string(res.failures.size()) + " failures, first: " + res.failures.front());
  return {Outcome::Pass,
          std::to_string(res.instances) + " instances, " + std::to_string(res.decisions) + " certified decisions"};
}

Result intlinalg() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 1000);
    const std::string at = "matrix " + std::to_string(trial) + " " + m.to_string();
    const HermiteForm h = hnf(m);
    if (!(h.U * m == h.H)) return fail("U*M != H for " + at);
    if (abs(oracle::cofactor_det(h.U)) != 1) return fail("|det U| != 1 for " + at);

    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    IntMatrix shuffled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) shuffled(i, j) = m(order[i], j);
    if (!(hnf(shuffled).H == h.H)) return fail("HNF changes under a row shuffle for " + at);

    const SmithForm s = smith_form(m);
    if (!(s.P * m * s.Q == s.D)) return fail("P*M*Q != D for " + at);
    const SmithInvariants inv = snf(m);
    for (std::size_t i = 0; i + 1 < inv.factors.size(); ++i)
      if (!mpz_divisible_p(inv.factors[i + 1].get_mpz_t(), inv.factors[i].get_mpz_t()))
        return fail("divisibility chain broken for " + at);
    for (const auto& d : inv.factors)
      if (sgn(d) <= 0) return fail("non-positive invariant factor for " + at);
    if (!(inv == oracle::invariants_by_minors(m))) return fail("invariant factors disagree with minors for " + at);

    IntMatrix x0(2, m.rows());
    for (std::size_t i = 0; i < x0.rows(); ++i)
      for (std::size_t j = 0; j < x0.cols(); ++j) x0(i, j) = small(rng);
    const IntMatrix b = x0 * m;
    const auto x = solve_left(m, b);
    if (!x || !(*x * m == b)) return fail("solve_left round trip fails for " + at);
    IntVector v(m.cols());
    for (auto& e : v) e = small(rng);
    const auto y = solve_left(m, IntMatrix::row_vector(v));
    if (y.has_value() != oracle::in_row_lattice(m, v)) return fail("solve_left solvability disagrees for " + at);
  }
  return {Outcome::Pass, "1000 matrices"};
}

// D4: three subspaces of the sink. Closes the three image subobjects of emb(z)
// under meet and join until nothing new appears and reports the count.
// Equality of subobjects is decided in Adel; evaluating on a few fixed
// representations only narrows down which pairs need comparing.
Result d4() {
  const auto t0 = Clock::now();
  const CategoryRef c = build_category(parse_category(
      "category D4 { objects x y w z; arrows p: x -> z; q: y -> z; r: w -> z; }"));
  const AdelObject z = emb(c, parse_tuple(*c, "z"));
  auto image = [](const AdelMorphism& f) { return kernel(cokernel(f).projection).embedding; };
  auto meet = [](const AdelMorphism& a, const AdelMorphism& b) {
    return kernel(a * cokernel(b).projection).embedding * a;
  };
  auto join = [&](const AdelMorphism& a, const AdelMorphism& b) {
    const AdelObject& x = a.source();
    const AdelObject& y = b.source();
    const AdelObject sum(direct_sum(x.rel(), y.rel()), direct_sum(x.corel(), y.corel()));
    return image(morphism(sum, z, MatMorphism::block({{a.datum()}, {b.datum()}})));
  };

  std::mt19937_64 rng(4);
  std::vector<Representation> reps;
  for (int i = 0; i < 8; ++i) reps.push_back(random_representation(*c, rng, 4));
  using Fingerprint = std::vector<IntMatrix>;
  auto fingerprint = [&](const AdelMorphism& s) {
    Fingerprint f;
    for (const auto& rep : reps) {
      f.push_back(hnf(eval_morphism(rep, s).map.matrix).H.without_zero_rows());
    }
    return f;
  };

  std::vector<AdelMorphism> elems = {zero_morphism(zero_object(c), z), identity(z)};
  for (const char* l : {"p", "q", "r"}) elems.push_back(image(emb(MatMorphism::single(c, c->arrow(l)))));
  std::vector<Fingerprint> prints;
  for (const auto& e : elems) prints.push_back(fingerprint(e));
  auto add = [&](const AdelMorphism& s) {
    const Fingerprint f = fingerprint(s);
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (prints[i] == f && subobject_leq(s, elems[i]) && subobject_leq(elems[i], s)) return;
    elems.push_back(s);
    prints.push_back(f);
  };

  constexpr double kBudget = 120;
  std::size_t done = 0;  // pairs among the first `done` elements are closed
  while (done < elems.size()) {
    const std::size_t n = elems.size();
    for (std::size_t j = done; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (seconds_since(t0) > kBudget) return {Outcome::Skip, "time budget exhausted"};
        add(meet(elems[i], elems[j]));
        add(join(elems[i], elems[j]));
      }
    done = n;
  }
  const std::size_t count = elems.size();
  // The free modular lattice on three generators has 28 elements; with the
  // bounds 0 and z of the ambient lattice this gives 30.
  if (count != 30) return {Outcome::Fail, std::to_string(count) + " subobjects in the closure, expected 30"};
  return {Outcome::Pass, "closure has 30 subobjects"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> run;
    bool stretch;
  };
  const std::vector<Criterion> criteria = {
      {1, "snake lemma universal instance", snake, false},
      {2, "exactness sweep over s in -3..3", sweep, false},
      {3, "connecting morphism uniqueness", uniqueness, false},
      {4, "refined 5-lemma universal instance", five, false},
      {5, "evaluation oracles on random representations", oracles, false},
      {6, "computability suite on random instances", computability, false},
      {7, "integer linear algebra properties", intlinalg, false},
      {8, "D4 subobject lattice (stretch)", d4, true},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = c.stretch ? Result{Outcome::Skip, std::string("error: ") + e.what()}
                    : Result{Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = r.outcome == Outcome::Pass ? "PASS" : r.outcome == Outcome::Skip ? "SKIP" : "FAIL";
    if (r.outcome == Outcome::Fail && !c.stretch) ++failures;
    std::printf("[%s] %d %s: %s (%.2f s)\n", tag, c.id, c.name, r.note.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
