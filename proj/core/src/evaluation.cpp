#include "adel/evaluation.hpp"

#include "adel/error.hpp"
#include "adel/normal_forms.hpp"

namespace adel {

namespace {

void check_shapes(const PathCategory& cat, const Representation& rep) {
  const Quiver& q = cat.quiver();
  if (rep.ranks.size() != q.vertex_count()) throw Error("representation: wrong number of vertex ranks");
  if (rep.matrices.size() != q.arrow_count()) throw Error("representation: wrong number of arrow matrices");
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const IntMatrix& m = rep.matrices[k];
    if (m.rows() != rep.ranks[a.source.index] || m.cols() != rep.ranks[a.target.index])
      throw Error("representation: matrix for arrow '" + a.label + "' has shape " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + ", expected " + std::to_string(rep.ranks[a.source.index]) + "x" +
                  std::to_string(rep.ranks[a.target.index]));
  }
}

std::size_t rank_of(const Representation& rep, Vertex v) { return rep.ranks.at(v.index); }

std::string invariants_string(const SmithInvariants& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& d : s.torsion()) {
    if (!first) out += ", ";
    out += d.get_str();
    first = false;
  }
  return out + "] free " + std::to_string(s.free_rank);
}

void compare(OracleReport& report, const std::string& what, const FpAbGroup& adel_side, const FpAbGroup& direct) {
  const SmithInvariants x = adel_side.invariants();
  const SmithInvariants y = direct.invariants();
  if (!x.isomorphic(y))
    report.mismatches.push_back(what + ": Adel gives " + invariants_string(x) + ", groups give " + invariants_string(y));
}

}  // namespace

void OracleReport::merge(const OracleReport& other) {
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

IntMatrix evaluate(const PathCategory&, const Representation& rep, const Path& p) {
  IntMatrix m = IntMatrix::identity(rank_of(rep, p.source));
  for (std::size_t k : p.arrows) m = m * rep.matrices.at(k);
  return m;
}

IntMatrix evaluate(const PathCategory& cat, const Representation& rep, const LinMorphism& f) {
  IntMatrix m(rank_of(rep, f.source), rank_of(rep, f.target));
  const auto& paths = cat.paths(f.source, f.target);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    const IntMatrix p = evaluate(cat, rep, paths[i]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += f.coeffs[i] * p(r, c);
  }
  return m;
}

std::size_t evaluated_rank(const Representation& rep, const TupleObject& x) {
  std::size_t n = 0;
  for (Vertex v : x.summands) n += rank_of(rep, v);
  return n;
}

IntMatrix evaluate(const PathCategory& cat, const Representation& rep, const MatMorphism& f) {
  IntMatrix m(evaluated_rank(rep, f.source()), evaluated_rank(rep, f.target()));
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const IntMatrix e = evaluate(cat, rep, f.entry(i, j));
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c) m(r0 + r, c0 + c) = e(r, c);
      c0 += rank_of(rep, f.target()[j]);
    }
    r0 += rank_of(rep, f.source()[i]);
  }
  return m;
}

namespace {

bool relation_holds(const PathCategory& cat, const Representation& rep, const Relation& rel) {
  IntMatrix sum(rank_of(rep, rel.source()), rank_of(rep, rel.target()));
  for (const auto& term : rel.terms) {
    const IntMatrix p = evaluate(cat, rep, term.path);
    for (std::size_t r = 0; r < sum.rows(); ++r)
      for (std::size_t c = 0; c < sum.cols(); ++c) sum(r, c) += term.coefficient * p(r, c);
  }
  return sum.is_zero();
}

}  // namespace

bool check_representation(const PathCategory& cat, const Representation& rep) {
  check_shapes(cat, rep);
  for (const Relation& rel : cat.relations())
    if (!relation_holds(cat, rep, rel)) return false;
  return true;
}

EvaluatedObject eval_object(const Representation& rep, const AdelObject& x) {
  const PathCategory& cat = *x.category();
  if (!check_representation(cat, rep)) throw Error("eval: representation violates a relation");
  const IntMatrix f_rho = evaluate(cat, rep, x.rel());
  const IntMatrix f_gamma = evaluate(cat, rep, x.corel());
  Subquotient sq = subquotient(left_kernel(f_gamma), f_rho);
  return {std::move(sq.basis), std::move(sq.group)};
}

EvaluatedMorphism eval_morphism(const Representation& rep, const AdelMorphism& phi) {
  EvaluatedObject s = eval_object(rep, phi.source());
  EvaluatedObject t = eval_object(rep, phi.target());
  const IntMatrix f_alpha = evaluate(*phi.category(), rep, phi.datum());
  auto m = solve_left(t.basis, s.basis * f_alpha);
  if (!m) throw Error("eval: internal error, image leaves the target kernel");
  GroupHom map{s.group, t.group, *std::move(m)};
  return {std::move(s), std::move(t), std::move(map)};
}

OracleReport oracle_kernel(const Representation& rep, const AdelMorphism& phi) {
  OracleReport report;
  const EvaluatedMorphism f = eval_morphism(rep, phi);
  if (!f.map.well_defined()) report.mismatches.push_back("kernel: evaluated map is not well defined");
  compare(report, "kernel", eval_object(rep, kernel(phi).object).group, kernel_group(f.map).group);
  return report;
}

OracleReport oracle_cokernel(const Representation& rep, const AdelMorphism& phi) {
  OracleReport report;
  const EvaluatedMorphism f = eval_morphism(rep, phi);
  if (!f.map.well_defined()) report.mismatches.push_back("cokernel: evaluated map is not well defined");
  compare(report, "cokernel", eval_object(rep, cokernel(phi).object).group, cokernel_group(f.map).group);
  return report;
}

OracleReport oracle_homology(const Representation& rep, const AdelMorphism& phi, const AdelMorphism& psi) {
  OracleReport report;
  const EvaluatedMorphism f = eval_morphism(rep, phi);
  const EvaluatedMorphism g = eval_morphism(rep, psi);
  // Both evaluations present the middle object on the same basis.
  compare(report, "homology", eval_object(rep, homology(phi, psi).object).group,
          homology_group(f.map, g.map).group);
  return report;
}

OracleReport oracle_exactness(const Representation& rep, const AdelMorphism& phi, const AdelMorphism& psi) {
  OracleReport report;
  if (!is_exact(phi, psi)) return report;
  const EvaluatedMorphism f = eval_morphism(rep, phi);
  const EvaluatedMorphism g = eval_morphism(rep, psi);
  const IntMatrix composite = f.map.matrix * g.map.matrix;
  for (std::size_t i = 0; i < composite.rows(); ++i)
    if (!g.target.group.is_zero(composite.row_copy(i))) {
      report.mismatches.push_back("exactness: evaluated composite is not zero");
      break;
    }
  if (!homology_group(f.map, g.map).group.is_trivial())
    report.mismatches.push_back("exactness: exact in Adel but evaluated homology is nonzero");
  return report;
}

Representation random_representation(const PathCategory& cat, std::mt19937_64& rng, std::size_t max_rank) {
  const Quiver& q = cat.quiver();
  std::uniform_int_distribution<std::size_t> rank_dist(0, max_rank);
  std::uniform_int_distribution<int> entry_dist(-2, 2);

  auto draw = [&] {
    Representation rep;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) rep.ranks.push_back(rank_dist(rng));
    for (const Arrow& a : q.arrows()) {
      IntMatrix m(rep.ranks[a.source.index], rep.ranks[a.target.index]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry_dist(rng);
      rep.matrices.push_back(std::move(m));
    }
    return rep;
  };

  constexpr int kAttempts = 8;
  Representation rep;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    rep = draw();
    if (check_representation(cat, rep)) return rep;
  }

  // Repair: kill one arrow on every term of the first violated relation.
  for (;;) {
    const Relation* failing = nullptr;
    for (const Relation& rel : cat.relations())
      if (!relation_holds(cat, rep, rel)) {
        failing = &rel;
        break;
      }
    if (!failing) return rep;
    for (const auto& term : failing->terms) {
      if (term.path.is_identity()) {
        const std::size_t v = term.path.source.index;
        rep.ranks[v] = 0;
        for (std::size_t k = 0; k < q.arrow_count(); ++k) {
          const Arrow& a = q.arrow(k);
          if (a.source.index == v || a.target.index == v)
            rep.matrices[k] = IntMatrix(rep.ranks[a.source.index], rep.ranks[a.target.index]);
        }
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, term.path.arrows.size() - 1);
      const std::size_t k = term.path.arrows[pick(rng)];
      rep.matrices[k] = IntMatrix(rep.matrices[k].rows(), rep.matrices[k].cols());
    }
  }
}

}  // namespace adel
