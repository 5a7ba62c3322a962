#include "adel/homgroups.hpp"

#include "adel/error.hpp"

namespace adel {

namespace {

// Places `block` at column offset `col` inside a matrix of width `width`.
IntMatrix pad(const IntMatrix& block, std::size_t col, std::size_t width) {
  IntMatrix out(block.rows(), width);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) out(i, col + j) = block(i, j);
  return out;
}

}  // namespace

HomGroupPresentation hom_group(const AdelObject& x, const AdelObject& y) {
  const CategoryRef& c = x.category();
  if (y.category() != c) throw Error("hom_group: objects live in different categories");

  const HomLayout data(c, x.middle(), y.middle());
  const HomLayout omega(c, x.relations(), y.relations());
  const HomLayout psi(c, x.corelations(), y.corelations());
  const HomLayout eq1(c, x.relations(), y.middle());
  const HomLayout eq2(c, x.middle(), y.corelations());
  const std::size_t width = eq1.dimension() + eq2.dimension();
  const std::size_t n = data.dimension();

  // Unknowns (α, ω, ψ, slack) with ρ_X·α − ω·ρ_Y = 0 and α·γ_Y − γ_X·ψ = 0.
  const IntMatrix system =
      vstack(std::vector<IntMatrix>{
                 hstack(data.images(&x.rel(), nullptr), data.images(nullptr, &y.corel())),
                 pad(-omega.images(nullptr, &y.rel()), 0, width),
                 pad(-psi.images(&x.corel(), nullptr), eq1.dimension(), width),
                 pad(eq1.relation_rows(), 0, width),
                 pad(eq2.relation_rows(), eq1.dimension(), width),
             },
             width);
  const IntMatrix solutions = left_kernel(system).col_range(0, n);

  const HomLayout s1(c, x.middle(), y.relations());
  const HomLayout s2(c, x.corelations(), y.middle());
  const IntMatrix null_homotopic = vstack(
      std::vector<IntMatrix>{data.relation_rows(), s1.images(nullptr, &y.rel()), s2.images(&x.corel(), nullptr)}, n);

  Subquotient sq = subquotient(solutions, null_homotopic);
  const std::size_t k = sq.basis.rows();
  const SmithForm sf = smith_form(sq.group.relations());
  const auto q_inverse = solve_left(sf.Q, IntMatrix::identity(k));
  if (!q_inverse) throw Error("hom_group: internal error, Smith transform not invertible");
  const IntMatrix gen_vectors = *q_inverse * sq.basis;

  HomGroupPresentation out;
  out.source = x;
  out.target = y;
  out.lattice_basis = sq.basis;
  out.to_generators = sf.Q;
  std::vector<IntVector> rel_rows;
  for (std::size_t i = 0; i < k; ++i) {
    const Integer d = i < sf.rank ? Integer(abs(sf.D(i, i))) : Integer(0);
    if (d == 1) continue;
    out.kept.push_back(i);
    out.orders.push_back(d);
    out.generators.push_back(morphism(x, y, data.unflatten(gen_vectors.row_copy(i))));
  }
  for (std::size_t g = 0; g < out.kept.size(); ++g)
    if (out.orders[g] != 0) {
      IntVector row(out.kept.size());
      row[g] = out.orders[g];
      rel_rows.push_back(std::move(row));
    }
  out.group = FpAbGroup(out.kept.size(), IntMatrix::from_rows(rel_rows, out.kept.size()));
  out.invariants = out.group.invariants();
  return out;
}

std::optional<IntVector> HomGroupPresentation::coordinates(const MatMorphism& datum) const {
  if (!make_morphism(source, target, datum)) return std::nullopt;
  const HomLayout data(source.category(), source.middle(), target.middle());
  const auto x = solve_left(lattice_basis, IntMatrix::row_vector(data.flatten(datum)));
  if (!x) return std::nullopt;
  const IntVector y = x->row_copy(0) * to_generators;
  IntVector out(kept.size());
  for (std::size_t g = 0; g < kept.size(); ++g) {
    out[g] = y[kept[g]];
    if (orders[g] != 0) mpz_fdiv_r(out[g].get_mpz_t(), out[g].get_mpz_t(), orders[g].get_mpz_t());
  }
  return out;
}

}  // namespace adel
