#include "adel/additive.hpp"

#include <sstream>

#include "adel/error.hpp"
#include "adel/normal_forms.hpp"

namespace adel {

TupleObject operator+(const TupleObject& a, const TupleObject& b) {
  TupleObject c = a;
  c.summands.insert(c.summands.end(), b.summands.begin(), b.summands.end());
  return c;
}

std::string to_string(const PathCategory& cat, const TupleObject& x) {
  if (x.is_zero()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += cat.quiver().name(x[i]);
  }
  return out + ")";
}

MatMorphism::MatMorphism(CategoryRef cat, TupleObject source, TupleObject target)
    : cat_(std::move(cat)), source_(std::move(source)), target_(std::move(target)) {
  if (!cat_) throw Error("MatMorphism needs a category");
  entries_.reserve(rows() * cols());
  for (Vertex s : source_.summands)
    for (Vertex t : target_.summands) {
      if (s.index >= cat_->vertex_count() || t.index >= cat_->vertex_count())
        throw Error("tuple object names a vertex outside the category");
      entries_.push_back(cat_->zero(s, t));
    }
}

MatMorphism MatMorphism::zero(CategoryRef cat, TupleObject source, TupleObject target) {
  return MatMorphism(std::move(cat), std::move(source), std::move(target));
}

MatMorphism MatMorphism::identity(CategoryRef cat, TupleObject x) {
  MatMorphism m(std::move(cat), x, x);
  for (std::size_t i = 0; i < x.size(); ++i) m.entries_[i * x.size() + i] = m.cat_->identity(x[i]);
  return m;
}

MatMorphism MatMorphism::from_entries(CategoryRef cat, TupleObject source, TupleObject target,
                                      std::vector<LinMorphism> entries) {
  MatMorphism m(std::move(cat), std::move(source), std::move(target));
  if (entries.size() != m.entries_.size()) throw Error("matrix entry count does not match tuple sizes");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      LinMorphism& e = entries[i * m.cols() + j];
      if (e.source != m.source_[i] || e.target != m.target_[j])
        throw Error("matrix entry endpoints do not match the tuples");
      m.entries_[i * m.cols() + j] = m.cat_->make(e.source, e.target, std::move(e.coeffs));
    }
  return m;
}

MatMorphism MatMorphism::single(CategoryRef cat, const LinMorphism& f) {
  return from_entries(std::move(cat), TupleObject{f.source}, TupleObject{f.target}, {f});
}

MatMorphism MatMorphism::block(const std::vector<std::vector<MatMorphism>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw Error("block matrix needs at least one block");
  const CategoryRef& cat = blocks.front().front().category();
  TupleObject source, target;
  for (const auto& row : blocks) source = source + row.front().source();
  for (const auto& b : blocks.front()) target = target + b.target();
  MatMorphism m(cat, source, target);
  std::size_t row_at = 0;
  for (const auto& row : blocks) {
    if (row.size() != blocks.front().size()) throw Error("ragged block matrix");
    std::size_t col_at = 0;
    for (std::size_t bj = 0; bj < row.size(); ++bj) {
      const MatMorphism& b = row[bj];
      if (b.category() != cat) throw Error("block matrix mixes categories");
      if (b.source() != row.front().source() || b.target() != blocks.front()[bj].target())
        throw Error("block matrix shapes do not line up");
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          m.entries_[(row_at + i) * m.cols() + col_at + j] = b.entry(i, j);
      col_at += b.cols();
    }
    row_at += row.front().rows();
  }
  return m;
}

bool MatMorphism::is_zero() const {
  for (const auto& e : entries_)
    if (!cat_->is_zero(e)) return false;
  return true;
}

MatMorphism MatMorphism::scaled(const Integer& k) const {
  MatMorphism m = *this;
  for (auto& e : m.entries_) e = cat_->scale(e, k);
  return m;
}

MatMorphism MatMorphism::opposite() const {
  MatMorphism m(PathCategory::opposite(cat_), target_, source_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m.entries_[j * m.cols() + i] = cat_->to_opposite(entry(i, j));
  return m;
}

std::string MatMorphism::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << cat_->to_string(entry(i, j));
    }
  }
  os << ']';
  return os.str();
}

MatMorphism operator*(const MatMorphism& f, const MatMorphism& g) {
  if (f.cat_ != g.cat_) throw Error("compose: morphisms live in different categories");
  if (f.target_ != g.source_) throw Error("compose: target of the first factor differs from source of the second");
  MatMorphism m(f.cat_, f.source_, g.target_);
  const PathCategory& c = *f.cat_;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const LinMorphism& x = f.entry(i, k);
      if (c.is_zero(x)) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const LinMorphism& y = g.entry(k, j);
        if (c.is_zero(y)) continue;
        LinMorphism& dst = m.entries_[i * m.cols() + j];
        dst = c.add(dst, c.compose(x, y));
      }
    }
  return m;
}

MatMorphism operator+(const MatMorphism& f, const MatMorphism& g) {
  if (f.cat_ != g.cat_ || f.source_ != g.source_ || f.target_ != g.target_)
    throw Error("add: morphisms do not share source and target");
  MatMorphism m = f;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = f.cat_->add(f.entries_[k], g.entries_[k]);
  return m;
}

MatMorphism operator-(const MatMorphism& f, const MatMorphism& g) { return f + (-g); }

MatMorphism operator-(const MatMorphism& f) { return f.scaled(-1); }

bool operator==(const MatMorphism& f, const MatMorphism& g) {
  return f.cat_ == g.cat_ && f.source_ == g.source_ && f.target_ == g.target_ && f.entries_ == g.entries_;
}

MatMorphism submatrix(const MatMorphism& f, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  if (r0 + nr > f.rows() || c0 + nc > f.cols()) throw Error("submatrix out of range");
  const auto& s = f.source().summands;
  const auto& t = f.target().summands;
  TupleObject src(std::vector<Vertex>(s.begin() + r0, s.begin() + r0 + nr));
  TupleObject tgt(std::vector<Vertex>(t.begin() + c0, t.begin() + c0 + nc));
  std::vector<LinMorphism> entries;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) entries.push_back(f.entry(r0 + i, c0 + j));
  return MatMorphism::from_entries(f.category(), std::move(src), std::move(tgt), std::move(entries));
}

MatMorphism direct_sum(const MatMorphism& f, const MatMorphism& g) {
  const CategoryRef& cat = f.category();
  return MatMorphism::block({{f, MatMorphism::zero(cat, f.source(), g.target())},
                             {MatMorphism::zero(cat, g.source(), f.target()), g}});
}

HomLayout::HomLayout(const CategoryRef& cat, TupleObject source, TupleObject target)
    : cat_(cat), source_(std::move(source)), target_(std::move(target)) {
  offsets_.reserve(source_.size() * target_.size());
  for (Vertex s : source_.summands)
    for (Vertex t : target_.summands) {
      offsets_.push_back(dimension_);
      dimension_ += cat_->hom_rank(s, t);
    }
}

IntVector HomLayout::flatten(const MatMorphism& f) const {
  if (f.source() != source_ || f.target() != target_) throw Error("flatten: morphism does not fit the layout");
  IntVector v(dimension_);
  for (std::size_t i = 0; i < source_.size(); ++i)
    for (std::size_t j = 0; j < target_.size(); ++j) {
      const auto& c = f.entry(i, j).coeffs;
      std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(offset(i, j)));
    }
  return v;
}

MatMorphism HomLayout::unflatten(const IntVector& coords, std::size_t first) const {
  if (first + dimension_ > coords.size()) throw Error("unflatten: coordinate vector too short");
  std::vector<LinMorphism> entries;
  entries.reserve(source_.size() * target_.size());
  for (std::size_t i = 0; i < source_.size(); ++i)
    for (std::size_t j = 0; j < target_.size(); ++j) {
      const std::size_t n = cat_->hom_rank(source_[i], target_[j]);
      const auto begin = coords.begin() + static_cast<std::ptrdiff_t>(first + offset(i, j));
      entries.push_back({source_[i], target_[j], IntVector(begin, begin + static_cast<std::ptrdiff_t>(n))});
    }
  return MatMorphism::from_entries(cat_, source_, target_, std::move(entries));
}

IntMatrix HomLayout::relation_rows() const {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < source_.size(); ++i)
    for (std::size_t j = 0; j < target_.size(); ++j) {
      const IntMatrix& rel = cat_->hom(source_[i], target_[j]).reduced_relations();
      for (std::size_t r = 0; r < rel.rows(); ++r) {
        IntVector row(dimension_);
        for (std::size_t k = 0; k < rel.cols(); ++k) row[offset(i, j) + k] = rel(r, k);
        rows.push_back(std::move(row));
      }
    }
  return IntMatrix::from_rows(rows, dimension_);
}

IntMatrix HomLayout::images(const MatMorphism* left, const MatMorphism* right) const {
  if (left && left->target() != source_) throw Error("images: left factor does not end at the layout source");
  if (right && right->source() != target_) throw Error("images: right factor does not start at the layout target");
  const TupleObject out_source = left ? left->source() : source_;
  const TupleObject out_target = right ? right->target() : target_;
  const HomLayout out(cat_, out_source, out_target);
  const PathCategory& c = *cat_;
  IntMatrix result(dimension_, out.dimension());
  for (std::size_t i = 0; i < source_.size(); ++i)
    for (std::size_t j = 0; j < target_.size(); ++j) {
      const std::size_t n = c.hom_rank(source_[i], target_[j]);
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t row = offset(i, j) + p;
        const LinMorphism e = c.basis_element(source_[i], target_[j], p);
        // Left factor: rows k of the output that see column i of `left`.
        std::vector<std::pair<std::size_t, LinMorphism>> lefted;
        if (left) {
          for (std::size_t k = 0; k < out_source.size(); ++k) {
            const LinMorphism& l = left->entry(k, i);
            if (!c.is_zero(l)) lefted.emplace_back(k, c.compose(l, e));
          }
        } else {
          lefted.emplace_back(i, e);
        }
        for (const auto& [k, le] : lefted) {
          if (c.is_zero(le)) continue;
          auto place = [&](std::size_t col, const LinMorphism& value) {
            const std::size_t at = out.offset(k, col);
            for (std::size_t q = 0; q < value.coeffs.size(); ++q) result(row, at + q) += value.coeffs[q];
          };
          if (right) {
            for (std::size_t l = 0; l < out_target.size(); ++l) {
              const LinMorphism& r = right->entry(j, l);
              if (!c.is_zero(r)) place(l, c.compose(le, r));
            }
          } else {
            place(j, le);
          }
        }
      }
    }
  return result;
}

bool check_homotopy(const MatMorphism& alpha, const MatMorphism& beta, const MatMorphism& gamma,
                    const HomotopySolution& w) {
  try {
    return alpha == w.sigma1 * beta + gamma * w.sigma2;
  } catch (const Error&) {
    return false;
  }
}

std::optional<HomotopySolution> decide_homotopy(const MatMorphism& alpha, const MatMorphism& beta,
                                                const MatMorphism& gamma) {
  const CategoryRef& cat = alpha.category();
  if (beta.category() != cat || gamma.category() != cat) throw Error("decide_homotopy: mixed categories");
  if (beta.target() != alpha.target()) throw Error("decide_homotopy: β must end where α ends");
  if (gamma.source() != alpha.source()) throw Error("decide_homotopy: γ must start where α starts");

  const HomLayout s1(cat, alpha.source(), beta.source());
  const HomLayout s2(cat, gamma.target(), alpha.target());
  const HomLayout out(cat, alpha.source(), alpha.target());

  // Unknowns: σ₁ coordinates, σ₂ coordinates, then one slack per relation
  // generator of the target Hom-groups.
  const IntMatrix system = vstack(std::vector<IntMatrix>{s1.images(nullptr, &beta), s2.images(&gamma, nullptr),
                                                         out.relation_rows()},
                                  out.dimension());
  const auto x = solve_left(system, IntMatrix::row_vector(out.flatten(alpha)));
  if (!x) return std::nullopt;
  const IntVector sol = x->row_copy(0);
  HomotopySolution w{s1.unflatten(sol, 0), s2.unflatten(sol, s1.dimension())};
  if (!check_homotopy(alpha, beta, gamma, w)) throw Error("decide_homotopy: internal error, solution failed re-check");
  return w;
}

}  // namespace adel
