#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "adel/int_matrix.hpp"
#include "adel/quiver.hpp"

namespace adel {

/// Object of the additive closure: a (possibly empty) tuple of vertices.
/// The empty tuple is the zero object.
struct TupleObject {
  std::vector<Vertex> summands;

  TupleObject() = default;
  TupleObject(std::initializer_list<Vertex> vs) : summands(vs) {}
  explicit TupleObject(std::vector<Vertex> vs) : summands(std::move(vs)) {}

  std::size_t size() const { return summands.size(); }
  bool is_zero() const { return summands.empty(); }
  Vertex operator[](std::size_t i) const { return summands.at(i); }

  friend TupleObject operator+(const TupleObject& a, const TupleObject& b);
  friend bool operator==(const TupleObject&, const TupleObject&) = default;
};

/// "(a, b)" with vertex names, or "0" for the empty tuple.
std::string to_string(const PathCategory& cat, const TupleObject& x);

/// Morphism of the additive closure: an m×n matrix whose (i,j) entry is a
/// morphism source[i] -> target[j]. Entries are kept in canonical form.
///
/// `*` composes in diagrammatic order (f * g is "f, then g"), so the product of
/// an m×n and an n×k matrix is m×k.
class MatMorphism {
 public:
  MatMorphism() = default;
  /// Zero morphism.
  MatMorphism(CategoryRef cat, TupleObject source, TupleObject target);

  static MatMorphism zero(CategoryRef cat, TupleObject source, TupleObject target);
  static MatMorphism identity(CategoryRef cat, TupleObject x);
  /// Entries row-major; each must run source[i] -> target[j].
  static MatMorphism from_entries(CategoryRef cat, TupleObject source, TupleObject target,
                                  std::vector<LinMorphism> entries);
  static MatMorphism single(CategoryRef cat, const LinMorphism& f);
  /// Block matrix; blocks in a row share a source, blocks in a column share a target.
  static MatMorphism block(const std::vector<std::vector<MatMorphism>>& blocks);

  const CategoryRef& category() const { return cat_; }
  const TupleObject& source() const { return source_; }
  const TupleObject& target() const { return target_; }
  std::size_t rows() const { return source_.size(); }
  std::size_t cols() const { return target_.size(); }
  const LinMorphism& entry(std::size_t i, std::size_t j) const { return entries_.at(i * cols() + j); }

  bool is_zero() const;
  MatMorphism scaled(const Integer& k) const;
  /// Same morphism read in the opposite category: transposed, every path reversed.
  MatMorphism opposite() const;
  std::string to_string() const;

  friend MatMorphism operator*(const MatMorphism& f, const MatMorphism& g);
  friend MatMorphism operator+(const MatMorphism& f, const MatMorphism& g);
  friend MatMorphism operator-(const MatMorphism& f, const MatMorphism& g);
  friend MatMorphism operator-(const MatMorphism& f);
  /// Exact equality (entries are canonical).
  friend bool operator==(const MatMorphism& f, const MatMorphism& g);

 private:
  CategoryRef cat_;
  TupleObject source_;
  TupleObject target_;
  std::vector<LinMorphism> entries_;
};

inline MatMorphism compose(const MatMorphism& f, const MatMorphism& g) { return f * g; }
inline MatMorphism add(const MatMorphism& f, const MatMorphism& g) { return f + g; }
inline MatMorphism negate(const MatMorphism& f) { return -f; }

/// Rows [r0, r0+nr) and columns [c0, c0+nc) of f.
MatMorphism submatrix(const MatMorphism& f, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc);

/// Block-diagonal sum on concatenated tuples.
MatMorphism direct_sum(const MatMorphism& f, const MatMorphism& g);

/// Free coordinates of Hom(X, Y) in the additive closure: entry (i,j)
/// contributes one coordinate per path X_i -> Y_j, blocks in row-major order.
class HomLayout {
 public:
  HomLayout(const CategoryRef& cat, TupleObject source, TupleObject target);

  std::size_t dimension() const { return dimension_; }
  std::size_t offset(std::size_t i, std::size_t j) const { return offsets_[i * target_.size() + j]; }
  const TupleObject& source() const { return source_; }
  const TupleObject& target() const { return target_; }

  IntVector flatten(const MatMorphism& f) const;
  MatMorphism unflatten(const IntVector& coords, std::size_t first = 0) const;
  /// Relation generators of every entry group, placed in layout coordinates.
  IntMatrix relation_rows() const;

  /// Row k is the image of the k-th basis element E of this layout under
  /// E ↦ left · E · right (either factor may be absent, meaning identity).
  IntMatrix images(const MatMorphism* left, const MatMorphism* right) const;

 private:
  CategoryRef cat_;
  TupleObject source_;
  TupleObject target_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
};

struct HomotopySolution {
  MatMorphism sigma1;
  MatMorphism sigma2;
};

/// Decides α = σ₁·β + γ·σ₂ for α: a -> b, β: d -> b, γ: a -> c, returning
/// σ₁: a -> d and σ₂: c -> b when a solution exists. Every returned solution
/// has been re-checked by matrix arithmetic.
std::optional<HomotopySolution> decide_homotopy(const MatMorphism& alpha, const MatMorphism& beta,
                                                const MatMorphism& gamma);

/// True iff α = σ₁·β + γ·σ₂ holds exactly.
bool check_homotopy(const MatMorphism& alpha, const MatMorphism& beta, const MatMorphism& gamma,
                    const HomotopySolution& witness);

}  // namespace adel
