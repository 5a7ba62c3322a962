#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "adel/fp_group.hpp"
#include "adel/int_matrix.hpp"

namespace adel {

/// Vertex of a quiver, by position in the quiver's vertex list.
struct Vertex {
  std::size_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Arrow {
  std::string label;
  Vertex source;
  Vertex target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite acyclic quiver. Labels are unique; acyclicity is checked on construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Convenience: arrows given by (label, source name, target name).
  static Quiver from_names(std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::string& name(Vertex v) const { return vertices_.at(v.index); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }

  std::optional<Vertex> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& label) const;
  /// Throws adel::Error for unknown names.
  Vertex vertex(const std::string& name) const;
  std::size_t arrow_index(const std::string& label) const;

  /// Same vertices and labels, every arrow reversed.
  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A composable arrow sequence. The empty sequence is the identity path at
/// source == target.
struct Path {
  Vertex source;
  Vertex target;
  std::vector<std::size_t> arrows;

  static Path identity(Vertex v) { return {v, v, {}}; }
  static Path of_arrows(const Quiver& q, std::vector<std::size_t> arrows);
  bool is_identity() const { return arrows.empty(); }
  /// Diagrammatic concatenation: this path, then `next`.
  Path then(const Path& next) const;
  /// Validates composability against `q`.
  bool valid_in(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Every path a -> b, ordered by length, then lexicographically by arrow index.
std::vector<Path> enumerate_paths(const Quiver& q, Vertex a, Vertex b);

/// Z-linear combination of parallel paths, understood as "= 0".
struct Relation {
  struct Term {
    Integer coefficient;
    Path path;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  Vertex source() const { return terms.front().path.source; }
  Vertex target() const { return terms.front().path.target; }
  /// Nonempty and every term runs between the same endpoints.
  bool homogeneous() const;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Rows generate the subgroup of Z^{paths(a,b)} spanned by p·r·q for every
/// relation r and all paths p: a -> source(r), q: target(r) -> b.
IntMatrix relation_subgroup(const Quiver& q, const std::vector<Relation>& relations, Vertex a, Vertex b);

/// Element of Hom(source, target) in C(Q,R), stored as a canonical
/// coefficient vector over the ordered path basis.
struct LinMorphism {
  Vertex source;
  Vertex target;
  IntVector coeffs;

  friend bool operator==(const LinMorphism&, const LinMorphism&) = default;
};

class PathCategory;
using CategoryRef = std::shared_ptr<const PathCategory>;

/// The Z-linear category C(Q,R) with every Hom-set precomputed.
///
/// Categories are created in dual pairs: `opposite(c)` hands out the partner
/// built alongside `c`, so dualizing twice lands on the same object.
class PathCategory {
 public:
  static CategoryRef create(Quiver quiver, std::vector<Relation> relations);
  static CategoryRef opposite(const CategoryRef& c);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  /// True for the category built as the opposite partner.
  bool is_opposite() const { return is_opposite_; }

  const std::vector<Path>& paths(Vertex a, Vertex b) const { return homs_[slot(a, b)].paths; }
  std::size_t hom_rank(Vertex a, Vertex b) const { return homs_[slot(a, b)].paths.size(); }
  std::optional<std::size_t> path_index(const Path& p) const;
  /// Hom(a,b) as Z^{paths} / relation subgroup.
  const FpAbGroup& hom(Vertex a, Vertex b) const { return homs_[slot(a, b)].group; }

  LinMorphism zero(Vertex a, Vertex b) const;
  LinMorphism identity(Vertex v) const;
  LinMorphism from_path(const Path& p, const Integer& coefficient = 1) const;
  LinMorphism basis_element(Vertex a, Vertex b, std::size_t path_index) const;
  LinMorphism arrow(const std::string& label) const;
  /// Reduces an arbitrary coefficient vector to canonical form.
  LinMorphism make(Vertex a, Vertex b, IntVector coeffs) const;

  /// Diagrammatic composite: f, then g.
  LinMorphism compose(const LinMorphism& f, const LinMorphism& g) const;
  LinMorphism add(const LinMorphism& f, const LinMorphism& g) const;
  LinMorphism negate(const LinMorphism& f) const;
  LinMorphism scale(const LinMorphism& f, const Integer& k) const;
  bool equal(const LinMorphism& f, const LinMorphism& g) const;
  bool is_zero(const LinMorphism& f) const { return adel::is_zero(f.coeffs); }

  /// The same element read in the opposite category.
  LinMorphism to_opposite(const LinMorphism& f) const;

  std::string to_string(const LinMorphism& f) const;

 private:
  struct HomData {
    std::vector<Path> paths;
    std::map<std::vector<std::size_t>, std::size_t> index;
    FpAbGroup group;
  };
  struct Pair;

  PathCategory(Quiver quiver, std::vector<Relation> relations, bool is_opposite);
  std::size_t slot(Vertex a, Vertex b) const { return a.index * quiver_.vertex_count() + b.index; }
  void check_endpoints(const LinMorphism& f) const;

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<HomData> homs_;
  bool is_opposite_ = false;
  const PathCategory* partner_ = nullptr;
};

}  // namespace adel
