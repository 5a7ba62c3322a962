#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adel/adelman.hpp"
#include "adel/error.hpp"
#include "adel/evaluation.hpp"

namespace adel {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Error with a position; what() reads "line L, column C: message".
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

/// Z-linear combination of `*`-chained labels. `id_v` names the identity path
/// at v. An empty term list is the literal 0.
struct Expr {
  struct Term {
    Integer coefficient = 1;
    std::vector<std::string> factors;  // empty: the bare integer `coefficient`
    SourcePos pos;
    friend bool operator==(const Term& a, const Term& b) {
      return a.coefficient == b.coefficient && a.factors == b.factors;
    }
  };
  std::vector<Term> terms;
  SourcePos pos;

  friend bool operator==(const Expr& a, const Expr& b) { return a.terms == b.terms; }
};

struct ArrowDecl {
  std::string label;
  std::string source;
  std::string target;
  SourcePos pos;
  friend bool operator==(const ArrowDecl& a, const ArrowDecl& b) {
    return a.label == b.label && a.source == b.source && a.target == b.target;
  }
};

struct RelationDecl {
  Expr lhs;
  std::optional<Expr> rhs;
  SourcePos pos;
  friend bool operator==(const RelationDecl& a, const RelationDecl& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

struct CategorySpec {
  std::string name;
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<RelationDecl> relations;
  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

/// Parses a single `category NAME { ... }` block (the whole input).
CategorySpec parse_category(std::string_view text);
std::string print_category(const CategorySpec& spec);
std::string print_expr(const Expr& e);
/// Validates (unknown names, cycles, non-parallel relations) and builds the category.
CategoryRef build_category(const CategorySpec& spec);

/// Named values defined after the category block of a session file:
///
///   morphism NAME : (a, b) -> (c) = [x, y; z, w];
///   object NAME = (RHO | GAMMA);      object NAME = emb (a, b);
///   adel NAME : OBJ -> OBJ = DATUM;
class Session {
 public:
  static Session parse(std::string_view text);

  const CategorySpec& spec() const { return spec_; }
  const CategoryRef& category() const { return cat_; }
  const std::map<std::string, MatMorphism>& morphisms() const { return morphisms_; }
  const std::map<std::string, AdelObject>& objects() const { return objects_; }
  const std::map<std::string, AdelMorphism>& adel_morphisms() const { return adel_; }

  /// An object name, a vertex or tuple (embedded), or an inline `(RHO | GAMMA)`.
  AdelObject resolve_object(std::string_view text) const;
  /// An adel morphism name, a morphism name (embedded), or an inline
  /// expression over arrow labels (embedded, endpoints inferred).
  AdelMorphism resolve_morphism(std::string_view text) const;
  /// A morphism name or inline expression in C(Q,R)⊕.
  MatMorphism resolve_matrix(std::string_view text) const;

 private:
  friend class SessionParser;
  CategorySpec spec_;
  CategoryRef cat_;
  std::map<std::string, MatMorphism> morphisms_;
  std::map<std::string, AdelObject> objects_;
  std::map<std::string, AdelMorphism> adel_;
};

/// `(a, b)`, `a`, or `0`.
TupleObject parse_tuple(const PathCategory& cat, std::string_view text);
/// A matrix literal `[e11, e12; e21, e22]` (or a single entry) with known endpoints.
/// Entries are expressions; a bare integer k on a diagonal position means k·id.
MatMorphism parse_matrix(const CategoryRef& cat, const TupleObject& source, const TupleObject& target,
                         std::string_view text);
/// Shorthand: endpoints given as tuple text.
MatMorphism parse_matrix(const CategoryRef& cat, std::string_view source, std::string_view target,
                         std::string_view text);

/// Representation file: `rank v = n` and `matrix l = [[..],[..]]` lines,
/// `#` comments. Missing ranks are 0, missing matrices are zero.
Representation parse_representation(const PathCategory& cat, std::string_view text);
std::string print_representation(const PathCategory& cat, const Representation& rep);

}  // namespace adel
