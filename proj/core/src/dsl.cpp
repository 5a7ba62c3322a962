#include "adel/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace adel {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : Error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
    } else if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", pos});
      advance(2);
    } else if (std::string_view("{};:,()[]|=+-*").find(ch) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, ch), pos});
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "number " + t.text;
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Sym: return "'" + t.text + "'";
  }
  return "?";
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[at_];
    if (at_ + 1 < toks_.size()) ++at_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).text == s;
  }
  bool is_ident(const char* s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == s;
  }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  const Token& expect(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  void expect_keyword(const char* kw) {
    if (!is_ident(kw)) fail(std::string("expected '") + kw + "', found " + describe(peek()));
    next();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected " + describe(peek()));
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().pos, msg); }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

Expr parse_expr(Cursor& in) {
  Expr e;
  e.pos = in.peek().pos;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (in.is_sym("-") || in.is_sym("+")) {
      sign = in.next().text == "-" ? -1 : 1;
    } else if (!first) {
      break;
    }
    Expr::Term term;
    term.pos = in.peek().pos;
    if (in.peek().kind == Tok::Int) {
      term.coefficient = Integer(in.next().text);
      if (in.accept("*")) term.factors.push_back(in.expect_ident("an arrow label").text);
    } else if (in.peek().kind == Tok::Ident) {
      term.factors.push_back(in.next().text);
    } else {
      in.fail("expected a term, found " + describe(in.peek()));
    }
    while (!term.factors.empty() && in.accept("*")) term.factors.push_back(in.expect_ident("an arrow label").text);
    term.coefficient *= sign;
    e.terms.push_back(std::move(term));
    first = false;
  }
  if (e.terms.size() == 1 && e.terms[0].factors.empty() && e.terms[0].coefficient == 0) e.terms.clear();
  return e;
}

// Resolved path of a term: arrow indices plus endpoints.
struct TermPath {
  Path path;
  bool bare = false;  // integer without factors: endpoints free
};

TermPath resolve_term(const Quiver& q, const Expr::Term& t) {
  TermPath out;
  if (t.factors.empty()) {
    out.bare = true;
    return out;
  }
  std::optional<Vertex> at;  // current endpoint while walking
  std::optional<Vertex> start;
  for (const auto& f : t.factors) {
    if (auto k = q.find_arrow(f)) {
      const Arrow& a = q.arrow(*k);
      if (at && *at != a.source)
        throw ParseError(t.pos, "path does not compose: '" + f + "' starts at '" + q.name(a.source) + "', not at '" +
                                    q.name(*at) + "'");
      if (!start) start = a.source;
      out.path.arrows.push_back(*k);
      at = a.target;
    } else if (f.rfind("id_", 0) == 0 && q.find_vertex(f.substr(3))) {
      const Vertex v = *q.find_vertex(f.substr(3));
      if (at && *at != v) throw ParseError(t.pos, "path does not compose at '" + f + "'");
      if (!start) start = v;
      at = v;
    } else {
      throw ParseError(t.pos, "unknown arrow '" + f + "'");
    }
  }
  out.path.source = *start;
  out.path.target = *at;
  return out;
}

// Endpoints of the first term that has any, if any.
std::optional<std::pair<Vertex, Vertex>> infer_endpoints(const Quiver& q, const Expr& e) {
  for (const auto& t : e.terms) {
    TermPath p = resolve_term(q, t);
    if (!p.bare) return std::make_pair(p.path.source, p.path.target);
  }
  return std::nullopt;
}

LinMorphism to_lin(const PathCategory& cat, const Expr& e, Vertex s, Vertex t) {
  const Quiver& q = cat.quiver();
  LinMorphism out = cat.zero(s, t);
  for (const auto& term : e.terms) {
    TermPath p = resolve_term(q, term);
    if (p.bare && term.coefficient == 0) continue;
    if (p.bare) {
      if (s != t)
        throw ParseError(term.pos, "a bare integer needs equal endpoints, here '" + q.name(s) + "' and '" + q.name(t) +
                                       "'");
      p.path = Path::identity(s);
    }
    if (p.path.source != s || p.path.target != t)
      throw ParseError(term.pos, "term runs " + q.name(p.path.source) + " -> " + q.name(p.path.target) +
                                     ", expected " + q.name(s) + " -> " + q.name(t));
    out = cat.add(out, cat.from_path(p.path, term.coefficient));
  }
  return out;
}

TupleObject parse_tuple_at(Cursor& in, const Quiver& q) {
  auto vertex = [&](const Token& tok) {
    auto v = q.find_vertex(tok.text);
    if (!v) throw ParseError(tok.pos, "unknown object '" + tok.text + "'");
    return *v;
  };
  if (in.peek().kind == Tok::Int) {
    const Token& t = in.next();
    if (t.text != "0") throw ParseError(t.pos, "expected a tuple of objects");
    return {};
  }
  if (in.peek().kind == Tok::Ident) return TupleObject{vertex(in.next())};
  in.expect("(");
  TupleObject x;
  if (in.accept(")")) return x;
  do {
    x.summands.push_back(vertex(in.expect_ident("an object name")));
  } while (in.accept(","));
  in.expect(")");
  return x;
}

MatMorphism parse_matrix_at(Cursor& in, const CategoryRef& cat, const TupleObject& s, const TupleObject& t) {
  const SourcePos start = in.peek().pos;
  std::vector<std::vector<Expr>> rows;
  if (in.accept("[")) {
    if (!in.is_sym("]")) {
      rows.emplace_back();
      for (;;) {
        rows.back().push_back(parse_expr(in));
        if (in.accept(",")) continue;
        if (in.accept(";")) {
          rows.emplace_back();
          continue;
        }
        break;
      }
    }
    in.expect("]");
  } else {
    rows.push_back({parse_expr(in)});
  }
  const std::size_t m = s.size();
  const std::size_t n = t.size();
  if (m == 0 || n == 0) {
    if (!rows.empty()) throw ParseError(start, "a matrix between " + std::to_string(m) + " and " + std::to_string(n) +
                                                   " summands must be written []");
    return MatMorphism::zero(cat, s, t);
  }
  if (rows.size() != m) throw ParseError(start, "expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
  std::vector<LinMorphism> entries;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n)
      throw ParseError(rows[i].front().pos, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                                " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) entries.push_back(to_lin(*cat, rows[i][j], s[i], t[j]));
  }
  return MatMorphism::from_entries(cat, s, t, std::move(entries));
}

CategorySpec parse_category_at(Cursor& in) {
  CategorySpec spec;
  in.expect_keyword("category");
  spec.name = in.expect_ident("a category name").text;
  in.expect("{");
  in.expect_keyword("objects");
  while (in.peek().kind == Tok::Ident) spec.objects.push_back(in.next().text);
  if (spec.objects.empty()) in.fail("expected at least one object name");
  in.expect(";");
  enum { None, Arrows, Relations } section = None;
  while (!in.is_sym("}")) {
    if (in.at_end()) in.fail("unterminated category block");
    if (in.is_ident("arrows") && !in.is_sym(":", 1)) {
      in.next();
      section = Arrows;
      continue;
    }
    if (in.is_ident("relations") && !in.is_sym(":", 1)) {
      in.next();
      section = Relations;
      continue;
    }
    if (section == Arrows) {
      ArrowDecl a;
      a.pos = in.peek().pos;
      a.label = in.expect_ident("an arrow label").text;
      in.expect(":");
      a.source = in.expect_ident("a source object").text;
      in.expect("->");
      a.target = in.expect_ident("a target object").text;
      in.expect(";");
      spec.arrows.push_back(std::move(a));
    } else if (section == Relations) {
      RelationDecl r;
      r.pos = in.peek().pos;
      r.lhs = parse_expr(in);
      if (in.accept("=")) r.rhs = parse_expr(in);
      in.expect(";");
      spec.relations.push_back(std::move(r));
    } else {
      in.fail("expected 'arrows' or 'relations', found " + describe(in.peek()));
    }
  }
  in.expect("}");
  return spec;
}

std::string print_term(const Expr::Term& t, bool first) {
  std::string out;
  const bool negative = sgn(t.coefficient) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Integer k = abs(t.coefficient);
  if (t.factors.empty()) return out + k.get_str();
  if (k != 1) out += k.get_str() + "*";
  for (std::size_t i = 0; i < t.factors.size(); ++i) out += (i ? "*" : "") + t.factors[i];
  return out;
}

}  // namespace

std::string print_expr(const Expr& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) out += print_term(e.terms[i], i == 0);
  return out;
}

CategorySpec parse_category(std::string_view text) {
  Cursor in(text);
  CategorySpec spec = parse_category_at(in);
  in.expect_end();
  return spec;
}

std::string print_category(const CategorySpec& spec) {
  std::ostringstream os;
  os << "category " << spec.name << " {\n  objects";
  for (const auto& v : spec.objects) os << ' ' << v;
  os << ";\n";
  if (!spec.arrows.empty()) {
    os << "  arrows\n";
    for (const auto& a : spec.arrows) os << "    " << a.label << ": " << a.source << " -> " << a.target << ";\n";
  }
  if (!spec.relations.empty()) {
    os << "  relations\n";
    for (const auto& r : spec.relations) {
      os << "    " << print_expr(r.lhs);
      if (r.rhs) os << " = " << print_expr(*r.rhs);
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

CategoryRef build_category(const CategorySpec& spec) {
  std::set<std::string> names;
  for (const auto& v : spec.objects)
    if (!names.insert(v).second) throw ParseError({}, "object '" + v + "' declared twice");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::set<std::string> labels;
  for (const auto& a : spec.arrows) {
    if (!names.count(a.source)) throw ParseError(a.pos, "unknown object '" + a.source + "'");
    if (!names.count(a.target)) throw ParseError(a.pos, "unknown object '" + a.target + "'");
    if (!labels.insert(a.label).second) throw ParseError(a.pos, "arrow '" + a.label + "' declared twice");
    arrows.emplace_back(a.label, a.source, a.target);
  }
  Quiver q;
  try {
    q = Quiver::from_names(spec.objects, arrows);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(spec.arrows.empty() ? SourcePos{} : spec.arrows.front().pos, e.what());
  }

  std::vector<Relation> relations;
  for (const auto& r : spec.relations) {
    Expr all = r.lhs;
    if (r.rhs)
      for (auto t : r.rhs->terms) {
        t.coefficient = -t.coefficient;
        all.terms.push_back(std::move(t));
      }
    auto ends = infer_endpoints(q, all);
    if (!ends) throw ParseError(r.pos, "relation mentions no arrow or identity");
    Relation rel;
    for (const auto& t : all.terms) {
      TermPath p = resolve_term(q, t);
      if (p.bare) {
        if (ends->first != ends->second) throw ParseError(t.pos, "relation terms are not parallel");
        p.path = Path::identity(ends->first);
      }
      if (p.path.source != ends->first || p.path.target != ends->second)
        throw ParseError(t.pos, "relation terms are not parallel: this term runs " + q.name(p.path.source) + " -> " +
                                    q.name(p.path.target) + ", the first runs " + q.name(ends->first) + " -> " +
                                    q.name(ends->second));
      rel.terms.push_back({t.coefficient, p.path});
    }
    relations.push_back(std::move(rel));
  }
  return PathCategory::create(std::move(q), std::move(relations));
}

TupleObject parse_tuple(const PathCategory& cat, std::string_view text) {
  Cursor in(text);
  TupleObject x = parse_tuple_at(in, cat.quiver());
  in.expect_end();
  return x;
}

MatMorphism parse_matrix(const CategoryRef& cat, const TupleObject& source, const TupleObject& target,
                         std::string_view text) {
  Cursor in(text);
  MatMorphism m = parse_matrix_at(in, cat, source, target);
  in.expect_end();
  return m;
}

MatMorphism parse_matrix(const CategoryRef& cat, std::string_view source, std::string_view target,
                         std::string_view text) {
  return parse_matrix(cat, parse_tuple(*cat, source), parse_tuple(*cat, target), text);
}

class SessionParser {
 public:
  SessionParser(Cursor& in, Session& s) : in_(in), s_(s) {}

  void statements() {
    while (!in_.at_end()) {
      const Token& kw = in_.expect_ident("'morphism', 'object' or 'adel'");
      if (kw.text == "morphism") {
        morphism_def();
      } else if (kw.text == "object") {
        object_def();
      } else if (kw.text == "adel") {
        adel_def();
      } else {
        throw ParseError(kw.pos, "expected 'morphism', 'object' or 'adel', found '" + kw.text + "'");
      }
    }
  }

  // OBJ := NAME | emb TUPLE | ( SIDE | SIDE ) | TUPLE
  AdelObject object_ref() {
    const Quiver& q = s_.cat_->quiver();
    if (in_.is_ident("emb")) {
      in_.next();
      return emb(s_.cat_, parse_tuple_at(in_, q));
    }
    if (in_.peek().kind == Tok::Ident) {
      const Token& t = in_.peek();
      if (auto it = s_.objects_.find(t.text); it != s_.objects_.end()) {
        in_.next();
        return it->second;
      }
      if (q.find_vertex(t.text)) return emb(s_.cat_, parse_tuple_at(in_, q));
      in_.fail("unknown object '" + t.text + "'");
    }
    if (in_.is_sym("(") && has_bar()) {
      in_.expect("(");
      auto rho = side();
      in_.expect("|");
      auto gamma = side();
      in_.expect(")");
      const TupleObject none;
      if (!rho && !gamma) in_.fail("an object needs a relation or a corelation; use emb for (0 -> x -> 0)");
      if (!rho) rho = MatMorphism::zero(s_.cat_, none, gamma->source());
      if (!gamma) gamma = MatMorphism::zero(s_.cat_, rho->target(), none);
      if (rho->target() != gamma->source()) in_.fail("relation and corelation do not meet in the same object");
      return AdelObject(*rho, *gamma);
    }
    return emb(s_.cat_, parse_tuple_at(in_, q));
  }

  // A named morphism or an expression with inferred endpoints.
  MatMorphism matrix_ref() {
    if (in_.peek().kind == Tok::Ident && !in_.is_sym("*", 1)) {
      if (auto it = s_.morphisms_.find(in_.peek().text); it != s_.morphisms_.end()) {
        in_.next();
        return it->second;
      }
    }
    const Expr e = parse_expr(in_);
    auto ends = infer_endpoints(s_.cat_->quiver(), e);
    if (!ends) throw ParseError(e.pos, "cannot infer the endpoints of '" + print_expr(e) + "'");
    return MatMorphism::single(s_.cat_, to_lin(*s_.cat_, e, ends->first, ends->second));
  }

  AdelMorphism morphism_ref() {
    if (in_.peek().kind == Tok::Ident && !in_.is_sym("*", 1)) {
      if (auto it = s_.adel_.find(in_.peek().text); it != s_.adel_.end()) {
        in_.next();
        return it->second;
      }
    }
    return emb(matrix_ref());
  }

  Cursor& cursor() { return in_; }

 private:
  bool has_bar() const {
    int depth = 0;
    for (std::size_t k = 0;; ++k) {
      const Token& t = in_.peek(k);
      if (t.kind == Tok::End) return false;
      if (t.kind != Tok::Sym) continue;
      if (t.text == "(" || t.text == "[") ++depth;
      if (t.text == ")" || t.text == "]") {
        if (--depth == 0) return false;
      }
      if (t.text == "|" && depth == 1) return true;
    }
  }

  std::optional<MatMorphism> side() {
    if (in_.is_sym("|") || in_.is_sym(")")) return std::nullopt;
    return matrix_ref();
  }

  void fresh(const Token& name) {
    if (s_.morphisms_.count(name.text) || s_.objects_.count(name.text) || s_.adel_.count(name.text))
      throw ParseError(name.pos, "name '" + name.text + "' is already defined");
  }

  void morphism_def() {
    const Token name = in_.expect_ident("a morphism name");
    fresh(name);
    in_.expect(":");
    const Quiver& q = s_.cat_->quiver();
    TupleObject src = parse_tuple_at(in_, q);
    in_.expect("->");
    TupleObject tgt = parse_tuple_at(in_, q);
    in_.expect("=");
    MatMorphism m = parse_matrix_at(in_, s_.cat_, src, tgt);
    in_.expect(";");
    s_.morphisms_.emplace(name.text, std::move(m));
  }

  void object_def() {
    const Token name = in_.expect_ident("an object name");
    fresh(name);
    in_.expect("=");
    AdelObject x = object_ref();
    in_.expect(";");
    s_.objects_.emplace(name.text, std::move(x));
  }

  void adel_def() {
    const Token name = in_.expect_ident("a morphism name");
    fresh(name);
    in_.expect(":");
    AdelObject src = object_ref();
    in_.expect("->");
    AdelObject tgt = object_ref();
    in_.expect("=");
    const SourcePos at = in_.peek().pos;
    MatMorphism datum;
    if (in_.peek().kind == Tok::Ident && s_.morphisms_.count(in_.peek().text) && !in_.is_sym("*", 1)) {
      datum = s_.morphisms_.at(in_.next().text);
    } else {
      datum = parse_matrix_at(in_, s_.cat_, src.middle(), tgt.middle());
    }
    in_.expect(";");
    if (datum.source() != src.middle() || datum.target() != tgt.middle())
      throw ParseError(at, "datum does not run between the middle objects");
    auto m = make_morphism(src, tgt, datum);
    if (!m) throw ParseError(at, "datum is not compatible with the relations of source and target");
    s_.adel_.emplace(name.text, *std::move(m));
  }

  Cursor& in_;
  Session& s_;
};

Session Session::parse(std::string_view text) {
  Session s;
  Cursor in(text);
  s.spec_ = parse_category_at(in);
  s.cat_ = build_category(s.spec_);
  SessionParser p(in, s);
  p.statements();
  return s;
}

AdelObject Session::resolve_object(std::string_view text) const {
  Cursor in(text);
  SessionParser p(in, const_cast<Session&>(*this));
  AdelObject x = p.object_ref();
  in.expect_end();
  return x;
}

AdelMorphism Session::resolve_morphism(std::string_view text) const {
  Cursor in(text);
  SessionParser p(in, const_cast<Session&>(*this));
  AdelMorphism m = p.morphism_ref();
  in.expect_end();
  return m;
}

MatMorphism Session::resolve_matrix(std::string_view text) const {
  Cursor in(text);
  SessionParser p(in, const_cast<Session&>(*this));
  MatMorphism m = p.matrix_ref();
  in.expect_end();
  return m;
}

namespace {

Integer parse_signed(Cursor& in) {
  int sign = 1;
  if (in.accept("-")) sign = -1;
  if (in.peek().kind != Tok::Int) in.fail("expected an integer, found " + describe(in.peek()));
  return Integer(in.next().text) * sign;
}

}  // namespace

Representation parse_representation(const PathCategory& cat, std::string_view text) {
  const Quiver& q = cat.quiver();
  Cursor in(text);
  Representation rep;
  rep.ranks.assign(q.vertex_count(), 0);
  struct Pending {
    std::vector<std::vector<Integer>> rows;
    SourcePos pos;
  };
  std::vector<std::optional<Pending>> mats(q.arrow_count());
  std::vector<bool> rank_seen(q.vertex_count(), false);
  while (!in.at_end()) {
    const Token& kw = in.expect_ident("'rank' or 'matrix'");
    if (kw.text == "rank") {
      const Token& v = in.expect_ident("an object name");
      auto vx = q.find_vertex(v.text);
      if (!vx) throw ParseError(v.pos, "unknown object '" + v.text + "'");
      if (rank_seen[vx->index]) throw ParseError(v.pos, "rank of '" + v.text + "' given twice");
      rank_seen[vx->index] = true;
      in.expect("=");
      if (in.peek().kind != Tok::Int) in.fail("expected a nonnegative rank");
      rep.ranks[vx->index] = std::stoul(in.next().text);
    } else if (kw.text == "matrix") {
      const Token& l = in.expect_ident("an arrow label");
      auto k = q.find_arrow(l.text);
      if (!k) throw ParseError(l.pos, "unknown arrow '" + l.text + "'");
      if (mats[*k]) throw ParseError(l.pos, "matrix of '" + l.text + "' given twice");
      in.expect("=");
      Pending p;
      p.pos = l.pos;
      in.expect("[");
      if (!in.is_sym("]")) {
        do {
          in.expect("[");
          std::vector<Integer> row;
          if (!in.is_sym("]")) {
            do {
              row.push_back(parse_signed(in));
            } while (in.accept(","));
          }
          in.expect("]");
          p.rows.push_back(std::move(row));
        } while (in.accept(","));
      }
      in.expect("]");
      mats[*k] = std::move(p);
    } else {
      throw ParseError(kw.pos, "expected 'rank' or 'matrix', found '" + kw.text + "'");
    }
    in.accept(";");
  }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const std::size_t r = rep.ranks[a.source.index];
    const std::size_t c = rep.ranks[a.target.index];
    IntMatrix m(r, c);
    if (mats[k]) {
      const Pending& p = *mats[k];
      const bool empty_ok = r == 0 && p.rows.empty();
      if (!empty_ok) {
        if (p.rows.size() != r)
          throw ParseError(p.pos, "matrix of '" + a.label + "' has " + std::to_string(p.rows.size()) +
                                      " rows, expected " + std::to_string(r));
        for (std::size_t i = 0; i < r; ++i) {
          if (p.rows[i].size() != c)
            throw ParseError(p.pos, "matrix of '" + a.label + "' row " + std::to_string(i + 1) + " has " +
                                        std::to_string(p.rows[i].size()) + " entries, expected " + std::to_string(c));
          for (std::size_t j = 0; j < c; ++j) m(i, j) = p.rows[i][j];
        }
      }
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

std::string print_representation(const PathCategory& cat, const Representation& rep) {
  const Quiver& q = cat.quiver();
  std::ostringstream os;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    os << "rank " << q.vertex_names()[v] << " = " << rep.ranks.at(v) << "\n";
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const IntMatrix& m = rep.matrices.at(k);
    os << "matrix " << q.arrow(k).label << " = [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
      os << "]";
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace adel
