#include "adel/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "adel/error.hpp"

namespace adel {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw Error("duplicate vertex '" + v + "'");
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (!labels.insert(a.label).second) throw Error("duplicate arrow label '" + a.label + "'");
    if (a.source.index >= vertices_.size() || a.target.index >= vertices_.size())
      throw Error("arrow '" + a.label + "' has an endpoint outside the quiver");
  }
  // Kahn's algorithm: every vertex must drain.
  std::vector<std::size_t> indegree(vertices_.size());
  for (const auto& a : arrows_) ++indegree[a.target.index];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t drained = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++drained;
    for (const auto& a : arrows_)
      if (a.source.index == v && --indegree[a.target.index] == 0) ready.push_back(a.target.index);
  }
  if (drained != vertices_.size()) throw Error("quiver contains an oriented cycle");
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  auto index_of = [&](const std::string& n) {
    auto it = std::find(vertices.begin(), vertices.end(), n);
    if (it == vertices.end()) throw Error("unknown vertex '" + n + "'");
    return Vertex{static_cast<std::size_t>(it - vertices.begin())};
  };
  std::vector<Arrow> as;
  for (const auto& [label, s, t] : arrows) as.push_back({label, index_of(s), index_of(t)});
  return Quiver(std::move(vertices), std::move(as));
}

std::optional<Vertex> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return Vertex{static_cast<std::size_t>(it - vertices_.begin())};
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].label == label) return i;
  return std::nullopt;
}

Vertex Quiver::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error("unknown object '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& label) const {
  if (auto a = find_arrow(label)) return *a;
  throw Error("unknown arrow '" + label + "'");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> reversed;
  reversed.reserve(arrows_.size());
  for (const auto& a : arrows_) reversed.push_back({a.label, a.target, a.source});
  return Quiver(vertices_, std::move(reversed));
}

Path Path::of_arrows(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw Error("Path::of_arrows needs at least one arrow");
  Path p{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, std::move(arrows)};
  if (!p.valid_in(q)) throw Error("arrows do not compose to a path");
  return p;
}

Path Path::then(const Path& next) const {
  if (target != next.source) throw Error("paths are not composable");
  Path p{source, next.target, arrows};
  p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
  return p;
}

bool Path::valid_in(const Quiver& q) const {
  if (source.index >= q.vertex_count() || target.index >= q.vertex_count()) return false;
  if (arrows.empty()) return source == target;
  for (std::size_t a : arrows)
    if (a >= q.arrow_count()) return false;
  if (q.arrow(arrows.front()).source != source || q.arrow(arrows.back()).target != target) return false;
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) return false;
  return true;
}

std::vector<Path> enumerate_paths(const Quiver& q, Vertex a, Vertex b) {
  if (a.index >= q.vertex_count() || b.index >= q.vertex_count()) throw Error("enumerate_paths: unknown vertex");
  std::vector<Path> out;
  std::vector<std::size_t> stack;
  std::function<void(Vertex)> walk = [&](Vertex at) {
    if (at == b) out.push_back({a, b, stack});
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
      if (q.arrow(i).source != at) continue;
      stack.push_back(i);
      walk(q.arrow(i).target);
      stack.pop_back();
    }
  };
  walk(a);
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
    return x.arrows < y.arrows;
  });
  return out;
}

bool Relation::homogeneous() const {
  if (terms.empty()) return false;
  return std::all_of(terms.begin(), terms.end(), [&](const Term& t) {
    return t.path.source == source() && t.path.target == target();
  });
}

IntMatrix relation_subgroup(const Quiver& q, const std::vector<Relation>& relations, Vertex a, Vertex b) {
  const std::vector<Path> basis = enumerate_paths(q, a, b);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].arrows, i);
  std::vector<IntVector> rows;
  for (const auto& r : relations) {
    if (!r.homogeneous()) throw Error("relation with non-parallel terms");
    const auto pre = enumerate_paths(q, a, r.source());
    const auto post = enumerate_paths(q, r.target(), b);
    for (const auto& p : pre)
      for (const auto& s : post) {
        IntVector row(basis.size());
        for (const auto& term : r.terms) row[index.at(p.then(term.path).then(s).arrows)] += term.coefficient;
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  return IntMatrix::from_rows(rows, basis.size());
}

struct PathCategory::Pair {
  PathCategory primal;
  PathCategory dual;
  Pair(Quiver q, std::vector<Relation> rels, Quiver qop, std::vector<Relation> relsop)
      : primal(std::move(q), std::move(rels), false), dual(std::move(qop), std::move(relsop), true) {
    primal.partner_ = &dual;
    dual.partner_ = &primal;
  }
};

PathCategory::PathCategory(Quiver quiver, std::vector<Relation> relations, bool is_opposite)
    : quiver_(std::move(quiver)), relations_(std::move(relations)), is_opposite_(is_opposite) {
  for (const auto& r : relations_) {
    if (!r.homogeneous()) throw Error("relation with non-parallel terms");
    for (const auto& t : r.terms)
      if (!t.path.valid_in(quiver_)) throw Error("relation term is not a path of the quiver");
  }
  const std::size_t n = quiver_.vertex_count();
  homs_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      HomData& h = homs_[a * n + b];
      h.paths = enumerate_paths(quiver_, Vertex{a}, Vertex{b});
      for (std::size_t i = 0; i < h.paths.size(); ++i) h.index.emplace(h.paths[i].arrows, i);
      h.group = FpAbGroup(h.paths.size(), relation_subgroup(quiver_, relations_, Vertex{a}, Vertex{b}));
    }
}

CategoryRef PathCategory::create(Quiver quiver, std::vector<Relation> relations) {
  std::vector<Relation> reversed;
  for (const auto& r : relations) {
    Relation rr;
    for (const auto& t : r.terms) {
      Path p{t.path.target, t.path.source, {t.path.arrows.rbegin(), t.path.arrows.rend()}};
      rr.terms.push_back({t.coefficient, std::move(p)});
    }
    reversed.push_back(std::move(rr));
  }
  Quiver op = quiver.opposite();
  auto pair = std::make_shared<Pair>(std::move(quiver), std::move(relations), std::move(op), std::move(reversed));
  return CategoryRef(pair, &pair->primal);
}

CategoryRef PathCategory::opposite(const CategoryRef& c) { return CategoryRef(c, c->partner_); }

std::optional<std::size_t> PathCategory::path_index(const Path& p) const {
  if (!p.valid_in(quiver_)) return std::nullopt;
  const auto& idx = homs_[slot(p.source, p.target)].index;
  auto it = idx.find(p.arrows);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

void PathCategory::check_endpoints(const LinMorphism& f) const {
  if (f.source.index >= vertex_count() || f.target.index >= vertex_count() ||
      f.coeffs.size() != hom_rank(f.source, f.target))
    throw Error("morphism does not belong to this category");
}

LinMorphism PathCategory::zero(Vertex a, Vertex b) const { return {a, b, IntVector(hom_rank(a, b))}; }

LinMorphism PathCategory::identity(Vertex v) const { return from_path(Path::identity(v)); }

LinMorphism PathCategory::from_path(const Path& p, const Integer& coefficient) const {
  auto i = path_index(p);
  if (!i) throw Error("not a path of this quiver");
  IntVector c(hom_rank(p.source, p.target));
  c[*i] = coefficient;
  return make(p.source, p.target, std::move(c));
}

LinMorphism PathCategory::basis_element(Vertex a, Vertex b, std::size_t path_index) const {
  IntVector c(hom_rank(a, b));
  c.at(path_index) = 1;
  return {a, b, std::move(c)};
}

LinMorphism PathCategory::arrow(const std::string& label) const {
  return from_path(Path::of_arrows(quiver_, {quiver_.arrow_index(label)}));
}

LinMorphism PathCategory::make(Vertex a, Vertex b, IntVector coeffs) const {
  return {a, b, hom(a, b).canonical_rep(coeffs)};
}

LinMorphism PathCategory::compose(const LinMorphism& f, const LinMorphism& g) const {
  check_endpoints(f);
  check_endpoints(g);
  if (f.target != g.source) throw Error("compose: endpoint mismatch");
  const HomData& left = homs_[slot(f.source, f.target)];
  const HomData& right = homs_[slot(g.source, g.target)];
  const HomData& out = homs_[slot(f.source, g.target)];
  IntVector c(out.paths.size());
  std::vector<std::size_t> key;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (sgn(g.coeffs[j]) == 0) continue;
      key = left.paths[i].arrows;
      key.insert(key.end(), right.paths[j].arrows.begin(), right.paths[j].arrows.end());
      c[out.index.at(key)] += f.coeffs[i] * g.coeffs[j];
    }
  }
  return {f.source, g.target, out.group.canonical_rep(c)};
}

LinMorphism PathCategory::add(const LinMorphism& f, const LinMorphism& g) const {
  check_endpoints(f);
  if (f.source != g.source || f.target != g.target) throw Error("add: endpoint mismatch");
  return make(f.source, f.target, f.coeffs + g.coeffs);
}

LinMorphism PathCategory::negate(const LinMorphism& f) const { return scale(f, -1); }

LinMorphism PathCategory::scale(const LinMorphism& f, const Integer& k) const {
  check_endpoints(f);
  IntVector c = f.coeffs;
  for (auto& x : c) x *= k;
  return make(f.source, f.target, std::move(c));
}

bool PathCategory::equal(const LinMorphism& f, const LinMorphism& g) const {
  check_endpoints(f);
  if (f.source != g.source || f.target != g.target) throw Error("equal: endpoint mismatch");
  return hom(f.source, f.target).equal(f.coeffs, g.coeffs);
}

LinMorphism PathCategory::to_opposite(const LinMorphism& f) const {
  check_endpoints(f);
  const PathCategory& op = *partner_;
  const auto& paths = homs_[slot(f.source, f.target)].paths;
  IntVector c(op.hom_rank(f.target, f.source));
  const auto& idx = op.homs_[op.slot(f.target, f.source)].index;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    std::vector<std::size_t> rev(paths[i].arrows.rbegin(), paths[i].arrows.rend());
    c[idx.at(rev)] += f.coeffs[i];
  }
  return op.make(f.target, f.source, std::move(c));
}

std::string PathCategory::to_string(const LinMorphism& f) const {
  check_endpoints(f);
  const auto& paths = homs_[slot(f.source, f.target)].paths;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Integer& c = f.coeffs[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    const Integer mag = abs(c);
    std::string word;
    if (paths[i].is_identity()) {
      word = "id_" + quiver_.name(paths[i].source);
    } else {
      for (std::size_t k = 0; k < paths[i].arrows.size(); ++k) {
        if (k) word += '*';
        word += quiver_.arrow(paths[i].arrows[k]).label;
      }
    }
    if (mag != 1) os << mag << '*';
    os << word;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace adel
