#include "injgen/builders.hpp"

#include <algorithm>
#include <map>

namespace injgen {

namespace {

struct Path {
  std::size_t source, target;
  std::vector<std::size_t> arrows;  // empty for a trivial path
};

bool ends_with(const std::vector<std::size_t>& path, const std::vector<std::size_t>& rel) {
  if (rel.size() > path.size() || rel.empty()) return false;
  return std::equal(rel.rbegin(), rel.rend(), path.rbegin());
}

bool contains_relation(const std::vector<std::size_t>& path, const std::vector<std::vector<std::size_t>>& rels) {
  for (const auto& r : rels) {
    if (r.empty() || r.size() > path.size()) continue;
    for (std::size_t s = 0; s + r.size() <= path.size(); ++s)
      if (std::equal(r.begin(), r.end(), path.begin() + static_cast<std::ptrdiff_t>(s))) return true;
  }
  return false;
}

constexpr std::size_t kMaxPathBasis = 4096;

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<bool> in(n, false);
  for (auto i : idx) in.at(i) = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

Quiver linear_quiver(std::size_t vertices) {
  Quiver q;
  q.vertices = vertices;
  for (std::size_t v = 0; v + 1 < vertices; ++v) {
    q.arrows.push_back({v, v + 1, std::string(1, static_cast<char>('a' + v)), {}});
  }
  return q;
}

AlgebraPtr path_algebra(const Field& field, const PathAlgebraSpec& spec) {
  const Quiver& q = spec.quiver;
  if (q.vertices == 0) throw InputError("quiver without vertices");
  const auto& g = spec.group;
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertices || a.target >= q.vertices) throw InputError("arrow endpoint out of range");
    if (!a.degree.empty() && !g.contains(a.degree)) throw InputError("arrow degree outside the grading group");
  }
  for (const auto& r : spec.zero_relations) {
    if (r.empty()) throw InputError("empty relation");
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] >= q.arrows.size()) throw InputError("relation uses an unknown arrow");
      if (k > 0 && q.arrows[r[k - 1]].target != q.arrows[r[k]].source) throw InputError("relation is not a path");
    }
  }
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
  std::size_t frontier = 0;
  while (frontier < paths.size()) {
    Path p = paths[frontier++];
    if (spec.max_length && p.arrows.size() + 1 >= *spec.max_length) continue;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != p.target) continue;
      Path next{p.source, q.arrows[a].target, p.arrows};
      next.arrows.push_back(a);
      bool dead = false;
      for (const auto& r : spec.zero_relations) dead = dead || ends_with(next.arrows, r);
      if (dead) continue;
      paths.push_back(next);
      if (paths.size() > kMaxPathBasis) throw InputError("path algebra is infinite-dimensional or too large");
    }
  }
  std::map<std::vector<std::size_t>, std::size_t> arrow_index;
  std::size_t n = paths.size();
  std::vector<std::string> labels;
  std::vector<GroupElem> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = paths[i];
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.source + 1));
    } else {
      std::string s;
      for (auto a : p.arrows) s += q.arrows[a].label;
      labels.push_back(s);
      arrow_index[p.arrows] = i;
    }
    GroupElem d = g.zero();
    for (auto a : p.arrows)
      if (!q.arrows[a].degree.empty()) d = g.add(d, q.arrows[a].degree);
    degrees.push_back(d);
  }
  StructureConstants mult(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = paths[i];
      const auto& r = paths[j];
      if (p.target != r.source) continue;
      if (p.arrows.empty()) {
        mult[i][j].emplace_back(j, field.one());
        continue;
      }
      if (r.arrows.empty()) {
        mult[i][j].emplace_back(i, field.one());
        continue;
      }
      std::vector<std::size_t> cat = p.arrows;
      cat.insert(cat.end(), r.arrows.begin(), r.arrows.end());
      if (contains_relation(cat, spec.zero_relations)) continue;
      auto it = arrow_index.find(cat);
      if (it != arrow_index.end()) mult[i][j].emplace_back(it->second, field.one());
    }
  }
  std::vector<Scalar> unit(n, field.zero());
  for (std::size_t v = 0; v < q.vertices; ++v) unit[v] = field.one();
  return make_algebra(field, g, labels, degrees, unit, mult);
}

AlgebraPtr linear_quiver_algebra(const Field& field, std::size_t vertices) {
  PathAlgebraSpec spec;
  spec.quiver = linear_quiver(vertices);
  return path_algebra(field, spec);
}

AlgebraPtr vertex_algebra(const Field& field, std::size_t vertices) {
  PathAlgebraSpec spec;
  spec.quiver.vertices = vertices;
  return path_algebra(field, spec);
}

Bimodule arrow_bimodule(const Field& field, const Quiver& quiver, const AlgebraPtr& vertices) {
  if (vertices->dim() != quiver.vertices) throw InputError("vertex algebra does not match the quiver");
  std::size_t n = quiver.arrows.size();
  std::vector<Matrix> left(quiver.vertices, Matrix(field, n, n)), right(quiver.vertices, Matrix(field, n, n));
  for (std::size_t a = 0; a < n; ++a) {
    left[quiver.arrows[a].source].set(a, a, field.one());
    right[quiver.arrows[a].target].set(a, a, field.one());
  }
  return Bimodule(vertices, vertices, n, left, right);
}

AlgebraPtr group_algebra(const Field& field, const FiniteAbelianGroup& group, bool graded) {
  std::size_t n = group.order();
  auto elems = group.elements();
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back("g" + group.to_string(e));
  StructureConstants mult(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i][j].emplace_back(group.index(group.add(elems[i], elems[j])), field.one());
  std::vector<Scalar> unit(n, field.zero());
  unit[0] = field.one();
  if (graded) return make_algebra(field, group, labels, elems, unit, mult);
  return make_algebra(field, FiniteAbelianGroup(), labels, std::vector<GroupElem>(n, GroupElem{}), unit, mult);
}

AlgebraPtr truncated_polynomial(const Field& field, std::size_t m, const FiniteAbelianGroup& group,
                                const GroupElem& degree) {
  PathAlgebraSpec spec;
  spec.quiver.vertices = 1;
  spec.quiver.arrows.push_back({0, 0, "x", degree});
  spec.max_length = m;
  spec.group = group;
  auto a = path_algebra(field, spec);
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < m; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  return make_algebra(field, group, labels, a->degrees(), a->unit(), a->mult());
}

Bimodule ideal_bimodule(const AlgebraPtr& a, const std::vector<std::size_t>& indices) {
  const Field& f = a->field();
  Matrix basis(f, a->dim(), indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) basis.set(indices[k], k, f.one());
  SubspaceCoordinates coords(basis);
  std::vector<Matrix> left, right;
  std::vector<GroupElem> deg;
  for (auto i : indices) deg.push_back(a->degree(i));
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix l = a->left_mult(i) * basis, r = a->right_mult(i) * basis;
    if (!coords.contains(l) || !coords.contains(r)) throw InputError("basis span is not a two-sided ideal");
    left.push_back(coords.coordinates(l));
    right.push_back(coords.coordinates(r));
  }
  return Bimodule(a, a, indices.size(), left, right, deg);
}

Bimodule quotient_bimodule(const AlgebraPtr& a, const std::vector<std::size_t>& indices) {
  ideal_bimodule(a, indices);
  auto keep = complement(a->dim(), indices);
  const Field& f = a->field();
  Matrix proj(f, keep.size(), a->dim());
  Matrix sec(f, a->dim(), keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    proj.set(k, keep[k], f.one());
    sec.set(keep[k], k, f.one());
  }
  std::vector<Matrix> left, right;
  std::vector<GroupElem> deg;
  for (auto i : keep) deg.push_back(a->degree(i));
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(proj * a->left_mult(i) * sec);
    right.push_back(proj * a->right_mult(i) * sec);
  }
  return Bimodule(a, a, keep.size(), left, right, deg);
}

}  // namespace injgen
