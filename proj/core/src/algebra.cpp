#include "injgen/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace injgen {

namespace {

SparseVector canonical(const Field& f, std::size_t dim, const SparseVector& v) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [k, c] : v) {
    if (k >= dim) throw InputError("structure constant index out of range");
    auto it = acc.find(k);
    Scalar nc = f.normalize(c);
    if (it == acc.end()) {
      acc.emplace(k, nc);
    } else {
      it->second = f.add(it->second, nc);
    }
  }
  SparseVector out;
  for (auto& [k, c] : acc)
    if (!f.is_zero(c)) out.emplace_back(k, c);
  return out;
}

void record(AxiomReport& report, Violation v) {
  ++report.total;
  report.violations.push_back(std::move(v));
}

void finish(AxiomReport& report) {
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > kMaxReportedViolations) report.violations.resize(kMaxReportedViolations);
}

}  // namespace

SparseVector to_sparse(const Matrix& column) {
  SparseVector out;
  for (std::size_t r = 0; r < column.rows(); ++r)
    if (!column.entry_is_zero(r, 0)) out.emplace_back(r, column.at(r, 0));
  return out;
}

Matrix to_dense(const Field& field, std::size_t dim, const SparseVector& v) {
  Matrix m(field, dim, 1);
  for (const auto& [k, c] : v) m.add_to(k, 0, c);
  return m;
}

GradedAlgebra::GradedAlgebra(Field field, FiniteAbelianGroup group, std::vector<std::string> labels,
                             std::vector<GroupElem> degrees, std::vector<Scalar> unit, StructureConstants mult)
    : field_(field), group_(std::move(group)), labels_(std::move(labels)), degrees_(std::move(degrees)) {
  std::size_t n = labels_.size();
  if (n == 0) throw InputError("zero-dimensional algebras are not allowed");
  if (degrees_.size() != n) throw InputError("degree list length differs from basis size");
  for (const auto& d : degrees_)
    if (!group_.contains(d)) throw InputError("basis degree is not a canonical group element");
  if (unit.size() != n) throw InputError("unit vector length differs from basis size");
  for (auto& u : unit) unit_.push_back(field_.normalize(u));
  if (mult.size() != n) throw InputError("multiplication table has wrong number of rows");
  mult_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i].size() != n) throw InputError("multiplication table has wrong number of columns");
    mult_[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) mult_[i].push_back(canonical(field_, n, mult[i][j]));
  }
  right_mult_.assign(n, Matrix(field_, n, n));
  left_mult_.assign(n, Matrix(field_, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : mult_[i][j]) {
        right_mult_[j].set(k, i, c);
        left_mult_[i].set(k, j, c);
      }
    }
  }
}

Matrix GradedAlgebra::right_mult_by(const Matrix& a) const {
  Matrix out(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!a.entry_is_zero(j, 0)) out += right_mult_[j].scaled(a.at(j, 0));
  return out;
}

Matrix GradedAlgebra::left_mult_by(const Matrix& a) const {
  Matrix out(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a.entry_is_zero(i, 0)) out += left_mult_[i].scaled(a.at(i, 0));
  return out;
}

Matrix GradedAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  return right_mult_by(b) * a;
}

const std::vector<std::size_t>& GradedAlgebra::generators() const {
  if (generators_) return *generators_;
  auto gens = std::make_shared<std::vector<std::size_t>>();
  SpanBuilder span(field_, dim());
  std::vector<Matrix> members;
  Matrix one = unit_vector();
  if (span.add(one)) members.push_back(one);
  auto close = [&](std::vector<Matrix> queue) {
    while (!queue.empty()) {
      Matrix v = std::move(queue.back());
      queue.pop_back();
      if (!span.add(v)) continue;
      members.push_back(v);
      for (auto g : *gens) queue.push_back(right_mult_[g] * v);
    }
  };
  for (std::size_t i = 0; i < dim() && span.dim() < dim(); ++i) {
    Matrix e = Matrix::unit_vector(field_, dim(), i);
    if (span.contains(e)) continue;
    gens->push_back(i);
    std::vector<Matrix> queue;
    for (const auto& m : members) queue.push_back(right_mult_[i] * m);
    close(std::move(queue));
  }
  generators_ = gens;
  return *generators_;
}

std::vector<std::size_t> GradedAlgebra::component(const GroupElem& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  return a.labels_ == b.labels_ && same_structure(a, b);
}

bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field()) || !(a.group() == b.group()) || a.dim() != b.dim()) return false;
  return a.degrees() == b.degrees() && a.unit() == b.unit() && a.mult() == b.mult();
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

AxiomReport check_algebra_axioms(const GradedAlgebra& a) {
  AxiomReport report;
  const Field& f = a.field();
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.is_zero(a.unit()[i]) && a.degree(i) != a.group().zero()) record(report, {"unit-degree", {i}});
  }
  Matrix one = a.unit_vector();
  Matrix lu = a.left_mult_by(one);
  Matrix ru = a.right_mult_by(one);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e = Matrix::unit_vector(f, n, i);
    if (!(lu * e == e)) record(report, {"left-unit", {i}});
    if (!(ru * e == e)) record(report, {"right-unit", {i}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GroupElem d = a.group().add(a.degree(i), a.degree(j));
      for (const auto& [k, c] : a.product(i, j)) {
        if (a.degree(k) != d) {
          record(report, {"grading", {i, j, k}});
        }
      }
    }
  }
  // (e_i e_j) e_l against e_i (e_j e_l), accumulated sparsely.
  std::vector<Scalar> lhs(n, f.zero()), rhs(n, f.zero());
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        touched.clear();
        for (const auto& [k, c] : a.product(i, j)) {
          for (const auto& [m, d] : a.product(k, l)) {
            lhs[m] = f.add(lhs[m], f.mul(c, d));
            touched.push_back(m);
          }
        }
        for (const auto& [k, c] : a.product(j, l)) {
          for (const auto& [m, d] : a.product(i, k)) {
            rhs[m] = f.add(rhs[m], f.mul(c, d));
            touched.push_back(m);
          }
        }
        bool bad = false;
        for (auto m : touched) {
          if (!(lhs[m] == rhs[m])) bad = true;
          lhs[m] = f.zero();
          rhs[m] = f.zero();
        }
        if (bad) record(report, {"associativity", {i, j, l}});
      }
    }
  }
  finish(report);
  return report;
}

AlgebraPtr opposite(const GradedAlgebra& a) {
  std::size_t n = a.dim();
  StructureConstants m(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a.product(j, i);
  std::vector<GroupElem> deg;
  for (const auto& d : a.degrees()) deg.push_back(a.group().neg(d));
  return make_algebra(a.field(), a.group(), a.labels(), deg, a.unit(), m);
}

AlgebraPtr regrade(const GradedAlgebra& a, FiniteAbelianGroup group, std::vector<GroupElem> degrees) {
  return make_algebra(a.field(), std::move(group), a.labels(), std::move(degrees), a.unit(), a.mult());
}

AlgebraPtr trivially_graded(const GradedAlgebra& a, FiniteAbelianGroup group) {
  std::vector<GroupElem> deg(a.dim(), group.zero());
  return regrade(a, std::move(group), std::move(deg));
}

AlgebraPtr ground_algebra(const Field& field) {
  return make_algebra(field, FiniteAbelianGroup(), std::vector<std::string>{"1"}, std::vector<GroupElem>{GroupElem{}},
                      std::vector<Scalar>{field.one()},
                      StructureConstants{{SparseVector{{0, field.one()}}}});
}

StronglyGradedReport strongly_graded_check(const GradedAlgebra& a) {
  StronglyGradedReport report;
  const auto& g = a.group();
  auto elems = g.elements();
  std::vector<std::vector<std::size_t>> comp;
  for (const auto& e : elems) comp.push_back(a.component(e));
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      std::size_t target = g.index(g.add(elems[x], elems[y]));
      std::vector<Matrix> cols;
      for (auto i : comp[x])
        for (auto j : comp[y]) cols.push_back(to_dense(a.field(), a.dim(), a.product(i, j)));
      std::size_t r = cols.empty() ? 0 : rank(Matrix::hstack(a.field(), a.dim(), cols));
      if (r != comp[target].size()) {
        report.strongly_graded = false;
        report.failures.emplace_back(elems[x], elems[y]);
      }
    }
  }
  return report;
}

bool is_commutative(const GradedAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!(a.product(i, j) == a.product(j, i))) return false;
  return true;
}

Subalgebra basis_subalgebra(const GradedAlgebra& a, const std::vector<std::size_t>& indices,
                            const std::vector<Scalar>& unit) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < indices.size(); ++k) pos[indices[k]] = k;
  std::size_t n = indices.size();
  StructureConstants m(n, std::vector<SparseVector>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& [k, c] : a.product(indices[x], indices[y])) {
        auto it = pos.find(k);
        if (it == pos.end()) throw InputError("basis subset is not closed under multiplication");
        m[x][y].emplace_back(it->second, c);
      }
    }
  }
  std::vector<std::string> labels;
  std::vector<GroupElem> deg;
  std::vector<Scalar> u(n, a.field().zero());
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(a.labels()[indices[k]]);
    deg.push_back(a.degree(indices[k]));
  }
  for (std::size_t i = 0; i < unit.size(); ++i) {
    if (a.field().is_zero(unit[i])) continue;
    auto it = pos.find(i);
    if (it == pos.end()) throw InputError("unit does not lie in the basis subset");
    u[it->second] = unit[i];
  }
  return {make_algebra(a.field(), a.group(), labels, deg, u, m), indices};
}

Subalgebra initial_subring(const GradedAlgebra& a) {
  auto idx = a.component(a.group().zero());
  auto sub = basis_subalgebra(a, idx, a.unit());
  return {trivially_graded(*sub.algebra), idx};
}

bool is_positively_graded(const GradedAlgebra& a) {
  if (!a.group().is_cyclic()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).empty() && a.degree(i)[0] + a.degree(j)[0] >= a.group().factors()[0]) return false;
  return true;
}

bool upper_half_vanishes(const GradedAlgebra& a) {
  if (!a.group().is_cyclic()) return false;
  std::int64_t n = a.group().factors()[0];
  if (n < 2 || (n & (n - 1)) != 0) return false;
  for (const auto& d : a.degrees())
    if (d[0] >= n / 2) return false;
  return true;
}

}  // namespace injgen
