#include "injgen/module.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace injgen {

namespace {

void check_actions(const std::vector<Matrix>& action, std::size_t count, std::size_t dim, const Field& f) {
  if (action.size() != count) throw InputError("action list length differs from algebra dimension");
  for (const auto& m : action) {
    if (m.rows() != dim || m.cols() != dim) throw InputError("action matrix has wrong shape");
    if (!(m.field() == f)) throw InputError("action matrix over the wrong field");
  }
}

void check_degrees(const std::vector<GroupElem>& deg, std::size_t dim, const FiniteAbelianGroup& g) {
  if (deg.empty()) return;
  if (deg.size() != dim) throw InputError("degree list length differs from module dimension");
  for (const auto& d : deg)
    if (!g.contains(d)) throw InputError("module degree is not a canonical group element");
}

Matrix combine(const std::vector<Matrix>& ops, const Matrix& a, std::size_t dim, const Field& f) {
  Matrix out(f, dim, dim);
  for (std::size_t j = 0; j < ops.size(); ++j)
    if (!a.entry_is_zero(j, 0)) out += ops[j].scaled(a.at(j, 0));
  return out;
}

void side_axioms(AxiomReport& report, const GradedAlgebra& a, const std::vector<Matrix>& ops, std::size_t dim,
                 bool left, const std::vector<GroupElem>& degrees, const std::string& prefix) {
  const Field& f = a.field();
  if (!combine(ops, a.unit_vector(), dim, f).is_identity()) {
    ++report.total;
    report.violations.push_back({prefix + "unit", {}});
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix prod = combine(ops, to_dense(f, a.dim(), a.product(i, j)), dim, f);
      Matrix composed = left ? ops[i] * ops[j] : ops[j] * ops[i];
      if (!(prod == composed)) {
        ++report.total;
        report.violations.push_back({prefix + "associativity", {i, j}});
      }
    }
  }
  if (degrees.empty()) return;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t p = 0; p < dim; ++p) {
      GroupElem want = a.group().add(degrees[p], a.degree(j));
      for (std::size_t q = 0; q < dim; ++q) {
        if (!ops[j].entry_is_zero(q, p) && degrees[q] != want) {
          ++report.total;
          report.violations.push_back({prefix + "grading", {p, j, q}});
        }
      }
    }
  }
}

void finish(AxiomReport& report) {
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > kMaxReportedViolations) report.violations.resize(kMaxReportedViolations);
}

// Splits each column into its homogeneous components and returns a basis of their span.
Matrix homogeneous_basis(const Matrix& vectors, const std::vector<GroupElem>& degrees, const Field& f,
                         std::vector<GroupElem>* out_degrees) {
  std::map<GroupElem, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < degrees.size(); ++i) by_degree[degrees[i]].push_back(i);
  std::vector<Matrix> cols;
  for (const auto& [d, idx] : by_degree) {
    Matrix part(f, vectors.rows(), vectors.cols());
    for (auto r : idx) part.set_block(r, 0, vectors.block(r, 0, 1, vectors.cols()));
    Matrix basis = column_space_basis(part);
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      cols.push_back(basis.column(c));
      if (out_degrees) out_degrees->push_back(d);
    }
  }
  return Matrix::hstack(f, vectors.rows(), cols);
}

}  // namespace

const char* side_name(Side s) {
  return s == Side::Left ? "left" : "right";
}

Module::Module(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> action,
               std::vector<GroupElem> degrees)
    : algebra_(std::move(algebra)), side_(side), dim_(dim), action_(std::move(action)), degrees_(std::move(degrees)) {
  if (!algebra_) throw InputError("module without algebra");
  check_actions(action_, algebra_->dim(), dim_, algebra_->field());
  check_degrees(degrees_, dim_, algebra_->group());
}

Matrix Module::act(const Matrix& a) const {
  return combine(action_, a, dim_, field());
}

bool operator==(const Module& a, const Module& b) {
  return a.side_ == b.side_ && a.dim_ == b.dim_ && a.degrees_ == b.degrees_ && a.action_ == b.action_ &&
         same_algebra(a.algebra_, b.algebra_);
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action, std::vector<GroupElem> degrees)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)),
      degrees_(std::move(degrees)) {
  if (!left_ || !right_) throw InputError("bimodule without algebras");
  if (!(left_->field() == right_->field())) throw InputError("bimodule algebras over different fields");
  check_actions(left_action_, left_->dim(), dim_, left_->field());
  check_actions(right_action_, right_->dim(), dim_, right_->field());
  if (!degrees_.empty() && !(left_->group() == right_->group()))
    throw InputError("graded bimodule needs a common grading group");
  check_degrees(degrees_, dim_, left_->group());
}

Bimodule Bimodule::regular(const AlgebraPtr& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_mult(i));
    r.push_back(a->right_mult(i));
  }
  return Bimodule(a, a, a->dim(), l, r, a->degrees());
}

Bimodule Bimodule::from_module(const Module& m) {
  auto k = ground_algebra(m.field());
  std::vector<Matrix> id{Matrix::identity(m.field(), m.dim())};
  if (m.side() == Side::Right) return Bimodule(k, m.algebra(), m.dim(), id, m.actions());
  return Bimodule(m.algebra(), k, m.dim(), m.actions(), id);
}

Matrix Bimodule::act_left(const Matrix& a) const {
  return combine(left_action_, a, dim_, field());
}

Matrix Bimodule::act_right(const Matrix& b) const {
  return combine(right_action_, b, dim_, field());
}

Module Bimodule::as_left() const {
  return Module(left_, Side::Left, dim_, left_action_, left_->group() == right_->group() ? degrees_ : std::vector<GroupElem>{});
}

Module Bimodule::as_right() const {
  return Module(right_, Side::Right, dim_, right_action_, left_->group() == right_->group() ? degrees_ : std::vector<GroupElem>{});
}

bool operator==(const Bimodule& a, const Bimodule& b) {
  return a.dim_ == b.dim_ && a.degrees_ == b.degrees_ && a.left_action_ == b.left_action_ &&
         a.right_action_ == b.right_action_ && same_algebra(a.left_, b.left_) && same_algebra(a.right_, b.right_);
}

AxiomReport check_module_axioms(const Module& m) {
  AxiomReport report;
  side_axioms(report, *m.algebra(), m.actions(), m.dim(), m.side() == Side::Left, m.degrees(), "");
  finish(report);
  return report;
}

AxiomReport check_bimodule_axioms(const Bimodule& b) {
  AxiomReport report;
  bool same_group = b.left_algebra()->group() == b.right_algebra()->group();
  std::vector<GroupElem> none;
  side_axioms(report, *b.left_algebra(), b.left_actions(), b.dim(), true, same_group ? b.degrees() : none, "left-");
  side_axioms(report, *b.right_algebra(), b.right_actions(), b.dim(), false, same_group ? b.degrees() : none,
              "right-");
  for (std::size_t i = 0; i < b.left_algebra()->dim(); ++i) {
    for (std::size_t j = 0; j < b.right_algebra()->dim(); ++j) {
      if (!(b.left_action(i) * b.right_action(j) == b.right_action(j) * b.left_action(i))) {
        ++report.total;
        report.violations.push_back({"compatibility", {i, j}});
      }
    }
  }
  finish(report);
  return report;
}

bool is_module_hom(const Module& source, const Module& target, const Matrix& f, bool graded) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  if (!same_algebra(source.algebra(), target.algebra()) || source.side() != target.side()) return false;
  for (std::size_t j = 0; j < source.algebra()->dim(); ++j)
    if (!(f * source.action(j) == target.action(j) * f)) return false;
  if (graded) {
    if (!source.graded() || !target.graded()) return false;
    for (std::size_t r = 0; r < target.dim(); ++r)
      for (std::size_t c = 0; c < source.dim(); ++c)
        if (!f.entry_is_zero(r, c) && target.degrees()[r] != source.degrees()[c]) return false;
  }
  return true;
}

Module regular_right(const AlgebraPtr& a) {
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < a->dim(); ++j) ops.push_back(a->right_mult(j));
  return Module(a, Side::Right, a->dim(), ops, a->degrees());
}

Module regular_left(const AlgebraPtr& a) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < a->dim(); ++i) ops.push_back(a->left_mult(i));
  return Module(a, Side::Left, a->dim(), ops, a->degrees());
}

Module free_right(const AlgebraPtr& a, std::size_t rank) {
  std::vector<Module> parts(rank, regular_right(a));
  if (rank == 0) return zero_module(a, Side::Right);
  return direct_sum(parts);
}

Module zero_module(const AlgebraPtr& a, Side side) {
  return Module(a, side, 0, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

Module twist(const Module& m, const GroupElem& shift) {
  if (!m.graded()) throw InputError("twist needs a graded module");
  const auto& g = m.algebra()->group();
  if (!g.contains(shift)) throw InputError("twist by an element outside the grading group");
  std::vector<GroupElem> deg;
  for (const auto& d : m.degrees()) deg.push_back(g.sub(d, shift));
  return Module(m.algebra(), m.side(), m.dim(), m.actions(), deg);
}

Module dual(const Module& m) {
  std::vector<Matrix> ops;
  for (const auto& a : m.actions()) ops.push_back(a.transpose());
  std::vector<GroupElem> deg;
  for (const auto& d : m.degrees()) deg.push_back(m.algebra()->group().neg(d));
  return Module(opposite(*m.algebra()), m.side(), m.dim(), ops, deg);
}

Module flip_side(const Module& m) {
  return Module(opposite(*m.algebra()), m.side() == Side::Left ? Side::Right : Side::Left, m.dim(), m.actions(),
                m.degrees());
}

Module with_algebra(const Module& m, AlgebraPtr a) {
  if (!same_algebra(m.algebra(), a)) throw InputError("algebras differ");
  return Module(std::move(a), m.side(), m.dim(), m.actions(), m.degrees());
}

Module direct_sum(const Module& a, const Module& b) {
  if (!same_algebra(a.algebra(), b.algebra()) || a.side() != b.side())
    throw InputError("direct sum of modules over different algebras or sides");
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < a.algebra()->dim(); ++j) ops.push_back(Matrix::direct_sum(a.action(j), b.action(j)));
  std::vector<GroupElem> deg;
  if (a.graded() && b.graded()) {
    deg = a.degrees();
    deg.insert(deg.end(), b.degrees().begin(), b.degrees().end());
  }
  return Module(a.algebra(), a.side(), a.dim() + b.dim(), ops, deg);
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw InputError("empty direct sum");
  Module out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

Module dual_regular(const AlgebraPtr& a) {
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < a->dim(); ++j) ops.push_back(a->left_mult(j).transpose());
  std::vector<GroupElem> deg;
  for (const auto& d : a->degrees()) deg.push_back(a->group().neg(d));
  return Module(a, Side::Right, a->dim(), ops, deg);
}

Module restrict_scalars(const Module& m, const AlgebraPtr& b, const Matrix& hom) {
  if (hom.rows() != m.algebra()->dim() || hom.cols() != b->dim()) throw InputError("algebra map has wrong shape");
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < b->dim(); ++j) ops.push_back(m.act(hom.column(j)));
  std::vector<GroupElem> deg;
  if (b->group() == m.algebra()->group()) deg = m.degrees();
  return Module(b, m.side(), m.dim(), ops, deg);
}

Matrix generated_submodule(const Module& m, const Matrix& vectors) {
  const auto& gens = m.algebra()->generators();
  SpanBuilder span(m.field(), m.dim());
  std::vector<Matrix> queue;
  for (std::size_t c = 0; c < vectors.cols(); ++c) queue.push_back(vectors.column(c));
  while (!queue.empty()) {
    Matrix v = std::move(queue.back());
    queue.pop_back();
    if (!span.add(v)) continue;
    for (auto g : gens) queue.push_back(m.action(g) * v);
  }
  return span.basis();
}

Submodule submodule(const Module& m, const Matrix& basis) {
  Matrix b = basis;
  std::vector<GroupElem> deg;
  if (m.graded() && m.dim() > 0) {
    b = homogeneous_basis(basis, m.degrees(), m.field(), &deg);
  } else {
    b = column_space_basis(basis);
  }
  if (b.cols() == 0) return {zero_module(m.algebra(), m.side()), Matrix(m.field(), m.dim(), 0)};
  SubspaceCoordinates coords(b);
  std::vector<Matrix> ops;
  for (const auto& a : m.actions()) {
    Matrix img = a * b;
    if (!coords.contains(img)) throw InputError("subspace is not a submodule");
    ops.push_back(coords.coordinates(img));
  }
  return {Module(m.algebra(), m.side(), b.cols(), ops, deg), b};
}

Quotient quotient(const Module& m, const Matrix& sub_basis) {
  const Field& f = m.field();
  Matrix rows = sub_basis;
  if (m.graded() && m.dim() > 0 && sub_basis.cols() > 0) rows = homogeneous_basis(sub_basis, m.degrees(), f, nullptr);
  auto [red, pivots] = rref(rows.transpose());
  std::vector<bool> is_pivot(m.dim(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> pos(m.dim(), 0);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    if (!is_pivot[c]) {
      pos[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  std::size_t q = free_cols.size();
  Matrix proj(f, q, m.dim());
  Matrix sec(f, m.dim(), q);
  for (std::size_t k = 0; k < q; ++k) {
    proj.set(k, free_cols[k], f.one());
    sec.set(free_cols[k], k, f.one());
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (auto c : free_cols)
      if (!red.entry_is_zero(r, c)) proj.set(pos[c], pivots[r], f.neg(red.at(r, c)));
  }
  std::vector<Matrix> ops;
  for (const auto& a : m.actions()) ops.push_back(proj * a * sec);
  std::vector<GroupElem> deg;
  if (m.graded())
    for (auto c : free_cols) deg.push_back(m.degrees()[c]);
  return {Module(m.algebra(), m.side(), q, ops, deg), proj, sec};
}

Representation representation(const Module& m) {
  Representation r;
  r.dim = m.dim();
  for (auto g : m.algebra()->generators()) r.ops.push_back(m.action(g));
  r.degrees = m.degrees();
  r.field = m.field();
  return r;
}

Representation representation(const Bimodule& b) {
  Representation r;
  r.dim = b.dim();
  for (auto g : b.left_algebra()->generators()) r.ops.push_back(b.left_action(g));
  for (auto g : b.right_algebra()->generators()) r.ops.push_back(b.right_action(g));
  r.degrees = b.degrees();
  r.field = b.left_algebra()->field();
  return r;
}

std::vector<Matrix> hom_space(const Representation& m, const Representation& n, bool graded) {
  if (m.ops.size() != n.ops.size()) throw InputError("representations of different shapes");
  std::size_t dm = m.dim, dn = n.dim;
  std::vector<Matrix> result;
  if (dm == 0 || dn == 0) return result;
  if (m.ops.empty() && !m.field && !n.field) throw InputError("representation without a field");
  const Field& f = !m.ops.empty() ? m.ops[0].field() : m.field ? *m.field : *n.field;
  // Unknowns S[r][c] flattened row-major; optionally restricted to degree-preserving entries.
  std::vector<std::size_t> vars;
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c) {
      if (graded) {
        if (m.degrees.size() != dm || n.degrees.size() != dn) throw InputError("graded hom needs graded modules");
        if (m.degrees[c] != n.degrees[r]) continue;
      }
      vars.push_back(r * dm + c);
    }
  if (vars.empty()) return result;
  Matrix system(f, 0, vars.size());
  Matrix idn = Matrix::identity(f, dn), idm = Matrix::identity(f, dm);
  for (std::size_t g = 0; g < m.ops.size(); ++g) {
    Matrix coeff = Matrix::kron(idn, m.ops[g].transpose()) - Matrix::kron(n.ops[g], idm);
    Matrix block = coeff.select_columns(vars);
    system = row_space_basis(Matrix::vstack(f, vars.size(), {system, block}));
  }
  Matrix ker = kernel_basis(system);
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Matrix s(f, dn, dm);
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (!ker.entry_is_zero(v, k)) s.set(vars[v] / dm, vars[v] % dm, ker.at(v, k));
    result.push_back(s);
  }
  return result;
}

std::vector<Matrix> hom_space(const Module& m, const Module& n, bool graded) {
  if (!same_algebra(m.algebra(), n.algebra()) || m.side() != n.side())
    throw InputError("hom between modules over different algebras or sides");
  return hom_space(representation(m), representation(n), graded);
}

IsoSearch find_isomorphism(const Representation& m, const Representation& n, bool graded, std::uint64_t seed) {
  IsoSearch out;
  if (m.dim != n.dim) {
    out.conclusive = true;
    return out;
  }
  if (m.dim == 0) {
    const Field f = !m.ops.empty() ? m.ops[0].field() : m.field ? *m.field : n.field ? *n.field : Field();
    out.iso = Matrix(f, 0, 0);
    out.conclusive = true;
    return out;
  }
  auto basis = hom_space(m, n, graded);
  out.hom_dim = basis.size();
  if (basis.empty()) {
    out.conclusive = true;
    return out;
  }
  const Field& f = basis[0].field();
  std::size_t d = basis.size();
  auto invertible = [&](const Matrix& s) { return rank(s) == m.dim; };
  for (const auto& b : basis) {
    if (invertible(b)) {
      out.iso = b;
      out.conclusive = true;
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  auto sample = [&]() {
    if (f.is_prime_field()) {
      std::uniform_int_distribution<std::int64_t> dist(0, f.characteristic() - 1);
      return f.from_int(dist(rng));
    }
    std::uniform_int_distribution<std::int64_t> dist(-3, 3);
    return f.from_int(dist(rng));
  };
  for (std::size_t t = 0; t < kRandomSamples; ++t) {
    Matrix s(f, n.dim, m.dim);
    for (const auto& b : basis) s += b.scaled(sample());
    if (invertible(s)) {
      out.iso = s;
      out.conclusive = true;
      return out;
    }
  }
  // Exhaustive search when |F|^d is small.
  auto size = f.size();
  if (!size) return out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= *size;
    if (total > kExhaustLimit) return out;
  }
  std::vector<std::int64_t> coeff(d, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t x = t;
    for (std::size_t i = 0; i < d; ++i) {
      coeff[i] = static_cast<std::int64_t>(x % *size);
      x /= *size;
    }
    Matrix s(f, n.dim, m.dim);
    for (std::size_t i = 0; i < d; ++i)
      if (coeff[i]) s += basis[i].scaled(f.from_int(coeff[i]));
    if (invertible(s)) {
      out.iso = s;
      out.conclusive = true;
      return out;
    }
  }
  out.conclusive = true;
  return out;
}

IsoSearch find_isomorphism(const Module& m, const Module& n, bool graded, std::uint64_t seed) {
  if (!same_algebra(m.algebra(), n.algebra()) || m.side() != n.side())
    throw InputError("isomorphism search between modules over different algebras or sides");
  return find_isomorphism(representation(m), representation(n), graded, seed);
}

IsoSearch find_isomorphism(const Bimodule& m, const Bimodule& n, bool graded, std::uint64_t seed) {
  if (!same_algebra(m.left_algebra(), n.left_algebra()) || !same_algebra(m.right_algebra(), n.right_algebra()))
    throw InputError("isomorphism search between bimodules over different algebras");
  return find_isomorphism(representation(m), representation(n), graded, seed);
}

}  // namespace injgen
