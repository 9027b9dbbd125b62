#include "injgen/constructions.hpp"

#include <algorithm>
#include <map>

namespace injgen {

namespace {

// Column s is the product e_elem * e_src[s] (or e_src[s] * e_elem) restricted to the rows `tgt`.
Matrix restricted_product(const GradedAlgebra& ring, std::size_t elem, bool elem_on_left,
                          const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt) {
  const Field& f = ring.field();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < tgt.size(); ++k) pos[tgt[k]] = k;
  Matrix out(f, tgt.size(), src.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& prod = elem_on_left ? ring.product(elem, src[s]) : ring.product(src[s], elem);
    for (const auto& [k, c] : prod) {
      auto it = pos.find(k);
      if (it == pos.end()) throw InputError("product leaves the expected block");
      out.set(it->second, s, c);
    }
  }
  return out;
}

// Column (i * |right| + j) is e_left[i] * e_right[j] restricted to `tgt`.
Matrix restricted_pairing(const GradedAlgebra& ring, const std::vector<std::size_t>& left,
                          const std::vector<std::size_t>& right, const std::vector<std::size_t>& tgt) {
  const Field& f = ring.field();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < tgt.size(); ++k) pos[tgt[k]] = k;
  Matrix out(f, tgt.size(), left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      for (const auto& [k, c] : ring.product(left[i], right[j])) {
        auto it = pos.find(k);
        if (it == pos.end()) throw InputError("product leaves the expected block");
        out.set(it->second, i * right.size() + j, c);
      }
    }
  }
  return out;
}

void append_column(SparseVector& out, const Matrix& col, std::size_t offset) {
  for (std::size_t r = 0; r < col.rows(); ++r)
    if (!col.entry_is_zero(r, 0)) out.emplace_back(offset + r, col.at(r, 0));
}

Bimodule restricted_bimodule(const GradedAlgebra& ring, const std::vector<std::size_t>& left_idx,
                             const AlgebraPtr& left, const std::vector<std::size_t>& right_idx,
                             const AlgebraPtr& right, const std::vector<std::size_t>& carrier) {
  std::vector<Matrix> l, r;
  for (auto x : left_idx) l.push_back(restricted_product(ring, x, true, carrier, carrier));
  for (auto y : right_idx) r.push_back(restricted_product(ring, y, false, carrier, carrier));
  return Bimodule(left, right, carrier.size(), l, r);
}

std::int64_t int_degree(const GradedAlgebra& a, std::size_t i) {
  return a.degree(i)[0];
}

}  // namespace

// ---- Covering ring --------------------------------------------------------

std::size_t CoveringRing::index(std::size_t g, std::size_t h, std::size_t i) const {
  std::size_t order = base->group().order();
  return position[(g * order + h) * base->dim() + i];
}

Matrix CoveringRing::block_idempotent(std::size_t g) const {
  const Field& f = base->field();
  Matrix e(f, ring->dim(), 1);
  for (std::size_t i = 0; i < base->dim(); ++i) {
    if (f.is_zero(base->unit()[i])) continue;
    std::size_t idx = index(g, g, i);
    if (idx == npos) throw InputError("unit is not homogeneous of degree zero");
    e.set(idx, 0, base->unit()[i]);
  }
  return e;
}

CoveringRing covering_ring(const AlgebraPtr& r) {
  CoveringRing cov;
  cov.base = r;
  const auto& grp = r->group();
  const Field& f = r->field();
  std::size_t order = grp.order(), n = r->dim();
  auto elems = grp.elements();
  cov.position.assign(order * order * n, npos);
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      GroupElem diff = grp.sub(elems[h], elems[g]);
      for (std::size_t i = 0; i < n; ++i) {
        if (r->degree(i) != diff) continue;
        cov.position[(g * order + h) * n + i] = cov.entries.size();
        cov.entries.push_back({g, h, i});
        labels.push_back("[" + std::to_string(g) + "," + std::to_string(h) + "]" + r->labels()[i]);
      }
    }
  }
  std::size_t dim = cov.entries.size();
  StructureConstants mult(dim, std::vector<SparseVector>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const auto& ex = cov.entries[x];
    for (std::size_t y = 0; y < dim; ++y) {
      const auto& ey = cov.entries[y];
      if (ex.h != ey.g) continue;
      for (const auto& [k, c] : r->product(ex.i, ey.i)) {
        std::size_t z = cov.position[(ex.g * order + ey.h) * n + k];
        if (z == npos) throw InputError("base algebra multiplication is not graded");
        mult[x][y].emplace_back(z, c);
      }
    }
  }
  std::vector<Scalar> unit(dim, f.zero());
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f.is_zero(r->unit()[i])) continue;
      std::size_t z = cov.position[(g * order + g) * n + i];
      if (z == npos) throw InputError("unit is not homogeneous of degree zero");
      unit[z] = r->unit()[i];
    }
  }
  cov.ring = make_algebra(f, FiniteAbelianGroup(), labels, std::vector<GroupElem>(dim, GroupElem{}), unit, mult);
  return cov;
}

Module covering_module(const CoveringRing& cov, const Module& m) {
  if (!same_algebra(m.algebra(), cov.base) || m.side() != Side::Right || !m.graded())
    throw InputError("covering module needs a graded right module over the base algebra");
  const auto& grp = cov.base->group();
  const Field& f = m.field();
  std::vector<Matrix> ops;
  for (const auto& e : cov.entries) {
    Matrix op(f, m.dim(), m.dim());
    for (std::size_t p = 0; p < m.dim(); ++p)
      if (grp.index(m.degrees()[p]) == e.g) op.set_block(0, p, m.action(e.i).column(p));
    ops.push_back(op);
  }
  return Module(cov.ring, Side::Right, m.dim(), ops);
}

Module covering_module_inverse(const CoveringRing& cov, const Module& x) {
  if (!same_algebra(x.algebra(), cov.ring) || x.side() != Side::Right)
    throw InputError("inverse covering needs a right module over the covering ring");
  const auto& grp = cov.base->group();
  const Field& f = x.field();
  std::size_t order = grp.order();
  std::vector<Matrix> projections, parts;
  std::vector<GroupElem> degrees;
  for (std::size_t g = 0; g < order; ++g) {
    Matrix p = x.act(cov.block_idempotent(g));
    projections.push_back(p);
    Matrix basis = column_space_basis(p);
    parts.push_back(basis);
    for (std::size_t c = 0; c < basis.cols(); ++c) degrees.push_back(grp.element(g));
  }
  Matrix basis = Matrix::hstack(f, x.dim(), parts);
  if (basis.cols() != x.dim()) throw InputError("block idempotents do not decompose the module");
  if (x.dim() == 0) return Module(cov.base, Side::Right, 0, std::vector<Matrix>(cov.base->dim(), Matrix(f, 0, 0)), {});
  SubspaceCoordinates coords(basis);
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < cov.base->dim(); ++j) {
    Matrix op(f, x.dim(), x.dim());
    for (std::size_t g = 0; g < order; ++g) {
      GroupElem h = grp.add(grp.element(g), cov.base->degree(j));
      std::size_t idx = cov.index(g, grp.index(h), j);
      op += x.action(idx) * projections[g];
    }
    ops.push_back(coords.coordinates(op * basis));
  }
  return Module(cov.base, Side::Right, x.dim(), ops, degrees);
}

// ---- Morita contexts ------------------------------------------------------

CheckResult check_morita_context(const MoritaContext& ctx) {
  CheckResult res;
  const auto& a = ctx.a;
  const auto& b = ctx.b;
  if (!same_algebra(ctx.n.left_algebra(), a) || !same_algebra(ctx.n.right_algebra(), b)) {
    res.fail("N is not an A-B bimodule");
    return res;
  }
  if (!same_algebra(ctx.m.left_algebra(), b) || !same_algebra(ctx.m.right_algebra(), a)) {
    res.fail("M is not a B-A bimodule");
    return res;
  }
  if (!check_bimodule_axioms(ctx.n).ok()) res.fail("N violates the bimodule axioms");
  if (!check_bimodule_axioms(ctx.m).ok()) res.fail("M violates the bimodule axioms");
  std::size_t dn = ctx.n.dim(), dm = ctx.m.dim();
  if (ctx.phi.rows() != b->dim() || ctx.phi.cols() != dm * dn) {
    res.fail("phi has the wrong shape");
    return res;
  }
  if (ctx.psi.rows() != a->dim() || ctx.psi.cols() != dn * dm) {
    res.fail("psi has the wrong shape");
    return res;
  }
  const Field& f = a->field();
  Matrix in = Matrix::identity(f, dn), im = Matrix::identity(f, dm);
  for (auto g : a->generators()) {
    if (!(ctx.phi * Matrix::kron(ctx.m.right_action(g), in) == ctx.phi * Matrix::kron(im, ctx.n.left_action(g))))
      res.fail("phi is not balanced over A");
    if (!(ctx.psi * Matrix::kron(ctx.n.left_action(g), im) == a->left_mult(g) * ctx.psi))
      res.fail("psi is not left A-linear");
    if (!(ctx.psi * Matrix::kron(in, ctx.m.right_action(g)) == a->right_mult(g) * ctx.psi))
      res.fail("psi is not right A-linear");
  }
  for (auto g : b->generators()) {
    if (!(ctx.psi * Matrix::kron(ctx.n.right_action(g), im) == ctx.psi * Matrix::kron(in, ctx.m.left_action(g))))
      res.fail("psi is not balanced over B");
    if (!(ctx.phi * Matrix::kron(ctx.m.left_action(g), in) == b->left_mult(g) * ctx.phi))
      res.fail("phi is not left B-linear");
    if (!(ctx.phi * Matrix::kron(im, ctx.n.right_action(g)) == b->right_mult(g) * ctx.phi))
      res.fail("phi is not right B-linear");
  }
  if (!res.ok) return res;
  // phi(m (x) n) m' = m psi(n (x) m') and n phi(m (x) n') = psi(n (x) m) n'.
  std::vector<Matrix> phi_on_m, psi_on_m, phi_on_n, psi_on_n;
  for (std::size_t c = 0; c < dm * dn; ++c) {
    phi_on_m.push_back(ctx.m.act_left(ctx.phi.column(c)));
    phi_on_n.push_back(ctx.n.act_right(ctx.phi.column(c)));
  }
  for (std::size_t c = 0; c < dn * dm; ++c) {
    psi_on_m.push_back(ctx.m.act_right(ctx.psi.column(c)));
    psi_on_n.push_back(ctx.n.act_left(ctx.psi.column(c)));
  }
  bool first = true, second = true;
  for (std::size_t i = 0; i < dm && first; ++i)
    for (std::size_t j = 0; j < dn && first; ++j)
      for (std::size_t l = 0; l < dm && first; ++l)
        if (!(phi_on_m[i * dn + j].column(l) == psi_on_m[j * dm + l].column(i))) first = false;
  for (std::size_t j = 0; j < dn && second; ++j)
    for (std::size_t i = 0; i < dm && second; ++i)
      for (std::size_t l = 0; l < dn && second; ++l)
        if (!(phi_on_n[i * dn + l].column(j) == psi_on_n[j * dm + i].column(l))) second = false;
  if (!first) res.fail("phi(m n) m' differs from m psi(n m')");
  if (!second) res.fail("n phi(m n') differs from psi(n m) n'");
  return res;
}

bool verify_zero_context(const MoritaContext& ctx) {
  return ctx.phi.is_zero() && ctx.psi.is_zero();
}

MoritaContext zero_context(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& n, const Bimodule& m) {
  const Field& f = a->field();
  return {a, b, n, m, Matrix(f, b->dim(), m.dim() * n.dim()), Matrix(f, a->dim(), n.dim() * m.dim())};
}

MoritaRing morita_ring(const MoritaContext& ctx) {
  auto check = check_morita_context(ctx);
  if (!check.ok) throw PreconditionError("invalid Morita context: " + check.failures.front());
  const auto& a = *ctx.a;
  const auto& b = *ctx.b;
  const Field& f = a.field();
  std::size_t da = a.dim(), dn = ctx.n.dim(), dm = ctx.m.dim(), db = b.dim();
  std::size_t on = da, om = da + dn, ob = da + dn + dm, total = ob + db;
  StructureConstants mult(total, std::vector<SparseVector>(total));
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& [k, c] : a.product(i, j)) mult[i][j].emplace_back(k, c);
    for (std::size_t j = 0; j < dn; ++j) append_column(mult[i][on + j], ctx.n.left_action(i).column(j), on);
  }
  for (std::size_t i = 0; i < dn; ++i) {
    for (std::size_t j = 0; j < dm; ++j) append_column(mult[on + i][om + j], ctx.psi.column(i * dm + j), 0);
    for (std::size_t j = 0; j < db; ++j) append_column(mult[on + i][ob + j], ctx.n.right_action(j).column(i), on);
  }
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < da; ++j) append_column(mult[om + i][j], ctx.m.right_action(j).column(i), om);
    for (std::size_t j = 0; j < dn; ++j) append_column(mult[om + i][on + j], ctx.phi.column(i * dn + j), ob);
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < dm; ++j) append_column(mult[ob + i][om + j], ctx.m.left_action(i).column(j), om);
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& [k, c] : b.product(i, j)) mult[ob + i][ob + j].emplace_back(ob + k, c);
  }
  std::vector<Scalar> unit(total, f.zero());
  for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit()[i];
  for (std::size_t i = 0; i < db; ++i) unit[ob + i] = b.unit()[i];
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("A:" + l);
  for (std::size_t i = 0; i < dn; ++i) labels.push_back("N:" + std::to_string(i));
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("M:" + std::to_string(i));
  for (const auto& l : b.labels()) labels.push_back("B:" + l);
  FiniteAbelianGroup grp;
  std::vector<GroupElem> deg(total, GroupElem{});
  if (a.group() == b.group()) {
    grp = a.group();
    deg.assign(total, grp.zero());
    for (std::size_t i = 0; i < da; ++i) deg[i] = a.degree(i);
    for (std::size_t i = 0; i < dn && !ctx.n.degrees().empty(); ++i) deg[on + i] = ctx.n.degrees()[i];
    for (std::size_t i = 0; i < dm && !ctx.m.degrees().empty(); ++i) deg[om + i] = ctx.m.degrees()[i];
    for (std::size_t i = 0; i < db; ++i) deg[ob + i] = b.degree(i);
  }
  return {ctx, make_algebra(f, grp, labels, deg, unit, mult)};
}

std::vector<std::size_t> SplitCovering::permutation() const {
  std::vector<std::size_t> p = a_idx;
  p.insert(p.end(), n_idx.begin(), n_idx.end());
  p.insert(p.end(), m_idx.begin(), m_idx.end());
  p.insert(p.end(), b_idx.begin(), b_idx.end());
  return p;
}

std::size_t half_split_index(const FiniteAbelianGroup& g) {
  if (g.order() < 2 || g.order() % 2 != 0) throw InputError("half split needs a group of even order");
  return g.order() / 2 - 1;
}

SplitCovering split_covering(const CoveringRing& cov, std::size_t k) {
  std::size_t order = cov.base->group().order();
  if (order < 2 || k + 2 > order) throw InputError("split index must lie in 0..|G|-2");
  std::vector<std::size_t> a_idx, n_idx, m_idx, b_idx;
  for (std::size_t x = 0; x < cov.entries.size(); ++x) {
    bool top_row = cov.entries[x].g <= k, top_col = cov.entries[x].h <= k;
    if (top_row && top_col) a_idx.push_back(x);
    else if (top_row) n_idx.push_back(x);
    else if (top_col) m_idx.push_back(x);
    else b_idx.push_back(x);
  }
  const GradedAlgebra& ring = *cov.ring;
  const Field& f = ring.field();
  Matrix ea(f, ring.dim(), 1), eb(f, ring.dim(), 1);
  for (std::size_t g = 0; g < order; ++g) (g <= k ? ea : eb) += cov.block_idempotent(g);
  auto a = basis_subalgebra(ring, a_idx, ea.column_entries(0)).algebra;
  auto b = basis_subalgebra(ring, b_idx, eb.column_entries(0)).algebra;
  Bimodule n = restricted_bimodule(ring, a_idx, a, b_idx, b, n_idx);
  Bimodule m = restricted_bimodule(ring, b_idx, b, a_idx, a, m_idx);
  Matrix phi = restricted_pairing(ring, m_idx, n_idx, b_idx);
  Matrix psi = restricted_pairing(ring, n_idx, m_idx, a_idx);
  return {{a, b, n, m, phi, psi}, a_idx, n_idx, m_idx, b_idx};
}

AlgebraPtr permute_basis(const GradedAlgebra& a, const std::vector<std::size_t>& perm) {
  std::size_t n = a.dim();
  if (perm.size() != n) throw InputError("permutation has the wrong length");
  std::vector<std::size_t> inv(n, npos);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || inv[perm[k]] != npos) throw InputError("not a permutation");
    inv[perm[k]] = k;
  }
  StructureConstants mult(n, std::vector<SparseVector>(n));
  std::vector<std::string> labels;
  std::vector<GroupElem> deg;
  std::vector<Scalar> unit;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(a.labels()[perm[x]]);
    deg.push_back(a.degree(perm[x]));
    unit.push_back(a.unit()[perm[x]]);
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [k, c] : a.product(perm[x], perm[y])) mult[x][y].emplace_back(inv[k], c);
  }
  return make_algebra(a.field(), a.group(), labels, deg, unit, mult);
}

// ---- Tensor rings and theta extensions ------------------------------------

TensorRing tensor_ring(const Bimodule& m, std::size_t k) {
  if (k == 0) throw InputError("nilpotency index must be positive");
  TensorPowers powers(m, k);
  if (powers.dim(k) != 0) throw PreconditionError("declared nilpotency index is wrong: M^(x)k is nonzero");
  const auto& r = *m.left_algebra();
  const Field& f = r.field();
  TensorRing out;
  out.nilpotency = k;
  out.exponent = 1;
  while ((std::size_t{1} << (out.exponent - 1)) < k) ++out.exponent;
  FiniteAbelianGroup grp = FiniteAbelianGroup::cyclic(std::int64_t{1} << out.exponent);
  std::size_t total = 0;
  std::vector<std::string> labels;
  std::vector<GroupElem> deg;
  for (std::size_t i = 0; i < k; ++i) {
    out.offsets.push_back(total);
    for (std::size_t q = 0; q < powers.dim(i); ++q) {
      labels.push_back(i == 0 ? r.labels()[q] : "t" + std::to_string(i) + "." + std::to_string(q));
      deg.push_back({static_cast<std::int64_t>(i)});
    }
    total += powers.dim(i);
  }
  StructureConstants mult(total, std::vector<SparseVector>(total));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; a + b < k; ++b) {
      const Matrix& cat = powers.concat(a, b);
      std::size_t db = powers.dim(b);
      for (std::size_t p = 0; p < powers.dim(a); ++p)
        for (std::size_t q = 0; q < db; ++q)
          append_column(mult[out.offsets[a] + p][out.offsets[b] + q], cat.column(p * db + q), out.offsets[a + b]);
    }
  }
  std::vector<Scalar> unit(total, f.zero());
  for (std::size_t i = 0; i < r.dim(); ++i) unit[i] = r.unit()[i];
  out.ring = make_algebra(f, grp, labels, deg, unit, mult);
  return out;
}

CheckResult check_theta(const Bimodule& m, const Matrix& theta) {
  CheckResult res;
  if (!same_algebra(m.left_algebra(), m.right_algebra())) {
    res.fail("M is not an R-R bimodule");
    return res;
  }
  std::size_t d = m.dim();
  if (theta.rows() != d || theta.cols() != d * d) {
    res.fail("theta has the wrong shape");
    return res;
  }
  if (!check_bimodule_axioms(m).ok()) res.fail("M violates the bimodule axioms");
  const Field& f = m.field();
  Matrix id = Matrix::identity(f, d);
  for (auto g : m.left_algebra()->generators()) {
    if (!(theta * Matrix::kron(m.right_action(g), id) == theta * Matrix::kron(id, m.left_action(g))))
      res.fail("theta is not balanced");
    if (!(theta * Matrix::kron(m.left_action(g), id) == m.left_action(g) * theta)) res.fail("theta is not left linear");
    if (!(theta * Matrix::kron(id, m.right_action(g)) == m.right_action(g) * theta))
      res.fail("theta is not right linear");
  }
  if (!(theta * Matrix::kron(theta, id) == theta * Matrix::kron(id, theta))) res.fail("theta is not associative");
  return res;
}

AlgebraPtr theta_extension(const Bimodule& m, const Matrix& theta) {
  auto check = check_theta(m, theta);
  if (!check.ok) throw PreconditionError("invalid theta: " + check.failures.front());
  const auto& r = *m.left_algebra();
  const Field& f = r.field();
  std::size_t dr = r.dim(), dm = m.dim(), total = dr + dm;
  StructureConstants mult(total, std::vector<SparseVector>(total));
  for (std::size_t i = 0; i < dr; ++i) {
    for (std::size_t j = 0; j < dr; ++j) mult[i][j] = r.product(i, j);
    for (std::size_t j = 0; j < dm; ++j) append_column(mult[i][dr + j], m.left_action(i).column(j), dr);
  }
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dr; ++j) append_column(mult[dr + i][j], m.right_action(j).column(i), dr);
    for (std::size_t j = 0; j < dm; ++j) append_column(mult[dr + i][dr + j], theta.column(i * dm + j), dr);
  }
  std::vector<Scalar> unit(total, f.zero());
  for (std::size_t i = 0; i < dr; ++i) unit[i] = r.unit()[i];
  std::vector<std::string> labels = r.labels();
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("m" + std::to_string(i));
  return make_algebra(f, FiniteAbelianGroup(), labels, std::vector<GroupElem>(total, GroupElem{}), unit, mult);
}

AlgebraPtr trivial_extension(const Bimodule& m) {
  if (!same_algebra(m.left_algebra(), m.right_algebra())) throw InputError("M is not an R-R bimodule");
  if (!check_bimodule_axioms(m).ok()) throw InputError("M violates the bimodule axioms");
  const auto& r = *m.left_algebra();
  const Field& f = r.field();
  std::size_t dr = r.dim(), dm = m.dim(), total = dr + dm;
  StructureConstants mult(total, std::vector<SparseVector>(total));
  for (std::size_t i = 0; i < dr; ++i) {
    for (std::size_t j = 0; j < dr; ++j) mult[i][j] = r.product(i, j);
    for (std::size_t j = 0; j < dm; ++j) {
      append_column(mult[i][dr + j], m.left_action(i).column(j), dr);
      append_column(mult[dr + j][i], m.right_action(i).column(j), dr);
    }
  }
  std::vector<Scalar> unit(total, f.zero());
  for (std::size_t i = 0; i < dr; ++i) unit[i] = r.unit()[i];
  std::vector<std::string> labels = r.labels();
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("m" + std::to_string(i));
  return make_algebra(f, FiniteAbelianGroup(), labels, std::vector<GroupElem>(total, GroupElem{}), unit, mult);
}

ThetaData tensor_ring_theta(const Bimodule& m, std::size_t k) {
  if (k == 0) throw InputError("nilpotency index must be positive");
  TensorPowers powers(m, k);
  if (powers.dim(k) != 0) throw PreconditionError("declared nilpotency index is wrong: M^(x)k is nonzero");
  const Field& f = m.field();
  const auto& r = m.left_algebra();
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t i = 1; i < k; ++i) {
    offsets.push_back(total);
    total += powers.dim(i);
  }
  std::vector<Matrix> left(r->dim(), Matrix(f, total, total)), right(r->dim(), Matrix(f, total, total));
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 0; j < r->dim(); ++j) {
      left[j].set_block(offsets[i - 1], offsets[i - 1], powers.power(i).left_action(j));
      right[j].set_block(offsets[i - 1], offsets[i - 1], powers.power(i).right_action(j));
    }
  }
  Matrix theta(f, total, total * total);
  for (std::size_t a = 1; a < k; ++a) {
    for (std::size_t b = 1; a + b < k; ++b) {
      const Matrix& cat = powers.concat(a, b);
      std::size_t db = powers.dim(b);
      for (std::size_t p = 0; p < powers.dim(a); ++p)
        for (std::size_t q = 0; q < db; ++q)
          theta.set_block(offsets[a + b - 1], (offsets[a - 1] + p) * total + offsets[b - 1] + q,
                          cat.column(p * db + q));
    }
  }
  return {Bimodule(r, r, total, left, right), theta};
}

PositivePart positive_part(const GradedAlgebra& lambda) {
  if (!is_positively_graded(lambda)) throw PreconditionError("algebra is not positively graded");
  auto z = initial_subring(lambda);
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < lambda.dim(); ++i)
    if (int_degree(lambda, i) != 0) pos.push_back(i);
  Bimodule m = restricted_bimodule(lambda, z.indices, z.algebra, z.indices, z.algebra, pos);
  Matrix theta = restricted_pairing(lambda, pos, pos, pos);
  return {z, pos, {m, theta}};
}

Bimodule graded_component(const GradedAlgebra& lambda, std::int64_t d) {
  if (!is_positively_graded(lambda)) throw PreconditionError("algebra is not positively graded");
  auto z = initial_subring(lambda);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < lambda.dim(); ++i)
    if (int_degree(lambda, i) == d) idx.push_back(i);
  return restricted_bimodule(lambda, z.indices, z.algebra, z.indices, z.algebra, idx);
}

// ---- Twisted tensor products ----------------------------------------------

Scalar Bicharacter::operator()(const GroupElem& a, const GroupElem& b) const {
  Scalar out = field.one();
  for (std::size_t p = 0; p < g1.rank(); ++p)
    for (std::size_t q = 0; q < g2.rank(); ++q) {
      std::uint64_t e = static_cast<std::uint64_t>(a[p]) * static_cast<std::uint64_t>(b[q]);
      if (e) out = field.mul(out, field.pow(values[p][q], e));
    }
  return out;
}

Bicharacter Bicharacter::trivial(const Field& f, const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2) {
  return {f, g1, g2, std::vector<std::vector<Scalar>>(g1.rank(), std::vector<Scalar>(g2.rank(), f.one()))};
}

CheckResult check_bicharacter(const Bicharacter& t) {
  CheckResult res;
  const Field& f = t.field;
  if (t.values.size() != t.g1.rank()) {
    res.fail("bicharacter table has the wrong number of rows");
    return res;
  }
  for (std::size_t p = 0; p < t.g1.rank(); ++p) {
    if (t.values[p].size() != t.g2.rank()) {
      res.fail("bicharacter table has the wrong number of columns");
      return res;
    }
    for (std::size_t q = 0; q < t.g2.rank(); ++q) {
      const Scalar& v = t.values[p][q];
      if (f.is_zero(v)) res.fail("bicharacter value is zero");
      else if (!f.is_one(f.pow(v, static_cast<std::uint64_t>(t.g1.factors()[p]))) ||
               !f.is_one(f.pow(v, static_cast<std::uint64_t>(t.g2.factors()[q]))))
        res.fail("bicharacter value is incompatible with the group orders");
    }
  }
  if (!res.ok) return res;
  if (t.g1.order() * t.g2.order() > 4096) return res;
  auto e1 = t.g1.elements(), e2 = t.g2.elements();
  for (const auto& a : e1) {
    if (!f.is_one(t(a, t.g2.zero()))) res.fail("t(g, 0) differs from 1");
    for (const auto& a2 : e1)
      for (const auto& b : e2)
        if (!(t(t.g1.add(a, a2), b) == f.mul(t(a, b), t(a2, b)))) {
          res.fail("t is not additive in the first argument");
          return res;
        }
  }
  for (const auto& b : e2) {
    if (!f.is_one(t(t.g1.zero(), b))) res.fail("t(0, g) differs from 1");
    for (const auto& b2 : e2)
      for (const auto& a : e1)
        if (!(t(a, t.g2.add(b, b2)) == f.mul(t(a, b), t(a, b2)))) {
          res.fail("t is not additive in the second argument");
          return res;
        }
  }
  return res;
}

namespace {

AlgebraPtr tensor_impl(const GradedAlgebra& a, const GradedAlgebra& b, const Bicharacter* t) {
  if (!(a.field() == b.field())) throw InputError("tensor factors over different fields");
  const Field& f = a.field();
  std::size_t da = a.dim(), db = b.dim(), total = da * db;
  auto grp = FiniteAbelianGroup::product(a.group(), b.group());
  std::vector<std::string> labels;
  std::vector<GroupElem> deg;
  std::vector<Scalar> unit;
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      labels.push_back(a.labels()[i] + "*" + b.labels()[j]);
      GroupElem d = a.degree(i);
      d.insert(d.end(), b.degree(j).begin(), b.degree(j).end());
      deg.push_back(d);
      unit.push_back(f.mul(a.unit()[i], b.unit()[j]));
    }
  }
  StructureConstants mult(total, std::vector<SparseVector>(total));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          const auto& pa = a.product(i, i2);
          const auto& pb = b.product(j, j2);
          if (pa.empty() || pb.empty()) continue;
          Scalar s = t ? (*t)(a.degree(i2), b.degree(j)) : f.one();
          auto& slot = mult[i * db + j][i2 * db + j2];
          for (const auto& [k, c] : pa)
            for (const auto& [l, d] : pb) slot.emplace_back(k * db + l, f.mul(s, f.mul(c, d)));
        }
  return make_algebra(f, grp, labels, deg, unit, mult);
}

}  // namespace

AlgebraPtr tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  return tensor_impl(a, b, nullptr);
}

AlgebraPtr twisted_tensor(const GradedAlgebra& a, const GradedAlgebra& b, const Bicharacter& t) {
  if (!(t.g1 == a.group()) || !(t.g2 == b.group()) || !(t.field == a.field()))
    throw InputError("bicharacter does not match the grading groups");
  auto check = check_bicharacter(t);
  if (!check.ok) throw InputError("invalid bicharacter: " + check.failures.front());
  return tensor_impl(a, b, &t);
}

Module twisted_module(const Module& m, const Module& n, const AlgebraPtr& ab, const Bicharacter& t) {
  if (m.side() != Side::Right || n.side() != Side::Right || !m.graded() || !n.graded())
    throw InputError("twisted module needs graded right modules");
  const auto& a = *m.algebra();
  const auto& b = *n.algebra();
  if (ab->dim() != a.dim() * b.dim()) throw InputError("algebra does not match the factors");
  const Field& f = m.field();
  std::size_t dm = m.dim(), dn = n.dim();
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Matrix diag(f, dm * dn, dm * dn);
      for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dn; ++q) diag.set(p * dn + q, p * dn + q, t(a.degree(i), n.degrees()[q]));
      ops.push_back(Matrix::kron(m.action(i), n.action(j)) * diag);
    }
  }
  std::vector<GroupElem> deg;
  for (std::size_t p = 0; p < dm; ++p)
    for (std::size_t q = 0; q < dn; ++q) {
      GroupElem d = m.degrees()[p];
      d.insert(d.end(), n.degrees()[q].begin(), n.degrees()[q].end());
      deg.push_back(d);
    }
  return Module(ab, Side::Right, dm * dn, ops, deg);
}

// ---- Beilinson-type construction ------------------------------------------

BeilinsonData beilinson(const GradedAlgebra& lambda, std::size_t l) {
  if (l == 0) throw InputError("length must be positive");
  if (!is_positively_graded(lambda)) throw PreconditionError("algebra is not positively graded");
  std::vector<std::vector<std::size_t>> comp(l + 1);
  for (std::size_t i = 0; i < lambda.dim(); ++i) {
    auto d = static_cast<std::size_t>(int_degree(lambda, i));
    if (d > l) throw PreconditionError("algebra has components above the given length");
    comp[d].push_back(i);
  }
  const Field& f = lambda.field();
  struct Entry {
    std::size_t i, j, u;
  };
  // b: blocks (i, j), j >= i, holding Lambda_{j-i}.
  std::vector<Entry> be;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> bpos;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j)
      for (auto u : comp[j - i]) {
        bpos[{i, j, u}] = be.size();
        be.push_back({i, j, u});
      }
  std::size_t nb = be.size();
  StructureConstants mult(nb, std::vector<SparseVector>(nb));
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      if (be[x].j != be[y].i) continue;
      for (const auto& [w, c] : lambda.product(be[x].u, be[y].u)) {
        auto it = bpos.find({be[x].i, be[y].j, w});
        if (it == bpos.end()) throw InputError("product leaves the expected component");
        mult[x][y].emplace_back(it->second, c);
      }
    }
  std::vector<Scalar> unit(nb, f.zero());
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < nb; ++x) {
    labels.push_back("[" + std::to_string(be[x].i) + "," + std::to_string(be[x].j) + "]" + lambda.labels()[be[x].u]);
    if (be[x].i == be[x].j) unit[x] = lambda.unit()[be[x].u];
  }
  auto b = make_algebra(f, FiniteAbelianGroup(), labels, std::vector<GroupElem>(nb, GroupElem{}), unit, mult);
  // x: blocks (i, j), j <= i, holding Lambda_{l+j-i}.
  std::vector<Entry> xe;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> xpos;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto u : comp[l + j - i]) {
        xpos[{i, j, u}] = xe.size();
        xe.push_back({i, j, u});
      }
  std::size_t nx = xe.size();
  std::vector<Matrix> left(nb, Matrix(f, nx, nx)), right(nb, Matrix(f, nx, nx));
  for (std::size_t s = 0; s < nb; ++s)
    for (std::size_t y = 0; y < nx; ++y) {
      if (be[s].j == xe[y].i) {
        for (const auto& [w, c] : lambda.product(be[s].u, xe[y].u)) {
          auto it = xpos.find({be[s].i, xe[y].j, w});
          if (it == xpos.end()) throw InputError("product leaves the expected component");
          left[s].set(it->second, y, c);
        }
      }
      if (xe[y].j == be[s].i) {
        for (const auto& [w, c] : lambda.product(xe[y].u, be[s].u)) {
          auto it = xpos.find({xe[y].i, be[s].j, w});
          if (it == xpos.end()) throw InputError("product leaves the expected component");
          right[s].set(it->second, y, c);
        }
      }
    }
  Bimodule x(b, b, nx, left, right);
  return {b, x, trivial_extension(x)};
}

}  // namespace injgen
