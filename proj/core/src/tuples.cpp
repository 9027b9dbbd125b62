#include "injgen/tuples.hpp"

namespace injgen {

namespace {

// Left: column (n * dM + m) * dX + x is psi(n (x) m) x.
// Right: column (x * dN + n) * dM + m is x psi(n (x) m).
Matrix psi_map(const MoritaContext& ctx, const Module& x) {
  std::size_t dn = ctx.n.dim(), dm = ctx.m.dim(), dx = x.dim();
  Matrix out(x.field(), dx, dn * dm * dx);
  for (std::size_t n = 0; n < dn; ++n)
    for (std::size_t m = 0; m < dm; ++m) {
      Matrix op = x.act(ctx.psi.column(n * dm + m));
      for (std::size_t c = 0; c < dx; ++c) {
        std::size_t col = x.side() == Side::Left ? (n * dm + m) * dx + c : (c * dn + n) * dm + m;
        out.set_block(0, col, op.column(c));
      }
    }
  return out;
}

// Left: column (m * dN + n) * dY + y is phi(m (x) n) y.
// Right: column (y * dM + m) * dN + n is y phi(m (x) n).
Matrix phi_map(const MoritaContext& ctx, const Module& y) {
  std::size_t dn = ctx.n.dim(), dm = ctx.m.dim(), dy = y.dim();
  Matrix out(y.field(), dy, dm * dn * dy);
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t n = 0; n < dn; ++n) {
      Matrix op = y.act(ctx.phi.column(m * dn + n));
      for (std::size_t c = 0; c < dy; ++c) {
        std::size_t col = y.side() == Side::Left ? (m * dn + n) * dy + c : (c * dm + m) * dn + n;
        out.set_block(0, col, op.column(c));
      }
    }
  return out;
}

Matrix corner_unit(const MoritaRing& ring, bool first) {
  const auto& ctx = ring.context;
  const Field& f = ctx.a->field();
  Matrix e(f, ring.ring->dim(), 1);
  if (first) {
    for (std::size_t i = 0; i < ctx.a->dim(); ++i) e.set(i, 0, ctx.a->unit()[i]);
  } else {
    for (std::size_t i = 0; i < ctx.b->dim(); ++i) e.set(ring.offset_b() + i, 0, ctx.b->unit()[i]);
  }
  return e;
}

}  // namespace

CheckResult check_tuple(const MoritaContext& ctx, const TupleModule& t) {
  CheckResult res;
  if (!same_algebra(t.x.algebra(), ctx.a) || !same_algebra(t.y.algebra(), ctx.b)) {
    res.fail("tuple components are over the wrong algebras");
    return res;
  }
  if (t.x.side() != t.side || t.y.side() != t.side) {
    res.fail("tuple components are on the wrong side");
    return res;
  }
  if (!check_module_axioms(t.x).ok()) res.fail("X violates the module axioms");
  if (!check_module_axioms(t.y).ok()) res.fail("Y violates the module axioms");
  const Field& fld = ctx.a->field();
  std::size_t dx = t.x.dim(), dy = t.y.dim(), dn = ctx.n.dim(), dm = ctx.m.dim();
  Matrix ix = Matrix::identity(fld, dx), iy = Matrix::identity(fld, dy);
  Matrix in = Matrix::identity(fld, dn), im = Matrix::identity(fld, dm);
  bool left = t.side == Side::Left;
  std::size_t fcols = left ? dm * dx : dx * dn, gcols = left ? dn * dy : dy * dm;
  if (t.f.rows() != dy || t.f.cols() != fcols || t.g.rows() != dx || t.g.cols() != gcols) {
    res.fail("f or g has the wrong shape");
    return res;
  }
  if (!res.ok) return res;
  for (auto a : ctx.a->generators()) {
    if (left) {
      if (!(t.f * Matrix::kron(ctx.m.right_action(a), ix) == t.f * Matrix::kron(im, t.x.action(a))))
        res.fail("f is not balanced over A");
      if (!(t.g * Matrix::kron(ctx.n.left_action(a), iy) == t.x.action(a) * t.g)) res.fail("g is not A-linear");
    } else {
      if (!(t.f * Matrix::kron(t.x.action(a), in) == t.f * Matrix::kron(ix, ctx.n.left_action(a))))
        res.fail("f is not balanced over A");
      if (!(t.g * Matrix::kron(iy, ctx.m.right_action(a)) == t.x.action(a) * t.g)) res.fail("g is not A-linear");
    }
  }
  for (auto b : ctx.b->generators()) {
    if (left) {
      if (!(t.g * Matrix::kron(ctx.n.right_action(b), iy) == t.g * Matrix::kron(in, t.y.action(b))))
        res.fail("g is not balanced over B");
      if (!(t.f * Matrix::kron(ctx.m.left_action(b), ix) == t.y.action(b) * t.f)) res.fail("f is not B-linear");
    } else {
      if (!(t.g * Matrix::kron(t.y.action(b), im) == t.g * Matrix::kron(iy, ctx.m.left_action(b))))
        res.fail("g is not balanced over B");
      if (!(t.f * Matrix::kron(ix, ctx.n.right_action(b)) == t.y.action(b) * t.f)) res.fail("f is not B-linear");
    }
  }
  if (!res.ok) return res;
  Matrix first = left ? t.g * Matrix::kron(in, t.f) : t.g * Matrix::kron(t.f, im);
  Matrix second = left ? t.f * Matrix::kron(im, t.g) : t.f * Matrix::kron(t.g, in);
  if (!(first == psi_map(ctx, t.x))) res.fail("square through psi does not commute");
  if (!(second == phi_map(ctx, t.y))) res.fail("square through phi does not commute");
  return res;
}

Module tuple_to_module(const MoritaRing& ring, const TupleModule& t) {
  const auto& ctx = ring.context;
  const Field& fld = ctx.a->field();
  std::size_t dx = t.x.dim(), dy = t.y.dim(), d = dx + dy;
  std::size_t dn = ctx.n.dim(), dm = ctx.m.dim();
  bool left = t.side == Side::Left;
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < ctx.a->dim(); ++i) {
    Matrix op(fld, d, d);
    op.set_block(0, 0, t.x.action(i));
    ops.push_back(op);
  }
  for (std::size_t j = 0; j < dn; ++j) {
    Matrix op(fld, d, d);
    if (left) {
      for (std::size_t y = 0; y < dy; ++y) op.set_block(0, dx + y, t.g.column(j * dy + y));
    } else {
      for (std::size_t x = 0; x < dx; ++x) op.set_block(dx, x, t.f.column(x * dn + j));
    }
    ops.push_back(op);
  }
  for (std::size_t j = 0; j < dm; ++j) {
    Matrix op(fld, d, d);
    if (left) {
      for (std::size_t x = 0; x < dx; ++x) op.set_block(dx, x, t.f.column(j * dx + x));
    } else {
      for (std::size_t y = 0; y < dy; ++y) op.set_block(0, dx + y, t.g.column(y * dm + j));
    }
    ops.push_back(op);
  }
  for (std::size_t i = 0; i < ctx.b->dim(); ++i) {
    Matrix op(fld, d, d);
    op.set_block(dx, dx, t.y.action(i));
    ops.push_back(op);
  }
  return Module(ring.ring, t.side, d, ops);
}

TupleModule module_to_tuple(const MoritaRing& ring, const Module& z) {
  if (!same_algebra(z.algebra(), ring.ring)) throw InputError("module is not over the assembled ring");
  const auto& ctx = ring.context;
  const Field& fld = z.field();
  Matrix xb = column_space_basis(z.act(corner_unit(ring, true)));
  Matrix yb = column_space_basis(z.act(corner_unit(ring, false)));
  std::size_t dx = xb.cols(), dy = yb.cols(), dn = ctx.n.dim(), dm = ctx.m.dim();
  if (dx + dy != z.dim()) throw InputError("corner idempotents do not decompose the module");
  Matrix q = Matrix::hstack(fld, z.dim(), {xb, yb});
  Matrix qinv = z.dim() ? *inverse(q) : q;
  auto conj = [&](std::size_t e) { return qinv * z.action(e) * q; };
  std::vector<Matrix> xa, ya;
  for (std::size_t i = 0; i < ctx.a->dim(); ++i) xa.push_back(conj(i).block(0, 0, dx, dx));
  for (std::size_t i = 0; i < ctx.b->dim(); ++i) ya.push_back(conj(ring.offset_b() + i).block(dx, dx, dy, dy));
  bool left = z.side() == Side::Left;
  Matrix f(fld, dy, left ? dm * dx : dx * dn);
  Matrix g(fld, dx, left ? dn * dy : dy * dm);
  for (std::size_t j = 0; j < dn; ++j) {
    Matrix t = conj(ring.offset_n() + j);
    if (left) {
      for (std::size_t y = 0; y < dy; ++y) g.set_block(0, j * dy + y, t.block(0, dx + y, dx, 1));
    } else {
      for (std::size_t x = 0; x < dx; ++x) f.set_block(0, x * dn + j, t.block(dx, x, dy, 1));
    }
  }
  for (std::size_t j = 0; j < dm; ++j) {
    Matrix t = conj(ring.offset_m() + j);
    if (left) {
      for (std::size_t x = 0; x < dx; ++x) f.set_block(0, j * dx + x, t.block(dx, x, dy, 1));
    } else {
      for (std::size_t y = 0; y < dy; ++y) g.set_block(0, y * dm + j, t.block(0, dx + y, dx, 1));
    }
  }
  return {z.side(), Module(ctx.a, z.side(), dx, xa), Module(ctx.b, z.side(), dy, ya), f, g};
}

TupleModule functor_t_a(const MoritaContext& ctx, const Module& x) {
  if (!same_algebra(x.algebra(), ctx.a)) throw InputError("module is not over A");
  const Field& fld = x.field();
  if (x.side() == Side::Left) {
    auto bt = tensor(ctx.m, Bimodule::from_module(x));
    Module y = bt.result.as_left();
    Matrix g = psi_map(ctx, x) * Matrix::kron(Matrix::identity(fld, ctx.n.dim()), bt.quotient.section);
    return {Side::Left, x, y, bt.quotient.projection, g};
  }
  auto bt = tensor(Bimodule::from_module(x), ctx.n);
  Module y = bt.result.as_right();
  Matrix g = psi_map(ctx, x) * Matrix::kron(bt.quotient.section, Matrix::identity(fld, ctx.m.dim()));
  return {Side::Right, x, y, bt.quotient.projection, g};
}

TupleModule functor_t_b(const MoritaContext& ctx, const Module& y) {
  if (!same_algebra(y.algebra(), ctx.b)) throw InputError("module is not over B");
  const Field& fld = y.field();
  if (y.side() == Side::Left) {
    auto bt = tensor(ctx.n, Bimodule::from_module(y));
    Module x = bt.result.as_left();
    Matrix f = phi_map(ctx, y) * Matrix::kron(Matrix::identity(fld, ctx.m.dim()), bt.quotient.section);
    return {Side::Left, x, y, f, bt.quotient.projection};
  }
  auto bt = tensor(Bimodule::from_module(y), ctx.m);
  Module x = bt.result.as_right();
  Matrix f = phi_map(ctx, y) * Matrix::kron(bt.quotient.section, Matrix::identity(fld, ctx.n.dim()));
  return {Side::Right, x, y, f, bt.quotient.projection};
}

TupleModule functor_z_a(const MoritaContext& ctx, const Module& x) {
  if (!verify_zero_context(ctx)) throw PreconditionError("Z functors need phi = psi = 0");
  if (!same_algebra(x.algebra(), ctx.a)) throw InputError("module is not over A");
  const Field& fld = x.field();
  Module y = zero_module(ctx.b, x.side());
  bool left = x.side() == Side::Left;
  return {x.side(), x, y, Matrix(fld, 0, left ? ctx.m.dim() * x.dim() : x.dim() * ctx.n.dim()),
          Matrix(fld, x.dim(), 0)};
}

TupleModule functor_z_b(const MoritaContext& ctx, const Module& y) {
  if (!verify_zero_context(ctx)) throw PreconditionError("Z functors need phi = psi = 0");
  if (!same_algebra(y.algebra(), ctx.b)) throw InputError("module is not over B");
  const Field& fld = y.field();
  Module x = zero_module(ctx.a, y.side());
  bool left = y.side() == Side::Left;
  return {y.side(), x, y, Matrix(fld, y.dim(), 0),
          Matrix(fld, 0, left ? ctx.n.dim() * y.dim() : y.dim() * ctx.m.dim())};
}

Module corner_a(const MoritaContext& ctx, Side side) {
  return side == Side::Left ? regular_left(ctx.a) : regular_right(ctx.a);
}

Module corner_b(const MoritaContext& ctx, Side side) {
  return side == Side::Left ? regular_left(ctx.b) : regular_right(ctx.b);
}

// ---- Theta functors -------------------------------------------------------

namespace {

Bimodule make_e_over_r(const AlgebraPtr& r, const AlgebraPtr& e) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < r->dim(); ++i) left.push_back(e->left_mult(i));
  for (std::size_t j = 0; j < e->dim(); ++j) right.push_back(e->right_mult(j));
  return Bimodule(r, e, e->dim(), left, right);
}

Bimodule make_r_over_e(const AlgebraPtr& r, const AlgebraPtr& e) {
  const Field& f = r->field();
  std::vector<Matrix> left, right;
  for (std::size_t j = 0; j < e->dim(); ++j)
    left.push_back(j < r->dim() ? r->left_mult(j) : Matrix(f, r->dim(), r->dim()));
  for (std::size_t i = 0; i < r->dim(); ++i) right.push_back(r->right_mult(i));
  return Bimodule(e, r, r->dim(), left, right);
}

}  // namespace

ThetaFunctors::ThetaFunctors(const Bimodule& m, const Matrix& theta)
    : m_(m),
      r_(m.left_algebra()),
      e_(theta_extension(m, theta)),
      incl_(m.field(), e_->dim(), r_->dim()),
      proj_(m.field(), r_->dim(), e_->dim()),
      e_over_r_(make_e_over_r(r_, e_)),
      r_over_e_(make_r_over_e(r_, e_)) {
  const Field& f = m.field();
  for (std::size_t i = 0; i < r_->dim(); ++i) {
    incl_.set(i, i, f.one());
    proj_.set(i, i, f.one());
  }
}

Module ThetaFunctors::base_as_left_module() const {
  return r_over_e_.as_left();
}

Module ThetaFunctors::z(const Module& x) const {
  if (!same_algebra(x.algebra(), r_) || x.side() != Side::Right) throw InputError("Z needs a right R-module");
  return Module(e_, Side::Right, x.dim(), [&] {
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < e_->dim(); ++j) ops.push_back(x.act(proj_.column(j)));
    return ops;
  }());
}

Module ThetaFunctors::u(const Module& y) const {
  if (!same_algebra(y.algebra(), e_) || y.side() != Side::Right) throw InputError("U needs a right E-module");
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < r_->dim(); ++j) ops.push_back(y.action(j));
  return Module(r_, Side::Right, y.dim(), ops);
}

Module ThetaFunctors::t(const Module& x) const {
  if (!same_algebra(x.algebra(), r_) || x.side() != Side::Right) throw InputError("T needs a right R-module");
  return tensor(x, e_over_r_);
}

Module ThetaFunctors::c(const Module& y) const {
  if (!same_algebra(y.algebra(), e_) || y.side() != Side::Right) throw InputError("C needs a right E-module");
  return tensor(y, r_over_e_);
}

Module ThetaFunctors::f(const Module& x) const {
  return tensor(x, m_);
}

}  // namespace injgen
