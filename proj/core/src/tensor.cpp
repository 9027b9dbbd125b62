#include "injgen/tensor.hpp"

namespace injgen {

TensorQuotient tensor_quotient(const Field& field, std::size_t dx, std::size_t dy,
                               const std::vector<Matrix>& right_ops, const std::vector<Matrix>& left_ops) {
  if (right_ops.size() != left_ops.size()) throw InputError("tensor factors over different algebras");
  std::size_t n = dx * dy;
  Matrix relations(field, 0, n);
  Matrix ix = Matrix::identity(field, dx), iy = Matrix::identity(field, dy);
  for (std::size_t g = 0; g < right_ops.size() && n > 0; ++g) {
    Matrix rel = Matrix::kron(right_ops[g], iy) - Matrix::kron(ix, left_ops[g]);
    relations = row_space_basis(Matrix::vstack(field, n, {relations, rel.transpose()}));
  }
  auto [red, pivots] = rref(relations);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols, pos(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      pos[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  TensorQuotient out;
  out.dim = free_cols.size();
  out.projection = Matrix(field, out.dim, n);
  out.section = Matrix(field, n, out.dim);
  for (std::size_t k = 0; k < out.dim; ++k) {
    out.projection.set(k, free_cols[k], field.one());
    out.section.set(free_cols[k], k, field.one());
  }
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (auto c : free_cols)
      if (!red.entry_is_zero(r, c)) out.projection.set(pos[c], pivots[r], field.neg(red.at(r, c)));
  return out;
}

TensorQuotient tensor_over_algebra(const Module& x, const Module& y) {
  if (x.side() != Side::Right || y.side() != Side::Left) throw InputError("tensor needs a right and a left module");
  if (!same_algebra(x.algebra(), y.algebra())) throw InputError("tensor factors over different algebras");
  std::vector<Matrix> r, l;
  for (auto g : x.algebra()->generators()) {
    r.push_back(x.action(g));
    l.push_back(y.action(g));
  }
  return tensor_quotient(x.field(), x.dim(), y.dim(), r, l);
}

namespace {

std::vector<GroupElem> quotient_degrees(const TensorQuotient& q, const std::vector<GroupElem>& dx,
                                        const std::vector<GroupElem>& dy, const FiniteAbelianGroup& g) {
  std::vector<GroupElem> out;
  if (dx.empty() || dy.empty()) return out;
  for (std::size_t k = 0; k < q.dim; ++k) {
    for (std::size_t c = 0; c < q.section.rows(); ++c) {
      if (!q.section.entry_is_zero(c, k)) {
        out.push_back(g.add(dx[c / dy.size()], dy[c % dy.size()]));
        break;
      }
    }
  }
  return out;
}

}  // namespace

BimoduleTensor tensor(const Bimodule& x, const Bimodule& y) {
  if (!same_algebra(x.right_algebra(), y.left_algebra())) throw InputError("tensor factors over different algebras");
  const auto& a = x.right_algebra();
  std::vector<Matrix> r, l;
  for (auto g : a->generators()) {
    r.push_back(x.right_action(g));
    l.push_back(y.left_action(g));
  }
  TensorQuotient q = tensor_quotient(x.field(), x.dim(), y.dim(), r, l);
  Matrix ix = Matrix::identity(x.field(), x.dim()), iy = Matrix::identity(x.field(), y.dim());
  std::vector<Matrix> left, right;
  for (const auto& op : x.left_actions()) left.push_back(q.projection * Matrix::kron(op, iy) * q.section);
  for (const auto& op : y.right_actions()) right.push_back(q.projection * Matrix::kron(ix, op) * q.section);
  std::vector<GroupElem> deg;
  if (x.left_algebra()->group() == y.right_algebra()->group() && x.left_algebra()->group() == a->group())
    deg = quotient_degrees(q, x.degrees(), y.degrees(), a->group());
  Bimodule result(x.left_algebra(), y.right_algebra(), q.dim, left, right, deg);
  return {std::move(result), std::move(q)};
}

Module tensor(const Module& x, const Bimodule& y) {
  if (x.side() != Side::Right) throw InputError("left factor must be a right module");
  return tensor(Bimodule::from_module(x), y).result.as_right();
}

Module tensor(const Bimodule& x, const Module& y) {
  if (y.side() != Side::Left) throw InputError("right factor must be a left module");
  return tensor(x, Bimodule::from_module(y)).result.as_left();
}

TensorPowers::TensorPowers(Bimodule m, std::size_t max_power) : m_(std::move(m)) {
  if (!same_algebra(m_.left_algebra(), m_.right_algebra())) throw InputError("tensor powers need an R-R bimodule");
  powers_.push_back(Bimodule::regular(m_.right_algebra()));
  quotients_.emplace_back();
  for (std::size_t i = 1; i <= max_power; ++i) {
    auto t = tensor(powers_.back(), m_);
    powers_.push_back(std::move(t.result));
    quotients_.push_back(std::move(t.quotient));
  }
  concat_.assign(max_power + 1, std::vector<std::optional<Matrix>>(max_power + 1));
}

const Matrix& TensorPowers::concat(std::size_t a, std::size_t b) {
  if (a + b > max_power()) throw InputError("concatenation beyond computed tensor powers");
  auto& slot = concat_[a][b];
  if (slot) return *slot;
  const Field& f = m_.field();
  std::size_t da = dim(a), db = dim(b), dab = dim(a + b);
  Matrix out(f, dab, da * db);
  if (b == 0) {
    for (std::size_t q = 0; q < db; ++q) {
      Matrix img = powers_[a].right_action(q);
      for (std::size_t p = 0; p < da; ++p) out.set_block(0, p * db + q, img.column(p));
    }
  } else if (dab > 0 && da > 0 && db > 0) {
    Matrix prev = concat(a, b - 1);
    std::size_t dprev = dim(b - 1);
    Matrix idm = Matrix::identity(f, m_.dim());
    for (std::size_t p = 0; p < da; ++p) {
      Matrix mp = prev.block(0, p * dprev, dim(a + b - 1), dprev);
      Matrix blk = quotients_[a + b].projection * Matrix::kron(mp, idm) * quotients_[b].section;
      out.set_block(0, p * db, blk);
    }
  }
  slot = std::move(out);
  return *slot;
}

}  // namespace injgen
