#include <algorithm>

#include "injgen/homology.hpp"

namespace injgen {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "Holds";
    case Outcome::Fails:
      return "Fails";
    case Outcome::Inconclusive:
      return "Inconclusive";
  }
  return "";
}

Verdict tuple_pd(const MoritaRing& ring, const TupleModule& t, std::size_t cutoff) {
  return projective_dimension(tuple_to_module(ring, t), cutoff);
}

TriangularPdReport triangular_pd_check(const MoritaContext& ctx, const TupleModule& t, std::size_t cutoff) {
  if (ctx.m.dim() != 0) throw InputError("triangular check needs M = 0");
  if (t.side != Side::Left) throw InputError("triangular check needs a left tuple");
  TriangularPdReport out;
  out.pd_n = projective_dimension(ctx.n.as_left(), cutoff);
  if (!out.pd_n.is_finite()) throw PreconditionError("pd of N is not finite within the cutoff");
  auto ring = morita_ring(ctx);
  out.pd_tuple = tuple_pd(ring, t, cutoff);
  out.pd_x = projective_dimension(t.x, cutoff);
  out.pd_y = projective_dimension(t.y, cutoff);
  if (!out.pd_tuple.is_finite() || !out.pd_x.is_finite() || !out.pd_y.is_finite()) {
    out.reason = "a projective dimension reached the cutoff";
    return out;
  }
  out.outcome = Outcome::Holds;
  if (t.y.dim() == 0) {
    out.exact_value_checked = true;
    if (out.pd_tuple != out.pd_x) {
      out.outcome = Outcome::Fails;
      out.reason = "pd of (X, 0, 0) differs from pd X";
    }
  }
  return out;
}

CornerPdReport morita_corner_pd(const MoritaContext& ctx, std::size_t pd_cutoff, std::size_t nil_cutoff) {
  if (!same_algebra(ctx.a, ctx.b)) throw PreconditionError("corner check needs A = B");
  if (!verify_zero_context(ctx)) throw PreconditionError("corner check needs zero bimodule maps");
  if (!(ctx.n.dim() == ctx.m.dim() && ctx.n.left_actions() == ctx.m.left_actions() &&
        ctx.n.right_actions() == ctx.m.right_actions()))
    throw PreconditionError("corner check needs the same bimodule in both corners");
  CornerPdReport out{left_perfect_check(ctx.m, pd_cutoff, nil_cutoff), {}, false};
  if (!out.perfectness.nilpotency.is_finite()) throw PreconditionError("M is not nilpotent within the cutoff");
  if (out.perfectness.verdict != Perfectness::LeftPerfect)
    throw PreconditionError("M is not left perfect: " + out.perfectness.reason);
  auto ring = morita_ring(ctx);
  Module a = regular_left(ctx.a);
  Module m_a = with_algebra(ctx.m.as_left(), ctx.a);
  Module m_b = with_algebra(ctx.m.as_left(), ctx.b);
  out.corners.emplace_back("(A,0,0,0)", tuple_pd(ring, functor_z_a(ctx, a), pd_cutoff));
  out.corners.emplace_back("(0,A,0,0)", tuple_pd(ring, functor_z_b(ctx, regular_left(ctx.b)), pd_cutoff));
  out.corners.emplace_back("(M,0,0,0)", tuple_pd(ring, functor_z_a(ctx, m_a), pd_cutoff));
  out.corners.emplace_back("(0,M,0,0)", tuple_pd(ring, functor_z_b(ctx, m_b), pd_cutoff));
  out.all_finite = std::all_of(out.corners.begin(), out.corners.end(), [](const auto& c) { return c.second.is_finite(); });
  return out;
}

CleftVanishingReport cleft_vanishing_check(const ThetaFunctors& theta, const std::vector<Module>& tests,
                                           const std::vector<std::string>& labels, std::size_t pd_cutoff,
                                           std::size_t nil_cutoff) {
  if (labels.size() != tests.size()) throw InputError("one label per test module");
  CleftVanishingReport out;
  out.perfectness = left_perfect_check(theta.bimodule(), pd_cutoff, nil_cutoff);
  if (!out.perfectness.nilpotency.is_finite()) throw PreconditionError("M is not nilpotent within the cutoff");
  if (out.perfectness.verdict != Perfectness::LeftPerfect)
    throw PreconditionError("M is not left perfect: " + out.perfectness.reason);
  out.s = out.perfectness.nilpotency.value;
  out.n = 1;
  for (std::size_t q = 1; q < out.s; ++q) {
    std::size_t pq = out.perfectness.power_pd[q - 1].value;
    if (pq >= 1) out.n = std::max(out.n, pq + q);
  }
  out.bound = std::max<std::size_t>(1, out.n + out.s - 1);
  out.stated_bound = std::max<std::size_t>(1, out.n + out.s >= 2 ? out.n + out.s - 2 : 0);
  SyzygyChain chain(theta.base_as_left_module());
  out.pd_r = resolve(chain, pd_cutoff).pd;
  out.complete = out.pd_r.is_finite();
  out.checked_up_to = out.bound + 3;
  if (out.complete) out.checked_up_to = std::max(out.checked_up_to, out.pd_r.value);
  out.holds = true;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const Module& x = tests[t];
    if (x.side() != Side::Right || !same_algebra(x.algebra(), theta.extension()))
      throw InputError("test modules must be right E-modules");
    CleftRow row{labels[t], {}, true, true};
    Module xu = ungraded(x);
    for (std::size_t n = out.stated_bound; n <= out.checked_up_to; ++n) {
      std::size_t d = tor_from_chain(chain, xu, n, Resolve::Second);
      row.tor.emplace_back(n, d);
      if (n >= out.bound) row.vanishes = row.vanishes && d == 0;
      row.vanishes_stated = row.vanishes_stated && d == 0;
    }
    out.holds = out.holds && row.vanishes;
    out.stated_bound_holds = out.stated_bound_holds && row.vanishes_stated;
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

// Columns of the identity completing the span of `h` to the whole space.
Matrix complement_basis(const Matrix& h, std::size_t dim) {
  const Field& f = h.field();
  SpanBuilder span(f, dim);
  for (std::size_t c = 0; c < h.cols(); ++c) span.add(h.column(c));
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix e = Matrix::unit_vector(f, dim, i);
    if (span.add(e)) cols.push_back(e);
  }
  return Matrix::hstack(f, dim, cols);
}

}  // namespace

TensorFormulaReport tensor_formula_check(const MoritaContext& ctx, const TupleModule& t, const TupleModule& u) {
  if (t.side != Side::Right || u.side != Side::Left) throw InputError("need a right tuple and a left tuple");
  if (!check_tuple(ctx, t).ok || !check_tuple(ctx, u).ok) throw InputError("tuple does not match the context");
  const Field& f = ctx.a->field();
  auto ring = morita_ring(ctx);
  Module z = tuple_to_module(ring, t), zp = tuple_to_module(ring, u);
  TensorQuotient qz = tensor_over_algebra(z, zp);
  TensorQuotient qx = tensor_over_algebra(t.x, u.x);
  TensorQuotient qy = tensor_over_algebra(t.y, u.y);
  std::size_t dx = t.x.dim(), dy = t.y.dim(), dxp = u.x.dim(), dyp = u.y.dim();
  std::size_t dzp = dxp + dyp, dn = ctx.n.dim(), dm = ctx.m.dim();
  TensorFormulaReport out;
  out.direct_dim = qz.dim;
  out.v_dim = qx.dim + qy.dim;

  Matrix emb_x(f, (dx + dy) * dzp, dx * dxp), emb_y(f, (dx + dy) * dzp, dy * dyp);
  for (std::size_t x = 0; x < dx; ++x)
    for (std::size_t xp = 0; xp < dxp; ++xp) emb_x.set(x * dzp + xp, x * dxp + xp, f.one());
  for (std::size_t y = 0; y < dy; ++y)
    for (std::size_t yp = 0; yp < dyp; ++yp) emb_y.set((dx + y) * dzp + dxp + yp, y * dyp + yp, f.one());
  Matrix phi = Matrix::hstack(f, qz.dim, {qz.projection * emb_x * qx.section, qz.projection * emb_y * qy.section});

  std::vector<Matrix> gens;
  for (std::size_t y = 0; y < dy; ++y)
    for (std::size_t m = 0; m < dm; ++m)
      for (std::size_t xp = 0; xp < dxp; ++xp) {
        Matrix raw_x(f, dx * dxp, 1), raw_y(f, dy * dyp, 1);
        for (std::size_t x = 0; x < dx; ++x) raw_x.set(x * dxp + xp, 0, t.g.at(x, y * dm + m));
        for (std::size_t yp = 0; yp < dyp; ++yp) raw_y.set(y * dyp + yp, 0, f.neg(u.f.at(yp, m * dxp + xp)));
        gens.push_back(Matrix::vstack(f, 1, {qx.projection * raw_x, qy.projection * raw_y}));
      }
  for (std::size_t x = 0; x < dx; ++x)
    for (std::size_t n = 0; n < dn; ++n)
      for (std::size_t yp = 0; yp < dyp; ++yp) {
        Matrix raw_x(f, dx * dxp, 1), raw_y(f, dy * dyp, 1);
        for (std::size_t xp = 0; xp < dxp; ++xp) raw_x.set(x * dxp + xp, 0, f.neg(u.g.at(xp, n * dyp + yp)));
        for (std::size_t y = 0; y < dy; ++y) raw_y.set(y * dyp + yp, 0, t.f.at(y, x * dn + n));
        gens.push_back(Matrix::vstack(f, 1, {qx.projection * raw_x, qy.projection * raw_y}));
      }
  Matrix h = Matrix::hstack(f, out.v_dim, gens);
  out.h_rank = rank(h);
  out.formula_dim = out.v_dim - out.h_rank;
  out.surjective = rank(phi) == out.direct_dim;
  out.kills_h = (phi * h).is_zero();
  Matrix iso = phi * complement_basis(h, out.v_dim);
  if (iso.rows() == iso.cols() && rank(iso) == iso.rows()) out.iso = iso;
  out.ok = out.surjective && out.kills_h && out.formula_dim == out.direct_dim && out.iso.has_value();
  return out;
}

TriangularTensorReport triangular_tensor_check(const MoritaContext& ctx, const TupleModule& t, const Module& z) {
  if (ctx.m.dim() != 0 || !same_algebra(ctx.a, ctx.b)) throw InputError("need a context [[A, N], [0, A]]");
  Module zb = with_algebra(z, ctx.b);
  TriangularTensorReport out;
  out.formula = tensor_formula_check(ctx, t, functor_t_b(ctx, zb));
  out.direct_dim = out.formula.direct_dim;
  out.expected_dim = tensor_over_algebra(t.y, zb).dim;
  out.ok = out.formula.ok && out.direct_dim == out.expected_dim;
  return out;
}

TriangularTorReport triangular_tor_check(const MoritaContext& ctx, const TupleModule& t, const Module& z,
                                         std::size_t i_max) {
  if (ctx.m.dim() != 0 || !same_algebra(ctx.a, ctx.b)) throw InputError("need a context [[A, N], [0, A]]");
  Module zb = with_algebra(z, ctx.b);
  TriangularTorReport out;
  auto base_n = tor(ctx.n.as_right(), zb, i_max);
  out.hypothesis = std::all_of(base_n.begin() + 1, base_n.end(), [](std::size_t d) { return d == 0; });
  auto ring = morita_ring(ctx);
  auto lam = tor(tuple_to_module(ring, t), tuple_to_module(ring, functor_t_b(ctx, zb)), i_max);
  auto base = tor(t.y, zb, i_max);
  out.lambda_side.assign(lam.begin() + 1, lam.end());
  out.base_side.assign(base.begin() + 1, base.end());
  out.ok = !out.hypothesis || out.lambda_side == out.base_side;
  return out;
}

Bimodule block_power_bimodule(const MoritaRing& ring, TensorPowers& powers, std::size_t k) {
  const auto& ctx = ring.context;
  if (k == 0) throw InputError("block power needs k >= 1");
  if (ctx.m.dim() != 0 || !same_algebra(ctx.a, ctx.b)) throw InputError("need a context [[A, N], [0, A]]");
  const Field& f = ctx.a->field();
  std::size_t d11 = powers.dim(k), d12 = powers.dim(k + 1), d21 = powers.dim(k - 1), d22 = powers.dim(k);
  std::size_t o11 = 0, o12 = d11, o21 = d11 + d12, o22 = o21 + d21, total = o22 + d22;
  std::size_t da = ctx.a->dim(), dn = ctx.n.dim();
  std::vector<Matrix> left(ring.ring->dim(), Matrix(f, total, total)), right = left;
  for (std::size_t i = 0; i < da; ++i) {
    left[i].set_block(o11, o11, powers.power(k).left_action(i));
    left[i].set_block(o12, o12, powers.power(k + 1).left_action(i));
    right[i].set_block(o11, o11, powers.power(k).right_action(i));
    right[i].set_block(o21, o21, powers.power(k - 1).right_action(i));
    std::size_t b = ring.offset_b() + i;
    left[b].set_block(o21, o21, powers.power(k - 1).left_action(i));
    left[b].set_block(o22, o22, powers.power(k).left_action(i));
    right[b].set_block(o12, o12, powers.power(k + 1).right_action(i));
    right[b].set_block(o22, o22, powers.power(k).right_action(i));
  }
  const Matrix& c_left_21 = powers.concat(1, k - 1);
  const Matrix& c_left_22 = powers.concat(1, k);
  const Matrix& c_right_11 = powers.concat(k, 1);
  const Matrix& c_right_21 = powers.concat(k - 1, 1);
  for (std::size_t j = 0; j < dn; ++j) {
    Matrix& l = left[ring.offset_n() + j];
    Matrix& r = right[ring.offset_n() + j];
    for (std::size_t c = 0; c < d21; ++c) l.set_block(o11, o21 + c, c_left_21.column(j * d21 + c));
    for (std::size_t c = 0; c < d22; ++c) l.set_block(o12, o22 + c, c_left_22.column(j * d22 + c));
    for (std::size_t c = 0; c < d11; ++c) r.set_block(o12, o11 + c, c_right_11.column(c * dn + j));
    for (std::size_t c = 0; c < d21; ++c) r.set_block(o22, o21 + c, c_right_21.column(c * dn + j));
  }
  return Bimodule(ring.ring, ring.ring, total, left, right);
}

BlockPowerReport block_power_check(const AlgebraPtr& a, const Bimodule& n, std::size_t i_max, std::size_t pd_cutoff,
                                   std::size_t nil_cutoff) {
  if (i_max == 0) throw InputError("i_max must be at least 1");
  BlockPowerReport out;
  out.nilpotency = nilpotency_index(n, nil_cutoff);
  if (!out.nilpotency.is_finite()) throw PreconditionError("N is not nilpotent within the cutoff");
  const Field& f = a->field();
  Bimodule zero(a, a, 0, std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)), std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)));
  auto ring = morita_ring(zero_context(a, a, n, zero));
  TensorPowers n_powers(n, 2 * i_max + 1);
  Bimodule block = block_power_bimodule(ring, n_powers, 2);
  TensorPowers m_powers(block, i_max);
  out.ok = true;
  for (std::size_t i = 1; i <= i_max; ++i) {
    Bimodule predicted = block_power_bimodule(ring, n_powers, 2 * i);
    BlockPowerRow row{i, m_powers.dim(i), predicted.dim(), false, false};
    if (row.direct_dim == row.predicted_dim) {
      auto search = find_isomorphism(m_powers.power(i), predicted, false);
      row.isomorphic = search.iso.has_value();
      row.conclusive = row.isomorphic || search.conclusive;
    }
    out.ok = out.ok && row.isomorphic;
    out.rows.push_back(row);
  }

  // Tor_i(N^s, N^j) for s, j below the nilpotency index, i up to the largest pd.
  std::size_t k = out.nilpotency.value;
  std::vector<SyzygyChain> chains;
  std::vector<Module> rights;
  std::size_t range = 0;
  bool finite = true;
  Bimodule cur = n;
  for (std::size_t j = 1; j < k; ++j) {
    if (j > 1) cur = tensor(cur, n).result;
    chains.emplace_back(cur.as_left());
    rights.push_back(ungraded(cur.as_right()));
    Verdict v = resolve(chains.back(), pd_cutoff).pd;
    finite = finite && v.is_finite();
    range = std::max(range, v.is_finite() ? v.value : pd_cutoff);
  }
  bool zero_table = true;
  for (std::size_t i = 1; i <= range && zero_table; ++i)
    for (std::size_t s = 1; s < k && zero_table; ++s)
      for (std::size_t j = 1; j < k && zero_table; ++j)
        zero_table = tor_from_chain(chains[j - 1], rights[s - 1], i, Resolve::Second) == 0;
  out.base_vanishing = finite && zero_table;
  auto block_report = left_perfect_check(block, pd_cutoff, nil_cutoff);
  out.block_vanishing = block_report.nilpotency.is_finite() && !block_report.witness &&
                        std::all_of(block_report.power_pd.begin(), block_report.power_pd.end(),
                                    [](const Verdict& v) { return v.is_finite(); });
  out.vanishing_consistent = !out.base_vanishing || out.block_vanishing;
  out.ok = out.ok && out.vanishing_consistent;
  return out;
}

}  // namespace injgen
