#include "injgen/random.hpp"

#include "injgen/builders.hpp"
#include "injgen/homology.hpp"

namespace injgen {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw InputError("empty range");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

Scalar Rng::scalar(const Field& f) {
  if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(below(static_cast<std::size_t>(f.characteristic()))));
  return f.from_int(static_cast<std::int64_t>(below(7)) - 3);
}

FiniteAbelianGroup random_group(Rng& rng, std::size_t max_order) {
  std::vector<FiniteAbelianGroup> options;
  for (std::int64_t n = 1; n <= 8; ++n) options.push_back(FiniteAbelianGroup::cyclic(n));
  options.emplace_back(std::vector<std::int64_t>{2, 2});
  options.emplace_back(std::vector<std::int64_t>{2, 4});
  options.emplace_back(std::vector<std::int64_t>{2, 2, 2});
  std::vector<FiniteAbelianGroup> fit;
  for (auto& g : options)
    if (g.order() <= max_order) fit.push_back(g);
  return fit.at(rng.below(fit.size()));
}

namespace {

GroupElem random_element(const FiniteAbelianGroup& g, Rng& rng) {
  return g.element(rng.below(g.order()));
}

AlgebraPtr random_path_algebra(const Field& f, Rng& rng, const FiniteAbelianGroup& g,
                               const std::vector<GroupElem>& degree_pool) {
  PathAlgebraSpec spec;
  spec.group = g;
  spec.quiver.vertices = 1 + rng.below(3);
  std::size_t arrows = rng.below(4);
  for (std::size_t a = 0; a < arrows; ++a) {
    Arrow arrow;
    arrow.source = rng.below(spec.quiver.vertices);
    arrow.target = rng.below(spec.quiver.vertices);
    arrow.label = std::string(1, static_cast<char>('a' + a));
    arrow.degree = degree_pool.at(rng.below(degree_pool.size()));
    spec.quiver.arrows.push_back(arrow);
  }
  spec.max_length = 2 + rng.below(2);
  for (std::size_t a = 0; a < arrows; ++a)
    for (std::size_t b = 0; b < arrows; ++b)
      if (spec.quiver.arrows[a].target == spec.quiver.arrows[b].source && rng.below(4) == 0)
        spec.zero_relations.push_back({a, b});
  return path_algebra(f, spec);
}

AlgebraPtr random_algebra_over(const Field& f, Rng& rng, const FiniteAbelianGroup& g, std::size_t max_dim) {
  std::vector<GroupElem> pool = g.elements();
  for (;;) {
    std::size_t kind = rng.below(20);
    AlgebraPtr a;
    if (kind < 12) {
      a = random_path_algebra(f, rng, g, pool);
    } else if (kind < 17 || g.order() > max_dim) {
      a = truncated_polynomial(f, 1 + rng.below(max_dim), g, random_element(g, rng));
    } else {
      a = group_algebra(f, g);
    }
    if (a->dim() <= max_dim) return a;
  }
}

Module left_dual_regular(const AlgebraPtr& a) {
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < a->dim(); ++j) ops.push_back(a->right_mult(j).transpose());
  return Module(a, Side::Left, a->dim(), ops);
}

Matrix random_vector(const Field& f, std::size_t n, Rng& rng) {
  Matrix v(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) v.set(i, 0, rng.scalar(f));
  return v;
}

// Two-sided ideal generated by a random element, as an A-A bimodule.
Bimodule random_ideal(const AlgebraPtr& a, Rng& rng) {
  const Field& f = a->field();
  Bimodule reg = Bimodule::regular(a);
  SpanBuilder span(f, a->dim());
  std::vector<Matrix> queue{random_vector(f, a->dim(), rng)};
  while (!queue.empty()) {
    Matrix v = std::move(queue.back());
    queue.pop_back();
    if (!span.add(v)) continue;
    for (auto g : a->generators()) {
      queue.push_back(a->left_mult(g) * v);
      queue.push_back(a->right_mult(g) * v);
    }
  }
  if (span.dim() == 0) return Bimodule(a, a, 0, std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)),
                                       std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)));
  SubspaceCoordinates coords(span.basis());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(coords.coordinates(a->left_mult(i) * coords.basis()));
    right.push_back(coords.coordinates(a->right_mult(i) * coords.basis()));
  }
  return Bimodule(a, a, span.dim(), left, right);
}

Bimodule zero_bimodule(const AlgebraPtr& a) {
  const Field& f = a->field();
  return Bimodule(a, a, 0, std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)),
                  std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)));
}

}  // namespace

AlgebraPtr random_graded_algebra(const Field& f, Rng& rng, std::size_t max_dim, std::size_t max_group) {
  return random_algebra_over(f, rng, random_group(rng, max_group), max_dim);
}

AlgebraPtr random_upper_half_zero_algebra(const Field& f, Rng& rng, std::size_t max_exponent, std::size_t max_dim) {
  if (max_exponent == 0) throw InputError("exponent must be positive");
  std::int64_t order = std::int64_t{1} << (1 + rng.below(max_exponent));
  auto g = FiniteAbelianGroup::cyclic(order);
  std::vector<GroupElem> low;
  for (std::int64_t d = 0; d < order / 2; ++d) low.push_back({d});
  for (;;) {
    AlgebraPtr a;
    if (rng.below(3) == 0) {
      a = truncated_polynomial(f, 1 + rng.below(max_dim), g, low.at(rng.below(low.size())));
    } else {
      a = random_path_algebra(f, rng, g, low);
    }
    if (a->dim() <= max_dim && upper_half_vanishes(*a)) return a;
  }
}

Matrix random_homogeneous_vector(const Module& m, const GroupElem& degree, Rng& rng) {
  Matrix v(m.field(), m.dim(), 1);
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.degrees().at(i) == degree) v.set(i, 0, rng.scalar(m.field()));
  return v;
}

Module random_graded_module(const AlgebraPtr& a, Rng& rng, std::size_t max_dim) {
  const auto& g = a->group();
  for (;;) {
    std::vector<Module> parts;
    std::size_t r = 1 + rng.below(2);
    for (std::size_t i = 0; i < r; ++i) parts.push_back(twist(regular_right(a), random_element(g, rng)));
    Module free = direct_sum(parts);
    std::vector<Matrix> vecs;
    std::size_t c = rng.below(3);
    for (std::size_t i = 0; i < c; ++i)
      vecs.push_back(random_homogeneous_vector(free, free.degrees()[rng.below(free.dim())], rng));
    Matrix sub = generated_submodule(free, Matrix::hstack(a->field(), free.dim(), vecs));
    Module out = sub.cols() == 0 || rng.coin() ? quotient(free, sub).module : submodule(free, sub).module;
    if (out.dim() >= 1 && out.dim() <= max_dim) return out;
  }
}

Module random_module(const AlgebraPtr& a, Side side, Rng& rng, std::size_t max_dim) {
  const Field& f = a->field();
  Module reg = ungraded(side == Side::Right ? regular_right(a) : regular_left(a));
  Module dual = side == Side::Right ? ungraded(dual_regular(a)) : left_dual_regular(a);
  for (;;) {
    bool cyclic = rng.coin();
    Module base = cyclic ? reg : direct_sum(reg, dual);
    std::vector<Matrix> vecs;
    std::size_t c = 1 + rng.below(2);
    for (std::size_t i = 0; i < c; ++i) vecs.push_back(random_vector(f, base.dim(), rng));
    Matrix sub = generated_submodule(base, Matrix::hstack(f, base.dim(), vecs));
    Module out = cyclic ? quotient(base, sub).module : submodule(base, sub).module;
    if (out.dim() >= 1 && out.dim() <= max_dim) return out;
  }
}

MoritaInstance random_morita_instance(const Field& f, Rng& rng) {
  std::string description;
  auto make_context = [&]() -> MoritaContext {
    if (rng.coin()) {
      auto g = FiniteAbelianGroup::cyclic(rng.coin() ? 2 : 4);
      auto r = random_algebra_over(f, rng, g, 4);
      auto cov = covering_ring(r);
      std::size_t k = rng.below(static_cast<std::size_t>(g.order()) - 1);
      description = "split covering of a dimension " + std::to_string(r->dim()) + " algebra over Z/" +
                    std::to_string(g.order()) + " at " + std::to_string(k);
      return split_covering(cov, k).context;
    }
    auto a = random_algebra_over(f, rng, FiniteAbelianGroup(), 4);
    auto n = random_ideal(a, rng);
    auto m = rng.coin() ? random_ideal(a, rng) : zero_bimodule(a);
    description = "zero context over a dimension " + std::to_string(a->dim()) + " algebra";
    return zero_context(a, a, n, m);
  };
  MoritaContext ctx = make_context();
  auto ring = morita_ring(ctx);
  TupleModule right = module_to_tuple(ring, random_module(ring.ring, Side::Right, rng, 10));
  TupleModule left = module_to_tuple(ring, random_module(ring.ring, Side::Left, rng, 10));
  return {ctx, right, left, description};
}

TriangularInstance random_triangular_instance(const Field& f, Rng& rng) {
  auto a = random_algebra_over(f, rng, FiniteAbelianGroup(), 4);
  Bimodule n = rng.coin() ? Bimodule::regular(a) : random_ideal(a, rng);
  MoritaContext ctx = zero_context(a, a, n, zero_bimodule(a));
  auto ring = morita_ring(ctx);
  TupleModule right = module_to_tuple(ring, random_module(ring.ring, Side::Right, rng, 10));
  Module z = random_module(a, Side::Left, rng, 8);
  return {ctx, right, z, "triangular over a dimension " + std::to_string(a->dim()) + " algebra"};
}

}  // namespace injgen
