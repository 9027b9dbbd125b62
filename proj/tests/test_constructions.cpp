#include <gtest/gtest.h>

#include "injgen/homology.hpp"
#include "injgen/serialize.hpp"
#include "injgen/tensor.hpp"
#include "test_support.hpp"

using namespace injgen;
using namespace injgen::testing;

namespace {

const Field F3 = Field::prime(3);

std::size_t component_dim(const GradedAlgebra& r, const GroupElem& g) { return r.component(g).size(); }

bool products_vanish(const GradedAlgebra& a, std::size_t i0, std::size_t ni, std::size_t j0, std::size_t nj) {
  for (std::size_t i = i0; i < i0 + ni; ++i)
    for (std::size_t j = j0; j < j0 + nj; ++j)
      if (!a.product(i, j).empty()) return false;
  return true;
}

Bimodule k_over_k(const Field& f) { return Bimodule::regular(ground_algebra(f)); }

}  // namespace

TEST(Covering, TriviallyGradedGroundField) {
  auto k = trivially_graded(*ground_algebra(F3), FiniteAbelianGroup::cyclic(2));
  auto cov = covering_ring(k);
  EXPECT_EQ(cov.ring->dim(), 2u);
  EXPECT_TRUE(is_commutative(*cov.ring));
  EXPECT_TRUE(products_vanish(*cov.ring, 0, 1, 1, 1));
}

TEST(Covering, DualNumbersBlocks) {
  auto d = dual_numbers(F3);
  auto cov = covering_ring(d);
  ASSERT_EQ(cov.ring->dim(), 4u);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t h = 0; h < 2; ++h) {
      std::size_t i = g == h ? 0 : 1;  // R_{h-g} is k on the diagonal and kx off it
      EXPECT_NE(cov.index(g, h, i), static_cast<std::size_t>(-1));
    }
  EXPECT_TRUE(check_algebra_axioms(*cov.ring).ok());
}

TEST(Covering, DimensionLawAndAxioms) {
  Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    auto r = random_graded_algebra(F3, rng, 6, 6);
    auto cov = covering_ring(r);
    std::size_t blocks = 0;
    for (const auto& g : r->group().elements())
      for (const auto& h : r->group().elements()) blocks += component_dim(*r, r->group().sub(h, g));
    EXPECT_EQ(cov.ring->dim(), blocks);
    EXPECT_EQ(cov.ring->dim(), r->group().order() * r->dim());
    EXPECT_TRUE(check_algebra_axioms(*cov.ring).ok());
  }
}

TEST(Covering, RegularModuleAndRoundTrip) {
  Rng rng(37);
  auto d = dual_numbers(F3);
  auto cov = covering_ring(d);
  EXPECT_EQ(covering_module(cov, regular_right(d)).dim(), d->dim());
  for (int t = 0; t < 10; ++t) {
    auto r = random_graded_algebra(F3, rng, 5, 4);
    auto c = covering_ring(r);
    Module m = random_graded_module(r, rng, 6);
    Module x = covering_module(c, m);
    EXPECT_TRUE(check_module_axioms(x).ok());
    Module back = covering_module_inverse(c, x);
    EXPECT_EQ(degree_counts(back), degree_counts(m));
    auto iso = find_isomorphism(back, m, true);
    EXPECT_TRUE(iso.iso.has_value());
    EXPECT_TRUE(iso.conclusive);
  }
}

TEST(Covering, TwistPermutesBlocks) {
  auto d = dual_numbers(F3);
  auto cov = covering_ring(d);
  Module m = regular_right(d);
  Module x = covering_module(cov, m), y = covering_module(cov, twist(m, {1}));
  // Twisting by the generator moves X e_0 onto X e_1.
  for (std::size_t g = 0; g < 2; ++g)
    EXPECT_EQ(rank(x.act(cov.block_idempotent(g))), rank(y.act(cov.block_idempotent(1 - g))));
}

TEST(MoritaRing, ProductRingWhenBimodulesVanish) {
  auto a = linear_quiver_algebra(F3, 2), b = dual_numbers(F3);
  auto tb = trivially_graded(*b);
  auto ring = morita_ring(zero_context(a, tb, zero_bimodule(a, tb), zero_bimodule(tb, a)));
  EXPECT_EQ(ring.ring->dim(), a->dim() + tb->dim());
  EXPECT_TRUE(check_algebra_axioms(*ring.ring).ok());
  EXPECT_TRUE(products_vanish(*ring.ring, 0, a->dim(), ring.offset_b(), tb->dim()));
  EXPECT_TRUE(products_vanish(*ring.ring, ring.offset_b(), tb->dim(), 0, a->dim()));
  EXPECT_TRUE(verify_zero_context(ring.context));
}

TEST(MoritaRing, FourDimensionalZeroMaps) {
  auto k = ground_algebra(F3);
  auto ring = morita_ring(zero_context(k, k, k_over_k(F3), k_over_k(F3)));
  ASSERT_EQ(ring.ring->dim(), 4u);
  EXPECT_TRUE(check_algebra_axioms(*ring.ring).ok());
  EXPECT_TRUE(ring.ring->product(ring.offset_n(), ring.offset_m()).empty());
  EXPECT_TRUE(ring.ring->product(ring.offset_m(), ring.offset_n()).empty());
  EXPECT_FALSE(ring.ring->product(0, ring.offset_n()).empty());
}

TEST(MoritaRing, TriangularWhenMVanishes) {
  auto k = ground_algebra(F3);
  auto ring = morita_ring(zero_context(k, k, k_over_k(F3), zero_bimodule(k, k)));
  EXPECT_EQ(ring.ring->dim(), 3u);
  EXPECT_TRUE(check_algebra_axioms(*ring.ring).ok());
  EXPECT_FALSE(is_commutative(*ring.ring));
}

TEST(SplitCovering, FourCyclicSplitsReassemble) {
  auto r = truncated_polynomial(F3, 4, FiniteAbelianGroup::cyclic(4), GroupElem{1});
  auto cov = covering_ring(r);
  for (std::size_t k : {0, 1, 2}) {
    auto split = split_covering(cov, k);
    EXPECT_EQ(split.context.a->dim() + split.context.b->dim() + split.context.n.dim() + split.context.m.dim(),
              cov.ring->dim());
    EXPECT_TRUE(check_morita_context(split.context).ok);
    EXPECT_TRUE(same_structure(*morita_ring(split.context).ring, *permute_basis(*cov.ring, split.permutation())));
    // Every component of k[x]/(x^4) is one-dimensional, so A is the (k+1) x (k+1) upper block pattern.
    EXPECT_EQ(split.context.a->dim(), (k + 1) * (k + 1));
  }
  EXPECT_THROW(split_covering(cov, 3), std::exception);
}

TEST(SplitCovering, ZeroMapVerdicts) {
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    auto r = random_upper_half_zero_algebra(F3, rng, 3, 6);
    ASSERT_TRUE(upper_half_vanishes(*r));
    EXPECT_TRUE(verify_zero_context(split_covering(covering_ring(r), half_split_index(r->group())).context));
  }
  auto g = group_algebra(F3, FiniteAbelianGroup::cyclic(2));
  EXPECT_FALSE(verify_zero_context(split_covering(covering_ring(g), half_split_index(g->group())).context));

  auto triv = trivially_graded(*linear_quiver_algebra(F3, 2), FiniteAbelianGroup::cyclic(4));
  auto split = split_covering(covering_ring(triv), 1);
  EXPECT_EQ(split.context.n.dim(), 0u);
  EXPECT_EQ(split.context.m.dim(), 0u);
}

TEST(TensorRing, ZeroBimoduleGivesBase) {
  auto r = linear_quiver_algebra(F3, 2);
  auto t = tensor_ring(zero_bimodule(r, r), 1);
  EXPECT_EQ(t.ring->dim(), r->dim());
  EXPECT_TRUE(same_structure(*trivially_graded(*t.ring), *r));
}

TEST(TensorRing, RejectsNonNilpotentDeclaration) {
  EXPECT_THROW(tensor_ring(k_over_k(F3), 2), PreconditionError);
}

TEST(TensorRing, ArrowBimoduleGivesPathAlgebra) {
  auto k2 = vertex_algebra(F3, 2);
  Bimodule m = arrow_bimodule(F3, linear_quiver(2), k2);
  auto t = tensor_ring(m, 2);
  EXPECT_EQ(t.ring->dim(), 3u);
  EXPECT_TRUE(check_algebra_axioms(*t.ring).ok());
  EXPECT_FALSE(is_commutative(*t.ring));
  EXPECT_GE(std::size_t{1} << (t.exponent - 1), t.nilpotency);
  EXPECT_EQ(t.ring->degree(2), (GroupElem{1}));
  auto a2 = linear_quiver_algebra(F3, 2);
  EXPECT_TRUE(same_structure(*trivially_graded(*t.ring), *a2));
}

TEST(TensorRing, LowDegreesAreBaseAndBimodule) {
  auto k3 = vertex_algebra(F3, 3);
  Bimodule m = arrow_bimodule(F3, linear_quiver(3), k3);
  auto t = tensor_ring(m, 3);
  ASSERT_EQ(t.offsets.size(), 3u);
  EXPECT_EQ(t.ring->dim(), 3u + 2u + 1u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.ring->product(i, j), k3->product(i, j));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      SparseVector expect = to_sparse(m.left_action(i).column(c));
      for (auto& [idx, v] : expect) idx += 3;
      EXPECT_EQ(t.ring->product(i, 3 + c), expect);
    }
}

TEST(Theta, ZeroIsTrivialExtension) {
  Bimodule m = arrow_bimodule(F3, linear_quiver(3), vertex_algebra(F3, 3));
  Matrix zero(F3, m.dim(), m.dim() * m.dim());
  EXPECT_EQ(algebra_to_json(*theta_extension(m, zero)), algebra_to_json(*trivial_extension(m)));
}

TEST(Theta, TensorRingDataMatchesTensorRing) {
  Bimodule m = arrow_bimodule(F3, linear_quiver(3), vertex_algebra(F3, 3));
  auto data = tensor_ring_theta(m, 3);
  EXPECT_TRUE(check_theta(data.m, data.theta).ok);
  auto e = theta_extension(data.m, data.theta);
  auto t = tensor_ring(m, 3);
  EXPECT_EQ(e->dim(), t.ring->dim());
  EXPECT_TRUE(check_algebra_axioms(*e).ok());
  EXPECT_EQ(algebra_to_json(*e).at("mult"), algebra_to_json(*t.ring).at("mult"));
}

TEST(Theta, NonAssociativeRejected) {
  auto k = ground_algebra(F3);
  Bimodule m(k, k, 2, {Matrix::identity(F3, 2)}, {Matrix::identity(F3, 2)});
  // theta(e1 e1) = e2, theta(e2 e1) = e1
  Matrix theta = Matrix::from_ints(F3, 2, 4, {0, 0, 1, 0, 1, 0, 0, 0});
  EXPECT_FALSE(check_theta(m, theta).ok);
  EXPECT_THROW(theta_extension(m, theta), PreconditionError);
}

TEST(Theta, PositivelyGradedDecomposition) {
  auto lambda = truncated_polynomial(F3, 3, FiniteAbelianGroup::cyclic(4), GroupElem{1});
  ASSERT_TRUE(is_positively_graded(*lambda));
  auto p = positive_part(*lambda);
  auto e = theta_extension(p.data.m, p.data.theta);
  EXPECT_EQ(e->dim(), lambda->dim());
  EXPECT_TRUE(is_commutative(*e));
  EXPECT_EQ(graded_component(*lambda, 1).dim(), 1u);
  EXPECT_EQ(graded_component(*lambda, 3).dim(), 0u);
}

TEST(Twisted, TrivialBicharacterIsPlainTensor) {
  auto a = dual_numbers(F3), b = group_algebra(F3, FiniteAbelianGroup::cyclic(2));
  auto t = Bicharacter::trivial(F3, a->group(), b->group());
  EXPECT_EQ(algebra_to_json(*twisted_tensor(*a, *b, t)), algebra_to_json(*tensor_product(*a, *b)));
}

TEST(Twisted, SignTwistOfDualNumbers) {
  auto a = dual_numbers(F3);
  Bicharacter t{F3, a->group(), a->group(), {{F3.from_int(-1)}}};
  ASSERT_TRUE(check_bicharacter(t).ok);
  auto ab = twisted_tensor(*a, *a, t);
  ASSERT_EQ(ab->dim(), 4u);
  EXPECT_TRUE(check_algebra_axioms(*ab).ok());
  // Basis index i * 2 + j is e_i (x) e_j.
  std::size_t x1 = 2, one_x = 1, xx = 3;
  ASSERT_EQ(ab->product(x1, one_x).size(), 1u);
  ASSERT_EQ(ab->product(one_x, x1).size(), 1u);
  EXPECT_EQ(ab->product(x1, one_x)[0].first, xx);
  EXPECT_EQ(ab->product(one_x, x1)[0].first, xx);
  EXPECT_EQ(ab->product(one_x, x1)[0].second, F3.neg(ab->product(x1, one_x)[0].second));
  EXPECT_FALSE(is_commutative(*ab));
}

TEST(Twisted, InvalidBicharacterRejected) {
  auto a = dual_numbers(Field::prime(5));
  Bicharacter t{Field::prime(5), a->group(), a->group(), {{Field::prime(5).from_int(2)}}};
  EXPECT_FALSE(check_bicharacter(t).ok);
  EXPECT_THROW(twisted_tensor(*a, *a, t), std::exception);
}

TEST(Twisted, RegularModulesGiveRegularModule) {
  auto a = dual_numbers(F3);
  Bicharacter t{F3, a->group(), a->group(), {{F3.from_int(-1)}}};
  auto ab = twisted_tensor(*a, *a, t);
  Module m = twisted_module(regular_right(a), regular_right(a), ab, t);
  EXPECT_TRUE(check_module_axioms(m).ok());
  auto iso = find_isomorphism(m, regular_right(ab), true);
  EXPECT_TRUE(iso.iso.has_value());
}

TEST(Beilinson, DualNumbers) {
  auto lambda = truncated_polynomial(F3, 2, FiniteAbelianGroup::cyclic(2), GroupElem{1});
  auto data = beilinson(*lambda, 1);
  EXPECT_EQ(data.b->dim(), 1u);
  EXPECT_EQ(data.x.dim(), 1u);
  EXPECT_EQ(data.extension->dim(), 2u);
  EXPECT_TRUE(is_commutative(*data.extension));
  EXPECT_FALSE(strongly_graded_check(*lambda).strongly_graded);
}

TEST(Beilinson, GroundFieldHasZeroBimodule) {
  auto data = beilinson(*trivially_graded(*ground_algebra(F3), FiniteAbelianGroup::cyclic(2)), 1);
  EXPECT_EQ(data.b->dim(), 1u);
  EXPECT_EQ(data.x.dim(), 0u);
}

TEST(Beilinson, BlockDimensions) {
  // Components of dimension 1, 1, 1 in degrees 0, 1, 2.
  auto lambda = truncated_polynomial(F3, 3, FiniteAbelianGroup::cyclic(4), GroupElem{1});
  auto data = beilinson(*lambda, 3);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j <= i; ++j) expected += component_dim(*lambda, GroupElem{static_cast<std::int64_t>(i - j)});
  EXPECT_EQ(data.b->dim(), expected);
  EXPECT_TRUE(check_algebra_axioms(*data.b).ok());
  EXPECT_TRUE(check_bimodule_axioms(data.x).ok());
  EXPECT_THROW(beilinson(*lambda, 1), std::exception);
}

TEST(TupleFunctors, ForgetAfterInduce) {
  Rng rng(43);
  for (int t = 0; t < 8; ++t) {
    auto inst = random_morita_instance(F3, rng);
    const auto& ctx = inst.context;
    Module x = random_module(ctx.a, Side::Left, rng, 4);
    auto ta = functor_t_a(ctx, x);
    EXPECT_EQ(functor_u_a(ta), x);
    EXPECT_TRUE(check_tuple(ctx, ta).ok);
    auto ring = morita_ring(ctx);
    Module z = tuple_to_module(ring, ta);
    EXPECT_TRUE(check_module_axioms(z).ok());
    auto back = module_to_tuple(ring, z);
    EXPECT_TRUE(find_isomorphism(tuple_to_module(ring, back), z).iso.has_value());
  }
}

TEST(TupleFunctors, RegularDecomposition) {
  Bimodule n = arrow_bimodule(F3, linear_quiver(2), vertex_algebra(F3, 2));
  auto a = n.left_algebra();
  for (const auto& ctx : {zero_context(a, a, n, zero_bimodule(a, a)), zero_context(a, a, n, n)}) {
    auto ring = morita_ring(ctx);
    Module sum = direct_sum(tuple_to_module(ring, functor_t_a(ctx, corner_a(ctx, Side::Left))),
                            tuple_to_module(ring, functor_t_b(ctx, corner_b(ctx, Side::Left))));
    auto iso = find_isomorphism(sum, regular_left(ring.ring));
    EXPECT_TRUE(iso.iso.has_value());
    EXPECT_TRUE(iso.conclusive);

    std::size_t t_a = tuple_to_module(ring, functor_t_a(ctx, corner_a(ctx, Side::Left))).dim();
    std::size_t z_a = tuple_to_module(ring, functor_z_a(ctx, corner_a(ctx, Side::Left))).dim();
    std::size_t z_b = tuple_to_module(ring, functor_z_b(ctx, ctx.m.as_left())).dim();
    EXPECT_EQ(t_a, z_a + z_b);
  }
}

TEST(TupleFunctors, ZeroFunctorsNeedZeroMaps) {
  auto g = group_algebra(F3, FiniteAbelianGroup::cyclic(2));
  auto ctx = split_covering(covering_ring(g), 0).context;
  ASSERT_FALSE(verify_zero_context(ctx));
  EXPECT_THROW(functor_z_a(ctx, corner_a(ctx, Side::Left)), PreconditionError);
}

TEST(ThetaFunctors, SplitSequenceAndAdjunction) {
  Bimodule m = arrow_bimodule(F3, linear_quiver(3), vertex_algebra(F3, 3));
  auto data = tensor_ring_theta(m, 3);
  ThetaFunctors theta(data.m, data.theta);
  Rng rng(47);
  for (int t = 0; t < 6; ++t) {
    Module x = random_module(theta.base(), Side::Right, rng, 4);
    Module lx = theta.t(x);
    EXPECT_TRUE(find_isomorphism(theta.u(lx), direct_sum(x, theta.f(x))).iso.has_value());
    EXPECT_EQ(theta.c(lx).dim(), x.dim());
    Module y = random_module(theta.extension(), Side::Right, rng, 4);
    EXPECT_EQ(hom_space(lx, y).size(), hom_space(x, theta.u(y)).size());
    EXPECT_EQ(theta.u(theta.z(x)), x);
  }
}
