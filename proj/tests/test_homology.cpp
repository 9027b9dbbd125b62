#include <gtest/gtest.h>

#include "injgen/homology.hpp"
#include "injgen/tensor.hpp"
#include "test_support.hpp"

using namespace injgen;
using namespace injgen::testing;

namespace {

const Field F3 = Field::prime(3);

// dim X (x)_A Y from the relation matrix [x a (x) y - x (x) a y] over the algebra basis.
std::size_t tensor_dim_oracle(const Module& x, const Module& y) {
  const Field& f = x.field();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < x.algebra()->dim(); ++j)
    blocks.push_back(Matrix::kron(x.action(j), Matrix::identity(f, y.dim())) -
                     Matrix::kron(Matrix::identity(f, x.dim()), y.action(j)));
  std::size_t n = x.dim() * y.dim();
  if (n == 0) return 0;
  return n - rank(Matrix::hstack(f, n, blocks));
}

// Tor_1 by dimension shifting along 0 -> K -> F -> X -> 0.
std::size_t tor1_oracle(const Module& x, const Module& y) {
  SyzygyChain chain(x);
  const Module& k = chain.syzygy(1);
  const Module& free = chain.cover(0).free;
  return tensor_dim_oracle(k, y) + tensor_dim_oracle(x, y) - tensor_dim_oracle(free, y);
}

AlgebraPtr ungraded_dual_numbers() { return trivially_graded(*dual_numbers(F3)); }

Bimodule k_over_dual_numbers() {
  auto d = ungraded_dual_numbers();
  std::vector<Matrix> act{Matrix::from_ints(F3, 1, 1, {1}), Matrix::from_ints(F3, 1, 1, {0})};
  return Bimodule(d, d, 1, act, act);
}

Bimodule a_arrows(std::size_t n) { return arrow_bimodule(F3, linear_quiver(n), vertex_algebra(F3, n)); }

}  // namespace

TEST(FreeCover, Examples) {
  auto d = ungraded_dual_numbers();
  EXPECT_EQ(free_cover(regular_right(d)).rank(), 1u);
  EXPECT_EQ(free_cover(zero_module(d, Side::Right)).rank(), 0u);
  SyzygyChain chain(character(d, Side::Right, {1, 0}));
  EXPECT_EQ(chain.cover(0).rank(), 1u);
  EXPECT_EQ(chain.syzygy(1).dim(), 1u);
}

TEST(FreeCover, ProjectionIsSurjectiveHom) {
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    auto a = random_graded_algebra(F3, rng, 5, 1);
    Module m = random_module(a, Side::Right, rng, 6);
    auto c = free_cover(m);
    EXPECT_EQ(rank(c.projection), m.dim());
    EXPECT_TRUE(is_module_hom(c.free, m, c.projection));
  }
}

TEST(Projective, Examples) {
  auto d = ungraded_dual_numbers();
  auto free = is_projective(direct_sum(regular_right(d), regular_right(d)));
  ASSERT_TRUE(free.projective);
  ASSERT_TRUE(free.splitting.has_value());
  EXPECT_TRUE((free.cover.projection * *free.splitting).is_identity());
  EXPECT_FALSE(is_projective(character(d, Side::Right, {1, 0})).projective);

  auto a2 = linear_quiver_algebra(F3, 2);
  bool p0 = is_projective(vertex_simple(a2, Side::Right, 0)).projective;
  bool p1 = is_projective(vertex_simple(a2, Side::Right, 1)).projective;
  EXPECT_NE(p0, p1);
}

TEST(Pd, Examples) {
  auto d = ungraded_dual_numbers();
  EXPECT_EQ(projective_dimension(character(d, Side::Right, {1, 0})), Verdict::at_least(24));
  EXPECT_EQ(projective_dimension(character(d, Side::Right, {1, 0}), 5), Verdict::at_least(5));
  auto k = ground_algebra(F3);
  EXPECT_EQ(projective_dimension(regular_right(k)), Verdict::finite(0));

  auto a2 = linear_quiver_algebra(F3, 2);
  Verdict v0 = projective_dimension(vertex_simple(a2, Side::Right, 0));
  Verdict v1 = projective_dimension(vertex_simple(a2, Side::Right, 1));
  EXPECT_EQ(std::max(v0.value, v1.value), 1u);
  EXPECT_EQ(std::min(v0.value, v1.value), 0u);
}

TEST(Pd, ResolutionsAreComplexesWithWitness) {
  Rng rng(59);
  for (int t = 0; t < 10; ++t) {
    auto a = random_graded_algebra(F3, rng, 5, 1);
    Module m = random_module(a, Side::Right, rng, 6);
    auto r = resolve(m, 6);
    EXPECT_TRUE(check_resolution(r).ok);
    for (std::size_t i = 1; i < r.steps.size(); ++i)
      EXPECT_TRUE((r.steps[i - 1].boundary * r.steps[i].boundary).is_zero());
    if (r.pd.is_finite()) {
      EXPECT_TRUE(r.splitting.has_value());
      EXPECT_TRUE(r.steps.at(r.pd.value).projective);
    }
  }
}

TEST(Pd, DirectSumIsMaximum) {
  auto a3 = linear_quiver_algebra(F3, 3);
  Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    Module m = random_module(a3, Side::Right, rng, 4), n = random_module(a3, Side::Right, rng, 4);
    Verdict pm = projective_dimension(m), pn = projective_dimension(n);
    ASSERT_TRUE(pm.is_finite() && pn.is_finite());
    EXPECT_EQ(projective_dimension(direct_sum(m, n)), Verdict::finite(std::max(pm.value, pn.value)));
    if (is_projective(m).projective) {
      EXPECT_EQ(pm, Verdict::finite(0));
    }
  }
}

TEST(Tor, DualNumbersPeriodic) {
  auto d = ungraded_dual_numbers();
  auto t = tor(character(d, Side::Right, {1, 0}), character(d, Side::Left, {1, 0}), 4);
  EXPECT_EQ(t, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(Tor, FreeSecondArgumentAndAdditivity) {
  Rng rng(67);
  for (int t = 0; t < 8; ++t) {
    auto a = random_graded_algebra(F3, rng, 5, 1);
    Module x = random_module(a, Side::Right, rng, 5);
    Module y = random_module(a, Side::Left, rng, 5);
    auto free = tor(x, regular_left(a), 3);
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(free[i], 0u);
    EXPECT_EQ(free[0], x.dim());
    auto plain = tor(x, y, 3), summed = tor(x, direct_sum(regular_left(a), y), 3);
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(plain[i], summed[i]);
  }
}

TEST(Tor, SymmetricAndMatchesOracle) {
  Rng rng(71);
  for (int t = 0; t < 12; ++t) {
    auto a = random_graded_algebra(F3, rng, 5, 1);
    Module x = random_module(a, Side::Right, rng, 5);
    Module y = random_module(a, Side::Left, rng, 5);
    auto first = tor(x, y, 3, Resolve::First);
    EXPECT_EQ(first, tor(x, y, 3, Resolve::Second));
    EXPECT_EQ(first[0], tensor_dim_oracle(x, y));
    EXPECT_EQ(first[1], tor1_oracle(x, y));
    EXPECT_EQ(tensor_over_algebra(x, y).dim, first[0]);
  }
}

TEST(Nilpotency, Examples) {
  auto k2 = vertex_algebra(F3, 2);
  EXPECT_EQ(nilpotency_index(zero_bimodule(k2, k2)), Verdict::finite(1));
  EXPECT_EQ(nilpotency_index(a_arrows(2)), Verdict::finite(2));
  EXPECT_EQ(nilpotency_index(a_arrows(4)), Verdict::finite(4));
  EXPECT_EQ(nilpotency_index(Bimodule::regular(k2), 5), Verdict::at_least(5));
}

TEST(Nilpotency, PowersMatchTensorPowers) {
  Bimodule m = a_arrows(4);
  TensorPowers powers(m, 4);
  EXPECT_EQ(powers.dim(1), 3u);
  EXPECT_EQ(powers.dim(2), 2u);
  EXPECT_EQ(powers.dim(3), 1u);
  EXPECT_EQ(powers.dim(4), 0u);
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = 1; a + b <= 4; ++b) EXPECT_EQ(rank(powers.concat(a, b)), powers.dim(a + b));
}

TEST(Perfectness, Examples) {
  auto k2 = vertex_algebra(F3, 2);
  EXPECT_EQ(left_perfect_check(zero_bimodule(k2, k2)).verdict, Perfectness::LeftPerfect);
  auto a2 = left_perfect_check(a_arrows(2));
  EXPECT_EQ(a2.verdict, Perfectness::LeftPerfect);
  EXPECT_TRUE(a2.mirror_consistent);
  auto k = left_perfect_check(k_over_dual_numbers(), 8, 6);
  EXPECT_EQ(k.verdict, Perfectness::Inconclusive);
  EXPECT_FALSE(k.pd.is_finite());
}

TEST(Perfectness, CutoffsNeverRefute) {
  auto a2 = linear_quiver_algebra(F3, 2), a3 = linear_quiver_algebra(F3, 3);
  std::vector<Bimodule> cases{a_arrows(2),           a_arrows(3),          ideal_bimodule(a2, {2}),
                              ideal_bimodule(a3, {3, 4, 5}), ideal_bimodule(a3, {5}), k_over_dual_numbers(),
                              Bimodule::regular(a2)};
  for (const auto& m : cases)
    for (std::size_t cutoff : {1, 2, 6}) {
      auto r = left_perfect_check(m, cutoff, cutoff);
      if (r.verdict == Perfectness::NotLeftPerfect) {
        EXPECT_TRUE(r.pd.is_finite());
        EXPECT_TRUE(r.nilpotency.is_finite());
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_GT(r.witness->dim, 0u);
      }
      if (!r.pd.is_finite() || !r.nilpotency.is_finite()) {
        EXPECT_EQ(r.verdict, Perfectness::Inconclusive);
      }
      if (r.verdict == Perfectness::LeftPerfect) {
        for (const auto& [key, dim] : r.tor_table) EXPECT_EQ(dim, 0u);
        for (const auto& [key, dim] : r.mirror_table) EXPECT_EQ(dim, 0u);
      }
    }
}

TEST(Perfectness, TensorPowerPdBound) {
  auto k2 = vertex_algebra(F3, 2);
  auto zero = pd_bound_check_tensor_powers(zero_bimodule(k2, k2));
  EXPECT_TRUE(zero.holds);
  auto a2 = pd_bound_check_tensor_powers(a_arrows(2));
  EXPECT_TRUE(a2.applicable);
  EXPECT_TRUE(a2.holds);
  EXPECT_EQ(a2.base_pd, 0u);
  auto a3 = pd_bound_check_tensor_powers(a_arrows(3));
  EXPECT_TRUE(a3.holds);
  ASSERT_GE(a3.power_pd.size(), 2u);
  EXPECT_LE(a3.power_pd[1].value, 2 * a3.base_pd);
  EXPECT_FALSE(pd_bound_check_tensor_powers(k_over_dual_numbers(), 6, 6).applicable);
}

TEST(TriangularPd, ZeroSecondComponent) {
  auto a2 = linear_quiver_algebra(F3, 2);
  auto ctx = zero_context(a2, a2, Bimodule::regular(a2), zero_bimodule(a2, a2));
  for (std::size_t v : {0, 1}) {
    Module x = vertex_simple(a2, Side::Left, v);
    TupleModule t{Side::Left, x, zero_module(a2, Side::Left), Matrix(F3, 0, 0), Matrix(F3, x.dim(), 0)};
    auto rep = triangular_pd_check(ctx, t);
    EXPECT_TRUE(rep.exact_value_checked);
    EXPECT_EQ(rep.pd_tuple, rep.pd_x);
    EXPECT_EQ(rep.pd_tuple, projective_dimension(x));
    EXPECT_EQ(rep.outcome, Outcome::Holds);
  }
}

TEST(TriangularPd, InfiniteComponentIsInconclusive) {
  auto d = ungraded_dual_numbers();
  auto ctx = zero_context(d, d, Bimodule::regular(d), zero_bimodule(d, d));
  Module y = character(d, Side::Left, {1, 0});
  auto t = functor_t_b(ctx, y);
  auto rep = triangular_pd_check(ctx, t, 6);
  EXPECT_EQ(rep.outcome, Outcome::Inconclusive);
  EXPECT_THROW(triangular_pd_check(zero_context(d, d, k_over_dual_numbers(), zero_bimodule(d, d)), t, 6),
               PreconditionError);
}

TEST(CornerPd, ArrowIdealAllFinite) {
  auto a2 = linear_quiver_algebra(F3, 2);
  Bimodule m = ideal_bimodule(a2, {2});
  auto rep = morita_corner_pd(zero_context(a2, a2, m, m));
  ASSERT_EQ(rep.corners.size(), 4u);
  EXPECT_TRUE(rep.all_finite);
  for (const auto& [label, v] : rep.corners) {
    EXPECT_TRUE(v.is_finite()) << label;
    EXPECT_LE(v.value, 6u) << label;
  }
}

TEST(CornerPd, ZeroBimoduleCornerIsProjective) {
  auto a2 = linear_quiver_algebra(F3, 2);
  auto rep = morita_corner_pd(zero_context(a2, a2, zero_bimodule(a2, a2), zero_bimodule(a2, a2)));
  EXPECT_EQ(rep.corners.at(0).second, Verdict::finite(0));
  EXPECT_EQ(rep.corners.at(1).second, Verdict::finite(0));
}

TEST(CornerPd, RejectsNonZeroMaps) {
  auto g = group_algebra(F3, FiniteAbelianGroup::cyclic(2));
  auto ctx = split_covering(covering_ring(g), 0).context;
  EXPECT_THROW(morita_corner_pd(ctx), PreconditionError);
}

TEST(Cleft, TrivialCase) {
  auto k2 = vertex_algebra(F3, 2);
  Bimodule zero = zero_bimodule(k2, k2);
  ThetaFunctors theta(zero, Matrix(F3, 0, 0));
  auto tests = one_dimensional_modules(theta.extension());
  ASSERT_EQ(tests.size(), 2u);
  auto rep = cleft_vanishing_check(theta, tests, {"s1", "s2"});
  EXPECT_TRUE(rep.holds);
  for (const auto& row : rep.rows)
    for (const auto& [n, d] : row.tor) {
      if (n >= 1) {
        EXPECT_EQ(d, 0u);
      }
    }
}

TEST(Cleft, TrivialExtensionOfArrows) {
  Bimodule m = a_arrows(2);
  ThetaFunctors theta(m, Matrix(F3, m.dim(), m.dim() * m.dim()));
  auto tests = one_dimensional_modules(theta.extension());
  tests.push_back(regular_right(theta.extension()));
  std::vector<std::string> labels(tests.size(), "x");
  auto rep = cleft_vanishing_check(theta, tests, labels);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.n, 1u);
  EXPECT_EQ(rep.s, 2u);
  EXPECT_EQ(rep.bound, 2u);
  // n + s - 2 = 1 is too low: the simple at the source has Tor_1^E(S, R) = k.
  EXPECT_EQ(rep.stated_bound, 1u);
  EXPECT_FALSE(rep.stated_bound_holds);
  ASSERT_FALSE(rep.rows.front().tor.empty());
  EXPECT_EQ(rep.rows.front().tor.front(), (std::pair<std::size_t, std::size_t>{1, 1}));
  for (const auto& [n, d] : rep.rows.back().tor) {
    if (n >= 1) {
      EXPECT_EQ(d, 0u);
    }
  }
}

TEST(Cleft, RejectsNonNilpotent) {
  auto k2 = vertex_algebra(F3, 2);
  Bimodule r = Bimodule::regular(k2);
  Matrix theta(F3, 2, 4);
  ThetaFunctors t(r, theta);
  EXPECT_THROW(cleft_vanishing_check(t, {}, {}, 4, 4), PreconditionError);
}

TEST(TensorFormula, UnitLaw) {
  Rng rng(79);
  for (int t = 0; t < 6; ++t) {
    auto inst = random_morita_instance(F3, rng);
    auto ta = functor_t_a(inst.context, corner_a(inst.context, Side::Right));
    auto rep = tensor_formula_check(inst.context, ta, inst.left);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.direct_dim, inst.left.x.dim());
  }
}

TEST(TensorFormula, RandomAndTriangular) {
  Rng rng(83);
  for (int t = 0; t < 10; ++t) {
    auto inst = random_morita_instance(F3, rng);
    auto rep = tensor_formula_check(inst.context, inst.right, inst.left);
    EXPECT_TRUE(rep.ok) << inst.description;
    EXPECT_EQ(rep.direct_dim, rep.formula_dim);
    EXPECT_TRUE(rep.iso.has_value());
    auto ring = morita_ring(inst.context);
    EXPECT_EQ(rep.direct_dim,
              tensor_dim_oracle(tuple_to_module(ring, inst.right), tuple_to_module(ring, inst.left)));
  }
  for (int t = 0; t < 6; ++t) {
    auto inst = random_triangular_instance(F3, rng);
    auto rep = triangular_tensor_check(inst.context, inst.right, inst.z);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.direct_dim, tensor_dim_oracle(inst.right.y, inst.z));
  }
}

TEST(TensorFormula, TriangularTor) {
  Rng rng(89);
  for (int t = 0; t < 6; ++t) {
    auto inst = random_triangular_instance(F3, rng);
    auto rep = triangular_tor_check(inst.context, inst.right, inst.z, 2);
    if (rep.hypothesis) {
      EXPECT_TRUE(rep.ok);
      EXPECT_EQ(rep.lambda_side, rep.base_side);
    }
  }
}

TEST(BlockPower, ArrowData) {
  for (std::size_t n : {2, 3}) {
    auto k = vertex_algebra(F3, n);
    Bimodule m = a_arrows(n);
    TensorPowers powers(m, 6);
    auto rep = block_power_check(k, m, 2);
    ASSERT_EQ(rep.rows.size(), 2u);
    for (const auto& row : rep.rows) {
      std::size_t i = row.i;
      std::size_t expected = 2 * powers.dim(2 * i) + powers.dim(2 * i + 1) + powers.dim(2 * i - 1);
      EXPECT_EQ(row.predicted_dim, expected);
      EXPECT_EQ(row.direct_dim, expected);
      EXPECT_TRUE(row.isomorphic);
    }
    EXPECT_TRUE(rep.vanishing_consistent);
  }
}

TEST(BlockPower, RejectsNonNilpotent) {
  auto k2 = vertex_algebra(F3, 2);
  EXPECT_THROW(block_power_check(k2, Bimodule::regular(k2), 2, 6, 4), PreconditionError);
}
