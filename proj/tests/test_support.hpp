#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "injgen/builders.hpp"
#include "injgen/module.hpp"
#include "injgen/random.hpp"

namespace injgen::testing {

inline AlgebraPtr dual_numbers(const Field& f, std::int64_t group_order = 2) {
  return truncated_polynomial(f, 2, FiniteAbelianGroup::cyclic(group_order), GroupElem{1});
}

// One-dimensional module on which basis element i acts by values[i].
inline Module character(const AlgebraPtr& a, Side side, const std::vector<std::int64_t>& values) {
  std::vector<Matrix> action;
  for (auto v : values) action.push_back(Matrix::from_ints(a->field(), 1, 1, {v}));
  return Module(a, side, 1, action, {a->group().zero()});
}

// The vertex simple of a path algebra: e_v acts as 1, all else as 0.
inline Module vertex_simple(const AlgebraPtr& a, Side side, std::size_t v) {
  std::vector<std::int64_t> values(a->dim(), 0);
  values[v] = 1;
  return character(a, side, values);
}

// Same module with basis vector perm[k] moved to position k.
inline Module permuted(const Module& m, const std::vector<std::size_t>& perm) {
  Matrix p(m.field(), m.dim(), m.dim());
  for (std::size_t k = 0; k < perm.size(); ++k) p.set(perm[k], k, m.field().one());
  Matrix pt = p.transpose();
  std::vector<Matrix> action;
  for (const auto& op : m.actions()) action.push_back(pt * op * p);
  std::vector<GroupElem> degrees;
  for (auto k : perm) degrees.push_back(m.degrees()[k]);
  return Module(m.algebra(), m.side(), m.dim(), action, degrees);
}

inline Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
  const Field& f = left->field();
  return Bimodule(left, right, 0, std::vector<Matrix>(left->dim(), Matrix(f, 0, 0)),
                  std::vector<Matrix>(right->dim(), Matrix(f, 0, 0)));
}

inline std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

inline std::map<GroupElem, std::size_t> degree_counts(const Module& m) {
  std::map<GroupElem, std::size_t> out;
  for (const auto& d : m.degrees()) ++out[d];
  return out;
}

}  // namespace injgen::testing
