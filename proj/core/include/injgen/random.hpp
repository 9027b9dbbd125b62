#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "injgen/tuples.hpp"

namespace injgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n);  // uniform in [0, n)
  bool coin() { return below(2) == 1; }
  // Uniform over a prime field, small integers in [-3, 3] over Q.
  Scalar scalar(const Field& f);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Groups of order at most `max_order`, cyclic ones and small products.
FiniteAbelianGroup random_group(Rng& rng, std::size_t max_order = 8);

// A path algebra with bounded path length, a truncated polynomial ring or a
// group algebra, graded by a random group of order <= max_group; retried
// until dim <= max_dim.
AlgebraPtr random_graded_algebra(const Field& f, Rng& rng, std::size_t max_dim = 8, std::size_t max_group = 8);
// Graded by Z/2^n (1 <= n <= max_exponent) with components in degrees
// 2^(n-1), ..., 2^n - 1 zero.
AlgebraPtr random_upper_half_zero_algebra(const Field& f, Rng& rng, std::size_t max_exponent = 3,
                                          std::size_t max_dim = 8);

// Random vector in the span of the basis vectors of the given degree.
Matrix random_homogeneous_vector(const Module& m, const GroupElem& degree, Rng& rng);

// Nonzero graded right module: a quotient or submodule of a sum of shifted
// free modules, cut by random homogeneous elements.
Module random_graded_module(const AlgebraPtr& a, Rng& rng, std::size_t max_dim = 12);
// Nonzero ungraded module: a cyclic quotient of A or a submodule of A (+) DA
// generated by random elements.
Module random_module(const AlgebraPtr& a, Side side, Rng& rng, std::size_t max_dim = 12);

// Small Morita context (a split covering ring, or a context with zero maps)
// with a random right tuple and a random left tuple.
struct MoritaInstance {
  MoritaContext context;
  TupleModule right;
  TupleModule left;
  std::string description;
};
MoritaInstance random_morita_instance(const Field& f, Rng& rng);

// Context [[A, N], [0, A]] with a random right tuple and a left A-module.
struct TriangularInstance {
  MoritaContext context;
  TupleModule right;
  Module z;
  std::string description;
};
TriangularInstance random_triangular_instance(const Field& f, Rng& rng);

}  // namespace injgen
