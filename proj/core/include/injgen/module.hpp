#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "injgen/algebra.hpp"

namespace injgen {

enum class Side { Left, Right };

const char* side_name(Side s);

// Finite-dimensional module over a GradedAlgebra. action(j) is the matrix of
// m -> m * e_j (right) or m -> e_j * m (left) in column-vector convention.
// An empty degree list marks an ungraded module.
class Module {
 public:
  Module(AlgebraPtr algebra, Side side, std::size_t dim, std::vector<Matrix> action,
         std::vector<GroupElem> degrees = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t j) const { return action_[j]; }
  const std::vector<Matrix>& actions() const { return action_; }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  bool graded() const { return !degrees_.empty() || dim_ == 0; }
  // Operator of an arbitrary algebra element (column vector in the basis of A).
  Matrix act(const Matrix& a) const;

  friend bool operator==(const Module& a, const Module& b);

 private:
  AlgebraPtr algebra_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::vector<GroupElem> degrees_;
};

// Left action by `left`, right action by `right`.
class Bimodule {
 public:
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
           std::vector<Matrix> right_action, std::vector<GroupElem> degrees = {});

  static Bimodule regular(const AlgebraPtr& a);
  // One-sided modules viewed as bimodules over the ground field on the other side.
  static Bimodule from_module(const Module& m);

  const AlgebraPtr& left_algebra() const { return left_; }
  const AlgebraPtr& right_algebra() const { return right_; }
  const Field& field() const { return left_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& left_action(std::size_t i) const { return left_action_[i]; }
  const Matrix& right_action(std::size_t j) const { return right_action_[j]; }
  const std::vector<Matrix>& left_actions() const { return left_action_; }
  const std::vector<Matrix>& right_actions() const { return right_action_; }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  Matrix act_left(const Matrix& a) const;
  Matrix act_right(const Matrix& b) const;

  Module as_left() const;
  Module as_right() const;

  friend bool operator==(const Bimodule& a, const Bimodule& b);

 private:
  AlgebraPtr left_, right_;
  std::size_t dim_;
  std::vector<Matrix> left_action_, right_action_;
  std::vector<GroupElem> degrees_;
};

AxiomReport check_module_axioms(const Module& m);
AxiomReport check_bimodule_axioms(const Bimodule& b);
bool is_module_hom(const Module& source, const Module& target, const Matrix& f, bool graded = false);

Module regular_right(const AlgebraPtr& a);
Module regular_left(const AlgebraPtr& a);
Module free_right(const AlgebraPtr& a, std::size_t rank);
Module zero_module(const AlgebraPtr& a, Side side);

Module twist(const Module& m, const GroupElem& shift);
// Left A-module -> left A^op-module (and likewise for right), degrees negated.
Module dual(const Module& m);
// Same matrices, other side, over the opposite algebra.
Module flip_side(const Module& m);
// Replaces the algebra by a structurally equal one.
Module with_algebra(const Module& m, AlgebraPtr a);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts);
// D(A) as a right A-module, f.a = f(a -).
Module dual_regular(const AlgebraPtr& a);
// Restriction along an algebra map given by its matrix (dim A x dim B), B -> A.
Module restrict_scalars(const Module& m, const AlgebraPtr& b, const Matrix& hom);

// Smallest submodule containing the columns of `vectors`, as a basis matrix.
Matrix generated_submodule(const Module& m, const Matrix& vectors);

struct Submodule {
  Module module;
  Matrix inclusion;  // dim M x dim N, columns are the basis of N
};
Submodule submodule(const Module& m, const Matrix& basis);

struct Quotient {
  Module module;
  Matrix projection;  // dim Q x dim M
  Matrix section;     // dim M x dim Q, projection * section = I
};
Quotient quotient(const Module& m, const Matrix& sub_basis);

// Operators a finite-dimensional representation must commute with.
struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> ops;
  std::vector<GroupElem> degrees;
  std::optional<Field> field;  // needed when there are no generators
};
Representation representation(const Module& m);
Representation representation(const Bimodule& b);

std::vector<Matrix> hom_space(const Representation& m, const Representation& n, bool graded = false);
std::vector<Matrix> hom_space(const Module& m, const Module& n, bool graded = false);

struct IsoSearch {
  std::optional<Matrix> iso;
  bool conclusive = false;
  std::size_t hom_dim = 0;
};
constexpr std::uint64_t kExhaustLimit = std::uint64_t{1} << 16;
constexpr std::size_t kRandomSamples = 200;

IsoSearch find_isomorphism(const Representation& m, const Representation& n, bool graded = false,
                           std::uint64_t seed = 1);
IsoSearch find_isomorphism(const Module& m, const Module& n, bool graded = false, std::uint64_t seed = 1);
IsoSearch find_isomorphism(const Bimodule& m, const Bimodule& n, bool graded = false, std::uint64_t seed = 1);

}  // namespace injgen
