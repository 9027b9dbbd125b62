#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "injgen/field.hpp"
#include "injgen/group.hpp"
#include "injgen/matrix.hpp"

namespace injgen {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;
// mult[i][j] is the coefficient vector of e_i * e_j.
using StructureConstants = std::vector<std::vector<SparseVector>>;

SparseVector to_sparse(const Matrix& column);
Matrix to_dense(const Field& field, std::size_t dim, const SparseVector& v);

// Finite-dimensional associative unital algebra with a homogeneous basis
// graded by a finite abelian group.
class GradedAlgebra {
 public:
  GradedAlgebra(Field field, FiniteAbelianGroup group, std::vector<std::string> labels,
                std::vector<GroupElem> degrees, std::vector<Scalar> unit, StructureConstants mult);

  std::size_t dim() const { return labels_.size(); }
  const Field& field() const { return field_; }
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  const GroupElem& degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<Scalar>& unit() const { return unit_; }
  Matrix unit_vector() const { return Matrix::column_vector(field_, unit_); }
  const StructureConstants& mult() const { return mult_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return mult_[i][j]; }

  // Column i of right_mult(j) is e_i * e_j; column j of left_mult(i) is e_i * e_j.
  const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
  const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
  Matrix right_mult_by(const Matrix& a) const;
  Matrix left_mult_by(const Matrix& a) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;

  // Basis indices generating the algebra; products of these span everything.
  const std::vector<std::size_t>& generators() const;
  std::vector<std::size_t> component(const GroupElem& g) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  Field field_;
  FiniteAbelianGroup group_;
  std::vector<std::string> labels_;
  std::vector<GroupElem> degrees_;
  std::vector<Scalar> unit_;
  StructureConstants mult_;
  std::vector<Matrix> right_mult_;
  std::vector<Matrix> left_mult_;
  mutable std::shared_ptr<std::vector<std::size_t>> generators_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

template <class... Args>
AlgebraPtr make_algebra(Args&&... args) {
  return std::make_shared<const GradedAlgebra>(std::forward<Args>(args)...);
}

// Equality of everything except the basis labels.
bool same_structure(const GradedAlgebra& a, const GradedAlgebra& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct Violation {
  std::string kind;
  std::vector<std::size_t> indices;
  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.indices) < std::tie(b.kind, b.indices);
  }
  friend bool operator==(const Violation& a, const Violation& b) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;  // sorted, truncated to a bounded sample
  std::size_t total = 0;
  bool ok() const { return total == 0; }
};

constexpr std::size_t kMaxReportedViolations = 64;

AxiomReport check_algebra_axioms(const GradedAlgebra& a);

AlgebraPtr opposite(const GradedAlgebra& a);
AlgebraPtr regrade(const GradedAlgebra& a, FiniteAbelianGroup group, std::vector<GroupElem> degrees);
AlgebraPtr trivially_graded(const GradedAlgebra& a, FiniteAbelianGroup group = FiniteAbelianGroup());
AlgebraPtr ground_algebra(const Field& field);

struct StronglyGradedReport {
  bool strongly_graded = true;
  std::vector<std::pair<GroupElem, GroupElem>> failures;
};
StronglyGradedReport strongly_graded_check(const GradedAlgebra& a);

bool is_commutative(const GradedAlgebra& a);

// Degree-zero part, trivially graded, together with the indices it came from.
struct Subalgebra {
  AlgebraPtr algebra;
  std::vector<std::size_t> indices;
};
Subalgebra initial_subring(const GradedAlgebra& a);
// Subalgebra spanned by the given basis elements (closed under products, holding the unit).
Subalgebra basis_subalgebra(const GradedAlgebra& a, const std::vector<std::size_t>& indices,
                            const std::vector<Scalar>& unit);

// For cyclic gradings read as integer degrees 0..n-1: no nonzero product wraps around.
bool is_positively_graded(const GradedAlgebra& a);
// Z/2^m grading whose upper half of degrees vanishes.
bool upper_half_vanishes(const GradedAlgebra& a);

}  // namespace injgen
