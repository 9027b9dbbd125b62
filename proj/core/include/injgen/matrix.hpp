#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

#include "injgen/field.hpp"

namespace injgen {

// Dense row-major matrix over a Field. Prime-field entries are stored as
// residues, rational entries as exact fractions.
class Matrix {
 public:
  Matrix() : Matrix(Field(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  // Row-major integer entries, reduced into the field.
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::int64_t> entries);
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<std::int64_t>& entries);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
  static Matrix column_vector(const Field& field, const std::vector<Scalar>& entries);
  static Matrix unit_vector(const Field& field, std::size_t n, std::size_t i);
  static Matrix hstack(const Field& field, std::size_t rows, const std::vector<Matrix>& parts);
  static Matrix vstack(const Field& field, std::size_t cols, const std::vector<Matrix>& parts);
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  bool entry_is_zero(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  std::vector<Scalar> column_entries(std::size_t c) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix& operator+=(const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Raw storage access for the elimination kernels.
  using Storage = std::variant<std::vector<std::int64_t>, std::vector<Rational>>;
  const Storage& storage() const { return data_; }
  Storage& storage() { return data_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space.
Matrix kernel_basis(const Matrix& m);
// Some x with a * x = b (b may have several columns), or nothing.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// A subset of the columns of m forming a basis of its column space.
Matrix column_space_basis(const Matrix& m);
// Rows of the reduced echelon form spanning the row space, as a matrix.
Matrix row_space_basis(const Matrix& m);

// Coordinates with respect to a fixed basis (columns of `basis`, full column rank).
class SubspaceCoordinates {
 public:
  SubspaceCoordinates() = default;
  explicit SubspaceCoordinates(Matrix basis);

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  // Coordinates of columns of v; valid when v lies in the span.
  Matrix coordinates(const Matrix& v) const;
  bool contains(const Matrix& v) const;

 private:
  Matrix basis_;
  Matrix left_inverse_;
};

// Incrementally grown span with membership tests.
class SpanBuilder {
 public:
  SpanBuilder(Field field, std::size_t ambient);
  // Adds v (a column) when it is not already in the span; returns true when added.
  bool add(const Matrix& v);
  bool contains(const Matrix& v) const;
  std::size_t dim() const { return vectors_.size(); }
  Matrix basis() const;

 private:
  Matrix reduce(const Matrix& v) const;
  Field field_;
  std::size_t ambient_;
  std::vector<Matrix> vectors_;     // as added
  std::vector<Matrix> echelon_;     // reduced copies
  std::vector<std::size_t> pivots_;
};

}  // namespace injgen
