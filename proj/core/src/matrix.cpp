#include "injgen/matrix.hpp"

#include <algorithm>
#include <utility>

namespace injgen {

namespace {

struct FpOps {
  using T = std::int64_t;
  std::int64_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(const T& a, const T& b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T mul(const T& a, const T& b) const { return (a * b) % p; }
  T inv(const T& a) const { return inverse_mod(a, p); }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(const T& a) const { return Scalar(a); }
};

struct QOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1) / a; }
  T from(const Scalar& s) const { return s.to_rational(); }
  Scalar to(const T& a) const { return Scalar(a); }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_prime_field()) return fn(FpOps{f.characteristic()});
  return fn(QOps{});
}

template <class Ops>
std::vector<typename Ops::T>& raw(Matrix& m) {
  return std::get<std::vector<typename Ops::T>>(m.storage());
}

template <class Ops>
const std::vector<typename Ops::T>& raw(const Matrix& m) {
  return std::get<std::vector<typename Ops::T>>(m.storage());
}

void scale_row_to_integers(std::vector<Rational>& a, std::size_t row, std::size_t cols) {
  BigInt lcm = 1;
  BigInt g = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    const Rational& x = a[row * cols + c];
    if (x == 0) continue;
    BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    Rational& x = a[row * cols + c];
    if (x == 0) continue;
    x *= Rational(lcm);
    g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::numerator(x)));
  }
  if (g > 1) {
    for (std::size_t c = 0; c < cols; ++c) a[row * cols + c] /= Rational(g);
  }
}

template <class Ops>
std::vector<std::size_t> rref_kernel(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
                                     std::size_t cols) {
  if constexpr (std::is_same_v<Ops, QOps>) {
    for (std::size_t r = 0; r < rows; ++r) scale_row_to_integers(a, r, cols);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    }
    auto pinv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], pinv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      auto factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (ops.is_zero(a[r * cols + j])) continue;
        a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime_field()) {
    data_ = std::vector<std::int64_t>(rows * cols, 0);
  } else {
    data_ = std::vector<Rational>(rows * cols, Rational(0));
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::int64_t> entries) {
  return from_ints(field, rows, cols, std::vector<std::int64_t>(entries));
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, field.from_int(entries[i]));
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(const Field& field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Matrix m(field, n, 1);
  m.set(i, 0, field.one());
  return m;
}

Matrix Matrix::hstack(const Field& field, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw InputError("hstack row mismatch");
    cols += p.cols();
  }
  Matrix m(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix Matrix::vstack(const Field& field, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw InputError("vstack column mismatch");
    rows += p.rows();
  }
  Matrix m(field, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  with_ops(a.field(), [&](auto ops) {
    const auto& ra = raw<decltype(ops)>(a);
    const auto& rb = raw<decltype(ops)>(b);
    auto& rm = raw<decltype(ops)>(m);
    std::size_t mc = m.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& x = ra[i * a.cols() + j];
        if (ops.is_zero(x)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            const auto& y = rb[k * b.cols() + l];
            if (ops.is_zero(y)) continue;
            rm[(i * b.rows() + k) * mc + j * b.cols() + l] = ops.mul(x, y);
          }
        }
      }
    }
    return 0;
  });
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  return with_ops(field_, [&](auto ops) { return ops.to(raw<decltype(ops)>(*this)[r * cols_ + c]); });
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  Scalar v = field_.normalize(value);
  with_ops(field_, [&](auto ops) {
    raw<decltype(ops)>(*this)[r * cols_ + c] = ops.from(v);
    return 0;
  });
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  set(r, c, field_.add(at(r, c), field_.normalize(value)));
}

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
  return with_ops(field_, [&](auto ops) { return ops.is_zero(raw<decltype(ops)>(*this)[r * cols_ + c]); });
}

bool Matrix::is_zero() const {
  return with_ops(field_, [&](auto ops) {
    for (const auto& x : raw<decltype(ops)>(*this)) {
      if (!ops.is_zero(x)) return false;
    }
    return true;
  });
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  with_ops(field_, [&](auto ops) {
    const auto& a = raw<decltype(ops)>(*this);
    auto& b = raw<decltype(ops)>(t);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b[j * rows_ + i] = a[i * cols_ + j];
    return 0;
  });
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  Scalar v = field_.normalize(s);
  with_ops(field_, [&](auto ops) {
    auto x = ops.from(v);
    const auto& a = raw<decltype(ops)>(*this);
    auto& b = raw<decltype(ops)>(out);
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = ops.mul(a[i], x);
    return 0;
  });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix out(field_, nr, nc);
  with_ops(field_, [&](auto ops) {
    const auto& a = raw<decltype(ops)>(*this);
    auto& b = raw<decltype(ops)>(out);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
    return 0;
  });
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw std::out_of_range("matrix block out of range");
  with_ops(field_, [&](auto ops) {
    const auto& a = raw<decltype(ops)>(m);
    auto& b = raw<decltype(ops)>(*this);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b[(r0 + i) * cols_ + c0 + j] = a[i * m.cols() + j];
    return 0;
  });
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out.set_block(0, k, column(idx[k]));
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) out.set_block(k, 0, block(idx[k], 0, 1, cols_));
  return out;
}

std::vector<Scalar> Matrix::column_entries(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  with_ops(field_, [&](auto ops) {
    const auto& a = raw<decltype(ops)>(*this);
    const auto& b = raw<decltype(ops)>(other);
    auto& c = raw<decltype(ops)>(out);
    std::size_t n = other.cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& x = a[i * cols_ + k];
        if (ops.is_zero(x)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const auto& y = b[k * n + j];
          if (ops.is_zero(y)) continue;
          c[i * n + j] = ops.add(c[i * n + j], ops.mul(x, y));
        }
      }
    }
    return 0;
  });
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum shape mismatch");
  with_ops(field_, [&](auto ops) {
    auto& a = raw<decltype(ops)>(*this);
    const auto& b = raw<decltype(ops)>(other);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.add(a[i], b[i]);
    return 0;
  });
  return *this;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference shape mismatch");
  Matrix out = *this;
  with_ops(field_, [&](auto ops) {
    auto& a = raw<decltype(ops)>(out);
    const auto& b = raw<decltype(ops)>(other);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = ops.sub(a[i], b[i]);
    return 0;
  });
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}};
  out.pivots = with_ops(m.field(), [&](auto ops) {
    return rref_kernel(ops, raw<decltype(ops)>(out.reduced), m.rows(), m.cols());
  });
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Matrix kernel_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.field(), m.cols(), free_cols.size());
  const Field& f = m.field();
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.set(fc, k, f.one());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!red.entry_is_zero(r, fc)) basis.set(pivots[r], k, f.neg(red.at(r, fc)));
    }
  }
  return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve_linear shape mismatch");
  Matrix aug = Matrix::hstack(a.field(), a.rows(), {a, b});
  auto [red, pivots] = rref(aug);
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[r], j, red.at(r, a.cols() + j));
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_linear(m, Matrix::identity(m.field(), m.rows()));
}

Matrix column_space_basis(const Matrix& m) {
  return m.select_columns(rref(m).pivots);
}

Matrix row_space_basis(const Matrix& m) {
  auto [red, pivots] = rref(m);
  return red.block(0, 0, pivots.size(), m.cols());
}

SubspaceCoordinates::SubspaceCoordinates(Matrix basis) : basis_(std::move(basis)) {
  auto pivots = rref(basis_.transpose()).pivots;
  if (pivots.size() != basis_.cols()) throw InputError("subspace basis is not linearly independent");
  Matrix square = basis_.select_rows(pivots);
  auto inv = inverse(square);
  Matrix selector(basis_.field(), pivots.size(), basis_.rows());
  for (std::size_t k = 0; k < pivots.size(); ++k) selector.set(k, pivots[k], basis_.field().one());
  left_inverse_ = *inv * selector;
}

Matrix SubspaceCoordinates::coordinates(const Matrix& v) const {
  return left_inverse_ * v;
}

bool SubspaceCoordinates::contains(const Matrix& v) const {
  return basis_ * coordinates(v) == v;
}

SpanBuilder::SpanBuilder(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Matrix SpanBuilder::reduce(const Matrix& v) const {
  Matrix w = v;
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    Scalar c = w.at(pivots_[k], 0);
    if (field_.is_zero(c)) continue;
    w = w - echelon_[k].scaled(c);
  }
  return w;
}

bool SpanBuilder::add(const Matrix& v) {
  Matrix w = reduce(v);
  std::size_t piv = ambient_;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!w.entry_is_zero(i, 0)) {
      piv = i;
      break;
    }
  }
  if (piv == ambient_) return false;
  w = w.scaled(field_.inv(w.at(piv, 0)));
  for (auto& e : echelon_) {
    Scalar c = e.at(piv, 0);
    if (!field_.is_zero(c)) e = e - w.scaled(c);
  }
  echelon_.push_back(w);
  pivots_.push_back(piv);
  vectors_.push_back(v);
  return true;
}

bool SpanBuilder::contains(const Matrix& v) const {
  return reduce(v).is_zero();
}

Matrix SpanBuilder::basis() const {
  return Matrix::hstack(field_, ambient_, vectors_);
}

}  // namespace injgen
