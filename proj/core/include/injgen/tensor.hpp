#pragma once

#include <vector>

#include "injgen/module.hpp"

namespace injgen {

// X (x)_A Y as the quotient of X (x)_k Y by span{xa (x) y - x (x) ay}.
// Basis index of x_p (x) y_q in X (x)_k Y is p * dim Y + q.
struct TensorQuotient {
  std::size_t dim = 0;
  Matrix projection;  // dim x (dim X * dim Y)
  Matrix section;     // (dim X * dim Y) x dim
};

// right_ops: actions of algebra generators on X from the right; left_ops: on Y from the left.
TensorQuotient tensor_quotient(const Field& field, std::size_t dx, std::size_t dy,
                               const std::vector<Matrix>& right_ops, const std::vector<Matrix>& left_ops);
TensorQuotient tensor_over_algebra(const Module& x, const Module& y);

// C-A bimodule (x)_A A-D bimodule.
struct BimoduleTensor {
  Bimodule result;
  TensorQuotient quotient;
};
BimoduleTensor tensor(const Bimodule& x, const Bimodule& y);
// Right A-module (x)_A A-D bimodule, and C-A bimodule (x)_A left A-module.
Module tensor(const Module& x, const Bimodule& y);
Module tensor(const Bimodule& x, const Module& y);

// Left-nested tensor powers M^(x)i over R with concatenation maps.
class TensorPowers {
 public:
  TensorPowers(Bimodule m, std::size_t max_power);

  std::size_t max_power() const { return powers_.size() - 1; }
  const Bimodule& power(std::size_t i) const { return powers_.at(i); }
  std::size_t dim(std::size_t i) const { return powers_.at(i).dim(); }
  const Bimodule& base() const { return m_; }
  // Matrix of t (x) t' -> tt' from T_a (x)_k T_b to T_{a+b}, a + b <= max_power.
  const Matrix& concat(std::size_t a, std::size_t b);

 private:
  Bimodule m_;
  std::vector<Bimodule> powers_;
  std::vector<TensorQuotient> quotients_;  // quotients_[i] presents T_i as T_{i-1} (x) M, i >= 1
  std::vector<std::vector<std::optional<Matrix>>> concat_;
};

}  // namespace injgen
