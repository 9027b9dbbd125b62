#pragma once

#include "injgen/constructions.hpp"

namespace injgen {

// Modules over a Morita context ring written as tuples (X, Y, f, g).
//
// Left:  X a left A-module, Y a left B-module, f: M (x)_A X -> Y, g: N (x)_B Y -> X.
// Right: X a right A-module, Y a right B-module, f: X (x)_A N -> Y, g: Y (x)_B M -> X.
//
// f and g are stored on the plain k-tensor product with row-major pair index:
// left f column m * dim X + x, left g column n * dim Y + y,
// right f column x * dim N + n, right g column y * dim M + m.
struct TupleModule {
  Side side;
  Module x;
  Module y;
  Matrix f;
  Matrix g;
};

CheckResult check_tuple(const MoritaContext& ctx, const TupleModule& t);

// Lambda-module on X (+) Y with the block action of the assembled ring.
Module tuple_to_module(const MoritaRing& ring, const TupleModule& t);
// Inverse direction, via the corner idempotents of the assembled ring.
TupleModule module_to_tuple(const MoritaRing& ring, const Module& z);

TupleModule functor_t_a(const MoritaContext& ctx, const Module& x);
TupleModule functor_t_b(const MoritaContext& ctx, const Module& y);
// Throw unless phi and psi both vanish.
TupleModule functor_z_a(const MoritaContext& ctx, const Module& x);
TupleModule functor_z_b(const MoritaContext& ctx, const Module& y);
inline const Module& functor_u_a(const TupleModule& t) { return t.x; }
inline const Module& functor_u_b(const TupleModule& t) { return t.y; }

// The corner algebra A as a left or right A-module.
Module corner_a(const MoritaContext& ctx, Side side);
Module corner_b(const MoritaContext& ctx, Side side);

// ---- Functors attached to a theta extension E = R (+) M -------------------
//
// All on right modules: Z and U restrict along E -> R and R -> E,
// T = - (x)_R E and C = - (x)_E R.
class ThetaFunctors {
 public:
  ThetaFunctors(const Bimodule& m, const Matrix& theta);

  const Bimodule& bimodule() const { return m_; }
  const AlgebraPtr& base() const { return r_; }
  const AlgebraPtr& extension() const { return e_; }
  const Matrix& inclusion() const { return incl_; }    // dim E x dim R
  const Matrix& projection() const { return proj_; }   // dim R x dim E
  // R as a left E-module through the projection.
  Module base_as_left_module() const;

  Module z(const Module& x) const;
  Module u(const Module& y) const;
  Module t(const Module& x) const;
  Module c(const Module& y) const;
  // X (x)_R M as a right R-module.
  Module f(const Module& x) const;

 private:
  Bimodule m_;
  AlgebraPtr r_, e_;
  Matrix incl_, proj_;
  Bimodule e_over_r_;  // R-E bimodule E
  Bimodule r_over_e_;  // E-R bimodule R
};

}  // namespace injgen
