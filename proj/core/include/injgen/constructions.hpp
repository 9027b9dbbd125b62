#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "injgen/module.hpp"
#include "injgen/tensor.hpp"

namespace injgen {

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

// ---- Covering ring --------------------------------------------------------

// Basis (g, h, i) with deg e_i = h - g, in lexicographic order over the
// canonical group order; multiplication is block-matrix multiplication.
struct CoveringRing {
  AlgebraPtr base;
  AlgebraPtr ring;
  struct Entry {
    std::size_t g, h, i;
  };
  std::vector<Entry> entries;                 // by basis index of ring
  std::vector<std::size_t> position;          // (g * |G| + h) * dim R + i -> index or npos
  std::size_t index(std::size_t g, std::size_t h, std::size_t i) const;
  // Idempotent sum of the unit's degree-zero part in diagonal block g.
  Matrix block_idempotent(std::size_t g) const;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

CoveringRing covering_ring(const AlgebraPtr& r);
// Graded right R-module -> right module over the covering ring.
Module covering_module(const CoveringRing& cov, const Module& m);
// Right module over the covering ring -> graded right R-module, M_g = X e_g.
Module covering_module_inverse(const CoveringRing& cov, const Module& x);

// ---- Morita contexts ------------------------------------------------------

// phi: M (x)_A N -> B stored as dim B x (dim M * dim N); psi: N (x)_B M -> A
// stored as dim A x (dim N * dim M).
struct MoritaContext {
  AlgebraPtr a, b;
  Bimodule n;  // A-B
  Bimodule m;  // B-A
  Matrix phi;
  Matrix psi;
};

CheckResult check_morita_context(const MoritaContext& ctx);
bool verify_zero_context(const MoritaContext& ctx);
MoritaContext zero_context(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& n, const Bimodule& m);

// Basis order A, N, M, B.
struct MoritaRing {
  MoritaContext context;
  AlgebraPtr ring;
  std::size_t offset_n() const { return context.a->dim(); }
  std::size_t offset_m() const { return context.a->dim() + context.n.dim(); }
  std::size_t offset_b() const { return context.a->dim() + context.n.dim() + context.m.dim(); }
};
MoritaRing morita_ring(const MoritaContext& ctx);

// Split of the covering ring along the canonical group order: A is the block
// of rows and columns 0..k, B the rest.
struct SplitCovering {
  MoritaContext context;
  std::vector<std::size_t> a_idx, n_idx, m_idx, b_idx;  // basis indices in the covering ring
  std::vector<std::size_t> permutation() const;          // assembled index -> covering index
};
SplitCovering split_covering(const CoveringRing& cov, std::size_t k);
std::size_t half_split_index(const FiniteAbelianGroup& g);

// Basis reordered so that new index k is old index perm[k].
AlgebraPtr permute_basis(const GradedAlgebra& a, const std::vector<std::size_t>& perm);

// ---- Tensor rings and theta extensions ------------------------------------

struct TensorRing {
  AlgebraPtr ring;
  std::size_t nilpotency = 0;            // M^(x)k = 0 for this k
  std::size_t exponent = 0;              // graded by Z/2^exponent
  std::vector<std::size_t> offsets;      // start of M^(x)i, i < k
};
// Throws PreconditionError when M^(x)k is nonzero.
TensorRing tensor_ring(const Bimodule& m, std::size_t k);

CheckResult check_theta(const Bimodule& m, const Matrix& theta);
// R (+) M with (r,m)(r',m') = (rr', rm' + mr' + theta(m (x) m')); basis R then M.
AlgebraPtr theta_extension(const Bimodule& m, const Matrix& theta);
AlgebraPtr trivial_extension(const Bimodule& m);

struct ThetaData {
  Bimodule m;
  Matrix theta;
};
// M' = M (+) M^(x)2 (+) ... (+) M^(x)(k-1) with concatenation.
ThetaData tensor_ring_theta(const Bimodule& m, std::size_t k);
// Positively graded Lambda: (Lambda_0, Lambda_1 (+) Lambda_2 (+) ..., multiplication).
struct PositivePart {
  Subalgebra degree_zero;
  std::vector<std::size_t> positive_idx;
  ThetaData data;
};
PositivePart positive_part(const GradedAlgebra& lambda);
// Lambda_d as a Lambda_0-bimodule, for positively graded Lambda.
Bimodule graded_component(const GradedAlgebra& lambda, std::int64_t d);

// ---- Twisted tensor products ----------------------------------------------

// Bicharacter on G1 x G2 given on generator pairs: value(p, q) = t(e_p, f_q).
struct Bicharacter {
  Field field;
  FiniteAbelianGroup g1, g2;
  std::vector<std::vector<Scalar>> values;
  Scalar operator()(const GroupElem& a, const GroupElem& b) const;
  static Bicharacter trivial(const Field& f, const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2);
};
CheckResult check_bicharacter(const Bicharacter& t);

AlgebraPtr tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);
AlgebraPtr twisted_tensor(const GradedAlgebra& a, const GradedAlgebra& b, const Bicharacter& t);
// (m (x) n)(a (x) b) = t(|a|, |n|) (ma (x) nb), over the algebra `ab` = twisted_tensor(A, B, t).
Module twisted_module(const Module& m, const Module& n, const AlgebraPtr& ab, const Bicharacter& t);

// ---- Beilinson-type construction ------------------------------------------

struct BeilinsonData {
  AlgebraPtr b;
  Bimodule x;
  AlgebraPtr extension;  // b trivially extended by x
};
// Lambda positively graded with Lambda_i = 0 for i > l.
BeilinsonData beilinson(const GradedAlgebra& lambda, std::size_t l);

}  // namespace injgen
