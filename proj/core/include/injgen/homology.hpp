#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "injgen/tuples.hpp"

namespace injgen {

constexpr std::size_t kDefaultPdCutoff = 24;
constexpr std::size_t kDefaultNilCutoff = 16;
// Free covers above this dimension are not built.
constexpr std::size_t kMaxFreeDim = 1024;
// Projectivity tests with more unknowns than this are not attempted.
constexpr std::size_t kMaxSplittingUnknowns = 4096;

class ResolutionLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite(d) or AtLeast(cutoff). Also used for nilpotency indices.
struct Verdict {
  enum class Kind { Finite, AtLeast };
  Kind kind = Kind::Finite;
  std::size_t value = 0;

  static Verdict finite(std::size_t d) { return {Kind::Finite, d}; }
  static Verdict at_least(std::size_t c) { return {Kind::AtLeast, c}; }
  bool is_finite() const { return kind == Kind::Finite; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};
std::string to_string(const Verdict& v);

// Drops the grading; homological computations run on ungraded modules.
Module ungraded(const Module& m);

// ---- Free covers and projectivity -----------------------------------------

// F = A^r on a greedy irredundant generating set v_1..v_r of M (taken from
// the standard basis). Basis of F: index l * dim A + j is e_j on generator l.
struct FreeCover {
  Module free;
  Matrix projection;  // dim M x dim F
  Matrix generators;  // dim M x r
  std::size_t rank() const { return generators.cols(); }
};
// Throws ResolutionLimit above kMaxFreeDim.
FreeCover free_cover(const Module& m);

struct ProjectivityTest {
  bool projective = false;
  std::optional<Matrix> splitting;  // s: M -> F with projection * s = id
  FreeCover cover;
};
ProjectivityTest is_projective(const Module& m);

// Syzygies computed on demand: syzygy(0) = M, syzygy(i + 1) = ker(cover(i)).
// Throws ResolutionLimit when a cover or a projectivity test exceeds the size limits.
class SyzygyChain {
 public:
  explicit SyzygyChain(const Module& m);

  const Module& syzygy(std::size_t i);
  const FreeCover& cover(std::size_t i);
  // syzygy(i) -> cover(i - 1).free, for i >= 1.
  const Matrix& inclusion(std::size_t i);
  // Whether syzygy(i) is projective, with the splitting of its cover.
  ProjectivityTest test_projective(std::size_t i);

 private:
  void extend(std::size_t i);
  std::deque<Module> syzygies_;
  std::deque<FreeCover> covers_;
  std::deque<Matrix> inclusions_;  // inclusions_[i - 1] for syzygy i
};

struct ResolutionStep {
  std::size_t rank = 0;
  Matrix boundary;             // F_d -> F_{d-1}, and F_0 -> M at d = 0
  std::size_t syzygy_dim = 0;  // dim ker boundary
  bool projective = false;     // the d-th syzygy is projective
};

struct ResolutionReport {
  Module module;
  std::vector<ResolutionStep> steps;
  Verdict pd;
  std::size_t cutoff = 0;
  std::optional<Matrix> splitting;  // witness for a Finite verdict
  bool truncated = false;           // stopped by a size limit; pd is AtLeast(steps reached)
};

ResolutionReport resolve(const Module& m, std::size_t cutoff = kDefaultPdCutoff);
ResolutionReport resolve(SyzygyChain& chain, std::size_t cutoff = kDefaultPdCutoff);
Verdict projective_dimension(const Module& m, std::size_t cutoff = kDefaultPdCutoff);
// Boundaries compose to zero and each step is exact by rank count.
CheckResult check_resolution(const ResolutionReport& r);

// ---- Tor -------------------------------------------------------------------

enum class Resolve { First, Second };

// dim Tor_i(X, Y) for 0 <= i <= i_max, X right and Y left over the same algebra.
std::vector<std::size_t> tor(const Module& x, const Module& y, std::size_t i_max, Resolve which = Resolve::First);
// dim Tor_i for i >= 1 from a chain of the resolved argument; `chain_side` says
// which argument the chain resolves.
std::size_t tor_from_chain(SyzygyChain& chain, const Module& other, std::size_t i, Resolve chain_side);

// Smallest k with M^(x)k = 0, as Finite(k), else AtLeast(cutoff).
Verdict nilpotency_index(const Bimodule& m, std::size_t cutoff = kDefaultNilCutoff);

// ---- Perfectness -----------------------------------------------------------

enum class Perfectness { LeftPerfect, NotLeftPerfect, Inconclusive };
const char* perfectness_name(Perfectness p);

struct TorWitness {
  std::size_t i = 0, j = 0, dim = 0;
};

using TorTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

struct PerfectnessReport {
  Verdict pd;                        // of M as a left module
  Verdict nilpotency;
  std::vector<Verdict> power_pd;     // power_pd[j - 1] = pd of M^(x)j as a left module, j < nilpotency
  std::size_t tor_range = 0;         // i runs over 1..tor_range
  TorTable tor_table;                // (i, j) -> dim Tor_i(M, M^(x)j)
  TorTable mirror_table;             // (i, j) -> dim Tor_i(M^(x)j, M)
  bool mirror_consistent = true;     // both tables vanish or neither does
  Perfectness verdict = Perfectness::Inconclusive;
  std::optional<TorWitness> witness;
  std::string reason;
};

PerfectnessReport left_perfect_check(const Bimodule& m, std::size_t pd_cutoff = kDefaultPdCutoff,
                                     std::size_t nil_cutoff = kDefaultNilCutoff);

struct PdBoundReport {
  bool applicable = false;
  bool holds = false;
  std::size_t base_pd = 0;
  std::vector<Verdict> power_pd;  // index i - 1
  std::string reason;
};
// pd M^(x)i <= i * pd M for i below the nilpotency index.
PdBoundReport pd_bound_check_tensor_powers(const PerfectnessReport& report);
PdBoundReport pd_bound_check_tensor_powers(const Bimodule& m, std::size_t pd_cutoff = kDefaultPdCutoff,
                                           std::size_t nil_cutoff = kDefaultNilCutoff);

// ---- Checks over Morita context rings --------------------------------------

enum class Outcome { Holds, Fails, Inconclusive };
const char* outcome_name(Outcome o);

Verdict tuple_pd(const MoritaRing& ring, const TupleModule& t, std::size_t cutoff = kDefaultPdCutoff);

// Triangular ring [[C, N], [0, D]] given by a context with M = 0; the tuple is
// a left tuple whose g plays the structure map N (x) Y -> X.
struct TriangularPdReport {
  Verdict pd_n, pd_tuple, pd_x, pd_y;
  bool exact_value_checked = false;  // Y = 0: pd of the tuple equals pd X
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;
};
// Throws PreconditionError unless pd N (left) is finite within the cutoff.
TriangularPdReport triangular_pd_check(const MoritaContext& ctx, const TupleModule& t,
                                       std::size_t cutoff = kDefaultPdCutoff);

struct CornerPdReport {
  PerfectnessReport perfectness;
  std::vector<std::pair<std::string, Verdict>> corners;  // (A,0,0,0), (0,A,0,0), (M,0,0,0), (0,M,0,0)
  bool all_finite = false;
};
// Context with A = B, zero maps and a nilpotent left perfect M; throws
// PreconditionError otherwise. Uses left modules.
CornerPdReport morita_corner_pd(const MoritaContext& ctx, std::size_t pd_cutoff = kDefaultPdCutoff,
                                std::size_t nil_cutoff = kDefaultNilCutoff);

// ---- Theta extensions ------------------------------------------------------

struct CleftRow {
  std::string label;
  std::vector<std::pair<std::size_t, std::size_t>> tor;  // (n, dim Tor_n^E(X, R)) from stated_bound on
  bool vanishes = true;         // from bound on
  bool vanishes_stated = true;  // from stated_bound on
};

struct CleftVanishingReport {
  PerfectnessReport perfectness;
  std::size_t n = 0;      // L_p F^q = 0 once p + q >= n + 1
  std::size_t s = 0;      // nilpotency index
  std::size_t bound = 0;  // n + s - 1: Tor_n^E(X, R) vanishes for n >= bound
  // n + s - 2, one lower. Fails already for k^2 extended by the A_2 arrow.
  std::size_t stated_bound = 0;
  bool stated_bound_holds = true;
  Verdict pd_r;           // pd of R as a left E-module
  std::size_t checked_up_to = 0;
  bool complete = false;  // the checked window reaches pd_r
  std::vector<CleftRow> rows;
  bool holds = false;
};

// Right E-modules of dimension one: algebra characters, found by exhaustive
// search for small fields and over {0, 1} otherwise.
std::vector<Module> one_dimensional_modules(const AlgebraPtr& a);

// Throws PreconditionError unless M is left perfect and nilpotent.
CleftVanishingReport cleft_vanishing_check(const ThetaFunctors& theta, const std::vector<Module>& tests,
                                           const std::vector<std::string>& labels,
                                           std::size_t pd_cutoff = kDefaultPdCutoff,
                                           std::size_t nil_cutoff = kDefaultNilCutoff);

// ---- Tensor products of tuples ---------------------------------------------

struct TensorFormulaReport {
  std::size_t direct_dim = 0;   // Z (x)_Lambda Z'
  std::size_t formula_dim = 0;  // ((X (x) X') (+) (Y (x) Y')) / H
  std::size_t v_dim = 0;
  std::size_t h_rank = 0;
  bool surjective = false;
  bool kills_h = false;
  std::optional<Matrix> iso;  // from a complement of H in V onto Z (x) Z'
  bool ok = false;
};
// Right tuple t, left tuple u over the same context.
TensorFormulaReport tensor_formula_check(const MoritaContext& ctx, const TupleModule& t, const TupleModule& u);

// Context [[A, N], [0, A]] (M = 0, B = A): dim (X, Y, f) (x) T_B(Z) = dim Y (x)_A Z.
struct TriangularTensorReport {
  std::size_t direct_dim = 0;
  std::size_t expected_dim = 0;
  TensorFormulaReport formula;
  bool ok = false;
};
TriangularTensorReport triangular_tensor_check(const MoritaContext& ctx, const TupleModule& t, const Module& z);

// Tor^Lambda_n((X, Y, f), T_B(Z)) against Tor^A_n(Y, Z) when Tor^A(N, Z) vanishes.
struct TriangularTorReport {
  bool hypothesis = false;  // Tor_i(N, Z) = 0 for 1 <= i <= i_max
  std::vector<std::size_t> lambda_side, base_side;
  bool ok = false;
};
TriangularTorReport triangular_tor_check(const MoritaContext& ctx, const TupleModule& t, const Module& z,
                                         std::size_t i_max);

// Lambda-bimodule [[N^k, N^(k+1)], [N^(k-1), N^k]] over Lambda = [[A, N], [0, A]].
// Basis order: the four blocks row by row.
Bimodule block_power_bimodule(const MoritaRing& ring, TensorPowers& powers, std::size_t k);

struct BlockPowerRow {
  std::size_t i = 0;
  std::size_t direct_dim = 0;
  std::size_t predicted_dim = 0;
  bool isomorphic = false;
  bool conclusive = false;
};

struct BlockPowerReport {
  Verdict nilpotency;  // of N
  std::vector<BlockPowerRow> rows;
  // Tor-vanishing of N's powers and of the block bimodule's powers.
  bool base_vanishing = false;
  bool block_vanishing = false;
  bool vanishing_consistent = false;
  bool ok = false;
};
// Throws PreconditionError unless N is nilpotent within the cutoff.
BlockPowerReport block_power_check(const AlgebraPtr& a, const Bimodule& n, std::size_t i_max,
                               std::size_t pd_cutoff = kDefaultPdCutoff, std::size_t nil_cutoff = kDefaultNilCutoff);

}  // namespace injgen
