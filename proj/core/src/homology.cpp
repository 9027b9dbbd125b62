#include "injgen/homology.hpp"

#include <algorithm>

namespace injgen {

std::string to_string(const Verdict& v) {
  return (v.is_finite() ? "Finite(" : "AtLeast(") + std::to_string(v.value) + ")";
}

Module ungraded(const Module& m) {
  return Module(m.algebra(), m.side(), m.dim(), m.actions());
}

namespace {

Module free_module(const AlgebraPtr& a, Side side, std::size_t rank) {
  const Field& f = a->field();
  Matrix id = Matrix::identity(f, rank);
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < a->dim(); ++j)
    ops.push_back(Matrix::kron(id, side == Side::Right ? a->right_mult(j) : a->left_mult(j)));
  return Module(a, side, rank * a->dim(), ops);
}

// Column l of the block of `v` belonging to generator l, as an algebra element.
Matrix coefficient(const Matrix& v, std::size_t col, std::size_t l, std::size_t da) {
  return v.block(l * da, col, da, 1);
}

}  // namespace

FreeCover free_cover(const Module& m) {
  const Field& f = m.field();
  const auto& a = m.algebra();
  const auto& gens = a->generators();
  std::size_t dm = m.dim(), da = a->dim();
  SpanBuilder span(f, dm);
  std::vector<Matrix> chosen;
  for (std::size_t i = 0; i < dm; ++i) {
    Matrix e = Matrix::unit_vector(f, dm, i);
    if (span.contains(e)) continue;
    chosen.push_back(e);
    std::vector<Matrix> queue{e};
    while (!queue.empty()) {
      Matrix v = std::move(queue.back());
      queue.pop_back();
      if (!span.add(v)) continue;
      for (auto g : gens) queue.push_back(m.action(g) * v);
    }
  }
  std::size_t r = chosen.size();
  if (r * da > kMaxFreeDim)
    throw ResolutionLimit("free cover of dimension " + std::to_string(r * da) + " exceeds " + std::to_string(kMaxFreeDim));
  Matrix generators = Matrix::hstack(f, dm, chosen);
  Matrix proj(f, dm, r * da);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < da; ++j) proj.set_block(0, l * da + j, m.action(j) * chosen[l]);
  return {free_module(a, m.side(), r), proj, generators};
}

namespace {

// Splitting of `cover` given generators of its kernel (as vectors in F).
std::optional<Matrix> find_splitting(const Module& m, const FreeCover& cover, const Matrix& kernel_gens) {
  const Field& f = m.field();
  const Module& free = cover.free;
  std::size_t dm = m.dim(), df = free.dim(), r = cover.rank(), da = m.algebra()->dim();
  if (dm == 0) return Matrix(f, df, 0);
  if (r * df > kMaxSplittingUnknowns)
    throw ResolutionLimit("splitting system with " + std::to_string(r * df) + " unknowns");
  std::size_t ng = kernel_gens.cols();
  Matrix eq(f, ng * df + r * dm, r * df);
  Matrix rhs(f, ng * df + r * dm, 1);
  for (std::size_t c = 0; c < ng; ++c)
    for (std::size_t l = 0; l < r; ++l) {
      Matrix coef = coefficient(kernel_gens, c, l, da);
      if (coef.is_zero()) continue;
      eq.set_block(c * df, l * df, free.act(coef));
    }
  for (std::size_t l = 0; l < r; ++l) {
    eq.set_block(ng * df + l * dm, l * df, cover.projection);
    rhs.set_block(ng * df + l * dm, 0, cover.generators.column(l));
  }
  auto sol = solve_linear(eq, rhs);
  if (!sol) return std::nullopt;
  Matrix lifted(f, df, df);
  for (std::size_t l = 0; l < r; ++l) {
    Matrix fl = sol->block(l * df, 0, df, 1);
    for (std::size_t j = 0; j < da; ++j) lifted.set_block(0, l * da + j, free.action(j) * fl);
  }
  auto section = solve_linear(cover.projection, Matrix::identity(f, dm));
  if (!section) return std::nullopt;
  Matrix s = lifted * *section;
  if (!(cover.projection * s).is_identity() || !is_module_hom(m, free, s)) return std::nullopt;
  return s;
}

}  // namespace

ProjectivityTest is_projective(const Module& m) {
  SyzygyChain chain(m);
  return chain.test_projective(0);
}

SyzygyChain::SyzygyChain(const Module& m) {
  syzygies_.push_back(ungraded(m));
}

const Module& SyzygyChain::syzygy(std::size_t i) {
  extend(i);
  return syzygies_[i];
}

const FreeCover& SyzygyChain::cover(std::size_t i) {
  extend(i);
  while (covers_.size() <= i) covers_.push_back(free_cover(syzygies_[covers_.size()]));
  return covers_[i];
}

const Matrix& SyzygyChain::inclusion(std::size_t i) {
  if (i == 0) throw InputError("the module itself has no inclusion");
  extend(i);
  return inclusions_[i - 1];
}

void SyzygyChain::extend(std::size_t i) {
  while (syzygies_.size() <= i) {
    std::size_t d = syzygies_.size() - 1;
    const FreeCover& c = cover(d);
    auto sub = submodule(c.free, kernel_basis(c.projection));
    syzygies_.push_back(ungraded(sub.module));
    inclusions_.push_back(sub.inclusion);
  }
}

ProjectivityTest SyzygyChain::test_projective(std::size_t i) {
  const Module& m = syzygy(i);
  const FreeCover& c = cover(i);
  Matrix kernel_gens = inclusion(i + 1) * cover(i + 1).generators;
  auto s = find_splitting(m, c, kernel_gens);
  return {s.has_value(), s, c};
}

ResolutionReport resolve(SyzygyChain& chain, std::size_t cutoff) {
  if (cutoff == 0) throw InputError("cutoff must be at least 1");
  ResolutionReport report{chain.syzygy(0), {}, Verdict::at_least(cutoff), cutoff, std::nullopt};
  for (std::size_t d = 0; d < cutoff; ++d) {
    std::optional<ProjectivityTest> tested;
    try {
      tested = chain.test_projective(d);
    } catch (const ResolutionLimit&) {
      report.pd = Verdict::at_least(d);
      report.truncated = true;
      break;
    }
    const ProjectivityTest& test = *tested;
    ResolutionStep step;
    step.rank = chain.cover(d).rank();
    step.boundary = d == 0 ? chain.cover(0).projection : chain.inclusion(d) * chain.cover(d).projection;
    step.syzygy_dim = chain.syzygy(d + 1).dim();
    step.projective = test.projective;
    report.steps.push_back(std::move(step));
    if (test.projective) {
      report.pd = Verdict::finite(d);
      report.splitting = test.splitting;
      break;
    }
  }
  return report;
}

ResolutionReport resolve(const Module& m, std::size_t cutoff) {
  SyzygyChain chain(m);
  return resolve(chain, cutoff);
}

Verdict projective_dimension(const Module& m, std::size_t cutoff) {
  return resolve(m, cutoff).pd;
}

CheckResult check_resolution(const ResolutionReport& r) {
  CheckResult res;
  const auto& steps = r.steps;
  for (std::size_t d = 0; d < steps.size(); ++d) {
    const Matrix& b = steps[d].boundary;
    std::size_t rk = rank(b);
    if (d == 0 && rk != r.module.dim()) res.fail("cover is not surjective");
    if (b.cols() - rk != steps[d].syzygy_dim) res.fail("syzygy dimension differs from the kernel at step " + std::to_string(d));
    if (d + 1 < steps.size()) {
      const Matrix& next = steps[d + 1].boundary;
      if (!(b * next).is_zero()) res.fail("boundaries do not compose to zero at step " + std::to_string(d));
      if (rank(next) != steps[d].syzygy_dim) res.fail("not exact at step " + std::to_string(d));
    }
  }
  if (r.pd.is_finite()) {
    if (r.pd.value + 1 != steps.size() || !steps.back().projective) res.fail("finite verdict without a projective step");
    if (!r.splitting) res.fail("finite verdict without a splitting");
  }
  return res;
}

std::size_t tor_from_chain(SyzygyChain& chain, const Module& other, std::size_t i, Resolve chain_side) {
  if (i == 0) throw InputError("use the tensor product for Tor_0");
  const Module& k = chain.syzygy(i);
  if (k.dim() == 0) return 0;
  const Matrix& incl = chain.inclusion(i);
  std::size_t r = chain.cover(i - 1).rank(), da = k.algebra()->dim(), dk = k.dim(), d = other.dim();
  const Field& f = k.field();
  if (d == 0) return 0;
  TensorQuotient q = chain_side == Resolve::First ? tensor_over_algebra(k, other) : tensor_over_algebra(other, k);
  if (q.dim == 0) return 0;
  // F (x) other is other^r.
  Matrix phi(f, r * d, dk * d);
  for (std::size_t c = 0; c < dk; ++c)
    for (std::size_t l = 0; l < r; ++l) {
      Matrix coef = coefficient(incl, c, l, da);
      if (coef.is_zero()) continue;
      Matrix op = other.act(coef);
      if (chain_side == Resolve::First) {
        phi.set_block(l * d, c * d, op);
      } else {
        for (std::size_t x = 0; x < d; ++x) phi.set_block(l * d, x * dk + c, op.column(x));
      }
    }
  return q.dim - rank(phi * q.section);
}

std::vector<std::size_t> tor(const Module& x, const Module& y, std::size_t i_max, Resolve which) {
  if (x.side() != Side::Right || y.side() != Side::Left) throw InputError("Tor needs a right and a left module");
  if (!same_algebra(x.algebra(), y.algebra())) throw InputError("Tor arguments over different algebras");
  Module xu = ungraded(x), yu = ungraded(y);
  std::vector<std::size_t> out{tensor_over_algebra(xu, yu).dim};
  SyzygyChain chain(which == Resolve::First ? xu : yu);
  const Module& other = which == Resolve::First ? yu : xu;
  for (std::size_t i = 1; i <= i_max; ++i) out.push_back(tor_from_chain(chain, other, i, which));
  return out;
}

Verdict nilpotency_index(const Bimodule& m, std::size_t cutoff) {
  if (cutoff == 0) throw InputError("cutoff must be at least 1");
  if (!same_algebra(m.left_algebra(), m.right_algebra())) throw InputError("nilpotency needs an R-R bimodule");
  Bimodule cur = m;
  for (std::size_t k = 1; k <= cutoff; ++k) {
    if (cur.dim() == 0) return Verdict::finite(k);
    if (k == cutoff) break;
    cur = tensor(cur, m).result;
  }
  return Verdict::at_least(cutoff);
}

const char* perfectness_name(Perfectness p) {
  switch (p) {
    case Perfectness::LeftPerfect:
      return "LeftPerfect";
    case Perfectness::NotLeftPerfect:
      return "NotLeftPerfect";
    case Perfectness::Inconclusive:
      return "Inconclusive";
  }
  return "";
}

PerfectnessReport left_perfect_check(const Bimodule& m, std::size_t pd_cutoff, std::size_t nil_cutoff) {
  if (!same_algebra(m.left_algebra(), m.right_algebra())) throw InputError("perfectness needs an R-R bimodule");
  PerfectnessReport report;
  report.nilpotency = nilpotency_index(m, nil_cutoff);
  SyzygyChain left_m(m.as_left());
  report.pd = resolve(left_m, pd_cutoff).pd;
  if (!report.nilpotency.is_finite()) {
    report.reason = "nilpotency index not reached within the cutoff";
    return report;
  }
  std::size_t k = report.nilpotency.value;
  // Powers M^(x)j for 1 <= j < k, as left modules with their resolutions.
  std::vector<SyzygyChain> chains;
  std::vector<Module> rights;
  Bimodule cur = m;
  for (std::size_t j = 1; j < k; ++j) {
    if (j > 1) cur = tensor(cur, m).result;
    chains.emplace_back(cur.as_left());
    rights.push_back(ungraded(cur.as_right()));
    report.power_pd.push_back(j == 1 ? report.pd : resolve(chains.back(), pd_cutoff).pd);
  }
  bool all_finite = report.pd.is_finite();
  std::size_t range = 0;
  for (const auto& v : report.power_pd) {
    all_finite = all_finite && v.is_finite();
    range = std::max(range, v.value);
  }
  Module m_right = ungraded(m.as_right());
  bool table_zero = true, mirror_zero = true;
  std::size_t reached = 0;
  try {
    for (std::size_t i = 1; i <= range; ++i) {
      for (std::size_t j = 1; j < k; ++j) {
        std::size_t t = tor_from_chain(chains[j - 1], m_right, i, Resolve::Second);
        std::size_t u = tor_from_chain(left_m, rights[j - 1], i, Resolve::Second);
        report.tor_table[{i, j}] = t;
        report.mirror_table[{i, j}] = u;
        if (t != 0 && !report.witness) report.witness = TorWitness{i, j, t};
        table_zero = table_zero && t == 0;
        mirror_zero = mirror_zero && u == 0;
      }
      reached = i;
    }
  } catch (const ResolutionLimit&) {
    all_finite = false;
  }
  report.tor_range = reached;
  report.mirror_consistent = table_zero == mirror_zero;
  if (report.witness) {
    report.verdict = Perfectness::NotLeftPerfect;
    report.reason = "nonzero Tor_" + std::to_string(report.witness->i) + "(M, M^" + std::to_string(report.witness->j) + ")";
  } else if (!all_finite) {
    report.reason = "projective dimension not reached within the cutoff";
  } else {
    report.verdict = Perfectness::LeftPerfect;
  }
  return report;
}

PdBoundReport pd_bound_check_tensor_powers(const PerfectnessReport& report) {
  PdBoundReport out;
  out.power_pd = report.power_pd;
  if (report.verdict != Perfectness::LeftPerfect || !report.pd.is_finite()) {
    out.reason = "M is not known to be left perfect";
    return out;
  }
  out.applicable = true;
  out.base_pd = report.pd.value;
  out.holds = true;
  for (std::size_t i = 1; i <= report.power_pd.size(); ++i) {
    const auto& v = report.power_pd[i - 1];
    if (!v.is_finite() || v.value > i * out.base_pd) {
      out.holds = false;
      out.reason = "bound fails for M^" + std::to_string(i);
      break;
    }
  }
  return out;
}

PdBoundReport pd_bound_check_tensor_powers(const Bimodule& m, std::size_t pd_cutoff, std::size_t nil_cutoff) {
  return pd_bound_check_tensor_powers(left_perfect_check(m, pd_cutoff, nil_cutoff));
}

std::vector<Module> one_dimensional_modules(const AlgebraPtr& a) {
  const Field& f = a->field();
  std::size_t n = a->dim();
  std::uint64_t base = 2;
  if (auto q = f.size(); q) {
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
      total *= *q;
      small = total <= kExhaustLimit;
    }
    if (small) base = *q;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    if (total > kExhaustLimit) throw InputError("algebra too large for the character search");
  }
  std::vector<Scalar> chi(n);
  auto value = [&](const SparseVector& v) {
    Scalar s = f.zero();
    for (const auto& [idx, c] : v) s = f.add(s, f.mul(c, chi[idx]));
    return s;
  };
  std::vector<Module> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      chi[i] = f.from_int(static_cast<std::int64_t>(c % base));
      c /= base;
    }
    Scalar u = f.zero();
    for (std::size_t i = 0; i < n; ++i) u = f.add(u, f.mul(a->unit()[i], chi[i]));
    if (!f.is_one(u)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = value(a->product(i, j)) == f.mul(chi[i], chi[j]);
    if (!ok) continue;
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix op(f, 1, 1);
      op.set(0, 0, chi[j]);
      ops.push_back(op);
    }
    out.emplace_back(a, Side::Right, 1, ops);
  }
  return out;
}

}  // namespace injgen
