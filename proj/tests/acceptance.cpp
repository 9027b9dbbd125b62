// Acceptance gate: one PASS/FAIL line per criterion, each backed by a check
// computed here independently of the library's own report.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "injgen/builders.hpp"
#include "injgen/corpus.hpp"
#include "injgen/random.hpp"
#include "injgen/reduction.hpp"
#include "injgen/verification.hpp"

using namespace injgen;
namespace fs = std::filesystem;

namespace {

const Field F3 = Field::prime(3);

// dim X (x)_A Y for a right X and a left Y: the plain tensor product modulo
// the span of xa (x) y - x (x) ay over basis elements a.
std::size_t tensor_dim_oracle(const Module& x, const Module& y) {
  const Field& f = x.field();
  std::size_t n = x.dim() * y.dim();
  if (n == 0) return 0;
  std::vector<Matrix> parts;
  for (std::size_t j = 0; j < x.algebra()->dim(); ++j)
    parts.push_back(Matrix::kron(x.action(j), Matrix::identity(f, y.dim())) -
                    Matrix::kron(Matrix::identity(f, x.dim()), y.action(j)));
  return n - rank(Matrix::hstack(f, n, parts));
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

bool verified_iso(const Module& source, const Module& target, const IsoSearch& s, bool graded) {
  return s.iso && s.conclusive && invertible(*s.iso) && is_module_hom(source, target, *s.iso, graded);
}

std::map<GroupElem, std::size_t> degree_counts(const Module& m) {
  std::map<GroupElem, std::size_t> out;
  for (const auto& d : m.degrees()) ++out[d];
  return out;
}

struct CriterionResult {
  bool pass = true;
  std::string detail;
};

// Collects failures with a short reason.
class Tracker {
 public:
  void require(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  CriterionResult done(const std::string& summary) const {
    std::ostringstream s;
    s << summary << " (" << total_ - failed_ << "/" << total_ << ")";
    for (const auto& f : failures_) s << "; failed: " << f;
    return {failed_ == 0, s.str()};
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult covering_dimension_law(const Corpus&) {
  Rng rng(kDefaultSeed + 1);
  Tracker t;
  for (int i = 0; i < 25; ++i) {
    auto r = random_graded_algebra(F3, rng, 8, 8);
    auto cov = covering_ring(r);
    const auto& g = r->group();
    std::size_t by_blocks = 0;
    for (const auto& a : g.elements())
      for (const auto& b : g.elements()) by_blocks += r->component(g.sub(b, a)).size();
    std::string tag = "sample " + std::to_string(i);
    t.require(cov.ring->dim() == g.order() * r->dim() && by_blocks == cov.ring->dim(), tag + " dimension");
    t.require(check_algebra_axioms(*cov.ring).ok(), tag + " axioms");

    Matrix total(F3, cov.ring->dim(), 1);
    for (std::size_t a = 0; a < g.order(); ++a) {
      Matrix ea = cov.block_idempotent(a);
      total = total + ea;
      for (std::size_t b = 0; b < g.order(); ++b) {
        Matrix prod = cov.ring->multiply(ea, cov.block_idempotent(b));
        t.require(a == b ? prod == ea : prod.is_zero(), tag + " block idempotents");
      }
    }
    t.require(total == cov.ring->unit_vector(), tag + " idempotents sum to one");
  }
  return t.done("25 coverings with dim |G| dim R, valid axioms and orthogonal block idempotents");
}

// phi and psi vanish exactly when every product of an N basis element with an
// M basis element (in either order) is zero inside the covering ring.
bool zero_maps_oracle(const CoveringRing& cov, const SplitCovering& split) {
  for (auto n : split.n_idx)
    for (auto m : split.m_idx)
      if (!cov.ring->product(n, m).empty() || !cov.ring->product(m, n).empty()) return false;
  return true;
}

CriterionResult zero_context_detection(const Corpus& corpus) {
  Rng rng(kDefaultSeed + 2);
  Tracker t;
  for (int i = 0; i < 25; ++i) {
    auto r = random_upper_half_zero_algebra(F3, rng, 3, 8);
    auto cov = covering_ring(r);
    auto split = split_covering(cov, half_split_index(r->group()));
    bool verdict = verify_zero_context(split.context);
    t.require(verdict && zero_maps_oracle(cov, split), "sample " + std::to_string(i));
  }
  auto group = corpus.at("group-z2").algebra("algebra");
  auto cov = covering_ring(group);
  auto split = split_covering(cov, half_split_index(group->group()));
  t.require(!verify_zero_context(split.context) && !zero_maps_oracle(cov, split), "group algebra kZ/2");
  return t.done("zero maps on 25 upper-half-zero splits, nonzero on kZ/2");
}

CriterionResult covering_round_trip(const Corpus&) {
  Rng rng(kDefaultSeed + 3);
  Tracker t;
  for (int i = 0; i < 25; ++i) {
    auto r = random_graded_algebra(F3, rng, 6, 6);
    Module m = random_graded_module(r, rng, 8);
    auto cov = covering_ring(r);
    Module forward = covering_module(cov, m);
    Module back = covering_module_inverse(cov, forward);
    std::string tag = "sample " + std::to_string(i);
    t.require(forward.dim() == m.dim() && back.dim() == m.dim(), tag + " dimensions");
    t.require(degree_counts(back) == degree_counts(m), tag + " degree counts");
    t.require(verified_iso(back, m, find_isomorphism(back, m, true), true), tag + " graded isomorphism");
  }
  return t.done("25 graded modules recovered up to verified graded isomorphism");
}

CriterionResult morita_tensor_formula(const Corpus&) {
  Rng rng(kDefaultSeed + 4);
  Tracker t;
  for (int i = 0; i < 20; ++i) {
    auto inst = random_morita_instance(F3, rng);
    auto rep = tensor_formula_check(inst.context, inst.right, inst.left);
    auto ring = morita_ring(inst.context);
    std::size_t oracle = tensor_dim_oracle(tuple_to_module(ring, inst.right), tuple_to_module(ring, inst.left));
    std::string tag = inst.description;
    t.require(rep.ok && rep.direct_dim == rep.formula_dim && rep.direct_dim == oracle, tag + " dimension");
    t.require(rep.iso && invertible(*rep.iso) && rep.iso->rows() == oracle, tag + " explicit isomorphism");
  }
  for (int i = 0; i < 10; ++i) {
    auto inst = random_triangular_instance(F3, rng);
    auto rep = triangular_tensor_check(inst.context, inst.right, inst.z);
    t.require(rep.ok && rep.direct_dim == tensor_dim_oracle(inst.right.y, inst.z), inst.description);
  }
  return t.done("20 Morita instances and 10 triangular ones against the Kronecker tensor oracle");
}

CriterionResult block_power_law(const Corpus& corpus) {
  const auto& e = corpus.at("a3-arrows");
  auto a = e.algebra("base");
  Bimodule n = e.bimodule("bimodule");
  Tracker t;

  std::vector<std::size_t> n_dims{a->dim(), n.dim()};
  Bimodule cur = n;
  for (std::size_t j = 2; j <= 5; ++j) {
    cur = tensor(cur, n).result;
    n_dims.push_back(cur.dim());
  }

  auto rep = block_power_check(a, n, 2);
  auto ring = morita_ring(zero_context(a, a, n, Bimodule(a, a, 0, std::vector<Matrix>(a->dim(), Matrix(F3, 0, 0)),
                                                         std::vector<Matrix>(a->dim(), Matrix(F3, 0, 0)))));
  TensorPowers powers(n, 5);
  Bimodule block = block_power_bimodule(ring, powers, 2);
  std::vector<std::size_t> direct{block.dim(), tensor_dim_oracle(block.as_right(), block.as_left())};

  t.require(rep.rows.size() == 2, "two rows reported");
  for (std::size_t i = 1; i <= 2; ++i) {
    std::size_t predicted = 2 * n_dims[2 * i] + (2 * i + 1 < n_dims.size() ? n_dims[2 * i + 1] : 0) + n_dims[2 * i - 1];
    std::string tag = "i = " + std::to_string(i);
    t.require(direct[i - 1] == predicted, tag + " oracle dimension");
    if (i <= rep.rows.size()) {
      const auto& row = rep.rows[i - 1];
      t.require(row.direct_dim == predicted && row.predicted_dim == predicted && row.isomorphic && row.conclusive,
                tag + " library row");
    }
  }
  std::ostringstream s;
  s << "dim M^i over Lambda = " << direct[0] << ", " << direct[1] << " matches the block formula";
  return t.done(s.str());
}

bool low_degrees_match(const Bimodule& m, const TensorRing& tr) {
  const auto& ring = *tr.ring;
  const auto& r = *m.left_algebra();
  std::size_t dr = r.dim();
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j)
      if (to_dense(r.field(), ring.dim(), ring.product(i, j)) !=
          Matrix::vstack(r.field(), 1, {to_dense(r.field(), dr, r.product(i, j)), Matrix(r.field(), ring.dim() - dr, 1)}))
        return false;
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      Matrix left = to_dense(r.field(), ring.dim(), ring.product(i, dr + c)).block(dr, 0, m.dim(), 1);
      Matrix right = to_dense(r.field(), ring.dim(), ring.product(dr + c, i)).block(dr, 0, m.dim(), 1);
      if (left != m.left_action(i).column(c) || right != m.right_action(i).column(c)) return false;
    }
  return true;
}

CriterionResult degeneracy_identities(const Corpus& corpus) {
  Tracker t;
  for (const char* entry : {"a2-arrows", "a3-arrows", "corner-pd", "loop-arrows"}) {
    Bimodule m = corpus.at(entry).bimodule("bimodule");
    Matrix zero(m.field(), m.dim(), m.dim() * m.dim());
    t.require(canonical_dump(algebra_to_json(*theta_extension(m, zero))) ==
                  canonical_dump(algebra_to_json(*trivial_extension(m))),
              std::string(entry) + " theta = 0");
    Verdict nil = nilpotency_index(m, 6);
    if (nil.is_finite()) {
      auto tr = tensor_ring(m, nil.value);
      t.require(tr.ring->dim() >= m.left_algebra()->dim() + m.dim() && low_degrees_match(m, tr),
                std::string(entry) + " tensor ring degrees 0 and 1");
    }
  }
  const auto& tw = corpus.at("twisted-z2xz2");
  std::vector<AlgebraPtr> algebras{tw.algebra("a"), tw.algebra("b"), corpus.at("group-z2").algebra("algebra"),
                                   corpus.at("dual-numbers").algebra("graded")};
  for (const auto& a : algebras)
    for (const auto& b : algebras)
      t.require(canonical_dump(algebra_to_json(*twisted_tensor(*a, *b, Bicharacter::trivial(F3, a->group(),
                                                                                             b->group())))) ==
                    canonical_dump(algebra_to_json(*tensor_product(*a, *b))),
                "trivial twist");
  return t.done("theta = 0, t = 1 and tensor ring low degrees are bitwise the plain constructions");
}

CriterionResult twisted_tensor_isomorphisms(const Corpus& corpus) {
  const auto& e = corpus.at("twisted-z2xz2");
  auto a = e.algebra("a");
  auto b = e.algebra("b");
  Bicharacter t{F3, a->group(), b->group(), {}};
  for (const auto& row : e.parameters.at("t")) {
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(F3, v));
    t.values.push_back(r);
  }
  Tracker tr;
  tr.require(check_bicharacter(t).ok, "bicharacter");
  std::vector<Module> ms{dual_regular(a), regular_right(a), twist(regular_right(a), a->group().element(1))};
  std::vector<Module> ns{regular_right(b), twist(dual_regular(b), b->group().element(1))};
  auto rep = twisted_isomorphism_check(a, b, t, ms, ns);
  auto ab = twisted_tensor(*a, *b, t);

  std::size_t k = 0;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j + 1 < ms.size(); ++j, ++k) {
      Module lhs = twisted_module(direct_sum(ms[j], ms[j + 1]), ns[i], ab, t);
      Module rhs = direct_sum(twisted_module(ms[j], ns[i], ab, t), twisted_module(ms[j + 1], ns[i], ab, t));
      tr.require(k < rep.additivity.size() && verified_iso(lhs, rhs, rep.additivity[k].search, true),
                 "additivity " + std::to_string(k));
    }
  tr.require(verified_iso(dual_regular(ab), twisted_module(dual_regular(a), dual_regular(b), ab, t),
                          rep.duality.search, true),
             "duality");
  Module base = twisted_module(ms[0], ns[0], ab, t);
  k = 0;
  for (const auto& g : a->group().elements())
    for (const auto& h : b->group().elements()) {
      GroupElem gh = g;
      gh.insert(gh.end(), h.begin(), h.end());
      Module lhs = twisted_module(twist(ms[0], g), twist(ns[0], h), ab, t);
      tr.require(k < rep.shifts.size() && verified_iso(lhs, twist(base, gh), rep.shifts[k].search, true),
                 "shift " + std::to_string(k));
      ++k;
    }
  return tr.done("additivity, duality and shift isomorphisms re-verified as graded module maps");
}

CriterionResult corner_tuple_pd(const Corpus& corpus) {
  const auto& e = corpus.at("corner-pd");
  auto a = e.algebra("algebra");
  Bimodule m = e.bimodule("bimodule");
  std::size_t bound = e.parameters.value("pd_bound", 6);
  auto ctx = zero_context(a, a, m, m);
  auto rep = morita_corner_pd(ctx);
  auto ring = morita_ring(ctx);
  std::vector<TupleModule> tuples{functor_z_a(ctx, regular_left(a)), functor_z_b(ctx, regular_left(a)),
                                  functor_z_a(ctx, with_algebra(m.as_left(), a)),
                                  functor_z_b(ctx, with_algebra(m.as_left(), a))};
  Tracker t;
  t.require(rep.corners.size() == 4, "four corners");
  std::ostringstream s;
  s << "pd of the corner tuples:";
  for (std::size_t i = 0; i < tuples.size() && i < rep.corners.size(); ++i) {
    t.require(check_tuple(ctx, tuples[i]).ok, rep.corners[i].first + " tuple axioms");
    auto res = resolve(tuple_to_module(ring, tuples[i]), bound + 2);
    const Verdict& v = rep.corners[i].second;
    t.require(v.is_finite() && v.value <= bound, rep.corners[i].first + " finite within the bound");
    t.require(res.pd == v && check_resolution(res).ok && res.splitting.has_value(),
              rep.corners[i].first + " independent resolution");
    s << " " << rep.corners[i].first << "=" << to_string(v);
  }
  return t.done(s.str());
}

CriterionResult cleft_tor_vanishing(const Corpus& corpus) {
  const auto& e = corpus.at("theta-a3");
  auto data = tensor_ring_theta(e.bimodule("bimodule"), e.parameters.value("k", 3));
  ThetaFunctors theta(data.m, data.theta);
  Rng rng(kDefaultSeed + 9);
  std::vector<Module> tests = one_dimensional_modules(theta.extension());
  std::size_t characters = tests.size();
  for (int i = 0; i < 10; ++i) tests.push_back(random_module(theta.extension(), Side::Right, rng, 6));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tests.size(); ++i)
    labels.push_back(i < characters ? "character " + std::to_string(i) : "random " + std::to_string(i - characters));
  auto rep = cleft_vanishing_check(theta, tests, labels);

  Tracker t;
  t.require(characters > 0, "one-dimensional modules found");
  t.require(rep.holds && rep.complete, "library report");
  Module r = theta.base_as_left_module();
  for (std::size_t i = 0; i < tests.size(); ++i) {
    auto dims = tor(tests[i], r, rep.checked_up_to, Resolve::First);
    bool zero = true;
    for (std::size_t n = rep.bound; n < dims.size(); ++n) zero = zero && dims[n] == 0;
    t.require(zero, labels[i] + " Tor by resolving X");
  }
  std::ostringstream s;
  s << characters << " characters and 10 random modules: Tor_n(X, R) = 0 for " << rep.bound << " <= n <= "
    << rep.checked_up_to << " (n = " << rep.n << ", s = " << rep.s << ", pd R = " << to_string(rep.pd_r)
    << "; bound n + s - 2 = " << rep.stated_bound << (rep.stated_bound_holds ? " also holds" : " fails") << ")";
  return t.done(s.str());
}

CriterionResult reduction_soundness(const Corpus& corpus) {
  fs::path dir = fs::temp_directory_path() / ("injgen-acceptance-" + std::to_string(kDefaultSeed));
  fs::remove_all(dir);
  Tracker t;
  std::string status, halved_status;
  {
    Registry reg(dir);
    const auto& e = corpus.at("a2-arrows");
    register_algebra(reg, *e.algebra("base"), "k2");
    std::string m = register_bimodule(reg, e.bimodule("bimodule"), "arrows");
    std::string target = build(reg, {"tensor-ring", {{"bimodule", m}}, Json::object()}, "tensor-ring");

    DeriveOptions full;
    Json cert = emit_certificate(ReductionEngine(reg, full).derive(target), full);
    status = cert.at("status");
    write_json_file(dir / "certificate.json", cert);

    DeriveOptions half = full;
    half.pd_cutoff /= 2;
    half.nil_cutoff /= 2;
    Status halved = ReductionEngine(reg, half).derive(target).status;
    halved_status = status_name(halved);
    t.require(status == "Established", "full cutoffs give Established");
    t.require(halved != Status::Unknown, "halved cutoffs give Conditional or Established");
  }
  Registry fresh(dir);
  Json cert = read_json_file(dir / "certificate.json");
  auto check = validate_certificate(fresh, cert);
  t.require(check.ok, "certificate re-verified from a reloaded registry");
  Json tampered = cert;
  if (!tampered["steps"][0]["hypotheses"].empty()) tampered["steps"][0]["hypotheses"][0]["status"] = "refuted";
  t.require(!validate_certificate(fresh, tampered).ok, "tampered certificate rejected");
  fs::remove_all(dir);
  return t.done("T_R(M) is " + status + ", halved cutoffs give " + halved_status +
                ", certificate validates from disk");
}

CriterionResult tor_self_consistency(const Corpus&) {
  Rng rng(kDefaultSeed + 11);
  Tracker t;
  for (int i = 0; i < 25; ++i) {
    auto a = random_graded_algebra(F3, rng, 6, 6);
    Module x = random_module(a, Side::Right, rng, 8);
    Module y = random_module(a, Side::Left, rng, 8);
    auto first = tor(x, y, 3, Resolve::First);
    auto second = tor(x, y, 3, Resolve::Second);
    std::string tag = "pair " + std::to_string(i);
    t.require(first == second, tag + " both sides agree");
    t.require(!first.empty() && first[0] == tensor_dim_oracle(x, y), tag + " Tor_0 against the tensor oracle");
    t.require(check_resolution(resolve(x, 6)).ok && check_resolution(resolve(y, 6)).ok, tag + " boundaries");
  }
  return t.done("25 random pairs: Tor agrees from either side, resolutions compose to zero");
}

}  // namespace

int main() {
  const Corpus corpus = load_corpus(INJGEN_CORPUS_DIR);
  const std::vector<std::pair<std::string, std::function<CriterionResult(const Corpus&)>>> criteria{
      {"covering_dimension_law", covering_dimension_law},
      {"zero_context_detection", zero_context_detection},
      {"covering_round_trip", covering_round_trip},
      {"morita_tensor_formula", morita_tensor_formula},
      {"block_power_law", block_power_law},
      {"degeneracy_identities", degeneracy_identities},
      {"twisted_tensor_isomorphisms", twisted_tensor_isomorphisms},
      {"corner_tuple_pd", corner_tuple_pd},
      {"cleft_tor_vanishing", cleft_tor_vanishing},
      {"reduction_soundness", reduction_soundness},
      {"tor_self_consistency", tor_self_consistency},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult o;
    try {
      o = run(corpus);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << time.str() << " s]"
              << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
