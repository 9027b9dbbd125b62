#include "injgen/verification.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "injgen/builders.hpp"
#include "injgen/random.hpp"
#include "injgen/reduction.hpp"

namespace injgen {

namespace fs = std::filesystem;

TwistedIsoReport twisted_isomorphism_check(const AlgebraPtr& a, const AlgebraPtr& b, const Bicharacter& t,
                                           const std::vector<Module>& ms, const std::vector<Module>& ns) {
  if (ms.empty() || ns.empty()) throw PreconditionError("need at least one module on each side");
  auto ab = twisted_tensor(*a, *b, t);
  TwistedIsoReport out;
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j + 1 < ms.size(); ++j) {
      Module lhs = twisted_module(direct_sum(ms[j], ms[j + 1]), ns[i], ab, t);
      Module rhs = direct_sum(twisted_module(ms[j], ns[i], ab, t), twisted_module(ms[j + 1], ns[i], ab, t));
      out.additivity.push_back(
          {"M" + std::to_string(j) + "+M" + std::to_string(j + 1) + " x N" + std::to_string(i),
           find_isomorphism(lhs, rhs, true)});
    }
  out.duality = {"D(A x B)", find_isomorphism(dual_regular(ab), twisted_module(dual_regular(a), dual_regular(b), ab, t),
                                              true)};
  Module base = twisted_module(ms[0], ns[0], ab, t);
  for (const auto& g : a->group().elements())
    for (const auto& h : b->group().elements()) {
      GroupElem gh = g;
      gh.insert(gh.end(), h.begin(), h.end());
      Module lhs = twisted_module(twist(ms[0], g), twist(ns[0], h), ab, t);
      out.shifts.push_back({"(" + a->group().to_string(g) + ", " + b->group().to_string(h) + ")",
                            find_isomorphism(lhs, twist(base, gh), true)});
    }
  out.all_found = out.duality.search.iso.has_value();
  out.all_conclusive = out.duality.search.conclusive;
  for (const auto* rows : {&out.additivity, &out.shifts})
    for (const auto& r : *rows) {
      out.all_found = out.all_found && r.search.iso.has_value();
      out.all_conclusive = out.all_conclusive && r.search.conclusive;
    }
  return out;
}

const char* suite_status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{
      "covering-dimension", "zero-context",         "covering-round-trip", "covering-splits",
      "tensor-formula",     "block-power",          "degeneracy",          "twisted-isomorphisms",
      "corner-pd",          "cleft-vanishing",      "derive-soundness",    "tor-symmetry"};
  return names;
}

namespace {

// Tracks the worst outcome seen so far.
struct Tally {
  SuiteStatus status = SuiteStatus::Pass;
  std::size_t passed = 0, total = 0;

  void add(bool ok, bool conclusive = true) {
    ++total;
    if (ok) {
      ++passed;
    } else if (!conclusive) {
      if (status == SuiteStatus::Pass) status = SuiteStatus::Inconclusive;
    } else {
      status = SuiteStatus::Fail;
    }
  }
  std::string summary(const std::string& what) const {
    return std::to_string(passed) + "/" + std::to_string(total) + " " + what;
  }
};

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
  return seed ^ h;
}

Json iso_to_json(const IsoSearch& s) {
  return {{"found", s.iso.has_value()}, {"conclusive", s.conclusive}, {"hom_dim", s.hom_dim}};
}

std::map<std::string, std::size_t> degree_counts(const Module& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& d : m.degrees()) ++out[m.algebra()->group().to_string(d)];
  return out;
}

SuiteCheck covering_dimension(const SuiteOptions& opts, Rng& rng) {
  Tally tally;
  Json rows = Json::array();
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto r = random_graded_algebra(opts.field, rng, 8, 8);
    auto cov = covering_ring(r);
    std::size_t expected = r->group().order() * r->dim();
    bool axioms = check_algebra_axioms(*cov.ring).ok();
    tally.add(cov.ring->dim() == expected && axioms);
    rows.push_back({{"dim", r->dim()}, {"group_order", r->group().order()}, {"covering_dim", cov.ring->dim()},
                    {"axioms", axioms}});
  }
  return {"covering-dimension", tally.status, tally.summary("coverings of dimension |G| dim R with valid axioms"),
          {{"rows", rows}}};
}

SuiteCheck zero_context(const Corpus& corpus, const SuiteOptions& opts, Rng& rng) {
  Tally tally;
  Json rows = Json::array();
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto r = random_upper_half_zero_algebra(opts.field, rng, 3, 8);
    auto split = split_covering(covering_ring(r), half_split_index(r->group()));
    bool zero = verify_zero_context(split.context);
    tally.add(zero);
    rows.push_back({{"dim", r->dim()}, {"group_order", r->group().order()}, {"zero_maps", zero}});
  }
  auto group = corpus.at("group-z2").algebra("algebra");
  bool group_zero = verify_zero_context(split_covering(covering_ring(group), half_split_index(group->group())).context);
  tally.add(!group_zero);
  return {"zero-context", tally.status, tally.summary("half splits with the expected zero-map verdict"),
          {{"rows", rows}, {"group_algebra_zero_maps", group_zero}}};
}

SuiteCheck covering_round_trip(const SuiteOptions& opts, Rng& rng) {
  Tally tally;
  Json rows = Json::array();
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto r = random_graded_algebra(opts.field, rng, 6, 6);
    Module m = random_graded_module(r, rng, 8);
    auto cov = covering_ring(r);
    Module back = covering_module_inverse(cov, covering_module(cov, m));
    auto iso = find_isomorphism(back, m, true);
    bool degrees = degree_counts(back) == degree_counts(m);
    tally.add(iso.iso.has_value() && degrees, iso.conclusive || !degrees);
    rows.push_back({{"dim", m.dim()}, {"degrees_match", degrees}, {"iso", iso_to_json(iso)}});
  }
  return {"covering-round-trip", tally.status, tally.summary("graded modules recovered up to graded isomorphism"),
          {{"rows", rows}}};
}

SuiteCheck covering_splits(const Corpus& corpus) {
  Tally tally;
  Json rows = Json::array();
  for (const auto& [entry, role] : {std::pair{"z4-truncated", "algebra"}, std::pair{"dual-numbers", "graded"}}) {
    auto r = corpus.at(entry).algebra(role);
    auto cov = covering_ring(r);
    std::vector<std::size_t> splits;
    const Json& p = corpus.at(entry).parameters;
    if (p.contains("splits"))
      splits = p.at("splits").get<std::vector<std::size_t>>();
    else
      splits = {half_split_index(r->group())};
    for (auto k : splits) {
      auto split = split_covering(cov, k);
      bool context = check_morita_context(split.context).ok;
      bool same = same_structure(*morita_ring(split.context).ring, *permute_basis(*cov.ring, split.permutation()));
      tally.add(context && same);
      rows.push_back({{"entry", entry}, {"k", k}, {"corner_a_dim", split.context.a->dim()},
                      {"corner_b_dim", split.context.b->dim()}, {"context_axioms", context}, {"same_ring", same}});
    }
  }
  return {"covering-splits", tally.status, tally.summary("splittings reproduce the covering ring"), {{"rows", rows}}};
}

SuiteCheck tensor_formula(const Corpus& corpus, const SuiteOptions& opts, Rng& rng) {
  Tally tally;
  Json rows = Json::array();
  for (std::size_t i = 0; i < std::max<std::size_t>(opts.samples, 20); ++i) {
    auto inst = random_morita_instance(opts.field, rng);
    auto rep = tensor_formula_check(inst.context, inst.right, inst.left);
    tally.add(rep.ok && rep.iso.has_value());
    rows.push_back({{"instance", inst.description}, {"direct_dim", rep.direct_dim}, {"formula_dim", rep.formula_dim},
                    {"explicit_iso", rep.iso.has_value()}, {"ok", rep.ok}});
  }
  Json triangular = Json::array();
  for (std::size_t i = 0; i < 10; ++i) {
    auto inst = random_triangular_instance(opts.field, rng);
    auto rep = triangular_tensor_check(inst.context, inst.right, inst.z);
    tally.add(rep.ok);
    triangular.push_back({{"instance", inst.description}, {"direct_dim", rep.direct_dim},
                          {"expected_dim", rep.expected_dim}, {"ok", rep.ok}});
  }
  auto r = corpus.at("dual-numbers").algebra("graded");
  auto ctx = split_covering(covering_ring(r), half_split_index(r->group())).context;
  auto rep = tensor_formula_check(ctx, functor_t_a(ctx, corner_a(ctx, Side::Right)),
                                  functor_t_b(ctx, corner_b(ctx, Side::Left)));
  tally.add(rep.ok);
  return {"tensor-formula", tally.status, tally.summary("tuple tensor products match the direct tensor"),
          {{"random", rows}, {"triangular", triangular},
           {"dual_numbers_split", {{"direct_dim", rep.direct_dim}, {"formula_dim", rep.formula_dim}}}}};
}

SuiteCheck block_power(const Corpus& corpus, const SuiteOptions& opts) {
  const auto& e = corpus.at("a3-arrows");
  auto rep = block_power_check(e.algebra("base"), e.bimodule("bimodule"), e.parameters.value("block_powers", 2),
                               opts.pd_cutoff, opts.nil_cutoff);
  Tally tally;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    tally.add(r.direct_dim == r.predicted_dim && r.isomorphic, r.conclusive || r.direct_dim != r.predicted_dim);
    rows.push_back({{"i", r.i}, {"direct_dim", r.direct_dim}, {"predicted_dim", r.predicted_dim},
                    {"isomorphic", r.isomorphic}, {"conclusive", r.conclusive}});
  }
  tally.add(rep.vanishing_consistent);
  return {"block-power", tally.status, tally.summary("block tensor powers match the predicted blocks"),
          {{"rows", rows}, {"nilpotency", verdict_to_json(rep.nilpotency)},
           {"base_vanishing", rep.base_vanishing}, {"block_vanishing", rep.block_vanishing}}};
}

bool tensor_ring_low_degrees(const Bimodule& m, const TensorRing& tr) {
  const auto& ring = *tr.ring;
  const auto& r = *m.left_algebra();
  std::size_t dr = r.dim(), dm = m.dim();
  if (tr.offsets.size() < 2 || tr.offsets[0] != 0 || tr.offsets[1] != dr || ring.dim() < dr + dm) return false;
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j)
      if (ring.product(i, j) != r.product(i, j)) return false;
  auto shifted = [&](const Matrix& col) {
    SparseVector v = to_sparse(col);
    for (auto& [k, c] : v) k += dr;
    return v;
  };
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t c = 0; c < dm; ++c) {
      if (ring.product(i, dr + c) != shifted(m.left_action(i).column(c))) return false;
      if (ring.product(dr + c, i) != shifted(m.right_action(i).column(c))) return false;
    }
  return true;
}

SuiteCheck degeneracy(const Corpus& corpus) {
  Tally tally;
  Json theta_rows = Json::array(), twist_rows = Json::array(), ring_rows = Json::array();
  for (const auto& [entry, role] : {std::pair{"a2-arrows", "bimodule"}, std::pair{"a3-arrows", "bimodule"},
                                    std::pair{"corner-pd", "bimodule"}, std::pair{"loop-arrows", "bimodule"}}) {
    Bimodule m = corpus.at(entry).bimodule(role);
    Matrix zero(m.field(), m.dim(), m.dim() * m.dim());
    bool same = algebra_to_json(*theta_extension(m, zero)) == algebra_to_json(*trivial_extension(m));
    tally.add(same);
    theta_rows.push_back({{"entry", entry}, {"bitwise_equal", same}});
    Verdict nil = nilpotency_index(m, 6);
    if (nil.is_finite()) {
      auto tr = tensor_ring(m, std::max<std::size_t>(nil.value, 1));
      bool low = tensor_ring_low_degrees(m, tr);
      tally.add(low);
      ring_rows.push_back({{"entry", entry}, {"k", tr.nilpotency}, {"degree_0_1_equal", low}});
    }
  }
  const auto& tw = corpus.at("twisted-z2xz2");
  std::vector<AlgebraPtr> algebras{tw.algebra("a"), tw.algebra("b"), corpus.at("group-z2").algebra("algebra"),
                                   corpus.at("dual-numbers").algebra("ungraded")};
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = 0; j < algebras.size(); ++j) {
      const auto& a = *algebras[i];
      const auto& b = *algebras[j];
      if (a.field() != b.field()) continue;
      bool same = algebra_to_json(*twisted_tensor(a, b, Bicharacter::trivial(a.field(), a.group(), b.group()))) ==
                  algebra_to_json(*tensor_product(a, b));
      tally.add(same);
      twist_rows.push_back({{"pair", {i, j}}, {"bitwise_equal", same}});
    }
  return {"degeneracy", tally.status, tally.summary("degenerate constructions equal their plain versions"),
          {{"theta_zero", theta_rows}, {"trivial_twist", twist_rows}, {"tensor_ring", ring_rows}}};
}

Bicharacter corpus_bicharacter(const CorpusEntry& e, const AlgebraPtr& a, const AlgebraPtr& b) {
  Bicharacter t{a->field(), a->group(), b->group(), {}};
  for (const auto& row : e.parameters.at("t")) {
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(a->field(), v));
    t.values.push_back(r);
  }
  auto check = check_bicharacter(t);
  if (!check.ok) throw InputError(e.name + ": " + check.failures.front());
  return t;
}

SuiteCheck twisted_isomorphisms(const Corpus& corpus) {
  const auto& e = corpus.at("twisted-z2xz2");
  auto a = e.algebra("a");
  auto b = e.algebra("b");
  auto t = corpus_bicharacter(e, a, b);
  GroupElem one_a = a->group().element(1), one_b = b->group().element(1);
  std::vector<Module> ms{dual_regular(a), regular_right(a), twist(regular_right(a), one_a)};
  std::vector<Module> ns{regular_right(b), twist(dual_regular(b), one_b)};
  auto rep = twisted_isomorphism_check(a, b, t, ms, ns);
  Tally tally;
  auto rows_json = [&](const std::vector<TwistedIsoRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
      tally.add(r.search.iso.has_value() && r.search.conclusive, r.search.conclusive);
      out.push_back({{"label", r.label}, {"search", iso_to_json(r.search)}});
    }
    return out;
  };
  Json additivity = rows_json(rep.additivity);
  Json shifts = rows_json(rep.shifts);
  tally.add(rep.duality.search.iso.has_value() && rep.duality.search.conclusive, rep.duality.search.conclusive);
  return {"twisted-isomorphisms", tally.status, tally.summary("graded isomorphisms found conclusively"),
          {{"additivity", additivity}, {"duality", iso_to_json(rep.duality.search)}, {"shifts", shifts}}};
}

SuiteCheck corner_pd(const Corpus& corpus, const SuiteOptions& opts) {
  const auto& e = corpus.at("corner-pd");
  auto a = e.algebra("algebra");
  Bimodule m = e.bimodule("bimodule");
  std::size_t bound = e.parameters.value("pd_bound", 6);
  auto rep = morita_corner_pd(zero_context(a, a, m, m), opts.pd_cutoff, opts.nil_cutoff);
  Tally tally;
  Json rows = Json::array();
  for (const auto& [label, v] : rep.corners) {
    tally.add(v.is_finite() && v.value <= bound, v.is_finite());
    rows.push_back({{"corner", label}, {"pd", verdict_to_json(v)}});
  }
  return {"corner-pd", tally.status, tally.summary("corner tuples of finite pd within the bound"),
          {{"corners", rows}, {"bound", bound}, {"perfectness", perfectness_to_json(rep.perfectness)}}};
}

SuiteCheck cleft_vanishing(const Corpus& corpus, const SuiteOptions& opts, Rng& rng) {
  const auto& e = corpus.at("theta-a3");
  auto data = tensor_ring_theta(e.bimodule("bimodule"), e.parameters.value("k", 3));
  ThetaFunctors theta(data.m, data.theta);
  std::vector<Module> tests = one_dimensional_modules(theta.extension());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tests.size(); ++i) labels.push_back("character " + std::to_string(i));
  std::size_t random_tests = e.parameters.value("random_tests", 10);
  for (std::size_t i = 0; i < random_tests; ++i) {
    tests.push_back(random_module(theta.extension(), Side::Right, rng, 6));
    labels.push_back("random " + std::to_string(i));
  }
  auto rep = cleft_vanishing_check(theta, tests, labels, opts.pd_cutoff, opts.nil_cutoff);
  Tally tally;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    tally.add(r.vanishes);
    Json tor = Json::array();
    for (const auto& [n, d] : r.tor) tor.push_back({{"n", n}, {"dim", d}});
    rows.push_back({{"module", r.label}, {"tor", tor}, {"vanishes", r.vanishes}});
  }
  tally.add(rep.complete, false);
  return {"cleft-vanishing", tally.status, tally.summary("test modules with Tor vanishing from the bound on"),
          {{"n", rep.n}, {"s", rep.s}, {"bound", rep.bound}, {"stated_bound", rep.stated_bound},
           {"stated_bound_holds", rep.stated_bound_holds}, {"pd_r", verdict_to_json(rep.pd_r)},
           {"checked_up_to", rep.checked_up_to}, {"complete", rep.complete}, {"rows", rows}}};
}

fs::path scratch_registry(const SuiteOptions& opts) {
  if (!opts.scratch.empty()) return opts.scratch;
  std::random_device rd;
  return fs::temp_directory_path() / ("injgen-derive-" + std::to_string(rd()) + std::to_string(rd()));
}

SuiteCheck derive_soundness(const Corpus& corpus, const SuiteOptions& opts) {
  fs::path dir = scratch_registry(opts);
  bool temporary = opts.scratch.empty();
  SuiteCheck out{"derive-soundness", SuiteStatus::Pass, "", Json::object()};
  try {
    Registry reg(dir);
    const auto& arrows = corpus.at("a2-arrows");
    register_algebra(reg, *arrows.algebra("base"), "k2");
    std::string m = register_bimodule(reg, arrows.bimodule("bimodule"), "a2-arrows");
    std::string target = build(reg, {"tensor-ring", {{"bimodule", m}}, Json::object()}, "tensor-ring");

    DeriveOptions full{8, opts.pd_cutoff, opts.nil_cutoff};
    ReductionEngine engine(reg, full);
    Json cert = emit_certificate(engine.derive(target), full);
    auto check = validate_certificate(reg, cert);

    DeriveOptions half{8, std::max<std::size_t>(opts.pd_cutoff / 2, 1), std::max<std::size_t>(opts.nil_cutoff / 2, 1)};
    ReductionEngine halved(reg, half);
    Status halved_status = halved.derive(target).status;

    const auto& tw = corpus.at("twisted-z2xz2");
    std::string a = register_algebra(reg, *tw.algebra("a"), "twisted-a");
    std::string b = register_algebra(reg, *tw.algebra("b"), "twisted-b");
    std::string twisted = build(reg, {"twisted", {{"a", a}, {"b", b}}, {{"t", tw.parameters.at("t")}}}, "twisted");
    auto twisted_node = engine.derive(twisted);

    Tally tally;
    tally.add(cert.at("status") == "Established");
    tally.add(check.ok);
    tally.add(halved_status != Status::Unknown);
    tally.add(twisted_node.status == Status::Established && twisted_node.step && twisted_node.step->rule == "R-TWIST");
    out.status = tally.status;
    out.summary = tally.summary("derivation properties hold");
    out.evidence = {{"tensor_ring_status", cert.at("status")},
                    {"certificate_steps", cert.at("steps").size()},
                    {"validation_problems", check.problems},
                    {"halved_status", status_name(halved_status)},
                    {"twisted_status", status_name(twisted_node.status)}};
  } catch (...) {
    if (temporary) fs::remove_all(dir);
    throw;
  }
  if (temporary) fs::remove_all(dir);
  return out;
}

SuiteCheck tor_symmetry(const SuiteOptions& opts, Rng& rng) {
  Tally tally;
  Json rows = Json::array();
  for (std::size_t i = 0; i < opts.samples; ++i) {
    auto a = random_graded_algebra(opts.field, rng, 6, 6);
    Module x = random_module(a, Side::Right, rng, 8);
    Module y = random_module(a, Side::Left, rng, 8);
    auto first = tor(x, y, 3, Resolve::First);
    auto second = tor(x, y, 3, Resolve::Second);
    bool boundaries = check_resolution(resolve(x, 6)).ok && check_resolution(resolve(y, 6)).ok;
    tally.add(first == second && boundaries);
    rows.push_back({{"algebra_dim", a->dim()}, {"x_dim", x.dim()}, {"y_dim", y.dim()}, {"tor_first", first},
                    {"tor_second", second}, {"boundaries_compose_to_zero", boundaries}});
  }
  return {"tor-symmetry", tally.status, tally.summary("pairs with matching Tor and valid resolutions"),
          {{"rows", rows}}};
}

}  // namespace

SuiteCheck run_check(const std::string& name, const Corpus& corpus, const SuiteOptions& opts) {
  Rng rng(check_seed(opts.seed, name));
  if (name == "covering-dimension") return covering_dimension(opts, rng);
  if (name == "zero-context") return zero_context(corpus, opts, rng);
  if (name == "covering-round-trip") return covering_round_trip(opts, rng);
  if (name == "covering-splits") return covering_splits(corpus);
  if (name == "tensor-formula") return tensor_formula(corpus, opts, rng);
  if (name == "block-power") return block_power(corpus, opts);
  if (name == "degeneracy") return degeneracy(corpus);
  if (name == "twisted-isomorphisms") return twisted_isomorphisms(corpus);
  if (name == "corner-pd") return corner_pd(corpus, opts);
  if (name == "cleft-vanishing") return cleft_vanishing(corpus, opts, rng);
  if (name == "derive-soundness") return derive_soundness(corpus, opts);
  if (name == "tor-symmetry") return tor_symmetry(opts, rng);
  throw InputError("unknown check: " + name);
}

std::vector<SuiteCheck> run_suite(const Corpus& corpus, const SuiteOptions& opts, const std::vector<std::string>& only) {
  for (const auto& n : only)
    if (std::find(suite_check_names().begin(), suite_check_names().end(), n) == suite_check_names().end())
      throw InputError("unknown check: " + n);
  std::vector<SuiteCheck> out;
  for (const auto& name : suite_check_names())
    if (only.empty() || std::find(only.begin(), only.end(), name) != only.end())
      out.push_back(run_check(name, corpus, opts));
  return out;
}

Json suite_check_to_json(const SuiteCheck& c) {
  return {{"name", c.name}, {"status", suite_status_name(c.status)}, {"summary", c.summary}, {"evidence", c.evidence}};
}

Json suite_to_json(const std::vector<SuiteCheck>& checks, const SuiteOptions& opts) {
  Json list = Json::array();
  std::size_t failed = 0, inconclusive = 0;
  for (const auto& c : checks) {
    list.push_back(suite_check_to_json(c));
    failed += c.status == SuiteStatus::Fail;
    inconclusive += c.status == SuiteStatus::Inconclusive;
  }
  return {{"seed", opts.seed},
          {"samples", opts.samples},
          {"pd_cutoff", opts.pd_cutoff},
          {"nil_cutoff", opts.nil_cutoff},
          {"field", field_to_json(opts.field)},
          {"failed", failed},
          {"inconclusive", inconclusive},
          {"checks", list}};
}

}  // namespace injgen
