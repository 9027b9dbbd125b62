#include "injgen/reduction.hpp"

#include <algorithm>
#include <functional>

#include "injgen/constructions.hpp"
#include "injgen/tuples.hpp"

namespace injgen {

namespace {

int rank_of(Status s) {
  switch (s) {
    case Status::Established: return 0;
    case Status::Conditional: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

Status worst(Status a, Status b) {
  return rank_of(a) >= rank_of(b) ? a : b;
}

Hypothesis from_verdict(const std::string& name, const Verdict& v, Json evidence) {
  return {name, v.is_finite() ? Check::Verified : Check::Inconclusive, std::move(evidence)};
}

bool is_refuted(const Application& app) {
  return std::any_of(app.hypotheses.begin(), app.hypotheses.end(),
                     [](const Hypothesis& h) { return h.status == Check::Refuted; });
}

const char* const kMoritaConstructions[] = {"morita-zero", "split-covering"};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Established: return "Established";
    case Status::Conditional: return "Conditional";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Status status_from_name(const std::string& s) {
  if (s == "Established") return Status::Established;
  if (s == "Conditional") return Status::Conditional;
  if (s == "Unknown") return Status::Unknown;
  throw InputError("unknown status: " + s);
}

const char* check_name(Check c) {
  switch (c) {
    case Check::Verified: return "verified";
    case Check::Refuted: return "refuted";
    case Check::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Check check_from_name(const std::string& s) {
  if (s == "verified") return Check::Verified;
  if (s == "refuted") return Check::Refuted;
  if (s == "inconclusive") return Check::Inconclusive;
  throw InputError("unknown hypothesis status: " + s);
}

const std::vector<RuleInfo>& rules() {
  static const std::vector<RuleInfo> table{
      {"R-COV",
       "A ring graded by a finite abelian group and its covering ring satisfy injective generation together or not at all.",
       false, false},
      {"R-STR",
       "A ring strongly graded by a finite abelian group satisfies injective generation exactly when its degree-zero "
       "part does.",
       false, false},
      {"R-TRI",
       "Triangular ring [[A, N], [0, C]]: generation for A and C gives it for the ring, and generation for the ring "
       "gives it for C.",
       false, false},
      {"R-MOR",
       "Morita context ring with zero maps: finite pd of N over A (of M over B) carries generation from the ring to A "
       "(to B); finite pd of Z_A(A) and Z_B(B) carries it from A and B to the ring.",
       false, false},
      {"R-BEIL",
       "A positively graded algebra and the trivial extension of its Beilinson block algebra satisfy injective "
       "generation together or not at all.",
       false, false},
      {"R-TEN",
       "For a nilpotent left perfect R-bimodule M, injective generation holds for R exactly when it holds for T_R(M).",
       false, false},
      {"R-THETA",
       "For a nilpotent left perfect R-bimodule M and associative theta, injective generation holds for R exactly "
       "when it holds for the theta-extension.",
       false, false},
      {"R-POSGR",
       "A positively graded ring whose positive components are nilpotent left perfect bimodules over the degree-zero "
       "part satisfies injective generation exactly when the degree-zero part does.",
       false, false},
      {"R-TWIST",
       "Injective generation for two graded finite-dimensional algebras gives it for their twisted tensor product.",
       false, false},
      {"BASE-COMM", "Injectives generate for every commutative Noetherian ring, so for commutative finite-dimensional algebras.",
       true, false},
      {"BASE-SELFINJ", "The regular module of a Frobenius algebra is injective, so injectives generate.", true, false},
      {"BASE-SS",
       "Heuristic semisimplicity: every sampled cyclic module A / xA is projective. Never better than Conditional.",
       true, true},
  };
  return table;
}

const RuleInfo& rule_info(const std::string& id) {
  for (const auto& r : rules())
    if (r.id == id) return r;
  throw InputError("unknown rule: " + id);
}

Status step_status(const RuleInfo& rule, const std::vector<Hypothesis>& hyps, const std::vector<Status>& premises) {
  Status s = rule.heuristic ? Status::Conditional : Status::Established;
  for (const auto& h : hyps) {
    if (h.status == Check::Refuted) return Status::Unknown;
    if (h.status == Check::Inconclusive) s = worst(s, Status::Conditional);
  }
  for (auto p : premises) s = worst(s, p);
  return s;
}

ReductionEngine::ReductionEngine(Registry& reg, DeriveOptions opts) : reg_(reg), opts_(opts) {
  if (opts_.max_depth == 0) throw InputError("max depth must be at least 1");
}

Hypothesis ReductionEngine::cached(const std::string& key, const std::function<Hypothesis()>& compute) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Hypothesis h = compute();
  cache_.emplace(key, h);
  return h;
}

Hypothesis ReductionEngine::nilpotent(const std::string& bimodule) {
  return cached("nil:" + bimodule, [&] {
    Verdict v = nilpotency_index(load_bimodule(reg_, bimodule), opts_.nil_cutoff);
    return from_verdict("nilpotent " + bimodule.substr(0, 12), v,
                        {{"bimodule", bimodule}, {"nilpotency", verdict_to_json(v)}});
  });
}

Hypothesis ReductionEngine::left_perfect(const std::string& bimodule) {
  return cached("perfect:" + bimodule, [&] {
    auto report = left_perfect_check(load_bimodule(reg_, bimodule), opts_.pd_cutoff, opts_.nil_cutoff);
    Check c = report.verdict == Perfectness::LeftPerfect      ? Check::Verified
              : report.verdict == Perfectness::NotLeftPerfect ? Check::Refuted
                                                              : Check::Inconclusive;
    Json ev = perfectness_to_json(report);
    ev["bimodule"] = bimodule;
    return Hypothesis{"left perfect " + bimodule.substr(0, 12), c, ev};
  });
}

Hypothesis ReductionEngine::rebuilds(const std::string& target, const Json& provenance) {
  return cached("rebuild:" + target + provenance.dump(), [&] {
    BuildRequest req;
    req.construction = provenance.at("construction").get<std::string>();
    for (const auto& [role, h] : provenance.at("inputs").items()) req.inputs[role] = h.get<std::string>();
    if (req.inputs.count("source")) req.inputs["bimodule"] = req.inputs["source"];
    req.parameters = provenance.at("parameters");
    std::string rebuilt = build(reg_, req);
    return Hypothesis{"rebuilt by " + req.construction, rebuilt == target ? Check::Verified : Check::Refuted,
                      {{"construction", req.construction}, {"rebuilt", rebuilt}}};
  });
}

Hypothesis ReductionEngine::strongly_graded(const std::string& algebra) {
  return cached("strong:" + algebra, [&] {
    auto report = strongly_graded_check(*load_algebra(reg_, algebra));
    Json failures = Json::array();
    for (const auto& [g, h] : report.failures) failures.push_back({g, h});
    return Hypothesis{"strongly graded", report.strongly_graded ? Check::Verified : Check::Refuted,
                      {{"algebra", algebra}, {"failures", failures}}};
  });
}

Hypothesis ReductionEngine::positively_graded(const std::string& algebra) {
  return cached("positive:" + algebra, [&] {
    auto a = load_algebra(reg_, algebra);
    bool ok = !a->group().is_trivial() && is_positively_graded(*a);
    return Hypothesis{"positively graded", ok ? Check::Verified : Check::Refuted,
                      {{"algebra", algebra}, {"group", group_to_json(a->group())}}};
  });
}

Hypothesis ReductionEngine::pd_finite(const std::string& name, const Module& m) {
  Verdict v = projective_dimension(m, opts_.pd_cutoff);
  return from_verdict(name, v, {{"pd", verdict_to_json(v)}, {"dim", m.dim()}});
}

std::string ReductionEngine::initial_subring_of(const std::string& algebra) {
  return build(reg_, BuildRequest{"initial-subring", {{"graded", algebra}}, Json::object()});
}

std::vector<std::pair<std::string, Json>> ReductionEngine::produced_by(const std::string& target,
                                                                       const std::string& construction) {
  std::vector<std::pair<std::string, Json>> out;
  for (const auto& p : reg_.entry(target).provenance)
    if (p.value("construction", "") == construction) out.emplace_back(target, p);
  return out;
}

std::vector<std::pair<std::string, Json>> ReductionEngine::used_in(const std::string& input,
                                                                   const std::string& construction,
                                                                   const std::string& role) {
  std::vector<std::pair<std::string, Json>> out;
  for (const auto& h : reg_.derived_from(input, construction))
    for (const auto& p : reg_.entry(h).provenance)
      if (p.value("construction", "") == construction && p.at("inputs").value(role, "") == input)
        out.emplace_back(h, p);
  return out;
}

std::vector<Application> ReductionEngine::applications(const std::string& rule, const std::string& target) {
  std::vector<Application> out;
  auto in = [](const Json& p, const char* role) { return p.at("inputs").at(role).get<std::string>(); };

  if (rule == "R-COV") {
    for (const auto& [t, p] : produced_by(target, "covering"))
      out.push_back({rule, "iff", {rebuilds(t, p)}, {in(p, "base")}});
    for (const auto& [e, p] : used_in(target, "covering", "base")) out.push_back({rule, "iff", {rebuilds(e, p)}, {e}});
  } else if (rule == "R-STR") {
    if (!load_algebra(reg_, target)->group().is_trivial()) {
      Application app{rule, "iff", {strongly_graded(target)}, {}};
      if (!is_refuted(app)) {
        std::string zero = initial_subring_of(target);
        if (zero != target) {
          app.premises.push_back(zero);
          out.push_back(app);
        }
      } else {
        out.push_back(app);
      }
    }
    for (const auto& [e, p] : used_in(target, "initial-subring", "graded"))
      if (e != target && !load_algebra(reg_, e)->group().is_trivial())
        out.push_back({rule, "iff", {rebuilds(target, p), strongly_graded(e)}, {e}});
  } else if (rule == "R-TRI") {
    for (const auto& [t, p] : produced_by(target, "triangular"))
      out.push_back({rule, "forward", {rebuilds(t, p)}, {in(p, "a"), in(p, "c")}});
    for (const auto& [e, p] : used_in(target, "triangular", "c")) out.push_back({rule, "backward", {rebuilds(e, p)}, {e}});
  } else if (rule == "R-MOR") {
    for (const char* c : kMoritaConstructions) {
      auto context_of = [&](const Json& p) {
        if (p.at("construction") == "split-covering") {
          auto base = load_algebra(reg_, in(p, "base"));
          return split_covering(covering_ring(base), p.at("parameters").at("k").get<std::size_t>()).context;
        }
        return zero_context(load_algebra(reg_, in(p, "a")), load_algebra(reg_, in(p, "b")),
                            load_bimodule(reg_, in(p, "n")), load_bimodule(reg_, in(p, "m")));
      };
      auto zero_maps = [&](const std::string& ring, const Json& p, const MoritaContext& ctx) {
        return cached("zero:" + ring + p.dump(), [&] {
          return Hypothesis{"zero bimodule maps", verify_zero_context(ctx) ? Check::Verified : Check::Refuted,
                            {{"construction", p.at("construction")}}};
        });
      };
      for (const auto& [t, p] : produced_by(target, c)) {
        auto ctx = context_of(p);
        Application app{rule, "forward", {rebuilds(t, p), zero_maps(t, p, ctx)}, {in(p, "a"), in(p, "b")}};
        if (!is_refuted(app)) {
          auto ring = morita_ring(ctx);
          std::string key = t + p.dump();
          app.hypotheses.push_back(cached("pdza:" + key, [&] {
            return pd_finite("pd Z_A(A) finite", tuple_to_module(ring, functor_z_a(ctx, regular_left(ctx.a))));
          }));
          app.hypotheses.push_back(cached("pdzb:" + key, [&] {
            return pd_finite("pd Z_B(B) finite", tuple_to_module(ring, functor_z_b(ctx, regular_left(ctx.b))));
          }));
        }
        out.push_back(app);
      }
      for (const char* role : {"a", "b"})
        for (const auto& [e, p] : used_in(target, c, role)) {
          auto ctx = context_of(p);
          Application app{rule, "backward", {rebuilds(e, p), zero_maps(e, p, ctx)}, {e}};
          if (!is_refuted(app)) {
            bool is_a = std::string(role) == "a";
            app.hypotheses.push_back(cached(std::string("pd") + role + ":" + e + p.dump(), [&] {
              return is_a ? pd_finite("pd_A N finite", ctx.n.as_left()) : pd_finite("pd_B M finite", ctx.m.as_left());
            }));
          }
          out.push_back(app);
        }
    }
  } else if (rule == "R-BEIL") {
    for (const auto& [t, p] : produced_by(target, "beilinson"))
      out.push_back({rule, "iff", {rebuilds(t, p), positively_graded(in(p, "lambda"))}, {in(p, "lambda")}});
    for (const auto& [e, p] : used_in(target, "beilinson", "lambda"))
      out.push_back({rule, "iff", {rebuilds(e, p), positively_graded(target)}, {e}});
  } else if (rule == "R-TEN" || rule == "R-THETA") {
    std::vector<std::string> constructions =
        rule == "R-TEN" ? std::vector<std::string>{"tensor-ring"} : std::vector<std::string>{"theta", "trivial-ext"};
    for (const auto& c : constructions) {
      for (const auto& [t, p] : produced_by(target, c)) {
        std::string bm = in(p, "bimodule");
        out.push_back({rule, "iff", {rebuilds(t, p), nilpotent(bm), left_perfect(bm)}, {in(p, "base")}});
      }
      for (const auto& [e, p] : used_in(target, c, "base")) {
        std::string bm = in(p, "bimodule");
        out.push_back({rule, "iff", {rebuilds(e, p), nilpotent(bm), left_perfect(bm)}, {e}});
      }
    }
  } else if (rule == "R-POSGR") {
    auto component_hypotheses = [&](const std::string& lambda) {
      std::vector<Hypothesis> hyps{positively_graded(lambda)};
      if (hyps[0].status == Check::Refuted) return hyps;
      auto a = load_algebra(reg_, lambda);
      std::int64_t order = a->group().factors()[0];
      for (std::int64_t d = 1; d < order; ++d) {
        Bimodule comp = graded_component(*a, d);
        if (comp.dim() == 0) continue;
        std::string h = register_bimodule(reg_, comp, "", make_provenance("graded-component", {{"graded", lambda}},
                                                                          {{"degree", d}}));
        hyps.push_back(nilpotent(h));
        hyps.push_back(left_perfect(h));
      }
      return hyps;
    };
    if (!load_algebra(reg_, target)->group().is_trivial()) {
      Application app{rule, "iff", component_hypotheses(target), {}};
      if (!is_refuted(app)) {
        std::string zero = initial_subring_of(target);
        if (zero != target) {
          app.premises.push_back(zero);
          out.push_back(app);
        }
      } else {
        out.push_back(app);
      }
    }
    for (const auto& [e, p] : used_in(target, "initial-subring", "graded")) {
      if (e == target || load_algebra(reg_, e)->group().is_trivial()) continue;
      auto hyps = component_hypotheses(e);
      hyps.insert(hyps.begin(), rebuilds(target, p));
      out.push_back({rule, "iff", hyps, {e}});
    }
  } else if (rule == "R-TWIST") {
    for (const char* c : {"twisted", "tensor"})
      for (const auto& [t, p] : produced_by(target, c))
        out.push_back({rule, "forward", {rebuilds(t, p)}, {in(p, "a"), in(p, "b")}});
  } else if (rule == "BASE-COMM") {
    out.push_back({rule, "base", {cached("comm:" + target, [&] {
                     bool ok = is_commutative(*load_algebra(reg_, target));
                     return Hypothesis{"commutative", ok ? Check::Verified : Check::Refuted, {{"algebra", target}}};
                   })},
                   {}});
  } else if (rule == "BASE-SELFINJ") {
    out.push_back({rule, "base", {cached("frob:" + target, [&] {
                     auto a = load_algebra(reg_, target);
                     auto iso = find_isomorphism(ungraded(regular_right(a)), ungraded(dual_regular(a)));
                     Check c = iso.iso ? Check::Verified : iso.conclusive ? Check::Refuted : Check::Inconclusive;
                     return Hypothesis{"regular module isomorphic to its dual", c,
                                       {{"hom_dim", iso.hom_dim}, {"conclusive", iso.conclusive}}};
                   })},
                   {}});
  } else if (rule == "BASE-SS") {
    out.push_back({rule, "base", {cached("ss:" + target, [&] {
                     auto a = load_algebra(reg_, target);
                     Module reg_module = ungraded(regular_right(a));
                     Json pds = Json::array();
                     Check c = Check::Verified;
                     for (std::size_t x = 0; x < a->dim(); ++x) {
                       Matrix ideal = generated_submodule(reg_module, Matrix::unit_vector(a->field(), a->dim(), x));
                       Verdict v = projective_dimension(quotient(reg_module, ideal).module, opts_.pd_cutoff);
                       pds.push_back(verdict_to_json(v));
                       if (v.is_finite() && v.value > 0) c = Check::Refuted;
                       if (!v.is_finite() && c == Check::Verified) c = Check::Inconclusive;
                     }
                     return Hypothesis{"sampled cyclic modules projective", c, {{"pd", pds}}};
                   })},
                   {}});
  } else {
    throw InputError("unknown rule: " + rule);
  }
  return out;
}

DerivationNode ReductionEngine::derive(const std::string& target) {
  if (!reg_.contains(target)) throw InputError("unregistered target " + target);
  if (reg_.entry(target).kind != "algebra") throw InputError("claims are about algebras");
  std::set<std::string> path;
  return derive(target, opts_.max_depth, path);
}

DerivationNode ReductionEngine::derive(const std::string& target, std::size_t depth, std::set<std::string>& path) {
  DerivationNode node;
  node.claim = {target, reg_.entry(target).label};
  if (depth == 0) {
    node.note = "depth exhausted";
    return node;
  }
  path.insert(target);
  for (const auto& rule : rules()) {
    for (auto& app : applications(rule.id, target)) {
      if (is_refuted(app)) continue;
      if (std::any_of(app.premises.begin(), app.premises.end(), [&](const auto& p) { return path.count(p) > 0; }))
        continue;
      std::vector<DerivationNode> premises;
      std::vector<Status> statuses;
      for (const auto& p : app.premises) {
        premises.push_back(derive(p, depth - 1, path));
        statuses.push_back(premises.back().status);
      }
      Status s = step_status(rule, app.hypotheses, statuses);
      if (s != Status::Unknown && rank_of(s) < rank_of(node.status)) {
        node.status = s;
        node.step = std::move(app);
        node.premises = std::move(premises);
      }
      if (node.status == Status::Established) break;
    }
    if (node.status == Status::Established) break;
  }
  path.erase(target);
  if (node.status == Status::Unknown) node.note = "no rule applies with resolved premises";
  return node;
}

namespace {

Json hypotheses_to_json(const std::vector<Hypothesis>& hyps) {
  Json out = Json::array();
  for (const auto& h : hyps) out.push_back({{"name", h.name}, {"status", check_name(h.status)}, {"evidence", h.evidence}});
  return out;
}

Json emit_steps(const DerivationNode& node, Json& steps) {
  if (!node.step) return nullptr;
  std::size_t idx = steps.size();
  steps.push_back(nullptr);
  Json premises = Json::array();
  for (const auto& child : node.premises) {
    Json child_idx = emit_steps(child, steps);
    premises.push_back({{"claim", child.claim.hash}, {"status", status_name(child.status)}, {"step", child_idx}});
  }
  const auto& app = *node.step;
  steps[idx] = {{"claim", node.claim.hash},
                {"label", node.claim.label},
                {"rule", app.rule},
                {"citation", rule_info(app.rule).citation},
                {"direction", app.direction},
                {"status", status_name(node.status)},
                {"hypotheses", hypotheses_to_json(app.hypotheses)},
                {"premises", premises}};
  return idx;
}

}  // namespace

Json emit_certificate(const DerivationNode& tree, const DeriveOptions& opts) {
  Json steps = Json::array();
  emit_steps(tree, steps);
  return {{"claim", {{"hash", tree.claim.hash}, {"label", tree.claim.label}}},
          {"status", status_name(tree.status)},
          {"options", {{"max_depth", opts.max_depth}, {"pd_cutoff", opts.pd_cutoff}, {"nil_cutoff", opts.nil_cutoff}}},
          {"note", tree.note},
          {"steps", steps}};
}

CertificateCheck validate_certificate(Registry& reg, const Json& cert) {
  CertificateCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.problems.push_back(std::move(why));
  };
  try {
    DeriveOptions opts;
    opts.max_depth = cert.at("options").at("max_depth").get<std::size_t>();
    opts.pd_cutoff = cert.at("options").at("pd_cutoff").get<std::size_t>();
    opts.nil_cutoff = cert.at("options").at("nil_cutoff").get<std::size_t>();
    ReductionEngine engine(reg, opts);
    std::string root = cert.at("claim").at("hash").get<std::string>();
    Status root_status = status_from_name(cert.at("status").get<std::string>());
    const Json& steps = cert.at("steps");
    if (!reg.contains(root)) fail("claim " + root + " is not registered");
    if (steps.empty()) {
      if (root_status != Status::Unknown) fail("a resolved claim needs at least one step");
      return out;
    }
    if (steps[0].at("claim") != root) fail("first step is not about the claim");
    if (status_from_name(steps[0].at("status").get<std::string>()) != root_status)
      fail("claim status differs from its step");

    // Each step is referenced once, by an earlier step, and never repeats a claim on its ancestor path.
    std::vector<int> parent(steps.size(), -1);
    for (std::size_t i = 0; i < steps.size(); ++i)
      for (const auto& p : steps[i].at("premises")) {
        if (p.at("step").is_null()) continue;
        auto j = p.at("step").get<std::size_t>();
        if (j <= i || j >= steps.size() || parent[j] != -1) {
          fail("step " + std::to_string(i) + " has a malformed premise reference");
          continue;
        }
        parent[j] = static_cast<int>(i);
      }
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (parent[i] == -1) fail("step " + std::to_string(i) + " is not reachable");
      for (int a = parent[i]; a != -1; a = parent[a])
        if (steps[a].at("claim") == steps[i].at("claim")) fail("cycle through claim at step " + std::to_string(i));
    }

    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Json& s = steps[i];
      std::string where = "step " + std::to_string(i) + ": ";
      std::string claim = s.at("claim").get<std::string>();
      std::string rule = s.at("rule").get<std::string>();
      const RuleInfo& info = rule_info(rule);
      if (s.at("citation") != info.citation) fail(where + "citation differs from the rule table");
      if (!reg.contains(claim)) {
        fail(where + "claim not registered");
        continue;
      }
      std::vector<std::string> premises;
      std::vector<Status> statuses;
      for (const auto& p : s.at("premises")) {
        premises.push_back(p.at("claim").get<std::string>());
        Status ps = status_from_name(p.at("status").get<std::string>());
        statuses.push_back(ps);
        if (p.at("step").is_null()) {
          if (ps != Status::Unknown) fail(where + "resolved premise without a step");
        } else {
          auto j = p.at("step").get<std::size_t>();
          if (j < steps.size() && (steps[j].at("claim") != p.at("claim") ||
                                   status_from_name(steps[j].at("status").get<std::string>()) != ps))
            fail(where + "premise disagrees with its step");
        }
      }
      std::optional<Application> match;
      for (auto& app : engine.applications(rule, claim))
        if (app.direction == s.at("direction") && app.premises == premises) {
          match = app;
          break;
        }
      if (!match) {
        fail(where + rule + " does not apply as recorded");
        continue;
      }
      const Json& hyps = s.at("hypotheses");
      if (hyps.size() != match->hypotheses.size()) {
        fail(where + "hypothesis count differs");
        continue;
      }
      for (std::size_t h = 0; h < hyps.size(); ++h) {
        const auto& fresh = match->hypotheses[h];
        if (hyps[h].at("name") != fresh.name || check_from_name(hyps[h].at("status").get<std::string>()) != fresh.status)
          fail(where + "hypothesis '" + fresh.name + "' re-checks as " + check_name(fresh.status));
        else if (hyps[h].at("evidence") != fresh.evidence)
          fail(where + "evidence for '" + fresh.name + "' differs");
      }
      Status recomputed = step_status(info, match->hypotheses, statuses);
      if (recomputed != status_from_name(s.at("status").get<std::string>()))
        fail(where + "status should be " + status_name(recomputed));
    }
  } catch (const Json::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  } catch (const InputError& e) {
    fail(e.what());
  }
  return out;
}

}  // namespace injgen
