#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "injgen/build.hpp"
#include "injgen/corpus.hpp"
#include "injgen/reduction.hpp"
#include "injgen/verification.hpp"

namespace injgen::cli {

namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string registry = ".injgen";
  std::string field;
  std::size_t pd_cutoff = kDefaultPdCutoff;
  std::size_t nil_cutoff = kDefaultNilCutoff;
  std::uint64_t seed = kDefaultSeed;
  bool strict = false;
  std::string out;
};

// A command's report and how it ended.
struct Outcome {
  Json report;
  enum class Kind { Done, Failed, Inconclusive } kind = Kind::Done;
};

const std::map<std::string, std::vector<std::string>>& construction_roles() {
  static const std::map<std::string, std::vector<std::string>> roles{
      {"covering", {"base"}},         {"initial-subring", {"graded"}}, {"triangular", {"a", "c", "n"}},
      {"morita-zero", {"a", "b", "n", "m"}}, {"split-covering", {"base"}}, {"tensor-ring", {"bimodule"}},
      {"theta", {"bimodule"}},        {"trivial-ext", {"bimodule"}},   {"tensor", {"a", "b"}},
      {"twisted", {"a", "b"}},        {"beilinson", {"lambda"}}};
  return roles;
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  Registry& registry() {
    if (!reg_) reg_.emplace(g_.registry);
    return *reg_;
  }

  // An existing file is read from disk; anything else is a registry reference.
  Json load(const std::string& arg) {
    Json j = fs::is_regular_file(arg) ? read_json_file(arg) : registry().get(registry().resolve(arg));
    if (!g_.field.empty()) {
      Field want = Field::parse(g_.field);
      Json f = j.contains("field") ? j.at("field")
               : j.contains("algebra") ? j.at("algebra").at("field")
                                       : j.at("left_algebra").at("field");
      if (field_from_json(f) != want) throw InputError(arg + " is not over " + want.name());
    }
    return j;
  }

  // Registers files on the fly; returns the hash.
  std::string reference(const std::string& arg) {
    if (fs::is_regular_file(arg)) return registry().put(load(arg));
    return registry().resolve(arg);
  }

  Module module(const std::string& arg, const std::string& side) {
    Json j = load(arg);
    switch (object_kind(j)) {
      case ObjectKind::Module: return module_from_json(j);
      case ObjectKind::Bimodule: {
        Bimodule b = bimodule_from_json(j);
        return side == "right" ? b.as_right() : b.as_left();
      }
      case ObjectKind::Algebra: {
        auto a = algebra_from_json(j);
        return side == "right" ? regular_right(a) : regular_left(a);
      }
    }
    throw InputError("not a module: " + arg);
  }

  Bimodule bimodule(const std::string& arg) {
    Json j = load(arg);
    if (object_kind(j) == ObjectKind::Algebra) return Bimodule::regular(algebra_from_json(j));
    if (object_kind(j) != ObjectKind::Bimodule) throw InputError("not a bimodule: " + arg);
    return bimodule_from_json(j);
  }

  const Globals& globals() const { return g_; }

 private:
  const Globals& g_;
  std::optional<Registry> reg_;
};

Json inline_or_file(const std::string& text) {
  if (fs::is_regular_file(text)) return read_json_file(text);
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) return parse_json(text);
  return Json(text);
}

Outcome cmd_check(Session&, const std::string& path) {
  Json j = read_json_file(path);
  ObjectKind kind = object_kind(j);
  AxiomReport report;
  switch (kind) {
    case ObjectKind::Algebra: report = check_algebra_axioms(*algebra_from_json(j)); break;
    case ObjectKind::Module: report = check_module_axioms(module_from_json(j)); break;
    case ObjectKind::Bimodule: report = check_bimodule_axioms(bimodule_from_json(j)); break;
  }
  Json out = axiom_report_to_json(report);
  out["kind"] = object_kind_name(kind);
  out["hash"] = content_hash(j);
  return {out, report.ok() ? Outcome::Kind::Done : Outcome::Kind::Failed};
}

Outcome cmd_register(Session& s, const std::string& path, const std::string& label) {
  Json j = s.load(path);
  std::string hash = s.registry().put(j, label);
  return {{{"hash", hash}, {"kind", s.registry().entry(hash).kind}}};
}

Outcome cmd_list(Session& s) {
  Json list = Json::array();
  for (const auto& h : s.registry().hashes()) {
    const auto& e = s.registry().entry(h);
    list.push_back({{"hash", h}, {"kind", e.kind}, {"label", e.label}, {"provenance", e.provenance}});
  }
  auto problems = s.registry().consistency_problems();
  return {{{"objects", list}, {"problems", problems}}, problems.empty() ? Outcome::Kind::Done : Outcome::Kind::Failed};
}

struct BuildArgs {
  std::string construction;
  std::vector<std::string> positional;
  std::vector<std::string> named;  // role=ref
  std::string theta, t, label;
  std::optional<std::size_t> k, l;
};

Outcome cmd_build(Session& s, const BuildArgs& a) {
  auto roles = construction_roles().find(a.construction);
  if (roles == construction_roles().end()) throw InputError("unknown construction: " + a.construction);
  BuildRequest req;
  req.construction = a.construction;
  if (a.positional.size() > roles->second.size())
    throw InputError(a.construction + " takes at most " + std::to_string(roles->second.size()) + " inputs");
  for (std::size_t i = 0; i < a.positional.size(); ++i) req.inputs[roles->second[i]] = s.reference(a.positional[i]);
  for (const auto& n : a.named) {
    auto eq = n.find('=');
    if (eq == std::string::npos) throw InputError("expected role=reference, got " + n);
    req.inputs[n.substr(0, eq)] = s.reference(n.substr(eq + 1));
  }
  if (a.k) req.parameters["k"] = *a.k;
  if (a.l) req.parameters["l"] = *a.l;
  if (!a.theta.empty()) req.parameters["theta"] = inline_or_file(a.theta);
  if (!a.t.empty()) req.parameters["t"] = inline_or_file(a.t);
  std::string hash = build(s.registry(), req, a.label);
  Json object = s.registry().get(hash);
  Outcome out{{{"hash", hash}, {"construction", a.construction}, {"dim", object.at("basis").size()}}};
  if (!s.globals().out.empty()) {
    const auto& prov = s.registry().entry(hash).provenance;
    if (!prov.empty()) object[kProvenanceKey] = prov.back();
    write_json_file(s.globals().out, object);
  }
  return out;
}

Outcome cmd_pd(Session& s, const std::string& arg, const std::string& side) {
  auto report = resolve(s.module(arg, side), s.globals().pd_cutoff);
  Json j = resolution_to_json(report);
  j["boundaries_ok"] = check_resolution(report).ok;
  return {j, report.pd.is_finite() ? Outcome::Kind::Done : Outcome::Kind::Inconclusive};
}

Outcome cmd_tor(Session& s, const std::string& x, const std::string& y, std::size_t i_max, const std::string& how) {
  Module mx = s.module(x, "right");
  Module my = s.module(y, "left");
  Json j = {{"i_max", i_max}};
  if (how == "first" || how == "second") {
    j["tor"] = tor(mx, my, i_max, how == "first" ? Resolve::First : Resolve::Second);
    j["resolved"] = how;
    return {j};
  }
  auto first = tor(mx, my, i_max, Resolve::First);
  auto second = tor(mx, my, i_max, Resolve::Second);
  j["first"] = first;
  j["second"] = second;
  j["agree"] = first == second;
  return {j, first == second ? Outcome::Kind::Done : Outcome::Kind::Failed};
}

Outcome cmd_nilpotency(Session& s, const std::string& arg) {
  Verdict v = nilpotency_index(s.bimodule(arg), s.globals().nil_cutoff);
  return {{{"nilpotency", verdict_to_json(v)}}, v.is_finite() ? Outcome::Kind::Done : Outcome::Kind::Inconclusive};
}

Outcome cmd_perfect(Session& s, const std::string& arg) {
  auto report = left_perfect_check(s.bimodule(arg), s.globals().pd_cutoff, s.globals().nil_cutoff);
  Outcome::Kind kind = report.verdict == Perfectness::LeftPerfect      ? Outcome::Kind::Done
                       : report.verdict == Perfectness::NotLeftPerfect ? Outcome::Kind::Failed
                                                                       : Outcome::Kind::Inconclusive;
  return {perfectness_to_json(report), kind};
}

Outcome cmd_verify(Session& s, const std::vector<std::string>& only, const std::string& corpus_dir,
                   std::size_t samples) {
  const Globals& g = s.globals();
  SuiteOptions opts;
  opts.seed = g.seed;
  opts.samples = samples;
  opts.pd_cutoff = g.pd_cutoff;
  opts.nil_cutoff = g.nil_cutoff;
  if (!g.field.empty()) opts.field = Field::parse(g.field);
  Corpus corpus = corpus_dir.empty() ? bundled_corpus() : load_corpus(corpus_dir);
  auto checks = run_suite(corpus, opts, only);
  Json j = suite_to_json(checks, opts);
  Outcome::Kind kind = j.at("failed") != 0         ? Outcome::Kind::Failed
                       : j.at("inconclusive") != 0 ? Outcome::Kind::Inconclusive
                                                   : Outcome::Kind::Done;
  return {j, kind};
}

Outcome cmd_derive(Session& s, const std::string& target, std::size_t depth) {
  const Globals& g = s.globals();
  DeriveOptions opts{depth, g.pd_cutoff, g.nil_cutoff};
  ReductionEngine engine(s.registry(), opts);
  auto tree = engine.derive(s.reference(target));
  return {emit_certificate(tree, opts),
          tree.status == Status::Established ? Outcome::Kind::Done : Outcome::Kind::Inconclusive};
}

Outcome cmd_validate(Session& s, const std::string& path) {
  auto check = validate_certificate(s.registry(), read_json_file(path));
  return {{{"ok", check.ok}, {"problems", check.problems}}, check.ok ? Outcome::Kind::Done : Outcome::Kind::Failed};
}

Outcome cmd_corpus(const std::string& action, const std::string& dir) {
  Corpus corpus = bundled_corpus();
  if (action == "write") {
    if (dir.empty()) throw InputError("corpus write needs a directory");
    write_corpus(corpus, dir);
  } else if (action != "list") {
    throw InputError("corpus action must be list or write");
  }
  Json list = Json::array();
  for (const auto& e : corpus.entries()) {
    Json roles = Json::array();
    for (const auto& [role, o] : e.objects) roles.push_back({{"role", role}, {"hash", content_hash(o)}});
    list.push_back({{"name", e.name}, {"description", e.description}, {"objects", roles}});
  }
  return {{{"entries", list}}};
}

int finish(const Outcome& o, const Globals& g, std::ostream& out, bool report_to_file) {
  if (report_to_file && !g.out.empty())
    write_json_file(g.out, o.report);
  else
    out << o.report.dump(2) << "\n";
  switch (o.kind) {
    case Outcome::Kind::Done: return kSuccess;
    case Outcome::Kind::Failed: return kFailure;
    case Outcome::Kind::Inconclusive: return g.strict ? kInconclusive : kSuccess;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded ring constructions, homological checks and injective generation certificates", "injgen"};
  app.require_subcommand(1);
  Globals g;
  app.option_defaults()->always_capture_default();
  app.add_option("--registry", g.registry, "Object registry directory");
  app.add_option("--field", g.field, "Expected field of inputs (fp:<p> or q); field of random instances");
  app.add_option("--pd-cutoff", g.pd_cutoff, "Resolution length cutoff")->check(CLI::PositiveNumber);
  app.add_option("--nil-cutoff", g.nil_cutoff, "Tensor power cutoff for nilpotency")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--strict", g.strict, "Exit 3 when the outcome is only inconclusive");
  app.add_option("--out", g.out, "Write the report (or built object) here instead of stdout");

  std::string path, label, side = "left", x, y, how = "both", target, corpus_dir, action;
  std::vector<std::string> only;
  std::size_t i_max = 3, depth = 8, samples = 25;
  BuildArgs b;

  auto* check = app.add_subcommand("check", "Verify the axioms of an algebra, module or bimodule file");
  check->add_option("file", path)->required();
  auto* reg = app.add_subcommand("register", "Add an object file to the registry");
  reg->add_option("file", path)->required();
  reg->add_option("--label", label);
  auto* list = app.add_subcommand("list", "List registered objects");
  auto* bld = app.add_subcommand("build", "Run a construction on registered objects or files");
  bld->add_option("construction", b.construction)->required()->check(CLI::IsMember(construction_names()));
  bld->add_option("inputs", b.positional, "Inputs in the construction's role order");
  bld->add_option("--in", b.named, "role=reference");
  bld->add_option("--theta", b.theta, "zero, tensor-ring, or a matrix (inline JSON or file)");
  bld->add_option("--t", b.t, "one, or a bicharacter table (inline JSON or file)");
  bld->add_option("--k", b.k);
  bld->add_option("--l", b.l);
  bld->add_option("--label", b.label);
  auto* pd = app.add_subcommand("pd", "Projective resolution and dimension");
  pd->add_option("module", path)->required();
  pd->add_option("--side", side, "Side used for bimodules and algebras")->check(CLI::IsMember({"left", "right"}));
  auto* tr = app.add_subcommand("tor", "Dimensions of Tor_i(X, Y) for a right X and left Y");
  tr->add_option("x", x)->required();
  tr->add_option("y", y)->required();
  tr->add_option("--max", i_max, "Largest i");
  tr->add_option("--resolve", how)->check(CLI::IsMember({"first", "second", "both"}));
  auto* nil = app.add_subcommand("nilpotency", "Nilpotency index of a bimodule");
  nil->add_option("bimodule", path)->required();
  auto* perf = app.add_subcommand("perfect", "Left perfectness of a bimodule");
  perf->add_option("bimodule", path)->required();
  auto* ver = app.add_subcommand("verify-paper", "Run the verification suite on the bundled corpus");
  ver->add_option("--only", only, "Check names")->delimiter(',');
  ver->add_option("--corpus", corpus_dir, "Corpus directory instead of the bundled one");
  ver->add_option("--samples", samples, "Random instances per randomized check")->check(CLI::PositiveNumber);
  auto* der = app.add_subcommand("derive", "Derive injective generation for a registered algebra");
  der->add_option("--target", target)->required();
  der->add_option("--depth", depth)->check(CLI::PositiveNumber);
  auto* val = app.add_subcommand("validate-cert", "Re-check a derivation certificate");
  val->add_option("certificate", path)->required();
  auto* cor = app.add_subcommand("corpus", "List or write the bundled corpus");
  cor->add_option("action", action)->required()->check(CLI::IsMember({"list", "write"}));
  cor->add_option("dir", corpus_dir);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (!g.field.empty()) Field::parse(g.field);
    Session s(g);
    if (*check) return finish(cmd_check(s, path), g, out, true);
    if (*reg) return finish(cmd_register(s, path, label), g, out, true);
    if (*list) return finish(cmd_list(s), g, out, true);
    if (*bld) return finish(cmd_build(s, b), g, out, false);
    if (*pd) return finish(cmd_pd(s, path, side), g, out, true);
    if (*tr) return finish(cmd_tor(s, x, y, i_max, how), g, out, true);
    if (*nil) return finish(cmd_nilpotency(s, path), g, out, true);
    if (*perf) return finish(cmd_perfect(s, path), g, out, true);
    if (*ver) return finish(cmd_verify(s, only, corpus_dir, samples), g, out, true);
    if (*der) return finish(cmd_derive(s, target, depth), g, out, true);
    if (*val) return finish(cmd_validate(s, path), g, out, true);
    if (*cor) return finish(cmd_corpus(action, corpus_dir), g, out, true);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kFailure;
  } catch (const ResolutionLimit& e) {
    err << "inconclusive: " << e.what() << "\n";
    return g.strict ? kInconclusive : kSuccess;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace injgen::cli
