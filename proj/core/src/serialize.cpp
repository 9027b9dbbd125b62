#include "injgen/serialize.hpp"

#include <fstream>
#include <sstream>

namespace injgen {

namespace {

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<GroupElem> degrees_from_json(const Json& j) {
  std::vector<GroupElem> out;
  for (const auto& d : j) out.push_back(d.get<GroupElem>());
  return out;
}

Json sparse_to_json(const Field& f, const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, scalar_to_json(f, c)}));
  return out;
}

SparseVector sparse_from_json(const Field& f, const Json& j) {
  SparseVector out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) throw InputError("sparse entry must be an [index, coefficient] pair");
    out.emplace_back(entry[0].get<std::size_t>(), scalar_from_json(f, entry[1]));
  }
  return out;
}

// action[j][c] = sparse column c of the operator of e_j.
Json actions_to_json(const std::vector<Matrix>& ops) {
  Json out = Json::array();
  for (const auto& op : ops) {
    Json cols = Json::array();
    for (std::size_t c = 0; c < op.cols(); ++c) cols.push_back(sparse_to_json(op.field(), to_sparse(op.column(c))));
    out.push_back(cols);
  }
  return out;
}

std::vector<Matrix> actions_from_json(const Field& f, const Json& j, std::size_t dim) {
  std::vector<Matrix> out;
  for (const auto& op : j) {
    if (op.size() != dim) throw InputError("action operator has the wrong number of columns");
    Matrix m(f, dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
      for (const auto& [r, v] : sparse_from_json(f, op[c])) {
        if (r >= dim) throw InputError("action index out of range");
        m.set(r, c, v);
      }
    out.push_back(std::move(m));
  }
  return out;
}

Side side_from_json(const Json& j) {
  auto s = j.get<std::string>();
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  throw InputError("side must be \"left\" or \"right\"");
}

Json tor_table_to_json(const TorTable& t) {
  Json out = Json::array();
  for (const auto& [key, dim] : t) out.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  if (f.is_prime_field()) return {{"kind", "fp"}, {"p", f.characteristic()}};
  return {{"kind", "q"}};
}

Field field_from_json(const Json& j) {
  return guarded("field", [&] {
    auto kind = j.at("kind").get<std::string>();
    if (kind == "q") return Field::rationals();
    if (kind == "fp") return Field::prime(j.at("p").get<std::int64_t>());
    throw InputError("unknown field kind: " + kind);
  });
}

Json scalar_to_json(const Field& f, const Scalar& s) {
  if (f.is_prime_field()) return f.normalize(s).residue();
  return f.to_string(s);
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (f.is_prime_field()) {
    if (!j.is_number_integer()) throw InputError("prime field elements are integers");
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= f.characteristic()) throw InputError("residue outside [0, p)");
    return f.from_int(v);
  }
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (!j.is_string()) throw InputError("rational field elements are strings \"a/b\"");
  return f.parse_element(j.get<std::string>());
}

Json group_to_json(const FiniteAbelianGroup& g) {
  return {{"invariant_factors", g.factors()}};
}

FiniteAbelianGroup group_from_json(const Json& j) {
  return guarded("group", [&] {
    return FiniteAbelianGroup(j.at("invariant_factors").get<std::vector<std::int64_t>>());
  });
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.size() != rows) throw InputError("matrix has the wrong number of rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix row has the wrong length");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(f, j[r][c]));
    }
    return m;
  });
}

Json algebra_to_json(const GradedAlgebra& a) {
  const Field& f = a.field();
  Json unit = Json::array();
  for (const auto& u : a.unit()) unit.push_back(scalar_to_json(f, u));
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(sparse_to_json(f, a.product(i, j)));
    mult.push_back(row);
  }
  return {{"field", field_to_json(f)},
          {"group", group_to_json(a.group())},
          {"basis", a.labels()},
          {"degree", a.degrees()},
          {"unit", unit},
          {"mult", mult}};
}

AlgebraPtr algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    Field f = field_from_json(j.at("field"));
    auto group = group_from_json(j.at("group"));
    auto labels = j.at("basis").get<std::vector<std::string>>();
    auto degrees = degrees_from_json(j.at("degree"));
    std::vector<Scalar> unit;
    for (const auto& u : j.at("unit")) unit.push_back(scalar_from_json(f, u));
    StructureConstants mult;
    for (const auto& row : j.at("mult")) {
      std::vector<SparseVector> r;
      for (const auto& entry : row) r.push_back(sparse_from_json(f, entry));
      mult.push_back(std::move(r));
    }
    return make_algebra(f, group, labels, degrees, unit, mult);
  });
}

Json module_to_json(const Module& m) {
  Json out = {{"algebra", algebra_to_json(*m.algebra())},
              {"side", side_name(m.side())},
              {"dim", m.dim()},
              {m.side() == Side::Right ? "action_right" : "action_left", actions_to_json(m.actions())}};
  if (!m.degrees().empty()) out["degree"] = m.degrees();
  return out;
}

Module module_from_json(const Json& j) {
  return guarded("module", [&] {
    auto a = algebra_from_json(j.at("algebra"));
    Side side = side_from_json(j.at("side"));
    auto dim = j.at("dim").get<std::size_t>();
    const Json& ops = j.at(side == Side::Right ? "action_right" : "action_left");
    auto degrees = j.contains("degree") ? degrees_from_json(j.at("degree")) : std::vector<GroupElem>{};
    return Module(a, side, dim, actions_from_json(a->field(), ops, dim), degrees);
  });
}

Json bimodule_to_json(const Bimodule& b) {
  Json out = {{"left_algebra", algebra_to_json(*b.left_algebra())},
              {"right_algebra", algebra_to_json(*b.right_algebra())},
              {"dim", b.dim()},
              {"action_left", actions_to_json(b.left_actions())},
              {"action_right", actions_to_json(b.right_actions())}};
  if (!b.degrees().empty()) out["degree"] = b.degrees();
  return out;
}

Bimodule bimodule_from_json(const Json& j) {
  return guarded("bimodule", [&] {
    auto left = algebra_from_json(j.at("left_algebra"));
    auto right = algebra_from_json(j.at("right_algebra"));
    auto dim = j.at("dim").get<std::size_t>();
    auto degrees = j.contains("degree") ? degrees_from_json(j.at("degree")) : std::vector<GroupElem>{};
    return Bimodule(left, right, dim, actions_from_json(left->field(), j.at("action_left"), dim),
                    actions_from_json(left->field(), j.at("action_right"), dim), degrees);
  });
}

const char* object_kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::Algebra: return "algebra";
    case ObjectKind::Module: return "module";
    case ObjectKind::Bimodule: return "bimodule";
  }
  return "?";
}

ObjectKind object_kind(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("mult")) return ObjectKind::Algebra;
  if (j.contains("left_algebra")) return ObjectKind::Bimodule;
  if (j.contains("algebra")) return ObjectKind::Module;
  throw InputError("JSON object is not an algebra, module or bimodule");
}

Json verdict_to_json(const Verdict& v) {
  if (v.is_finite()) return {{"finite", v.value}};
  return {{"atLeast", v.value}};
}

Verdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    if (j.contains("finite")) return Verdict::finite(j.at("finite").get<std::size_t>());
    if (j.contains("atLeast")) return Verdict::at_least(j.at("atLeast").get<std::size_t>());
    throw InputError("verdict needs \"finite\" or \"atLeast\"");
  });
}

Json resolution_to_json(const ResolutionReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"rank", s.rank}, {"syzygy_dim", s.syzygy_dim}, {"projective", s.projective}});
  return {{"module_dim", r.module.dim()},
          {"pd", verdict_to_json(r.pd)},
          {"cutoff", r.cutoff},
          {"truncated", r.truncated},
          {"steps", steps}};
}

Json perfectness_to_json(const PerfectnessReport& r) {
  Json powers = Json::array();
  for (const auto& v : r.power_pd) powers.push_back(verdict_to_json(v));
  Json out = {{"pd", verdict_to_json(r.pd)},
              {"nilpotency", verdict_to_json(r.nilpotency)},
              {"power_pd", powers},
              {"tor_range", r.tor_range},
              {"tor_table", tor_table_to_json(r.tor_table)},
              {"mirror_table", tor_table_to_json(r.mirror_table)},
              {"mirror_consistent", r.mirror_consistent},
              {"verdict", perfectness_name(r.verdict)},
              {"reason", r.reason}};
  if (r.witness) out["witness"] = {{"i", r.witness->i}, {"j", r.witness->j}, {"dim", r.witness->dim}};
  return out;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"indices", x.indices}});
  return {{"ok", r.ok()}, {"total", r.total}, {"violations", v}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace injgen
