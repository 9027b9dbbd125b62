#include "injgen/build.hpp"

#include "injgen/constructions.hpp"
#include "injgen/homology.hpp"

namespace injgen {

namespace {

const std::string& input(const BuildRequest& req, const std::string& role) {
  auto it = req.inputs.find(role);
  if (it == req.inputs.end()) throw InputError(req.construction + " needs input '" + role + "'");
  return it->second;
}

Json with_provenance(Json body, const std::string& construction, const Json& inputs, const Json& parameters) {
  body[kProvenanceKey] = make_provenance(construction, inputs, parameters);
  return body;
}

Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
  const Field& f = left->field();
  return Bimodule(left, right, 0, std::vector<Matrix>(left->dim(), Matrix(f, 0, 0)),
                  std::vector<Matrix>(right->dim(), Matrix(f, 0, 0)));
}

std::size_t size_parameter(const Json& params, const char* key, std::size_t fallback) {
  if (!params.contains(key)) return fallback;
  if (!params.at(key).is_number_unsigned()) throw InputError(std::string("parameter ") + key + " must be a non-negative integer");
  return params.at(key).get<std::size_t>();
}

std::size_t nilpotency_or_throw(const Bimodule& m) {
  Verdict v = nilpotency_index(m);
  if (!v.is_finite()) throw PreconditionError("bimodule is not nilpotent within the cutoff");
  return v.value;
}

Bicharacter bicharacter_from(const Json& t, const GradedAlgebra& a, const GradedAlgebra& b) {
  const Field& f = a.field();
  if (t.is_string() && t.get<std::string>() == "one") return Bicharacter::trivial(f, a.group(), b.group());
  if (!t.is_array() || t.size() != a.group().rank()) throw InputError("bicharacter table needs one row per factor of the first group");
  Bicharacter out{f, a.group(), b.group(), {}};
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != b.group().rank()) throw InputError("bicharacter row has the wrong length");
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(f, v));
    out.values.push_back(r);
  }
  auto check = check_bicharacter(out);
  if (!check.ok) throw PreconditionError("not a bicharacter: " + check.failures.front());
  return out;
}

}  // namespace

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"covering", "initial-subring", "triangular", "morita-zero",
                                              "split-covering", "tensor-ring", "theta", "trivial-ext",
                                              "tensor", "twisted", "beilinson"};
  return names;
}

AlgebraPtr load_algebra(const Registry& reg, const std::string& hash) {
  return algebra_from_json(reg.get(hash));
}

Bimodule load_bimodule(const Registry& reg, const std::string& hash) {
  return bimodule_from_json(reg.get(hash));
}

Module load_module(const Registry& reg, const std::string& hash) {
  return module_from_json(reg.get(hash));
}

std::string register_algebra(Registry& reg, const GradedAlgebra& a, const std::string& label, const Json& provenance) {
  Json body = algebra_to_json(a);
  if (!provenance.is_null()) body[kProvenanceKey] = provenance;
  return reg.put(body, label);
}

std::string register_bimodule(Registry& reg, const Bimodule& b, const std::string& label, const Json& provenance) {
  Json body = bimodule_to_json(b);
  if (!provenance.is_null()) body[kProvenanceKey] = provenance;
  return reg.put(body, label);
}

std::string build(Registry& reg, const BuildRequest& req, const std::string& label) {
  const std::string& c = req.construction;
  const Json& params = req.parameters;
  auto ref = [&](const std::string& role) { return reg.resolve(input(req, role)); };

  if (c == "covering") {
    std::string base = ref("base");
    auto cov = covering_ring(load_algebra(reg, base));
    return reg.put(with_provenance(algebra_to_json(*cov.ring), c, {{"base", base}}, params), label);
  }
  if (c == "initial-subring") {
    std::string graded = ref("graded");
    auto sub = initial_subring(*load_algebra(reg, graded));
    return reg.put(with_provenance(algebra_to_json(*sub.algebra), c, {{"graded", graded}}, params), label);
  }
  if (c == "triangular") {
    std::string a = ref("a"), cc = ref("c"), n = ref("n");
    auto alg_a = load_algebra(reg, a), alg_c = load_algebra(reg, cc);
    Bimodule bn = load_bimodule(reg, n);
    if (!same_algebra(bn.left_algebra(), alg_a) || !same_algebra(bn.right_algebra(), alg_c))
      throw InputError("triangular needs an A-C bimodule");
    auto ring = morita_ring(zero_context(alg_a, alg_c, bn, zero_bimodule(alg_c, alg_a)));
    return reg.put(with_provenance(algebra_to_json(*ring.ring), c, {{"a", a}, {"c", cc}, {"n", n}}, params), label);
  }
  if (c == "morita-zero") {
    std::string a = ref("a"), b = ref("b"), n = ref("n"), m = ref("m");
    auto ring = morita_ring(zero_context(load_algebra(reg, a), load_algebra(reg, b), load_bimodule(reg, n),
                                         load_bimodule(reg, m)));
    return reg.put(
        with_provenance(algebra_to_json(*ring.ring), c, {{"a", a}, {"b", b}, {"n", n}, {"m", m}}, params), label);
  }
  if (c == "split-covering") {
    std::string base = ref("base");
    auto r = load_algebra(reg, base);
    std::size_t k = size_parameter(params, "k", r->group().is_cyclic() ? half_split_index(r->group()) : 0);
    auto split = split_covering(covering_ring(r), k);
    auto ring = morita_ring(split.context);
    Json from = make_provenance("split-covering-corner", {{"base", base}}, {{"k", k}});
    Json inputs = {{"base", base},
                   {"a", register_algebra(reg, *split.context.a, "", from)},
                   {"b", register_algebra(reg, *split.context.b, "", from)},
                   {"n", register_bimodule(reg, split.context.n, "", from)},
                   {"m", register_bimodule(reg, split.context.m, "", from)}};
    return reg.put(with_provenance(algebra_to_json(*ring.ring), c, inputs, {{"k", k}}), label);
  }
  if (c == "tensor-ring") {
    std::string bm = ref("bimodule");
    Bimodule m = load_bimodule(reg, bm);
    std::size_t k = size_parameter(params, "k", 0);
    if (k == 0) k = nilpotency_or_throw(m);
    auto t = tensor_ring(m, k);
    std::string base = register_algebra(reg, *m.left_algebra());
    return reg.put(with_provenance(algebra_to_json(*t.ring), c, {{"base", base}, {"bimodule", bm}}, {{"k", k}}),
                   label);
  }
  if (c == "theta" || c == "trivial-ext") {
    std::string bm = ref("bimodule");
    Bimodule m = load_bimodule(reg, bm);
    Json spec = c == "trivial-ext" ? Json("zero") : params.value("theta", Json("zero"));
    Json inputs = {{"bimodule", bm}};
    AlgebraPtr ring;
    if (spec == "zero") {
      ring = trivial_extension(m);
    } else if (spec == "tensor-ring") {
      std::size_t k = size_parameter(params, "k", 0);
      if (k == 0) k = nilpotency_or_throw(m);
      auto data = tensor_ring_theta(m, k);
      ring = theta_extension(data.m, data.theta);
      inputs["source"] = bm;
      inputs["bimodule"] = register_bimodule(reg, data.m, "", make_provenance("tensor-ring-sum", {{"bimodule", bm}},
                                                                               {{"k", k}}));
    } else if (spec.is_array()) {
      Matrix theta = matrix_from_json(m.field(), spec, m.dim(), m.dim() * m.dim());
      auto check = check_theta(m, theta);
      if (!check.ok) throw PreconditionError("theta is not an associative bimodule map: " + check.failures.front());
      ring = theta_extension(m, theta);
    } else {
      throw InputError("theta must be \"zero\", \"tensor-ring\" or a matrix");
    }
    inputs["base"] = register_algebra(reg, *m.left_algebra());
    Json p = params;
    if (c == "theta") p["theta"] = spec;
    return reg.put(with_provenance(algebra_to_json(*ring), c, inputs, p), label);
  }
  if (c == "tensor" || c == "twisted") {
    std::string a = ref("a"), b = ref("b");
    auto alg_a = load_algebra(reg, a), alg_b = load_algebra(reg, b);
    AlgebraPtr ring;
    Json p = params;
    if (c == "tensor") {
      ring = tensor_product(*alg_a, *alg_b);
    } else {
      Json t = params.value("t", Json("one"));
      ring = twisted_tensor(*alg_a, *alg_b, bicharacter_from(t, *alg_a, *alg_b));
      p["t"] = t;
    }
    return reg.put(with_provenance(algebra_to_json(*ring), c, {{"a", a}, {"b", b}}, p), label);
  }
  if (c == "beilinson") {
    std::string lambda = ref("lambda");
    if (!params.contains("l")) throw InputError("beilinson needs parameter l");
    std::size_t l = size_parameter(params, "l", 0);
    auto data = beilinson(*load_algebra(reg, lambda), l);
    return reg.put(with_provenance(algebra_to_json(*data.extension), c, {{"lambda", lambda}}, {{"l", l}}), label);
  }
  throw InputError("unknown construction: " + c);
}

}  // namespace injgen
