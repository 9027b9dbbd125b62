#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "injgen/homology.hpp"

namespace injgen {

using Json = nlohmann::json;

// Field: {"kind": "fp", "p": 3} or {"kind": "q"}.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);
// Integer residue over F_p, "a/b" string over Q.
Json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

Json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

// Dense matrix as a list of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);

// Keys: field, group, basis, degree, unit, mult.
Json algebra_to_json(const GradedAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j);

// Keys: algebra, side, dim, degree (omitted when ungraded) and action_right or
// action_left. action[j][c] is the sparse image of basis vector c under e_j.
Json module_to_json(const Module& m);
Module module_from_json(const Json& j);

// Keys: left_algebra, right_algebra, dim, degree, action_left, action_right.
Json bimodule_to_json(const Bimodule& b);
Bimodule bimodule_from_json(const Json& j);

enum class ObjectKind { Algebra, Module, Bimodule };
const char* object_kind_name(ObjectKind k);
// Throws InputError for JSON matching none of the schemas.
ObjectKind object_kind(const Json& j);

// {"finite": d} or {"atLeast": c}.
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json resolution_to_json(const ResolutionReport& r);
Json perfectness_to_json(const PerfectnessReport& r);
Json axiom_report_to_json(const AxiomReport& r);

// Parse errors and unreadable files raise InputError.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace injgen
