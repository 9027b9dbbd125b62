#pragma once

#include <map>
#include <string>
#include <vector>

#include "injgen/registry.hpp"

namespace injgen {

// Constructions over registered objects. Inputs are given by role:
//   covering          base (algebra)
//   initial-subring   graded (algebra)
//   triangular        a, c (algebras), n (A-C bimodule)      -> [[A, N], [0, C]]
//   morita-zero       a, b (algebras), n (A-B), m (B-A)       -> zero maps
//   split-covering    base (algebra); parameter k            -> covering ring as a context
//   tensor-ring       bimodule; parameter k (default: its nilpotency index)
//   theta             bimodule; parameter theta: "zero", "tensor-ring" or a matrix
//   trivial-ext       bimodule
//   tensor            a, b (algebras)
//   twisted           a, b (algebras); parameter t: "one" or a table of generator values
//   beilinson         lambda (algebra); parameter l
// Objects derived along the way (corners, base rings) are registered with
// their own provenance and listed among the inputs.
struct BuildRequest {
  std::string construction;
  std::map<std::string, std::string> inputs;  // role -> hash or reference
  Json parameters = Json::object();
};

const std::vector<std::string>& construction_names();

// Returns the hash of the registered result. InputError for unknown names or
// missing inputs; constructions raise PreconditionError as usual.
std::string build(Registry& reg, const BuildRequest& req, const std::string& label = "");

// Convenience loaders for registered objects.
AlgebraPtr load_algebra(const Registry& reg, const std::string& hash);
Bimodule load_bimodule(const Registry& reg, const std::string& hash);
Module load_module(const Registry& reg, const std::string& hash);

// Registers an in-memory object, with optional provenance.
std::string register_algebra(Registry& reg, const GradedAlgebra& a, const std::string& label = "",
                             const Json& provenance = nullptr);
std::string register_bimodule(Registry& reg, const Bimodule& b, const std::string& label = "",
                              const Json& provenance = nullptr);

}  // namespace injgen
