#pragma once

#include <optional>
#include <string>
#include <vector>

#include "injgen/module.hpp"

namespace injgen {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
  GroupElem degree;  // empty means degree zero
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
};

// Paths are read left to right: p * q is p followed by q.
struct PathAlgebraSpec {
  Quiver quiver;
  std::vector<std::vector<std::size_t>> zero_relations;  // arrow index sequences set to zero
  std::optional<std::size_t> max_length;                  // all paths of this length vanish
  FiniteAbelianGroup group;
};

AlgebraPtr path_algebra(const Field& field, const PathAlgebraSpec& spec);
AlgebraPtr linear_quiver_algebra(const Field& field, std::size_t vertices);
// k^n, the span of the trivial paths.
AlgebraPtr vertex_algebra(const Field& field, std::size_t vertices);
// The arrows as a bimodule over the vertex algebra.
Bimodule arrow_bimodule(const Field& field, const Quiver& quiver, const AlgebraPtr& vertices);
// Group algebra of a finite abelian group, graded by the group itself when `graded`.
AlgebraPtr group_algebra(const Field& field, const FiniteAbelianGroup& group, bool graded = true);
// k[x]/(x^m) with x in degree `degree` of `group`.
AlgebraPtr truncated_polynomial(const Field& field, std::size_t m, const FiniteAbelianGroup& group,
                                const GroupElem& degree);
// Two-sided ideal spanned by basis elements, as an A-A bimodule.
Bimodule ideal_bimodule(const AlgebraPtr& a, const std::vector<std::size_t>& indices);
// A / (span of basis elements forming a two-sided ideal), as an A-A bimodule.
Bimodule quotient_bimodule(const AlgebraPtr& a, const std::vector<std::size_t>& indices);

Quiver linear_quiver(std::size_t vertices);

}  // namespace injgen
