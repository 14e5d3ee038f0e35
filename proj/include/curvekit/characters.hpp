#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvekit/multipoly.hpp"

namespace curvekit {

// A named integer relation among characters, written as expr = 0.
struct CharacterRelation {
  std::string name;
  MultiPoly expr;
};

// Completes a partial assignment of nonnegative integer characters using
// relations of degree at most two. Each relation with a single unknown is
// solved exactly; a relation whose unknowns all enter linearly with the same
// sign as its constant part proves inconsistency. Throws Inconsistent
// (naming the relation) or Underdetermined.
std::vector<Int> solve_characters(const VarList& vars, const std::vector<CharacterRelation>& relations,
                                  std::vector<std::optional<Int>> values);

}  // namespace curvekit
