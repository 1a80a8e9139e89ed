// Built-in battery of block specifications and standalone actions used by
// verify-all, the test suites and the benchmarks.
#pragma once

#include "blocklab/block_spec.hpp"

namespace blocklab {

// >= 10 specs: trivial and abelian E, quaternion-type E, p in {2, 3, 5},
// homocyclic and mixed D, trivial and nontrivial D2, p = 2 with elementary
// abelian D1.
std::vector<BlockSpec> builtin_catalog();
BlockSpec catalog_spec(const std::string& name);

// >= 20 faithful abelian p'-actions with |P| <= 81
std::vector<std::pair<std::string, PAction>> action_catalog();

// abelian p-groups used by the radical-power (divisibility) suite
std::vector<AbelianPGroup> group_catalog();

}  // namespace blocklab
