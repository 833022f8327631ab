#pragma once

#include "glab/graph.hpp"

namespace glab::oracle {

// Exhaustive reference implementations, deliberately independent of the main
// solvers: subset enumeration and plain backtracking, no bounds, no ordering
// heuristics. Used to re-verify reported violations and as test oracles.
// All are exponential; callers keep n small (<= 16, achromatic <= 7).

int clique_number(const Graph& g);
int independence_number(const Graph& g);
int chromatic_number(const Graph& g);
int degeneracy(const Graph& g);
int achromatic_number(const Graph& g);

}  // namespace glab::oracle
