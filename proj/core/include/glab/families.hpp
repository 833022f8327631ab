#pragma once

#include <map>
#include <string>
#include <vector>

#include "glab/graph.hpp"

namespace glab {

Graph complete_graph(int n);      // n >= 1
Graph empty_graph(int n);         // n >= 1
Graph path_graph(int n);          // n >= 1
Graph cycle_graph(int n);         // n >= 3
Graph complete_bipartite(int a, int b);  // a, b >= 1

// K_{t,t} minus a perfect matching: parts a_1..a_t (vertices 0..t-1) and
// b_1..b_t (vertices t..2t-1); a_i ~ b_j iff i != j. Grundy number t.
Graph crown(int t);  // t >= 1

// K_{k-1,k-1} minus the matching a_i b_i for i = 1..k-2; the smallest
// triangle-free graph with Grundy number k, on 2k-2 vertices.
Graph b_graph(int k);  // k >= 2

// K_k split into halves A and B, plus crown((n-k)/2); every vertex of A is
// joined to each a_i and every vertex of B to each b_i. omega = k and
// Grundy number (n+k)/2.
Graph zaker_soltani(int k, int n);  // 2 <= k <= n, n-k even

// join(K_k, empty(n-k)): Grundy number k+1 and complement chromatic number
// n-k, so the Nordhaus-Gaddum-type sum meets n+1 exactly.
Graph ng_sharp(int n, int k);  // 1 <= k <= n-1

struct FamilySpec {
    std::string family;
    std::map<std::string, int> params;
};

struct FamilyInstance {
    FamilySpec spec;
    Graph graph;
    // Invariant values pinned by the construction (e.g. "gamma", "omega").
    std::map<std::string, long long> expected;
};

const std::vector<std::string>& family_ids();
FamilyInstance make_family(const FamilySpec& spec);
std::string to_json(const FamilyInstance& inst);

}  // namespace glab
