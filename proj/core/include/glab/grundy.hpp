#pragma once

#include <string>
#include <vector>

#include "glab/coloring.hpp"
#include "glab/graph.hpp"
#include "glab/limits.hpp"

namespace glab {

// First-fit: each vertex of `order` receives the smallest color absent from
// its already-colored neighbors. The result is always a Grundy coloring.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

enum class GrundyViolationKind {
    ClassNotIndependent,   // vertex has a neighbor inside its own class
    MissingLowerNeighbor,  // vertex has no neighbor in class_index < its own
};

struct GrundyViolation {
    GrundyViolationKind kind = GrundyViolationKind::ClassNotIndependent;
    int vertex = -1;
    int class_index = -1;
};

struct GrundyVerdict {
    bool valid = false;
    GrundyViolation violation{};
};

// Throws if c is not a partition of V(g); otherwise reports the first
// violating (vertex, class) pair in class-major order.
GrundyVerdict is_grundy_coloring(const Graph& g, const Coloring& c);

// witnesses[v][j] is a neighbor of v inside class j, for every j below the
// class of v; vertices of class 0 have an empty witness list.
struct GrundyCertificate {
    Coloring coloring;
    std::vector<std::vector<int>> witnesses;
};

struct GrundyResult {
    int gamma = 0;
    GrundyCertificate certificate;
};

// Exact Grundy number via maximal-independent-set recursion memoized on the
// surviving vertex set, pruned by Delta2+1, (n+omega)/2 and floor(2R) and by
// greedy incumbents. The certificate is re-validated before returning.
GrundyResult grundy_number(const Graph& g, int limit = SolverLimits{}.grundy);

// Exact achromatic number by backtracking over vertices in degree-descending
// order, pruning when uncovered color pairs exceed the edges still available.
int achromatic_number(const Graph& g, int limit = SolverLimits{}.achromatic);

// Independent oracle: maximum first-fit color count over all n! orders.
int grundy_brute_force(const Graph& g, int limit = SolverLimits{}.grundy_brute);

// {"classes": [[v,...],...], "witnesses": {"v": {"j": w, ...}, ...}}
std::string to_json(const GrundyCertificate& cert);

}  // namespace glab
