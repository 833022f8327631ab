#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/coloring.hpp"
#include "glab/graph.hpp"
#include "glab/limits.hpp"

namespace glab {

// Repeated minimum-degree removal (smallest index breaks ties). ordering is
// the reverse removal order, so every vertex has fewer than coloring_number
// neighbors preceding it.
struct DegeneracyResult {
    std::vector<int> ordering;
    int degeneracy = 0;
    int coloring_number = 1;
};

DegeneracyResult degeneracy(const Graph& g);  // rejects n = 0

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), in discovery
// order. The count is m(G).
std::vector<VertexSet> maximal_cliques(const Graph& g);

VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;  // proper witness with exactly chi classes
};

// Exact chromatic number: branch and bound over color classes, seeded with a
// maximum clique below and a greedy degeneracy-order coloring above.
ChromaticResult chromatic_number(const Graph& g, int limit = SolverLimits{}.chromatic);

// Sum over edges, ascending edge index, of 1/sqrt(d(u)d(v)).
double randic_index(const Graph& g);

// Max over u of the largest degree among neighbors v of u with d(v) <= d(u).
// 0 on edgeless graphs.
int delta2(const Graph& g);

// log_{col/(col-1)} n + 2; requires at least one edge.
double chang_hsu_bound(const Graph& g);

struct InvariantReport {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    int delta2 = 0;
    int omega = 0;
    int alpha = 0;
    int chi = 0;
    int col = 0;
    int degeneracy = 0;
    double randic = 0.0;
    long long maximal_clique_count = 0;
    std::optional<int> gamma;  // filled when n is within the grundy cap
    std::optional<int> psi;    // filled when n is within the achromatic cap
};

InvariantReport compute_report(const Graph& g,
                               const SolverLimits& limits = SolverLimits::from_env());

// Flat JSON object, snake_case keys, floats with 12 significant digits.
std::string to_json(const InvariantReport& r);
std::string invariant_csv_header();
std::string to_csv_row(const InvariantReport& r);

}  // namespace glab
