#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glab/graph.hpp"

namespace glab {

enum class Pattern { P4, C4, K3 };

// First (lexicographically smallest) vertex set inducing the pattern, or
// nullopt. Exhaustive over 3- or 4-subsets.
std::optional<VertexSet> find_induced(const Graph& g, Pattern pattern);

struct RecognitionResult {
    std::string property;
    bool holds = false;
    // "elimination_ordering" | "induced_cycle" | "violating_set" | "none"
    std::string certificate_kind;
    std::vector<int> vertices;
};

// Maximum-cardinality-search ordering validated as a perfect elimination
// ordering; on failure the certificate is an induced cycle of length >= 4
// found by an independent BFS search.
RecognitionResult is_chordal(const Graph& g);

// All vertices whose neighborhoods induce cliques, ascending.
std::vector<int> simplicial_vertices(const Graph& g);

enum class TpMode { Fast, Definitional };

// Fast: no induced P4 and no induced C4. Definitional (n <= limit): every
// nonempty induced subgraph H has alpha(H) = m(H).
RecognitionResult is_trivially_perfect(const Graph& g, TpMode mode, int limit = 7);

enum class PerfectPair { GammaOmega, GammaChi, ColOmega, GammaCol, GammaPsi };

std::string_view to_string(PerfectPair pair);

// Does alpha(H) = beta(H) hold on every nonempty induced subgraph? On failure
// the smallest violating vertex set (by size, then mask) is the certificate.
RecognitionResult perfectness_sweep(const Graph& g, PerfectPair pair, int limit = 7);

// {property, holds, certificate_kind, vertices[]}
std::string to_json(const RecognitionResult& r);

}  // namespace glab
