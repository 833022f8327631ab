#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glab {

// Vertex subsets of one graph fit in a single machine word: vertex i <-> bit i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kEnumerationLimit = 8;  // exhaustive isomorph-free enumeration
inline constexpr int kCanonicalLimit = 10;   // min-string canonizer
inline constexpr int kDefaultIsoLimit = 10;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> vertices_of(VertexSet s);

// Undirected simple graph on n <= 64 vertices, one adjacency bitmask per vertex.
// Immutable after construction; every operation below is a pure function.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless on n vertices

    // Duplicate edges collapse; loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;  // |E|
    VertexSet vertex_set() const { return full_set(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;
    int min_degree() const;  // n >= 1
    int max_degree() const;  // n >= 1
    std::vector<int> degrees() const;

    bool connected() const;
    bool is_edgeless() const;
    bool is_complete() const;
    bool is_regular() const;  // n >= 1
    bool is_bipartite() const;

    Graph complement() const;
    // Vertices of s relabeled 0..|s|-1 in ascending original order.
    Graph induced(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;

    void set_edge(int u, int v);
    void check_invariants() const;  // symmetry, irreflexivity, bit range
};

// Disjoint union plus all cross edges; combined order must stay <= 64.
Graph join(const Graph& g, const Graph& h);

// graph6 text format, short form only (n <= 62).
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view line);

// Edge-list text format: first line "n m", then m lines "u v", 0-indexed.
Graph parse_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// Corpus reader: newline-delimited graph6 lines, or a single edge-list graph
// (detected by a leading digit on the first line).
std::vector<Graph> read_graph_file(std::istream& in);

// Exhaustive permutation search with degree-sequence and neighborhood-degree
// pruning. Refuses n > limit to keep the runtime bounded.
bool are_isomorphic(const Graph& g, const Graph& h, int limit = kDefaultIsoLimit);

// Canonical form: the lexicographically minimal adjacency bit-string (in
// graph6 column-major bit order) over all n! relabelings. n <= 10.
std::uint64_t canonical_key(const Graph& g);
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

// One representative (the canonical form) per isomorphism class, in ascending
// canonical-key order. n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

}  // namespace glab
