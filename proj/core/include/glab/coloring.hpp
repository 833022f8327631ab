#pragma once

#include <vector>

#include "glab/graph.hpp"

namespace glab {

// Ordered partition of the vertex set into color classes V1..Vk.
struct Coloring {
    std::vector<VertexSet> classes;

    int k() const { return static_cast<int>(classes.size()); }
    // 0-based class index of v, or -1 if v is in no class.
    int class_of(int v) const;
    // Pairwise disjoint, nonempty, union equals V(g).
    bool is_partition_of(const Graph& g) const;
    // Partition whose classes are all independent.
    bool is_proper(const Graph& g) const;
};

}  // namespace glab
