#pragma once

#include <utility>
#include <vector>

#include "minhom/relation.hpp"

// Instance and graph generators for reduction experiments: independent-set
// encoding over an odd cycle of value pairs, odd-cycle edge subdivision, and
// the parity encoding of Max-CUT.

namespace minhom {

struct UndirectedGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // unordered, no loops

    void validate() const;
};

struct TripartiteGraph {
    std::vector<int> part;  // per vertex: 0, 1 or 2
    std::vector<std::pair<int, int>> edges;

    int num_vertices() const { return static_cast<int>(part.size()); }
    void validate() const;
};

// One variable per vertex of g.  partition[v] maps g homomorphically onto the
// odd cycle C_m, m = cycle_pairs.size() (odd, >= 3): every edge must join
// consecutive parts.  Each vertex in part i ranges over {a_i, b_i} =
// cycle_pairs[i]; edges get the three-tuple box constraint forbidding
// (b_i, b_{i+1}).  Choosing b costs 0 and a costs 1, so the minimum measure
// equals |V| minus the maximum independent set size of g.
WeightedInstance gadget_independent_set(const UndirectedGraph& g,
                                        const std::vector<int>& partition,
                                        const std::vector<std::pair<int, int>>& cycle_pairs);

// Replaces every edge between parts 0 and 1 by a path through d-3 fresh
// vertices (d odd, >= 5).  Returns the new graph and a map of every vertex to
// its class in the canonical C_d homomorphism.  The maximum independent set
// grows by exactly (d-3)/2 per subdivided edge.
struct SubdivideResult {
    UndirectedGraph graph;
    std::vector<int> cycle_class;  // vertex -> class in 0..d-1
};
SubdivideResult gadget_subdivide(const TripartiteGraph& g, int d);

// Variables: one 0/1 side label per vertex, one indicator per edge, tied by
// the odd parity relation x_e ^ y_u ^ y_v = 1 (so x_e = 0 exactly on cut
// edges).  Each x_e = 1 costs 1, so the minimum measure is |E| minus the
// maximum cut size.
WeightedInstance gadget_maxcut(const UndirectedGraph& g);

}  // namespace minhom
