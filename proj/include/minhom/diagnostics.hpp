#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minhom/solver.hpp"

// Structural certificates over graphs and binary instances: odd holes and
// antiholes, the cyclic S-type adjacency template, and odd cross-pattern
// cycles over designated two-element value pairs ("deadlocks").  These are
// test instruments: exhaustive at desk scale, loudly bounded.

namespace minhom {

struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;  // symmetric, zero diagonal

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

SimpleGraph complement_graph(const SimpleGraph& g);
SimpleGraph microstructure_to_graph(const MicrostructureGraph& g);

struct Hole {
    enum class Kind { OddHole, OddAntihole } kind;
    std::vector<int> vertices;  // cycle order (in g for holes, in complement for antiholes)
};

// Exhaustive search for an induced odd cycle of length 5..max_size in g or in
// its complement; max_size must be odd and >= 5.
std::optional<Hole> find_odd_hole_or_antihole(const SimpleGraph& g, int max_size = 9);

// Cyclic template on 2p+1 vertices: consecutive vertices non-adjacent,
// distance-two vertices adjacent, all other pairs unconstrained.
std::optional<std::vector<int>> find_S_type_subgraph(const SimpleGraph& g, int p);
std::optional<std::vector<int>> find_S_type_subgraph(const MicrostructureGraph& g, int p);

struct DeadlockCertificate {
    std::vector<int> variables;               // i_0..i_{k-1}, k odd >= 3, distinct
    std::vector<std::pair<int, int>> pairs;   // (x_s, y_s) per position
};

// Searches odd simple cycles (length 3..max_len) of variables such that each
// consecutive binary relation restricted to the chosen pairs is exactly the
// two-tuple cross pattern {(x_s, y_{s+1}), (y_s, x_{s+1})}.  Pairs are drawn
// from the supplied two-element sets (given as (min,max)).
std::optional<DeadlockCertificate> find_arithmetical_deadlock(
    const BinaryInstance& bi, const std::vector<std::pair<int, int>>& candidate_pairs,
    int max_len = 7);

// Re-validates a certificate against the instance by direct relation checks.
bool deadlock_certificate_valid(const BinaryInstance& bi, const DeadlockCertificate& cert);

}  // namespace minhom
