#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minhom/polymorphism.hpp"
#include "minhom/relation.hpp"

// Tractable / NP-hard classification of conservative-closed constraint
// languages, with machine-checkable witnesses on both sides.

namespace minhom {

struct CrossedPair {
    int a = 0, b = 0;  // predicate {a,b}^2 minus (b,b)
};

struct LinWitness {
    int a = 0, b = 0;  // ternary parity relation on {a,b}
};

struct OddBoxCycle {
    std::vector<std::pair<int, int>> pairs;  // (a_i, b_i), odd count >= 3
};

struct HardnessWitness {
    std::variant<CrossedPair, LinWitness, OddBoxCycle> kind;
    // True when every named predicate passed the bounded pp-definability
    // check; false means the check hit its size cap ("unverified-at-scale").
    bool verified = false;
    std::string note;
};

struct TractableWitness {
    LocalConditionsReport report;
    TFGraph tf;
    std::vector<std::pair<int, int>> bipartition_part1;
    OperationTable phi, psi;  // tournament pair
    std::optional<OperationTable> arithmetical;  // present iff Mbar nonempty
    OperationTable majority;
};

struct Verdict {
    ConstraintLanguage closure;  // input language plus all nonempty unaries
    std::variant<TractableWitness, HardnessWitness> outcome;

    bool tractable() const { return std::holds_alternative<TractableWitness>(outcome); }
    const TractableWitness& witness() const { return std::get<TractableWitness>(outcome); }
    const HardnessWitness& hardness() const { return std::get<HardnessWitness>(outcome); }
};

ConstraintLanguage conservative_closure(const ConstraintLanguage& gamma);

Verdict classify(const ConstraintLanguage& gamma);

// Precondition: the language is NP-hard (local-condition violation, or odd
// cycle in T_F).  Throws std::logic_error when called on a tractable one.
HardnessWitness extract_hardness_witness(const ConstraintLanguage& gamma_c,
                                         const LocalConditionsReport& report, const TFGraph& tf);

// The relation a witness names, for validation and display.
Relation witness_relation(const CrossedPair& w, int domain_size);
Relation witness_relation(const LinWitness& w, int domain_size);

// Shortest odd simple cycle, lexicographically least among the shortest;
// vertices in cycle order.  Empty when the graph is bipartite.
std::vector<int> shortest_odd_cycle(int num_vertices, const std::vector<std::pair<int, int>>& edges);

}  // namespace minhom
