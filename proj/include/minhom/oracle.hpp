#pragma once

#include <variant>
#include <vector>

#include "minhom/relation.hpp"

// Deliberately naive ground truth: full enumeration, no pruning, and a
// constraint check written independently of the solver pipeline.

namespace minhom {

struct OracleResult {
    bool satisfiable = false;
    long long optimum = 0;                          // valid iff satisfiable
    std::vector<Assignment> optimal_assignments;    // all optima, lexicographic order
    unsigned long long satisfying_count = 0;
};

OracleResult brute_force_solve(const WeightedInstance& inst,
                               unsigned long long assignment_cap = 10'000'000ULL);

// All conservative tables of the given arity preserving every relation.
std::vector<OperationTable> enumerate_polymorphisms(const ConstraintLanguage& gamma, int arity,
                                                    std::size_t entry_cap = 16);

struct ConstraintViolated {
    int index;
};
// Measure of a satisfying assignment, or the first violated constraint.
std::variant<long long, ConstraintViolated> verify_solution(const WeightedInstance& inst,
                                                            const Assignment& assignment);

}  // namespace minhom
