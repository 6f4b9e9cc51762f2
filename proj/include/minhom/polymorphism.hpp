#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "minhom/relation.hpp"

// Existence queries and constructive synthesis of conservative polymorphisms
// with prescribed values.  All entry points expect a conservative-closed
// language (one that contains every nonempty unary relation).

namespace minhom {

struct Prescription {
    Tuple input;
    int required_output;
};

enum class PairSide { InM, InMbar };

struct PairClass {
    std::pair<int, int> pair;  // a < b
    PairSide side = PairSide::InM;
    // InM: two commutative witnesses on the pair, collapsing to a resp. b.
    std::optional<OperationTable> toward_first;
    std::optional<OperationTable> toward_second;
    // InMbar (when the local conditions hold): ternary table arithmetical on
    // the pair.
    std::optional<OperationTable> arithmetical_witness;
};

struct TFGraph {
    std::vector<std::pair<int, int>> vertices;  // ordered pairs (a,b), {a,b} in M
    std::vector<std::pair<int, int>> edges;     // indices into vertices, i < j

    int vertex_index(std::pair<int, int> v) const;
    bool has_edge(int i, int j) const;
};

struct LocalConditionsReport {
    std::vector<PairClass> pairs;
    std::optional<std::pair<int, int>> violation;  // first failing pair, if any
    bool ok() const { return !violation.has_value(); }
};

// Exhaustive search (backtracking with preservation propagation) for a
// conservative table of the given arity preserving every relation of gamma
// and honoring the prescriptions.  Arity is capped at 3.
std::optional<OperationTable> find_polymorphism(const ConstraintLanguage& gamma, int arity,
                                                const std::vector<Prescription>& prescriptions);

PairClass pair_class(const ConstraintLanguage& gamma, int a, int b);

LocalConditionsReport check_local_conditions(const ConstraintLanguage& gamma);

TFGraph build_tf(const ConstraintLanguage& gamma, const LocalConditionsReport& report);

// Bipartition of T_F with part2 = {(y,x) | (x,y) in part1}; lexicographically
// least choice per connected component.  Empty result if T_F is odd.
std::optional<std::vector<std::pair<int, int>>> tf_bipartition_part1(const TFGraph& tf);

// Theorem-style constructions.  Outputs are conservative polymorphisms of
// gamma; identity checks are enforced before returning.
std::pair<OperationTable, OperationTable> construct_tournament_pair(
    const ConstraintLanguage& gamma, const TFGraph& tf,
    const std::vector<std::pair<int, int>>& part1);

OperationTable construct_arithmetical(const ConstraintLanguage& gamma,
                                      const LocalConditionsReport& report);

OperationTable construct_majority(const ConstraintLanguage& gamma,
                                  const LocalConditionsReport& report, const TFGraph& tf,
                                  const std::vector<std::pair<int, int>>& part1);

bool is_majority(const OperationTable& f);
// Checks m(x,x,y) = m(y,x,x) = m(y,x,y) = y for x != y within the pair {a,b}.
bool is_arithmetical_on_pair(const OperationTable& f, int a, int b);

}  // namespace minhom
