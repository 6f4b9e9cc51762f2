#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minhom/classifier.hpp"
#include "minhom/relation.hpp"

// The tractable-case pipeline: weight transforms, pp-expansion, binarization,
// arc/path consistency, microstructure graph, exact min-weight-max-clique,
// an LP cross-check, and the two boolean fast paths.

namespace minhom {

struct BinaryInstance {
    int n = 0;
    int domain_size = 0;
    std::vector<std::vector<char>> unary;    // unary[i][a] = value a allowed
    std::vector<std::vector<char>> binary;   // binary[i*n+j][a*d+b]; transpose-symmetric
    std::vector<std::vector<long long>> weights;

    static BinaryInstance full(int n, int domain_size);
    bool allowed(int i, int j, int a, int b) const {
        return binary[static_cast<std::size_t>(i) * n + j]
                     [static_cast<std::size_t>(a) * domain_size + b];
    }
    // Clears (a,b) from the (i,j) relation and (b,a) from (j,i).
    void forbid(int i, int j, int a, int b);

    bool operator==(const BinaryInstance&) const = default;
};

struct MicrostructureGraph {
    int num_parts = 0;
    std::vector<int> part;    // vertex -> variable
    std::vector<int> value;   // vertex -> domain value
    std::vector<long long> weight;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<int>> part_vertices;

    int num_vertices() const { return static_cast<int>(part.size()); }
};

struct SolveResult {
    enum class Kind { Optimal, Unsatisfiable, NotCovered } kind = Kind::Unsatisfiable;
    Assignment assignment;   // valid iff Optimal
    long long measure = 0;   // valid iff Optimal
    std::optional<HardnessWitness> witness;  // set iff NotCovered
    std::string reason;
};

WeightedInstance shift_weights(const WeightedInstance& inst, long long s);

// Folds every arity-1 constraint into the weights: W = total weight + 1, and
// each value outside a variable's allowed set is penalized by +W.  The
// original instance is satisfiable iff the transformed optimum is < W, and
// then optima agree.
struct AbsorbResult {
    WeightedInstance instance;
    long long threshold;  // W
};
AbsorbResult absorb_unary_constraints(const WeightedInstance& inst);

// Primitive-positive definition of a relation: the defined relation's
// coordinates are argument slots 0..arity-1, existentials follow.  An atom
// with relation "=" and two args identifies variables.
struct PPFormula {
    int arity = 0;
    int num_existential = 0;
    struct Atom {
        std::string relation;
        std::vector<int> args;
    };
    std::vector<Atom> atoms;
};

// Rewrites every constraint whose relation has a definition into its atoms
// over the target language; existentials become fresh zero-weight variables,
// equality atoms merge variables (weights added).  Optimum is preserved.
WeightedInstance expand_pp_instance(const WeightedInstance& inst,
                                    const ConstraintLanguage& target,
                                    const std::map<std::string, PPFormula>& definitions);

// Baker-Pixley binarization: requires mu to be a majority polymorphism of
// every constraint relation; the binary instance has the same solution set.
BinaryInstance binarize(const WeightedInstance& inst, const OperationTable& mu);

enum class ConsistencyStatus { Consistent, Empty };
ConsistencyStatus enforce_consistency(BinaryInstance& bi, std::vector<std::string>* trace = nullptr);

MicrostructureGraph build_microstructure(const BinaryInstance& bi);

// Among cliques of maximum cardinality, minimum total weight; ties broken by
// the lexicographically least induced assignment (skipped parts sort last).
struct CliqueResult {
    std::vector<int> vertices;  // chosen vertex per used part
    int size = 0;
    long long weight = 0;
};
CliqueResult solve_mmclique_exact(const MicrostructureGraph& g);

// LP relaxation with clique inequalities of the complement graph plus the
// cardinality equality; exact rational simplex underneath.  Throws
// std::runtime_error when the complement has more maximal cliques than the cap.
struct LPCheck {
    double lp_value = 0.0;
    std::string exact_value;  // rational as "p/q"
    bool integral = false;
};
LPCheck solve_mmclique_lp(const MicrostructureGraph& g, std::size_t clique_cap = 4096);

// Boolean fast paths.  Throw std::invalid_argument on out-of-scope relations.
SolveResult solve_boolean_monotone(const WeightedInstance& inst);      // {<=, {0}, {1}}
SolveResult solve_boolean_disequality(const WeightedInstance& inst);   // {!=, {0}, {1}}

SolveResult solve(const ConstraintLanguage& gamma, const WeightedInstance& inst);
SolveResult solve_with_verdict(const Verdict& verdict, const WeightedInstance& inst,
                               std::vector<std::string>* trace = nullptr);

}  // namespace minhom
