#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "minhom/relation.hpp"

// Backtracking search for an operation table of a fixed arity that preserves
// a set of relations.  Table entries are CSP variables; each relation rho and
// each choice of arity-many tuples from rho induces a constraint tying the
// entries addressed by the tuple columns to membership in rho.  Shared by the
// conservative polymorphism search and the pp-membership test.

namespace minhom::detail {

struct TableConstraint {
    std::vector<std::size_t> entries;  // entry index per coordinate of rho
    const Relation* rho;
};

class TableSearch {
public:
    // candidates[e] = allowed values for entry e; empty vector means no
    // solution.  Entry indexing matches OperationTable::index.
    TableSearch(int arity, int domain_size, std::vector<std::vector<int>> candidates,
                const std::vector<const Relation*>& relations);

    // Pin entry e to value v (intersects with existing candidates).
    bool prescribe(std::size_t entry, int value);

    std::optional<OperationTable> find();

private:
    int arity_;
    int domain_;
    std::vector<std::vector<int>> cand_;
    std::vector<TableConstraint> constraints_;
    std::vector<std::vector<std::size_t>> touching_;  // entry -> constraint ids
    std::vector<int> assign_;
    std::vector<std::size_t> order_;

    bool consistent_at(std::size_t cid) const;
    bool dfs(std::size_t pos);
};

// All value candidates for a conservative table: entry (x1..xk) may take any
// value among {x1..xk}.
std::vector<std::vector<int>> conservative_candidates(int arity, int domain_size);
// Unconstrained candidates (all of A), then narrowed by the unary relations
// of gamma: an entry whose arguments all lie in a unary set C must map into C.
std::vector<std::vector<int>> unary_closed_candidates(int arity, const ConstraintLanguage& gamma);

std::size_t table_entry_count(int arity, int domain_size);

}  // namespace minhom::detail
