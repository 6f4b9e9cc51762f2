#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite relations, operation tables and constraint languages over a
// domain {0..|A|-1}.  Everything here is immutable-by-convention: build a
// value, then only read it.  All operations are pure.

namespace minhom {

using Tuple = std::vector<int>;

struct Relation {
    int arity = 0;
    int domain_size = 0;
    std::vector<Tuple> tuples;  // sorted, unique

    Relation() = default;
    Relation(int arity, int domain_size) : arity(arity), domain_size(domain_size) {
        if (arity < 1 || domain_size < 1)
            throw std::invalid_argument("relation needs positive arity and domain size");
    }
    Relation(int arity, int domain_size, std::vector<Tuple> ts);

    bool contains(const Tuple& t) const;
    bool empty() const { return tuples.empty(); }
    std::size_t size() const { return tuples.size(); }

    bool operator==(const Relation& o) const = default;
};

// Common constructions.
Relation equality_relation(int domain_size);
Relation full_relation(int arity, int domain_size);
Relation unary_relation(int domain_size, const std::vector<int>& members);
Relation leq_relation(int domain_size);   // x <= y
Relation neq_relation(int domain_size);   // x != y
// Ternary parity relation on {a,b}: tuples (a_x,a_y,a_z) with x^y^z = 0.
Relation lin_relation(int domain_size, int a, int b);
// {a,b} x {c,d} minus the corner (b,d): three pairs.
Relation box_relation(int domain_size, int a, int b, int c, int d);
// The two pairs {(a,d),(b,c)}.
Relation cross_relation(int domain_size, int a, int b, int c, int d);

Relation transpose(const Relation& rho);
Relation compose(const Relation& alpha, const Relation& beta);
Relation intersect(const Relation& alpha, const Relation& beta);
// 1-based coordinate indices, i != j.
Relation project_binary(const Relation& rho, int i, int j);
Relation pr1(const Relation& rho);
Relation pr2(const Relation& rho);

struct OperationTable {
    int arity = 0;
    int domain_size = 0;
    std::vector<int> table;  // size domain_size^arity, row-major in the arguments

    OperationTable() = default;
    OperationTable(int arity, int domain_size)
        : arity(arity), domain_size(domain_size) {
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
        table.assign(n, -1);
    }

    std::size_t index(const Tuple& args) const {
        std::size_t idx = 0;
        for (int v : args) idx = idx * static_cast<std::size_t>(domain_size) + static_cast<std::size_t>(v);
        return idx;
    }
    int apply(const Tuple& args) const { return table[index(args)]; }
    int apply2(int x, int y) const { return table[static_cast<std::size_t>(x) * domain_size + y]; }
    int apply3(int x, int y, int z) const {
        return table[(static_cast<std::size_t>(x) * domain_size + y) * domain_size + z];
    }
    Tuple args_of(std::size_t idx) const;

    bool is_total() const;
    bool is_conservative() const;

    bool operator==(const OperationTable& o) const = default;
};

OperationTable projection_table(int arity, int domain_size, int coordinate);
// Restriction of a conservative operation to a subset S (S must be closed
// under f; guaranteed when f is conservative).  Values are re-indexed to
// 0..|S|-1 in the order given by S (sorted internally).
OperationTable restrict_table(const OperationTable& f, const std::vector<int>& subset);

bool preserves(const OperationTable& f, const Relation& rho);

struct ConstraintLanguage {
    int domain_size = 0;
    std::vector<std::pair<std::string, Relation>> relations;

    ConstraintLanguage() = default;
    explicit ConstraintLanguage(int domain_size) : domain_size(domain_size) {}

    void add(const std::string& name, Relation r);
    const Relation* find(const std::string& name) const;
};

struct Constraint {
    std::string relation_name;
    Relation relation;
    std::vector<int> scope;  // variable indices
};

struct WeightedInstance {
    int num_vars = 0;
    int domain_size = 0;
    std::vector<Constraint> constraints;
    std::vector<std::vector<long long>> weights;  // weights[var][value] >= 0

    void validate() const;
};

struct Assignment {
    std::vector<int> values;

    bool operator==(const Assignment&) const = default;
};

// Bounded pp-definability test: rho is in the relational clone of gamma iff
// every polymorphism of gamma of arity |rho| preserves rho.  The search is
// exact; queries whose table size domain^|rho| exceeds the cap throw
// PPTooLarge instead of approximating.
struct PPTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_pp_member(const Relation& rho, const ConstraintLanguage& gamma,
                  std::size_t table_size_cap = 4096);

}  // namespace minhom
