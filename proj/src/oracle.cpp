#include "minhom/oracle.hpp"

#include <stdexcept>

namespace minhom {

namespace {

// Independent membership check: linear scan, no binary search, no sharing
// with the solver path.
bool tuple_in(const Relation& rho, const Tuple& t) {
    for (const auto& u : rho.tuples)
        if (u == t) return true;
    return false;
}

bool satisfies(const WeightedInstance& inst, const std::vector<int>& values, int* violated) {
    for (std::size_t ci = 0; ci < inst.constraints.size(); ++ci) {
        const auto& c = inst.constraints[ci];
        Tuple t;
        for (int v : c.scope) t.push_back(values[v]);
        if (!tuple_in(c.relation, t)) {
            if (violated) *violated = static_cast<int>(ci);
            return false;
        }
    }
    return true;
}

}  // namespace

OracleResult brute_force_solve(const WeightedInstance& inst, unsigned long long assignment_cap) {
    inst.validate();
    unsigned long long total = 1;
    for (int i = 0; i < inst.num_vars; ++i) {
        total *= static_cast<unsigned long long>(inst.domain_size);
        if (total > assignment_cap)
            throw std::runtime_error("brute force cap exceeded: more than " +
                                     std::to_string(assignment_cap) + " assignments");
    }

    OracleResult res;
    std::vector<int> values(inst.num_vars, 0);
    for (;;) {
        if (satisfies(inst, values, nullptr)) {
            ++res.satisfying_count;
            long long measure = 0;
            for (int i = 0; i < inst.num_vars; ++i) measure += inst.weights[i][values[i]];
            if (!res.satisfiable || measure < res.optimum) {
                res.satisfiable = true;
                res.optimum = measure;
                res.optimal_assignments.clear();
            }
            if (measure == res.optimum) res.optimal_assignments.push_back({values});
        }
        int i = inst.num_vars - 1;
        while (i >= 0 && values[i] + 1 == inst.domain_size) values[i--] = 0;
        if (i < 0) break;
        ++values[i];
    }
    return res;
}

std::vector<OperationTable> enumerate_polymorphisms(const ConstraintLanguage& gamma, int arity,
                                                    std::size_t entry_cap) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) {
        entries *= static_cast<std::size_t>(gamma.domain_size);
        if (entries > entry_cap)
            throw std::runtime_error("polymorphism enumeration cap exceeded");
    }

    std::vector<OperationTable> out;
    OperationTable f(arity, gamma.domain_size);
    std::vector<std::vector<int>> options(entries);
    for (std::size_t e = 0; e < entries; ++e) {
        Tuple args = f.args_of(e);
        for (int v = 0; v < gamma.domain_size; ++v)
            for (int a : args)
                if (a == v) { options[e].push_back(v); break; }
    }
    std::vector<std::size_t> pick(entries, 0);
    for (;;) {
        for (std::size_t e = 0; e < entries; ++e) f.table[e] = options[e][pick[e]];
        bool ok = true;
        for (const auto& [name, rho] : gamma.relations)
            if (!preserves(f, rho)) { ok = false; break; }
        if (ok) out.push_back(f);
        std::size_t e = entries;
        while (e > 0 && pick[e - 1] + 1 == options[e - 1].size()) pick[--e] = 0;
        if (e == 0) break;
        ++pick[e - 1];
    }
    return out;
}

std::variant<long long, ConstraintViolated> verify_solution(const WeightedInstance& inst,
                                                            const Assignment& assignment) {
    inst.validate();
    if (static_cast<int>(assignment.values.size()) != inst.num_vars)
        throw std::invalid_argument("assignment length mismatch");
    for (int v : assignment.values)
        if (v < 0 || v >= inst.domain_size)
            throw std::invalid_argument("assignment value out of domain");
    int violated = -1;
    if (!satisfies(inst, assignment.values, &violated)) return ConstraintViolated{violated};
    long long measure = 0;
    for (int i = 0; i < inst.num_vars; ++i) measure += inst.weights[i][assignment.values[i]];
    return measure;
}

}  // namespace minhom
