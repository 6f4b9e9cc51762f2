#include "minhom/relation.hpp"

#include <algorithm>
#include <set>

#include "table_search.hpp"

namespace minhom {

Relation::Relation(int arity, int domain_size, std::vector<Tuple> ts)
    : Relation(arity, domain_size) {
    for (const auto& t : ts) {
        if (static_cast<int>(t.size()) != arity)
            throw std::invalid_argument("tuple length does not match relation arity");
        for (int v : t)
            if (v < 0 || v >= domain_size)
                throw std::invalid_argument("tuple entry out of domain range");
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    tuples = std::move(ts);
}

bool Relation::contains(const Tuple& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

Relation equality_relation(int domain_size) {
    std::vector<Tuple> ts;
    for (int a = 0; a < domain_size; ++a) ts.push_back({a, a});
    return Relation(2, domain_size, std::move(ts));
}

Relation full_relation(int arity, int domain_size) {
    std::vector<Tuple> ts;
    Tuple t(arity, 0);
    for (;;) {
        ts.push_back(t);
        int i = arity - 1;
        while (i >= 0 && t[i] + 1 == domain_size) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return Relation(arity, domain_size, std::move(ts));
}

Relation unary_relation(int domain_size, const std::vector<int>& members) {
    std::vector<Tuple> ts;
    for (int m : members) ts.push_back({m});
    return Relation(1, domain_size, std::move(ts));
}

Relation leq_relation(int domain_size) {
    std::vector<Tuple> ts;
    for (int a = 0; a < domain_size; ++a)
        for (int b = a; b < domain_size; ++b) ts.push_back({a, b});
    return Relation(2, domain_size, std::move(ts));
}

Relation neq_relation(int domain_size) {
    std::vector<Tuple> ts;
    for (int a = 0; a < domain_size; ++a)
        for (int b = 0; b < domain_size; ++b)
            if (a != b) ts.push_back({a, b});
    return Relation(2, domain_size, std::move(ts));
}

Relation lin_relation(int domain_size, int a, int b) {
    if (a == b) throw std::invalid_argument("lin needs two distinct elements");
    int el[2] = {a, b};
    std::vector<Tuple> ts;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                if ((x ^ y ^ z) == 0) ts.push_back({el[x], el[y], el[z]});
    return Relation(3, domain_size, std::move(ts));
}

Relation box_relation(int domain_size, int a, int b, int c, int d) {
    if (a == b || c == d) throw std::invalid_argument("box needs distinct pair elements");
    std::vector<Tuple> ts = {{a, c}, {a, d}, {b, c}};
    return Relation(2, domain_size, std::move(ts));
}

Relation cross_relation(int domain_size, int a, int b, int c, int d) {
    if (a == b || c == d) throw std::invalid_argument("cross needs distinct pair elements");
    std::vector<Tuple> ts = {{a, d}, {b, c}};
    return Relation(2, domain_size, std::move(ts));
}

static void require_binary(const Relation& rho, const char* op) {
    if (rho.arity != 2)
        throw std::invalid_argument(std::string(op) + " requires a binary relation");
}

Relation transpose(const Relation& rho) {
    require_binary(rho, "transpose");
    std::vector<Tuple> ts;
    for (const auto& t : rho.tuples) ts.push_back({t[1], t[0]});
    return Relation(2, rho.domain_size, std::move(ts));
}

Relation compose(const Relation& alpha, const Relation& beta) {
    require_binary(alpha, "compose");
    require_binary(beta, "compose");
    if (alpha.domain_size != beta.domain_size)
        throw std::invalid_argument("compose requires matching domain sizes");
    int d = alpha.domain_size;
    std::vector<std::vector<bool>> b(d, std::vector<bool>(d, false));
    for (const auto& t : beta.tuples) b[t[0]][t[1]] = true;
    std::set<Tuple> out;
    for (const auto& t : alpha.tuples)
        for (int y = 0; y < d; ++y)
            if (b[t[1]][y]) out.insert({t[0], y});
    return Relation(2, d, {out.begin(), out.end()});
}

Relation intersect(const Relation& alpha, const Relation& beta) {
    if (alpha.arity != beta.arity || alpha.domain_size != beta.domain_size)
        throw std::invalid_argument("intersect requires same arity and domain");
    std::vector<Tuple> ts;
    std::set_intersection(alpha.tuples.begin(), alpha.tuples.end(), beta.tuples.begin(),
                          beta.tuples.end(), std::back_inserter(ts));
    return Relation(alpha.arity, alpha.domain_size, std::move(ts));
}

Relation project_binary(const Relation& rho, int i, int j) {
    if (i < 1 || j < 1 || i > rho.arity || j > rho.arity)
        throw std::invalid_argument("projection index out of range");
    if (i == j) throw std::invalid_argument("projection indices must differ");
    std::set<Tuple> out;
    for (const auto& t : rho.tuples) out.insert({t[i - 1], t[j - 1]});
    return Relation(2, rho.domain_size, {out.begin(), out.end()});
}

Relation pr1(const Relation& rho) {
    require_binary(rho, "pr1");
    std::set<Tuple> out;
    for (const auto& t : rho.tuples) out.insert({t[0]});
    return Relation(1, rho.domain_size, {out.begin(), out.end()});
}

Relation pr2(const Relation& rho) {
    require_binary(rho, "pr2");
    std::set<Tuple> out;
    for (const auto& t : rho.tuples) out.insert({t[1]});
    return Relation(1, rho.domain_size, {out.begin(), out.end()});
}

Tuple OperationTable::args_of(std::size_t idx) const {
    Tuple t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % domain_size);
        idx /= static_cast<std::size_t>(domain_size);
    }
    return t;
}

bool OperationTable::is_total() const {
    return std::all_of(table.begin(), table.end(), [&](int v) { return v >= 0 && v < domain_size; });
}

bool OperationTable::is_conservative() const {
    for (std::size_t e = 0; e < table.size(); ++e) {
        Tuple args = args_of(e);
        if (std::find(args.begin(), args.end(), table[e]) == args.end()) return false;
    }
    return true;
}

OperationTable projection_table(int arity, int domain_size, int coordinate) {
    if (coordinate < 1 || coordinate > arity)
        throw std::invalid_argument("projection coordinate out of range");
    OperationTable f(arity, domain_size);
    for (std::size_t e = 0; e < f.table.size(); ++e) f.table[e] = f.args_of(e)[coordinate - 1];
    return f;
}

OperationTable restrict_table(const OperationTable& f, const std::vector<int>& subset) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> pos(f.domain_size, -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= f.domain_size)
            throw std::invalid_argument("subset element out of domain");
        pos[s[i]] = static_cast<int>(i);
    }
    OperationTable g(f.arity, static_cast<int>(s.size()));
    for (std::size_t e = 0; e < g.table.size(); ++e) {
        Tuple small = g.args_of(e);
        Tuple big(f.arity);
        for (int i = 0; i < f.arity; ++i) big[i] = s[small[i]];
        int v = f.apply(big);
        if (v < 0 || pos[v] < 0)
            throw std::invalid_argument("subset not closed under the operation");
        g.table[e] = pos[v];
    }
    return g;
}

bool preserves(const OperationTable& f, const Relation& rho) {
    if (f.domain_size != rho.domain_size)
        throw std::invalid_argument("preserves: domain size mismatch");
    if (rho.tuples.empty()) return true;
    std::size_t t = rho.tuples.size();
    std::vector<std::size_t> pick(f.arity, 0);
    Tuple out(rho.arity), args(f.arity);
    for (;;) {
        for (int coord = 0; coord < rho.arity; ++coord) {
            for (int i = 0; i < f.arity; ++i) args[i] = rho.tuples[pick[i]][coord];
            out[coord] = f.apply(args);
        }
        if (!rho.contains(out)) return false;
        int i = f.arity - 1;
        while (i >= 0 && pick[i] + 1 == t) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return true;
}

void ConstraintLanguage::add(const std::string& name, Relation r) {
    if (r.domain_size != domain_size)
        throw std::invalid_argument("relation domain size does not match language");
    if (find(name)) throw std::invalid_argument("duplicate relation name: " + name);
    relations.emplace_back(name, std::move(r));
}

const Relation* ConstraintLanguage::find(const std::string& name) const {
    for (const auto& [n, r] : relations)
        if (n == name) return &r;
    return nullptr;
}

void WeightedInstance::validate() const {
    if (static_cast<int>(weights.size()) != num_vars)
        throw std::invalid_argument("weight matrix row count != num_vars");
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != domain_size)
            throw std::invalid_argument("weight matrix column count != domain_size");
        for (long long w : row)
            if (w < 0) throw std::invalid_argument("negative weight");
    }
    for (const auto& c : constraints) {
        if (c.relation.domain_size != domain_size)
            throw std::invalid_argument("constraint relation domain mismatch");
        if (static_cast<int>(c.scope.size()) != c.relation.arity)
            throw std::invalid_argument("scope length != relation arity");
        for (int v : c.scope)
            if (v < 0 || v >= num_vars) throw std::invalid_argument("scope variable out of range");
    }
}

bool is_pp_member(const Relation& rho, const ConstraintLanguage& gamma,
                  std::size_t table_size_cap) {
    if (rho.domain_size != gamma.domain_size)
        throw std::invalid_argument("is_pp_member: domain size mismatch");
    if (rho.tuples.empty()) return true;  // empty relation is pp-definable (unsatisfiable formula)

    int k = static_cast<int>(rho.tuples.size());
    // Overflow-safe d^k with early exit against the cap.
    std::size_t entries = 1;
    for (int i = 0; i < k && entries <= table_size_cap; ++i)
        entries *= static_cast<std::size_t>(rho.domain_size);
    if (entries > table_size_cap)
        throw PPTooLarge("pp-membership query too large: table of " + std::to_string(entries) +
                         " entries exceeds cap " + std::to_string(table_size_cap));

    // Galois criterion with the canonical columns: rho is pp-definable iff no
    // arity-|rho| polymorphism of gamma maps the tuple matrix of rho outside
    // rho.  Search one target tuple outside rho at a time.
    std::vector<const Relation*> rels;
    for (const auto& [name, r] : gamma.relations) rels.push_back(&r);

    std::vector<std::size_t> rows(rho.arity);
    for (int coord = 0; coord < rho.arity; ++coord) {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i)
            idx = idx * static_cast<std::size_t>(rho.domain_size) +
                  static_cast<std::size_t>(rho.tuples[i][coord]);
        rows[coord] = idx;
    }

    // Constraint network built once; each target works on a copy.
    detail::TableSearch base(k, rho.domain_size, detail::unary_closed_candidates(k, gamma), rels);
    Tuple target(rho.arity, 0);
    for (;;) {
        if (!rho.contains(target)) {
            detail::TableSearch search = base;
            bool feasible = true;
            for (int coord = 0; coord < rho.arity && feasible; ++coord)
                feasible = search.prescribe(rows[coord], target[coord]);
            if (feasible && search.find()) return false;
        }
        int i = rho.arity - 1;
        while (i >= 0 && target[i] + 1 == rho.domain_size) target[i--] = 0;
        if (i < 0) break;
        ++target[i];
    }
    return true;
}

}  // namespace minhom
