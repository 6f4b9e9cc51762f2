#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minhom/classifier.hpp"
#include "minhom/relation.hpp"

// Shared fixtures and seeded generators for the unit and acceptance suites.

namespace testutil {

using namespace minhom;

// The classic two-element generator sets used by the classification table
// test.  Names follow the clone-lattice rows they generate.
inline ConstraintLanguage boolean_language(const std::string& row) {
    ConstraintLanguage g(2);
    auto c0 = unary_relation(2, {0});
    auto c1 = unary_relation(2, {1});
    auto add_ternary = [&](const std::string& name, auto pred) {
        std::vector<Tuple> ts;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    if (pred(x, y, z)) ts.push_back({x, y, z});
        g.add(name, Relation(3, 2, std::move(ts)));
    };
    auto add_nary_not_all_one = [&](int m) {
        // x1 * x2 * ... * xm = 0
        std::vector<Tuple> ts;
        for (int mask = 0; mask < (1 << m) - 1; ++mask) {
            Tuple t;
            for (int i = 0; i < m; ++i) t.push_back((mask >> i) & 1);
            ts.push_back(t);
        }
        g.add("nand" + std::to_string(m), Relation(m, 2, std::move(ts)));
    };
    auto add_nary_or = [&](int m) {
        std::vector<Tuple> ts;
        for (int mask = 1; mask < (1 << m); ++mask) {
            Tuple t;
            for (int i = 0; i < m; ++i) t.push_back((mask >> i) & 1);
            ts.push_back(t);
        }
        g.add("or" + std::to_string(m), Relation(m, 2, std::move(ts)));
    };

    if (row == "T01") {
        g.add("c0", c0);
        g.add("c1", c1);
    } else if (row == "M01") {
        g.add("leq", leq_relation(2));
        g.add("c0", c0);
        g.add("c1", c1);
    } else if (row == "S01") {
        g.add("neq", neq_relation(2));
        g.add("c0", c0);
        g.add("c1", c1);
    } else if (row == "SM") {
        g.add("neq", neq_relation(2));
        g.add("leq", leq_relation(2));
    } else if (row == "L01") {
        g.add("lin", lin_relation(2, 0, 1));
        g.add("c1", c1);
    } else if (row == "U01") {
        g.add("c0", c0);
        g.add("c1", c1);
        add_ternary("u", [](int x, int y, int z) { return x == y || x == z; });
    } else if (row == "K01") {
        g.add("c0", c0);
        g.add("c1", c1);
        add_ternary("k", [](int x, int y, int z) { return x == (y & z); });
    } else if (row == "D01") {
        g.add("c0", c0);
        g.add("c1", c1);
        add_ternary("d", [](int x, int y, int z) { return x == (y | z); });
    } else if (row == "I1_2" || row == "I1_3") {
        g.add("c1", c1);
        add_nary_not_all_one(row.back() - '0');
    } else if (row == "MI1_2" || row == "MI1_3") {
        g.add("c1", c1);
        g.add("leq", leq_relation(2));
        add_nary_not_all_one(row.back() - '0');
    } else if (row == "O0_2" || row == "O0_3") {
        g.add("c0", c0);
        add_nary_or(row.back() - '0');
    } else if (row == "MO0_2" || row == "MO0_3") {
        g.add("c0", c0);
        g.add("leq", leq_relation(2));
        add_nary_or(row.back() - '0');
    } else {
        throw std::invalid_argument("unknown row: " + row);
    }
    return g;
}

inline std::vector<std::string> tractable_rows() { return {"T01", "M01", "S01"}; }
inline std::vector<std::string> hard_rows() {
    return {"SM", "L01", "U01", "K01", "D01", "I1_2", "I1_3", "MI1_2", "MI1_3",
            "O0_2", "O0_3", "MO0_2", "MO0_3"};
}

inline Relation random_relation(std::mt19937& rng, int d, int arity, double keep) {
    std::bernoulli_distribution flip(keep);
    for (int tries = 0; tries < 50; ++tries) {
        std::vector<Tuple> ts;
        Tuple t(arity, 0);
        for (;;) {
            if (flip(rng)) ts.push_back(t);
            int i = arity - 1;
            while (i >= 0 && t[i] + 1 == d) t[i--] = 0;
            if (i < 0) break;
            ++t[i];
        }
        if (!ts.empty()) return Relation(arity, d, std::move(ts));
    }
    return full_relation(arity, d);
}

// A chain order x <= y under a random permutation of the domain.
inline Relation random_order_relation(std::mt19937& rng, int d) {
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> rank(d);
    for (int i = 0; i < d; ++i) rank[perm[i]] = i;
    std::vector<Tuple> ts;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (rank[a] <= rank[b]) ts.push_back({a, b});
    return Relation(2, d, std::move(ts));
}

// Disequality restricted to a random two-element subset (plus nothing else),
// which forces that pair onto the arithmetical side.
inline Relation random_pair_swap_relation(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> pick(0, d - 1);
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    return Relation(2, d, {{a, b}, {b, a}});
}

inline ConstraintLanguage random_language(std::mt19937& rng, int d) {
    ConstraintLanguage g(d);
    std::uniform_int_distribution<int> n_rels(1, 3);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> arity_pick(2, 3);
    std::uniform_real_distribution<double> keep(0.3, 0.9);
    int k = n_rels(rng);
    for (int i = 0; i < k; ++i) {
        std::string name = "r" + std::to_string(i);
        switch (kind(rng)) {
            case 0: g.add(name, random_order_relation(rng, d)); break;
            case 1: g.add(name, random_pair_swap_relation(rng, d)); break;
            case 2: g.add(name, equality_relation(d)); break;
            case 3: g.add(name, random_relation(rng, d, 2, keep(rng))); break;
            default: g.add(name, random_relation(rng, d, arity_pick(rng), keep(rng))); break;
        }
    }
    return g;
}

inline WeightedInstance random_instance(std::mt19937& rng, const ConstraintLanguage& gamma,
                                        int max_vars, int max_constraints, int max_weight,
                                        double unary_prob = 0.3) {
    std::uniform_int_distribution<int> nv(2, max_vars);
    std::uniform_int_distribution<int> nc(0, max_constraints);
    std::uniform_int_distribution<int> wdist(0, max_weight);
    std::bernoulli_distribution add_unary(unary_prob);

    WeightedInstance inst;
    inst.domain_size = gamma.domain_size;
    inst.num_vars = nv(rng);
    inst.weights.assign(inst.num_vars, std::vector<long long>(inst.domain_size, 0));
    for (auto& row : inst.weights)
        for (auto& w : row) w = wdist(rng);

    std::uniform_int_distribution<int> var(0, inst.num_vars - 1);
    std::uniform_int_distribution<int> rel(0, static_cast<int>(gamma.relations.size()) - 1);
    int k = nc(rng);
    for (int i = 0; i < k; ++i) {
        const auto& [name, rho] = gamma.relations[rel(rng)];
        Constraint c;
        c.relation_name = name;
        c.relation = rho;
        for (int p = 0; p < rho.arity; ++p) c.scope.push_back(var(rng));
        inst.constraints.push_back(std::move(c));
    }
    if (add_unary(rng)) {
        std::uniform_int_distribution<int> val(0, inst.domain_size - 1);
        std::set<int> members = {val(rng)};
        if (add_unary(rng)) members.insert(val(rng));
        Constraint c;
        c.relation_name = "rand_unary";
        c.relation = unary_relation(inst.domain_size, {members.begin(), members.end()});
        c.scope = {var(rng)};
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

struct ClassifiedSample {
    ConstraintLanguage language;
    Verdict verdict;
};

// Draws random languages over domains 2..max_domain and buckets them by
// verdict until both quotas are met (or attempts run out).
inline void sample_languages(std::mt19937& rng, int max_domain, int want_tractable,
                             int want_hard, std::vector<ClassifiedSample>& tractable,
                             std::vector<ClassifiedSample>& hard, int max_attempts = 100000) {
    std::uniform_int_distribution<int> dom(2, max_domain);
    for (int i = 0; i < max_attempts; ++i) {
        if (static_cast<int>(tractable.size()) >= want_tractable &&
            static_cast<int>(hard.size()) >= want_hard)
            return;
        ConstraintLanguage g = random_language(rng, dom(rng));
        Verdict v = classify(g);
        if (v.tractable() && static_cast<int>(tractable.size()) < want_tractable)
            tractable.push_back({std::move(g), std::move(v)});
        else if (!v.tractable() && static_cast<int>(hard.size()) < want_hard)
            hard.push_back({std::move(g), std::move(v)});
    }
}

}  // namespace testutil
