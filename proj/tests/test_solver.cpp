#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minhom/oracle.hpp"
#include "minhom/solver.hpp"
#include "testutil.hpp"

using namespace minhom;
using namespace testutil;

namespace {

// Independent enumeration of the solutions of a binary instance.
std::vector<Tuple> binary_solutions(const BinaryInstance& bi) {
    std::vector<Tuple> out;
    Tuple t(bi.n, 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < bi.n && ok; ++i) {
            if (!bi.unary[i][t[i]]) ok = false;
            for (int j = i + 1; j < bi.n && ok; ++j)
                if (!bi.allowed(i, j, t[i], t[j])) ok = false;
        }
        if (ok) out.push_back(t);
        int i = bi.n - 1;
        while (i >= 0 && t[i] + 1 == bi.domain_size) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

std::vector<Tuple> satisfying_assignments(const WeightedInstance& inst) {
    std::vector<Tuple> out;
    Tuple t(inst.num_vars, 0);
    for (;;) {
        bool ok = true;
        for (const auto& c : inst.constraints) {
            Tuple proj;
            for (int v : c.scope) proj.push_back(t[v]);
            if (!c.relation.contains(proj)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(t);
        int i = inst.num_vars - 1;
        while (i >= 0 && t[i] + 1 == inst.domain_size) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return out;
}

OperationTable boolean_median() {
    OperationTable mu(3, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                mu.table[mu.index({x, y, z})] = (x & y) | (y & z) | (x & z);
    return mu;
}

}  // namespace

TEST_CASE("shift_weights adds a constant everywhere") {
    WeightedInstance inst;
    inst.num_vars = 2;
    inst.domain_size = 2;
    inst.weights = {{0, 3}, {5, 1}};
    WeightedInstance shifted = shift_weights(inst, 4);
    CHECK(shifted.weights == std::vector<std::vector<long long>>{{4, 7}, {9, 5}});
    OracleResult a = brute_force_solve(inst);
    OracleResult b = brute_force_solve(shifted);
    CHECK(b.optimum == a.optimum + 4 * inst.num_vars);
    CHECK(b.optimal_assignments == a.optimal_assignments);
}

TEST_CASE("absorb_unary_constraints folds unaries into weights") {
    WeightedInstance inst;
    inst.num_vars = 2;
    inst.domain_size = 2;
    inst.weights = {{2, 1}, {0, 0}};
    inst.constraints.push_back({"c0", unary_relation(2, {0}), {0}});
    inst.constraints.push_back({"leq", leq_relation(2), {0, 1}});

    AbsorbResult ar = absorb_unary_constraints(inst);
    CHECK(ar.threshold == 4);  // total weight 3, plus one
    // No unary constraints survive.
    for (const auto& c : ar.instance.constraints) CHECK(c.relation.arity >= 2);
    // Excluded value 1 of variable 0 got the penalty.
    CHECK(ar.instance.weights[0] == std::vector<long long>{2, 1 + 4});
    CHECK(ar.instance.weights[1] == std::vector<long long>{0, 0});

    OracleResult orig = brute_force_solve(inst);
    OracleResult abs = brute_force_solve(ar.instance);
    REQUIRE(orig.satisfiable);
    CHECK(abs.optimum == orig.optimum);
    CHECK(abs.optimum < ar.threshold);

    // An unsatisfiable original pushes the absorbed optimum past the threshold.
    WeightedInstance bad = inst;
    bad.constraints.push_back({"c1", unary_relation(2, {1}), {0}});
    AbsorbResult br = absorb_unary_constraints(bad);
    CHECK(!brute_force_solve(bad).satisfiable);
    OracleResult babs = brute_force_solve(br.instance);
    CHECK(babs.optimum >= br.threshold);
}

TEST_CASE("absorb preserves the optimum on random instances") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        ConstraintLanguage g = random_language(rng, 2 + trial % 3);
        WeightedInstance inst = random_instance(rng, g, 5, 6, 10, 0.8);
        AbsorbResult ar = absorb_unary_constraints(inst);
        OracleResult orig = brute_force_solve(inst);
        OracleResult abs = brute_force_solve(ar.instance);
        if (orig.satisfiable) {
            CHECK(abs.optimum == orig.optimum);
            CHECK(abs.optimum < ar.threshold);
        } else {
            CHECK((!abs.satisfiable || abs.optimum >= ar.threshold));
        }
    }
}

TEST_CASE("expand_pp_instance rewrites defined relations and preserves the optimum") {
    // target language: boolean order and disequality with constants.
    ConstraintLanguage target(2);
    target.add("neq", neq_relation(2));
    target.add("leq", leq_relation(2));

    // or(x, y) := exists z . neq(x, z) and leq(z, y)
    std::map<std::string, PPFormula> defs;
    PPFormula orf;
    orf.arity = 2;
    orf.num_existential = 1;
    orf.atoms = {{"neq", {0, 2}}, {"leq", {2, 1}}};
    defs["or"] = orf;

    WeightedInstance inst;
    inst.num_vars = 3;
    inst.domain_size = 2;
    inst.weights = {{0, 5}, {0, 2}, {0, 3}};
    Relation orr(2, 2, {{0, 1}, {1, 0}, {1, 1}});
    inst.constraints.push_back({"or", orr, {0, 1}});
    inst.constraints.push_back({"or", orr, {1, 2}});

    WeightedInstance out = expand_pp_instance(inst, target, defs);
    for (const auto& c : out.constraints) CHECK(target.find(c.relation_name) != nullptr);
    CHECK(out.num_vars == 3 + 2);  // one existential per rewritten atom group

    OracleResult a = brute_force_solve(inst);
    OracleResult b = brute_force_solve(out);
    REQUIRE(a.satisfiable);
    REQUIRE(b.satisfiable);
    CHECK(a.optimum == b.optimum);

    // Equality atoms merge variables and add their weights.
    std::map<std::string, PPFormula> eqdefs;
    PPFormula same;
    same.arity = 2;
    same.num_existential = 0;
    same.atoms = {{"=", {0, 1}}};
    eqdefs["same"] = same;
    WeightedInstance ei;
    ei.num_vars = 2;
    ei.domain_size = 2;
    ei.weights = {{1, 4}, {2, 1}};
    ei.constraints.push_back({"same", equality_relation(2), {0, 1}});
    WeightedInstance eo = expand_pp_instance(ei, target, eqdefs);
    OracleResult ea = brute_force_solve(ei);
    OracleResult eb = brute_force_solve(eo);
    CHECK(ea.optimum == eb.optimum);
}

TEST_CASE("expand_pp_instance preserves optima on random cases") {
    ConstraintLanguage target(2);
    target.add("neq", neq_relation(2));
    target.add("leq", leq_relation(2));
    std::map<std::string, PPFormula> defs;
    PPFormula orf;
    orf.arity = 2;
    orf.num_existential = 1;
    orf.atoms = {{"neq", {0, 2}}, {"leq", {2, 1}}};
    defs["or"] = orf;
    Relation orr(2, 2, {{0, 1}, {1, 0}, {1, 1}});

    ConstraintLanguage mixed(2);
    mixed.add("or", orr);
    mixed.add("leq", leq_relation(2));

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        WeightedInstance inst = random_instance(rng, mixed, 5, 6, 10, 0.0);
        WeightedInstance out = expand_pp_instance(inst, target, defs);
        OracleResult a = brute_force_solve(inst);
        OracleResult b = brute_force_solve(out);
        CHECK(a.satisfiable == b.satisfiable);
        if (a.satisfiable) CHECK(a.optimum == b.optimum);
    }
}

TEST_CASE("binarize keeps the solution set") {
    OperationTable mu = boolean_median();
    std::mt19937 rng(91);
    ConstraintLanguage g = boolean_language("M01");
    for (int trial = 0; trial < 50; ++trial) {
        WeightedInstance inst = random_instance(rng, g, 4, 6, 8, 0.0);
        BinaryInstance bi = binarize(inst, mu);
        CHECK(bi.n == inst.num_vars);
        auto sols = satisfying_assignments(inst);
        auto bsols = binary_solutions(bi);
        CHECK(sols == bsols);
    }

    // A relation without the majority polymorphism is rejected.
    WeightedInstance lin_inst;
    lin_inst.num_vars = 3;
    lin_inst.domain_size = 2;
    lin_inst.weights = {{0, 0}, {0, 0}, {0, 0}};
    lin_inst.constraints.push_back({"lin", lin_relation(2, 0, 1), {0, 1, 2}});
    CHECK_THROWS_AS(binarize(lin_inst, mu), std::invalid_argument);
}

TEST_CASE("enforce_consistency preserves solutions and is idempotent") {
    OperationTable mu = boolean_median();
    std::mt19937 rng(92);
    ConstraintLanguage g = boolean_language("M01");
    for (int trial = 0; trial < 50; ++trial) {
        WeightedInstance inst = random_instance(rng, g, 4, 6, 8, 0.5);
        AbsorbResult ar = absorb_unary_constraints(inst);
        BinaryInstance bi = binarize(ar.instance, mu);
        auto before = binary_solutions(bi);
        ConsistencyStatus st = enforce_consistency(bi);
        auto after = binary_solutions(bi);
        CHECK(before == after);
        if (st == ConsistencyStatus::Empty) CHECK(after.empty());
        BinaryInstance again = bi;
        enforce_consistency(again);
        CHECK(again == bi);
    }

    // Contradictory unaries: empty status.
    BinaryInstance bi = BinaryInstance::full(2, 2);
    bi.unary[0] = {1, 0};
    bi.forbid(0, 1, 0, 0);
    bi.forbid(0, 1, 0, 1);
    CHECK(enforce_consistency(bi) == ConsistencyStatus::Empty);
}

TEST_CASE("microstructure graph structure") {
    BinaryInstance bi = BinaryInstance::full(2, 2);
    bi.unary[0] = {1, 0};  // variable 0 pinned to value 0
    bi.weights = {{3, 7}, {1, 2}};
    bi.forbid(0, 1, 0, 1);
    MicrostructureGraph g = build_microstructure(bi);
    CHECK(g.num_parts == 2);
    REQUIRE(g.num_vertices() == 3);  // (0,0), (1,0), (1,1)
    CHECK(g.part == std::vector<int>{0, 1, 1});
    CHECK(g.value == std::vector<int>{0, 0, 1});
    CHECK(g.weight == std::vector<long long>{3, 1, 2});
    CHECK(g.adj[0][1]);   // (0,0)-(1,0) allowed
    CHECK(!g.adj[0][2]);  // (0,0)-(1,1) forbidden
    CHECK(!g.adj[1][2]);  // same part, never adjacent
}

TEST_CASE("exact min-weight maximum clique agrees with subset enumeration") {
    std::mt19937 rng(93);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + trial % 3;
        int d = 2 + trial % 2;
        BinaryInstance bi = BinaryInstance::full(n, d);
        std::uniform_int_distribution<int> w(0, 9);
        std::bernoulli_distribution cut(0.3), drop(0.2);
        bi.weights.assign(n, std::vector<long long>(d, 0));
        for (auto& row : bi.weights)
            for (auto& x : row) x = w(rng);
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < d; ++a)
                if (drop(rng)) bi.unary[i][a] = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        if (cut(rng)) bi.forbid(i, j, a, b);

        MicrostructureGraph g = build_microstructure(bi);
        CliqueResult got = solve_mmclique_exact(g);

        // Brute force over all vertex subsets with at most one per part.
        int m = g.num_vertices();
        int best_size = 0;
        long long best_weight = 0;
        std::vector<int> best;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> vs;
            for (int v = 0; v < m; ++v)
                if (mask & (1 << v)) vs.push_back(v);
            bool clique = true;
            for (std::size_t x = 0; x < vs.size() && clique; ++x)
                for (std::size_t y = x + 1; y < vs.size() && clique; ++y)
                    if (!g.adj[vs[x]][vs[y]]) clique = false;
            if (!clique) continue;
            long long wt = 0;
            for (int v : vs) wt += g.weight[v];
            if (static_cast<int>(vs.size()) > best_size ||
                (static_cast<int>(vs.size()) == best_size && wt < best_weight)) {
                best_size = static_cast<int>(vs.size());
                best_weight = wt;
                best = vs;
            }
        }
        CHECK(got.size == best_size);
        if (best_size > 0) CHECK(got.weight == best_weight);
    }
}

TEST_CASE("clique lex-least tie breaking") {
    // Two variables, all values mutually compatible, all weights equal:
    // the chosen clique must take the least value in every part.
    BinaryInstance bi = BinaryInstance::full(2, 3);
    bi.weights = {{5, 5, 5}, {5, 5, 5}};
    MicrostructureGraph g = build_microstructure(bi);
    CliqueResult r = solve_mmclique_exact(g);
    REQUIRE(r.size == 2);
    for (int v : r.vertices) CHECK(g.value[v] == 0);
}

TEST_CASE("LP cross-check") {
    // Single vertex, weight 7.
    BinaryInstance one = BinaryInstance::full(1, 1);
    one.weights = {{7}};
    MicrostructureGraph g1 = build_microstructure(one);
    LPCheck c1 = solve_mmclique_lp(g1);
    CHECK(c1.exact_value == "7/1");
    CHECK(c1.lp_value == doctest::Approx(7.0));
    CHECK(c1.integral);

    // Random consistent instances: LP matches the exact optimum.
    OperationTable mu = boolean_median();
    std::mt19937 rng(94);
    ConstraintLanguage lang = boolean_language("M01");
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 25; ++trial) {
        WeightedInstance inst = random_instance(rng, lang, 4, 5, 8, 0.4);
        AbsorbResult ar = absorb_unary_constraints(inst);
        BinaryInstance bi = binarize(ar.instance, mu);
        if (enforce_consistency(bi) == ConsistencyStatus::Empty) continue;
        MicrostructureGraph g = build_microstructure(bi);
        CliqueResult exact = solve_mmclique_exact(g);
        if (exact.size < bi.n) continue;
        LPCheck lp = solve_mmclique_lp(g);
        CHECK(std::abs(lp.lp_value - static_cast<double>(exact.weight)) <= 1e-6);
        CHECK(lp.integral);
        ++checked;
    }
    CHECK(checked >= 25);
}

TEST_CASE("boolean monotone fast path") {
    ConstraintLanguage g = boolean_language("M01");
    std::mt19937 rng(95);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedInstance inst = random_instance(rng, g, 6, 8, 12, 0.5);
        SolveResult r = solve_boolean_monotone(inst);
        OracleResult o = brute_force_solve(inst);
        if (!o.satisfiable) {
            CHECK(r.kind == SolveResult::Kind::Unsatisfiable);
        } else {
            REQUIRE(r.kind == SolveResult::Kind::Optimal);
            CHECK(r.measure == o.optimum);
            CHECK(r.assignment.values == o.optimal_assignments.front().values);
        }
    }
    WeightedInstance bad;
    bad.num_vars = 2;
    bad.domain_size = 2;
    bad.weights = {{0, 0}, {0, 0}};
    bad.constraints.push_back({"neq", neq_relation(2), {0, 1}});
    CHECK_THROWS_AS(solve_boolean_monotone(bad), std::invalid_argument);
}

TEST_CASE("boolean disequality fast path") {
    ConstraintLanguage g = boolean_language("S01");
    std::mt19937 rng(96);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedInstance inst = random_instance(rng, g, 6, 8, 12, 0.5);
        SolveResult r = solve_boolean_disequality(inst);
        OracleResult o = brute_force_solve(inst);
        if (!o.satisfiable) {
            CHECK(r.kind == SolveResult::Kind::Unsatisfiable);
        } else {
            REQUIRE(r.kind == SolveResult::Kind::Optimal);
            CHECK(r.measure == o.optimum);
            CHECK(r.assignment.values == o.optimal_assignments.front().values);
        }
    }
}

TEST_CASE("solve: end to end against the oracle") {
    std::mt19937 rng(97);
    std::vector<ClassifiedSample> tractable, hard;
    sample_languages(rng, 4, 30, 5, tractable, hard, 20000);
    REQUIRE(static_cast<int>(tractable.size()) == 30);
    for (const auto& s : tractable) {
        for (int k = 0; k < 4; ++k) {
            WeightedInstance inst = random_instance(rng, s.language, 5, 6, 15, 0.4);
            SolveResult r = solve_with_verdict(s.verdict, inst);
            OracleResult o = brute_force_solve(inst);
            if (!o.satisfiable) {
                CHECK(r.kind == SolveResult::Kind::Unsatisfiable);
            } else {
                REQUIRE(r.kind == SolveResult::Kind::Optimal);
                CHECK(r.measure == o.optimum);
                auto m = verify_solution(inst, r.assignment);
                REQUIRE(std::holds_alternative<long long>(m));
                CHECK(std::get<long long>(m) == o.optimum);
            }
        }
    }
    for (const auto& s : hard) {
        WeightedInstance inst = random_instance(rng, s.language, 4, 4, 5, 0.0);
        SolveResult r = solve_with_verdict(s.verdict, inst);
        CHECK(r.kind == SolveResult::Kind::NotCovered);
        CHECK(r.witness.has_value());
    }
}
