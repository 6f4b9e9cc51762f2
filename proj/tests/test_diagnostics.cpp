#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minhom/diagnostics.hpp"
#include "testutil.hpp"

using namespace minhom;
using namespace testutil;

namespace {

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return SimpleGraph::from_edges(n, es);
}

bool is_induced_odd_cycle(const SimpleGraph& g, const std::vector<int>& vs) {
    int k = static_cast<int>(vs.size());
    if (k < 5 || k % 2 == 0) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (static_cast<bool>(g.adj[vs[i]][vs[j]]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("graph plumbing") {
    SimpleGraph g = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.adj[0][1]);
    CHECK(g.adj[1][0]);
    CHECK(!g.adj[0][2]);
    SimpleGraph c = complement_graph(g);
    CHECK(!c.adj[0][1]);
    CHECK(c.adj[0][2]);
    for (int i = 0; i < 3; ++i) CHECK(!c.adj[i][i]);
}

TEST_CASE("odd hole detection") {
    // C5 is its own certificate.
    auto h5 = find_odd_hole_or_antihole(cycle_graph(5));
    REQUIRE(h5);
    CHECK(h5->kind == Hole::Kind::OddHole);
    CHECK(is_induced_odd_cycle(cycle_graph(5), h5->vertices));

    // C4, trees, cliques: none.
    CHECK(!find_odd_hole_or_antihole(cycle_graph(4)));
    CHECK(!find_odd_hole_or_antihole(SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
    SimpleGraph k5 = complement_graph(SimpleGraph::from_edges(5, {}));
    CHECK(!find_odd_hole_or_antihole(k5));

    // A triangle glued to a C5 still reports only the C5 (triangles never count).
    SimpleGraph g = SimpleGraph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {5, 7}, {0, 5}});
    auto h = find_odd_hole_or_antihole(g);
    REQUIRE(h);
    CHECK(h->kind == Hole::Kind::OddHole);
    CHECK(h->vertices.size() == 5);

    // C7 found at size 7, missed when capped at 5.
    auto h7 = find_odd_hole_or_antihole(cycle_graph(7), 7);
    REQUIRE(h7);
    CHECK(h7->vertices.size() == 7);
    CHECK(!find_odd_hole_or_antihole(cycle_graph(7), 5));

    CHECK_THROWS_AS(find_odd_hole_or_antihole(cycle_graph(5), 4), std::invalid_argument);
}

TEST_CASE("odd antihole detection") {
    // The complement of C7 contains no odd hole of length <= 9 but is itself
    // an odd antihole.
    SimpleGraph cc7 = complement_graph(cycle_graph(7));
    auto h = find_odd_hole_or_antihole(cc7);
    REQUIRE(h);
    CHECK(h->kind == Hole::Kind::OddAntihole);
    CHECK(is_induced_odd_cycle(complement_graph(cc7), h->vertices));

    // Complement of C5 is C5 again: reported as a hole first.
    auto h5 = find_odd_hole_or_antihole(complement_graph(cycle_graph(5)));
    REQUIRE(h5);
    CHECK(h5->kind == Hole::Kind::OddHole);
}

TEST_CASE("cyclic adjacency template") {
    // The template itself matches: 2p+1 vertices, consecutive non-adjacent,
    // distance two adjacent, everything else absent.
    CHECK_THROWS_AS(find_S_type_subgraph(cycle_graph(5), 1), std::invalid_argument);
    for (int p : {2, 3}) {
        int m = 2 * p + 1;
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < m; ++i) es.push_back({i, (i + 2) % m});
        SimpleGraph g = SimpleGraph::from_edges(m, es);
        auto hit = find_S_type_subgraph(g, p);
        REQUIRE(hit);
        CHECK(hit->size() == static_cast<std::size_t>(m));
    }

    // Complete and empty graphs never match (p >= 1 needs non-edges and edges).
    SimpleGraph k7 = complement_graph(SimpleGraph::from_edges(7, {}));
    CHECK(!find_S_type_subgraph(k7, 2));
    CHECK(!find_S_type_subgraph(SimpleGraph::from_edges(7, {}), 2));

    // Extra chords on non-template pairs are permitted.
    {
        int p = 2, m = 5;
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < m; ++i) es.push_back({i, (i + 2) % m});
        SimpleGraph g = SimpleGraph::from_edges(m + 1, es);
        g.adj[0][5] = g.adj[5][0] = 1;  // pendant vertex, irrelevant
        CHECK(find_S_type_subgraph(g, p));
    }
}

TEST_CASE("cross-pattern cycle detection") {
    // Triangle of disequalities on {0,1}: every edge relation restricted to
    // the pair is exactly the cross pattern, an odd cycle of length 3.
    BinaryInstance bi = BinaryInstance::full(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            bi.forbid(i, j, 0, 0);
            bi.forbid(i, j, 1, 1);
        }
    auto cert = find_arithmetical_deadlock(bi, {{0, 1}});
    REQUIRE(cert);
    CHECK(cert->variables.size() == 3);
    CHECK(deadlock_certificate_valid(bi, *cert));

    // An even cycle of disequalities (C4) plus full diagonals: no certificate.
    BinaryInstance even = BinaryInstance::full(4, 2);
    for (int k = 0; k < 4; ++k) {
        int i = k, j = (k + 1) % 4;
        if (i > j) std::swap(i, j);
        even.forbid(i, j, 0, 0);
        even.forbid(i, j, 1, 1);
    }
    CHECK(!find_arithmetical_deadlock(even, {{0, 1}}));

    // Parallel (order-like) relations are not the cross pattern.
    BinaryInstance par = BinaryInstance::full(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) par.forbid(i, j, 1, 0);
    CHECK(!find_arithmetical_deadlock(par, {{0, 1}}));

    // Validity checker rejects a bogus certificate.
    DeadlockCertificate bogus;
    bogus.variables = {0, 1, 2};
    bogus.pairs = {{0, 1}, {0, 1}, {0, 1}};
    CHECK(!deadlock_certificate_valid(par, bogus));
    // ...but the same shape is valid on the disequality triangle.
    CHECK(deadlock_certificate_valid(bi, bogus));
}

TEST_CASE("cross-pattern cycle with mixed pairs on a larger domain") {
    // Cycle x0 - x1 - x2 - x0 where the middle edge crosses between the value
    // pairs {0,1} and {2,3}.
    BinaryInstance bi = BinaryInstance::full(3, 4);
    auto make_cross = [&](int i, int j, int a, int b, int c, int d) {
        // restrict (i,j) on {a,b} x {c,d} to {(a,d),(b,c)}
        bi.forbid(i, j, a, c);
        bi.forbid(i, j, b, d);
    };
    make_cross(0, 1, 0, 1, 0, 1);
    make_cross(1, 2, 0, 1, 2, 3);
    make_cross(0, 2, 0, 1, 2, 3);
    auto cert = find_arithmetical_deadlock(bi, {{0, 1}, {2, 3}});
    REQUIRE(cert);
    CHECK(deadlock_certificate_valid(bi, *cert));
}

TEST_CASE("microstructure bridge") {
    BinaryInstance bi = BinaryInstance::full(2, 2);
    bi.forbid(0, 1, 0, 1);
    MicrostructureGraph mg = build_microstructure(bi);
    SimpleGraph g = microstructure_to_graph(mg);
    CHECK(g.n == mg.num_vertices());
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) CHECK(g.adj[i][j] == mg.adj[i][j]);
}
