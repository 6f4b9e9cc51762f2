#include "minhom/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>

namespace minhom {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge out of range");
        g.adj[u][v] = g.adj[v][u] = 1;
    }
    return g;
}

SimpleGraph complement_graph(const SimpleGraph& g) {
    SimpleGraph c;
    c.n = g.n;
    c.adj.assign(g.n, std::vector<char>(g.n, 0));
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (u != v) c.adj[u][v] = !g.adj[u][v];
    return c;
}

SimpleGraph microstructure_to_graph(const MicrostructureGraph& g) {
    SimpleGraph s;
    s.n = g.num_vertices();
    s.adj = g.adj;
    return s;
}

namespace {

// Induced odd cycle of exactly target_len vertices; path[0] is the least
// vertex and path[1] < path.back() fixes the direction.
struct InducedCycleSearch {
    const SimpleGraph& g;
    int target_len;
    std::vector<int> path;
    std::vector<char> used;

    bool extend() {
        int len = static_cast<int>(path.size());
        if (len == target_len) return g.adj[path.back()][path.front()] != 0;
        for (int v = path.front() + 1; v < g.n; ++v) {
            if (used[v] || !g.adj[path.back()][v]) continue;
            if (len >= 2 && v < path[1] && len == target_len - 1) continue;
            bool induced = true;
            for (int i = 0; i + 1 < len && induced; ++i) {
                if (i == 0 && len == target_len - 1) continue;  // closing edge allowed
                if (g.adj[path[i]][v]) induced = false;
            }
            if (!induced) continue;
            used[v] = 1;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used[v] = 0;
        }
        return false;
    }
};

std::optional<std::vector<int>> find_induced_odd_cycle(const SimpleGraph& g, int max_size) {
    for (int len = 5; len <= max_size; len += 2) {
        if (len > g.n) break;
        InducedCycleSearch cs{g, len, {}, {}};
        for (int start = 0; start + len <= g.n; ++start) {
            cs.path = {start};
            cs.used.assign(g.n, 0);
            cs.used[start] = 1;
            if (cs.extend()) return cs.path;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Hole> find_odd_hole_or_antihole(const SimpleGraph& g, int max_size) {
    if (max_size < 5 || max_size % 2 == 0)
        throw std::invalid_argument("max_size must be odd and at least 5");
    if (auto c = find_induced_odd_cycle(g, max_size))
        return Hole{Hole::Kind::OddHole, *c};
    if (auto c = find_induced_odd_cycle(complement_graph(g), max_size))
        return Hole{Hole::Kind::OddAntihole, *c};
    return std::nullopt;
}

namespace {

struct STypeSearch {
    const SimpleGraph& g;
    int m;  // 2p+1
    std::vector<int> path;
    std::vector<char> used;

    bool ok_so_far(int v) const {
        int pos = static_cast<int>(path.size());  // v would sit at index pos
        if (pos >= 1 && g.adj[path[pos - 1]][v]) return false;   // distance 1: non-adjacent
        if (pos >= 2 && !g.adj[path[pos - 2]][v]) return false;  // distance 2: adjacent
        if (pos == m - 1) {
            if (g.adj[v][path[0]]) return false;                  // wrap distance 1
            if (!g.adj[v][path[1]]) return false;                 // wrap distance 2
            if (m >= 3 && !g.adj[path[m - 2]][path[0]]) return false;  // (m-2, 0) distance 2
        }
        return true;
    }

    bool extend() {
        int len = static_cast<int>(path.size());
        if (len == m) return true;
        for (int v = 0; v < g.n; ++v) {
            if (used[v] || !ok_so_far(v)) continue;
            used[v] = 1;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_S_type_subgraph(const SimpleGraph& g, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    int m = 2 * p + 1;
    if (m > g.n) return std::nullopt;
    STypeSearch s{g, m, {}, {}};
    s.used.assign(g.n, 0);
    if (s.extend()) return s.path;
    return std::nullopt;
}

std::optional<std::vector<int>> find_S_type_subgraph(const MicrostructureGraph& g, int p) {
    return find_S_type_subgraph(microstructure_to_graph(g), p);
}

namespace {

struct DeadlockNode {
    int var;
    int pair_idx;  // into candidate_pairs
    int tau;       // edge type is stored per edge, not here
};

struct DeadlockSearch {
    const BinaryInstance& bi;
    const std::vector<std::pair<int, int>>& pairs;
    int max_len;
    std::vector<std::pair<int, int>> nodes;  // (var, pair_idx)
    // edge_type[u][v]: -1 none, 0 parallel matching, 1 crossed matching
    std::vector<std::vector<int>> edge_type;
    std::vector<int> path;
    std::vector<char> var_used;
    int tau_sum = 0;
    std::optional<DeadlockCertificate> found;

    // Matching type of rho_{ij} restricted to P x Q: exactly {(a,c),(b,d)}
    // (type 0) or exactly {(a,d),(b,c)} (type 1), else -1.
    int restriction_type(int i, int j, std::pair<int, int> p, std::pair<int, int> q) const {
        bool ac = bi.allowed(i, j, p.first, q.first);
        bool ad = bi.allowed(i, j, p.first, q.second);
        bool bc = bi.allowed(i, j, p.second, q.first);
        bool bd = bi.allowed(i, j, p.second, q.second);
        if (ac && bd && !ad && !bc) return 0;
        if (ad && bc && !ac && !bd) return 1;
        return -1;
    }

    void build() {
        int n = bi.n;
        for (int i = 0; i < n; ++i)
            for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
                auto [a, b] = pairs[pi];
                if (a < 0 || b >= bi.domain_size || a >= b) continue;
                if (bi.unary[i][a] && bi.unary[i][b])
                    nodes.push_back({i, static_cast<int>(pi)});
            }
        edge_type.assign(nodes.size(), std::vector<int>(nodes.size(), -1));
        for (std::size_t u = 0; u < nodes.size(); ++u)
            for (std::size_t v = 0; v < nodes.size(); ++v) {
                if (nodes[u].first == nodes[v].first) continue;
                edge_type[u][v] = restriction_type(nodes[u].first, nodes[v].first,
                                                   pairs[nodes[u].second], pairs[nodes[v].second]);
            }
    }

    void emit() {
        DeadlockCertificate cert;
        int eps = 0;
        for (std::size_t s = 0; s < path.size(); ++s) {
            auto [a, b] = pairs[nodes[path[s]].second];
            cert.variables.push_back(nodes[path[s]].first);
            cert.pairs.push_back(eps ? std::pair{b, a} : std::pair{a, b});
            // Crossed w.r.t. the labels means tau ^ eps_s ^ eps_{s+1} = 1.
            eps ^= 1 ^ edge_type[path[s]][path[(s + 1) % path.size()]];
        }
        found = std::move(cert);
    }

    void dfs() {
        int len = static_cast<int>(path.size());
        if (len >= 3 && len % 2 == 1) {
            int closing = edge_type[path.back()][path.front()];
            if (closing >= 0 && ((tau_sum + closing) % 2) == 1) {
                emit();
                return;
            }
        }
        if (len == max_len || found) return;
        for (std::size_t v = static_cast<std::size_t>(path.front()) + 1; v < nodes.size(); ++v) {
            int t = edge_type[path.back()][v];
            if (t < 0 || var_used[nodes[v].first]) continue;
            var_used[nodes[v].first] = 1;
            path.push_back(static_cast<int>(v));
            tau_sum += t;
            dfs();
            tau_sum -= t;
            path.pop_back();
            var_used[nodes[v].first] = 0;
            if (found) return;
        }
    }

    std::optional<DeadlockCertificate> run() {
        build();
        for (std::size_t s = 0; s < nodes.size() && !found; ++s) {
            path = {static_cast<int>(s)};
            var_used.assign(bi.n, 0);
            var_used[nodes[s].first] = 1;
            tau_sum = 0;
            dfs();
        }
        return found;
    }
};

}  // namespace

std::optional<DeadlockCertificate> find_arithmetical_deadlock(
    const BinaryInstance& bi, const std::vector<std::pair<int, int>>& candidate_pairs,
    int max_len) {
    DeadlockSearch ds{bi, candidate_pairs, max_len};
    auto cert = ds.run();
    if (cert && !deadlock_certificate_valid(bi, *cert))
        throw std::logic_error("deadlock search produced an invalid certificate");
    return cert;
}

bool deadlock_certificate_valid(const BinaryInstance& bi, const DeadlockCertificate& cert) {
    std::size_t k = cert.variables.size();
    if (k < 3 || k % 2 == 0 || cert.pairs.size() != k) return false;
    std::vector<int> sorted_vars = cert.variables;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    if (std::adjacent_find(sorted_vars.begin(), sorted_vars.end()) != sorted_vars.end())
        return false;
    for (std::size_t s = 0; s < k; ++s) {
        int i = cert.variables[s], j = cert.variables[(s + 1) % k];
        auto [x1, y1] = cert.pairs[s];
        auto [x2, y2] = cert.pairs[(s + 1) % k];
        if (x1 == y1 || !bi.unary[i][x1] || !bi.unary[i][y1]) return false;
        bool cross = bi.allowed(i, j, x1, y2) && bi.allowed(i, j, y1, x2) &&
                     !bi.allowed(i, j, x1, x2) && !bi.allowed(i, j, y1, y2);
        if (!cross) return false;
    }
    return true;
}

}  // namespace minhom
