#include "minhom/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "minhom/lp.hpp"

namespace minhom {

namespace {

long long checked_add(long long a, long long b, const char* what) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

}  // namespace

BinaryInstance BinaryInstance::full(int n, int domain_size) {
    BinaryInstance bi;
    bi.n = n;
    bi.domain_size = domain_size;
    bi.unary.assign(n, std::vector<char>(domain_size, 1));
    bi.binary.assign(static_cast<std::size_t>(n) * n,
                     std::vector<char>(static_cast<std::size_t>(domain_size) * domain_size, 1));
    bi.weights.assign(n, std::vector<long long>(domain_size, 0));
    return bi;
}

void BinaryInstance::forbid(int i, int j, int a, int b) {
    binary[static_cast<std::size_t>(i) * n + j][static_cast<std::size_t>(a) * domain_size + b] = 0;
    binary[static_cast<std::size_t>(j) * n + i][static_cast<std::size_t>(b) * domain_size + a] = 0;
}

WeightedInstance shift_weights(const WeightedInstance& inst, long long s) {
    WeightedInstance out = inst;
    for (auto& row : out.weights)
        for (auto& w : row) {
            w = checked_add(w, s, "shift_weights overflow");
            if (w < 0) throw std::invalid_argument("shift_weights: negative resulting weight");
        }
    return out;
}

AbsorbResult absorb_unary_constraints(const WeightedInstance& inst) {
    inst.validate();
    long long total = 0;
    for (const auto& row : inst.weights)
        for (long long w : row) total = checked_add(total, w, "weight sum overflow");
    long long big = checked_add(total, 1, "weight sum overflow");

    std::vector<std::vector<char>> allowed(inst.num_vars,
                                           std::vector<char>(inst.domain_size, 1));
    AbsorbResult res{inst, big};
    res.instance.constraints.clear();
    for (const auto& c : inst.constraints) {
        if (c.relation.arity != 1) {
            res.instance.constraints.push_back(c);
            continue;
        }
        std::vector<char> members(inst.domain_size, 0);
        for (const auto& t : c.relation.tuples) members[t[0]] = 1;
        for (int a = 0; a < inst.domain_size; ++a)
            allowed[c.scope[0]][a] = allowed[c.scope[0]][a] && members[a];
    }
    for (int i = 0; i < inst.num_vars; ++i)
        for (int a = 0; a < inst.domain_size; ++a)
            if (!allowed[i][a])
                res.instance.weights[i][a] =
                    checked_add(res.instance.weights[i][a], big, "penalty overflow");
    return res;
}

WeightedInstance expand_pp_instance(const WeightedInstance& inst,
                                    const ConstraintLanguage& target,
                                    const std::map<std::string, PPFormula>& definitions) {
    inst.validate();
    WeightedInstance out;
    out.domain_size = inst.domain_size;
    out.num_vars = inst.num_vars;
    out.weights = inst.weights;
    std::vector<std::pair<int, int>> merges;

    for (const auto& c : inst.constraints) {
        auto it = definitions.find(c.relation_name);
        if (it == definitions.end()) {
            out.constraints.push_back(c);
            continue;
        }
        const PPFormula& f = it->second;
        if (f.arity != c.relation.arity)
            throw std::invalid_argument("pp-formula arity mismatch for " + c.relation_name);
        int fresh_base = out.num_vars;
        out.num_vars += f.num_existential;
        out.weights.resize(out.num_vars, std::vector<long long>(out.domain_size, 0));
        auto map_arg = [&](int a) {
            if (a < 0 || a >= f.arity + f.num_existential)
                throw std::invalid_argument("pp-formula argument out of range");
            return a < f.arity ? c.scope[a] : fresh_base + (a - f.arity);
        };
        for (const auto& atom : f.atoms) {
            if (atom.relation == "=") {
                if (atom.args.size() != 2)
                    throw std::invalid_argument("equality atom needs exactly two arguments");
                merges.push_back({map_arg(atom.args[0]), map_arg(atom.args[1])});
                continue;
            }
            const Relation* rho = target.find(atom.relation);
            if (!rho)
                throw std::invalid_argument("pp-formula names unknown relation " + atom.relation);
            if (static_cast<int>(atom.args.size()) != rho->arity)
                throw std::invalid_argument("pp-formula atom arity mismatch");
            Constraint nc;
            nc.relation_name = atom.relation;
            nc.relation = *rho;
            for (int a : atom.args) nc.scope.push_back(map_arg(a));
            out.constraints.push_back(std::move(nc));
        }
    }

    // Union-find for equality atoms; representative = least index, so original
    // variables keep the low positions.
    std::vector<int> parent(out.num_vars);
    for (int i = 0; i < out.num_vars; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : merges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> remap(out.num_vars, -1);
    int next = 0;
    for (int i = 0; i < out.num_vars; ++i)
        if (find(i) == i) remap[i] = next++;
    WeightedInstance packed;
    packed.domain_size = out.domain_size;
    packed.num_vars = next;
    packed.weights.assign(next, std::vector<long long>(out.domain_size, 0));
    for (int i = 0; i < out.num_vars; ++i)
        for (int a = 0; a < out.domain_size; ++a)
            packed.weights[remap[find(i)]][a] = checked_add(
                packed.weights[remap[find(i)]][a], out.weights[i][a], "merged weight overflow");
    for (auto& c : out.constraints) {
        for (auto& v : c.scope) v = remap[find(v)];
        packed.constraints.push_back(std::move(c));
    }
    packed.validate();
    return packed;
}

BinaryInstance binarize(const WeightedInstance& inst, const OperationTable& mu) {
    inst.validate();
    if (!is_majority(mu) || mu.domain_size != inst.domain_size)
        throw std::invalid_argument("binarize requires a majority operation on the domain");
    int d = inst.domain_size;
    BinaryInstance bi = BinaryInstance::full(inst.num_vars, d);
    bi.weights = inst.weights;

    for (const auto& c : inst.constraints) {
        if (!preserves(mu, c.relation))
            throw std::invalid_argument("binarize: relation " + c.relation_name +
                                        " not preserved by the majority operation");
        int m = c.relation.arity;
        // Tuples compatible with repeated variables in the scope.
        std::vector<Tuple> tuples;
        for (const auto& t : c.relation.tuples) {
            bool ok = true;
            for (int p = 0; p < m && ok; ++p)
                for (int q = p + 1; q < m && ok; ++q)
                    if (c.scope[p] == c.scope[q] && t[p] != t[q]) ok = false;
            if (ok) tuples.push_back(t);
        }
        if (tuples.empty()) {
            int v = c.scope.empty() ? 0 : c.scope[0];
            std::fill(bi.unary[v].begin(), bi.unary[v].end(), 0);
            continue;
        }
        for (int p = 0; p < m; ++p) {
            std::vector<char> seen(d, 0);
            for (const auto& t : tuples) seen[t[p]] = 1;
            for (int a = 0; a < d; ++a)
                bi.unary[c.scope[p]][a] = bi.unary[c.scope[p]][a] && seen[a];
        }
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q) {
                if (p == q || c.scope[p] == c.scope[q]) continue;
                std::vector<char> pair_ok(static_cast<std::size_t>(d) * d, 0);
                for (const auto& t : tuples) pair_ok[static_cast<std::size_t>(t[p]) * d + t[q]] = 1;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        if (!pair_ok[static_cast<std::size_t>(a) * d + b] &&
                            bi.allowed(c.scope[p], c.scope[q], a, b))
                            bi.forbid(c.scope[p], c.scope[q], a, b);
            }
        }
    }
    return bi;
}

ConsistencyStatus enforce_consistency(BinaryInstance& bi, std::vector<std::string>* trace) {
    int n = bi.n, d = bi.domain_size;
    auto log = [&](const std::string& s) {
        if (trace) trace->push_back(s);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        // rho_ij := rho_ij ∩ (rho_i x A) ∩ (A x rho_j)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        if (bi.allowed(i, j, a, b) && (!bi.unary[i][a] || !bi.unary[j][b])) {
                            bi.forbid(i, j, a, b);
                            changed = true;
                            log("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") drops (" + std::to_string(a) + "," + std::to_string(b) + ")");
                        }
            }
        // rho_i := rho_i ∩ Pr1 rho_ij
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int a = 0; a < d; ++a) {
                    if (!bi.unary[i][a]) continue;
                    bool supported = false;
                    for (int b = 0; b < d && !supported; ++b)
                        supported = bi.unary[j][b] && bi.allowed(i, j, a, b);
                    if (!supported) {
                        bi.unary[i][a] = 0;
                        changed = true;
                        log("var " + std::to_string(i) + " drops value " + std::to_string(a) +
                            " (no support at var " + std::to_string(j) + ")");
                    }
                }
            }
        // rho_ik := rho_ik ∩ (rho_ij o rho_jk)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (i == k) continue;
                for (int j = 0; j < n; ++j) {
                    if (j == i || j == k) continue;
                    for (int a = 0; a < d; ++a)
                        for (int cc = 0; cc < d; ++cc) {
                            if (!bi.allowed(i, k, a, cc)) continue;
                            bool through = false;
                            for (int b = 0; b < d && !through; ++b)
                                through = bi.allowed(i, j, a, b) && bi.allowed(j, k, b, cc);
                            if (!through) {
                                bi.forbid(i, k, a, cc);
                                changed = true;
                                log("pair (" + std::to_string(i) + "," + std::to_string(k) +
                                    ") drops (" + std::to_string(a) + "," + std::to_string(cc) +
                                    ") via var " + std::to_string(j));
                            }
                        }
                }
            }
    }
    for (int i = 0; i < n; ++i)
        if (std::none_of(bi.unary[i].begin(), bi.unary[i].end(), [](char c) { return c; }))
            return ConsistencyStatus::Empty;
    return ConsistencyStatus::Consistent;
}

MicrostructureGraph build_microstructure(const BinaryInstance& bi) {
    MicrostructureGraph g;
    g.num_parts = bi.n;
    g.part_vertices.resize(bi.n);
    for (int i = 0; i < bi.n; ++i)
        for (int a = 0; a < bi.domain_size; ++a)
            if (bi.unary[i][a]) {
                g.part_vertices[i].push_back(g.num_vertices());
                g.part.push_back(i);
                g.value.push_back(a);
                g.weight.push_back(bi.weights[i][a]);
            }
    int nv = g.num_vertices();
    g.adj.assign(nv, std::vector<char>(nv, 0));
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            if (g.part[u] == g.part[v]) continue;
            if (bi.allowed(g.part[u], g.part[v], g.value[u], g.value[v]))
                g.adj[u][v] = g.adj[v][u] = 1;
        }
    return g;
}

namespace {

struct CliqueSearch {
    const MicrostructureGraph& g;
    CliqueResult best;
    bool have_best = false;
    std::vector<int> chosen;

    explicit CliqueSearch(const MicrostructureGraph& gr) : g(gr) {}

    void run() {
        std::vector<std::vector<int>> cand(g.num_parts);
        for (int i = 0; i < g.num_parts; ++i) cand[i] = g.part_vertices[i];
        dfs(0, cand, 0, 0);
    }

    void dfs(int part, const std::vector<std::vector<int>>& cand, int size, long long weight) {
        if (part == g.num_parts) {
            if (!have_best || size > best.size || (size == best.size && weight < best.weight)) {
                best = {chosen, size, weight};
                have_best = true;
            }
            return;
        }
        if (have_best) {
            int potential = size;
            long long wlb = weight;
            for (int j = part; j < g.num_parts; ++j)
                if (!cand[j].empty()) {
                    ++potential;
                    long long mn = cand[j][0] >= 0 ? g.weight[cand[j][0]] : 0;
                    for (int v : cand[j]) mn = std::min(mn, g.weight[v]);
                    wlb += mn;
                }
            if (potential < best.size) return;
            if (potential == best.size && wlb >= best.weight) return;
        }
        // Candidates are kept in ascending value order, and skipping sorts
        // last, so the first accepted optimum is the lexicographically least.
        for (int v : cand[part]) {
            std::vector<std::vector<int>> next(cand);
            for (int j = part + 1; j < g.num_parts; ++j)
                std::erase_if(next[j], [&](int u) { return !g.adj[v][u]; });
            chosen.push_back(v);
            dfs(part + 1, next, size + 1, weight + g.weight[v]);
            chosen.pop_back();
        }
        dfs(part + 1, cand, size, weight);
    }
};

}  // namespace

CliqueResult solve_mmclique_exact(const MicrostructureGraph& g) {
    CliqueSearch cs(g);
    cs.run();
    return cs.best;
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency matrix.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out, std::size_t cap) {
    if (p.empty() && x.empty()) {
        if (out.size() >= cap) throw std::runtime_error("maximal clique cap exceeded");
        out.push_back(r);
        return;
    }
    int pivot = !p.empty() ? p[0] : x[0];
    std::vector<int> branch;
    for (int v : p)
        if (!adj[pivot][v]) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[v][u]) np.push_back(u);
        for (int u : x)
            if (adj[v][u]) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(np), std::move(nx), out, cap);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

LPCheck solve_mmclique_lp(const MicrostructureGraph& g, std::size_t clique_cap) {
    int nv = g.num_vertices();
    if (nv == 0) return {0.0, "0/1", true};
    int k = solve_mmclique_exact(g).size;

    std::vector<std::vector<char>> comp(nv, std::vector<char>(nv, 0));
    for (int u = 0; u < nv; ++u)
        for (int v = 0; v < nv; ++v)
            if (u != v && !g.adj[u][v]) comp[u][v] = 1;
    std::vector<std::vector<int>> cliques;
    std::vector<int> r, p(nv), x;
    for (int v = 0; v < nv; ++v) p[v] = v;
    bron_kerbosch(comp, r, std::move(p), std::move(x), cliques, clique_cap);

    std::vector<std::vector<Rational>> a_ub(cliques.size(),
                                            std::vector<Rational>(nv, Rational(0)));
    std::vector<Rational> b_ub(cliques.size(), Rational(1));
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (int v : cliques[i]) a_ub[i][v] = 1;
    std::vector<std::vector<Rational>> a_eq(1, std::vector<Rational>(nv, Rational(1)));
    std::vector<Rational> b_eq = {Rational(k)};
    std::vector<Rational> c(nv);
    for (int v = 0; v < nv; ++v) c[v] = Rational(g.weight[v]);

    LPResult lp = solve_lp(a_ub, b_ub, a_eq, b_eq, c);
    if (lp.status != LPResult::Status::Optimal)
        throw std::logic_error("mmclique LP unexpectedly infeasible or unbounded");
    LPCheck out;
    out.lp_value = boost::rational_cast<double>(lp.value);
    out.exact_value = lp.value.numerator().str() + "/" + lp.value.denominator().str();
    out.integral = std::all_of(lp.x.begin(), lp.x.end(), [](const Rational& v) {
        return v == Rational(0) || v == Rational(1);
    });
    return out;
}

namespace {

struct Dinic {
    struct Edge {
        int to;
        long long cap;
        std::size_t rev;
    };
    std::vector<std::vector<Edge>> g;
    std::vector<int> level, iter;

    explicit Dinic(int n) : g(n) {}

    void add_edge(int from, int to, long long cap) {
        g[from].push_back({to, cap, g[to].size()});
        g[to].push_back({from, 0, g[from].size() - 1});
    }

    bool bfs(int s, int t) {
        level.assign(g.size(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : g[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push(e.to);
                }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (auto& i = iter[v]; i < static_cast<int>(g[v].size()); ++i) {
            Edge& e = g[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    g[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter.assign(g.size(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> source_side(int s) {
        std::vector<char> seen(g.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : g[v])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }
};

enum class UnaryKind { Zero, One, Full, Other };

UnaryKind unary_kind(const Relation& r) {
    if (r.arity != 1 || r.domain_size != 2) return UnaryKind::Other;
    bool has0 = r.contains({0}), has1 = r.contains({1});
    if (has0 && has1) return UnaryKind::Full;
    if (has0) return UnaryKind::Zero;
    if (has1) return UnaryKind::One;
    return UnaryKind::Other;  // empty unary: treated as out of scope
}

}  // namespace

SolveResult solve_boolean_monotone(const WeightedInstance& inst) {
    inst.validate();
    if (inst.domain_size != 2)
        throw std::invalid_argument("monotone fast path needs a two-element domain");
    Relation leq = leq_relation(2);
    long long total = 1;
    for (const auto& row : inst.weights)
        for (long long w : row) total = checked_add(total, w, "weight sum overflow");
    long long inf = total;  // strictly above any feasible measure

    Dinic net(inst.num_vars + 2);
    int s = inst.num_vars, t = inst.num_vars + 1;
    for (int i = 0; i < inst.num_vars; ++i) {
        net.add_edge(s, i, inst.weights[i][0]);  // cut iff x_i = 0
        net.add_edge(i, t, inst.weights[i][1]);  // cut iff x_i = 1
    }
    bool unsat_empty = false;
    for (const auto& c : inst.constraints) {
        if (c.relation.arity == 1) {
            switch (unary_kind(c.relation)) {
                case UnaryKind::Zero: net.add_edge(c.scope[0], t, inf); break;
                case UnaryKind::One: net.add_edge(s, c.scope[0], inf); break;
                case UnaryKind::Full: break;
                case UnaryKind::Other:
                    if (c.relation.empty()) { unsat_empty = true; break; }
                    throw std::invalid_argument("monotone fast path: unsupported unary relation");
            }
        } else if (c.relation == leq) {
            if (c.scope[0] != c.scope[1]) net.add_edge(c.scope[0], c.scope[1], inf);
        } else {
            throw std::invalid_argument("monotone fast path: unsupported relation " +
                                        c.relation_name);
        }
    }
    if (unsat_empty) return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "empty unary"};
    long long cut = net.max_flow(s, t);
    if (cut >= inf)
        return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "forced contradiction"};
    // Residual source side is the unique minimal 1-set among the optima, hence
    // the lexicographically least optimal assignment.
    std::vector<char> side = net.source_side(s);
    SolveResult res{SolveResult::Kind::Optimal, {}, cut, std::nullopt, ""};
    res.assignment.values.resize(inst.num_vars);
    for (int i = 0; i < inst.num_vars; ++i) res.assignment.values[i] = side[i] ? 1 : 0;
    return res;
}

SolveResult solve_boolean_disequality(const WeightedInstance& inst) {
    inst.validate();
    if (inst.domain_size != 2)
        throw std::invalid_argument("disequality fast path needs a two-element domain");
    Relation neq = neq_relation(2);
    std::vector<std::vector<int>> adj(inst.num_vars);
    std::vector<std::vector<char>> forced(inst.num_vars, std::vector<char>(2, 1));
    for (const auto& c : inst.constraints) {
        if (c.relation.arity == 1) {
            switch (unary_kind(c.relation)) {
                case UnaryKind::Zero: forced[c.scope[0]][1] = 0; break;
                case UnaryKind::One: forced[c.scope[0]][0] = 0; break;
                case UnaryKind::Full: break;
                case UnaryKind::Other:
                    if (c.relation.empty()) { forced[c.scope[0]][0] = forced[c.scope[0]][1] = 0; break; }
                    throw std::invalid_argument("disequality fast path: unsupported unary relation");
            }
        } else if (c.relation == neq) {
            if (c.scope[0] == c.scope[1])
                return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "x != x"};
            adj[c.scope[0]].push_back(c.scope[1]);
            adj[c.scope[1]].push_back(c.scope[0]);
        } else {
            throw std::invalid_argument("disequality fast path: unsupported relation " +
                                        c.relation_name);
        }
    }

    std::vector<int> parity(inst.num_vars, -1);
    SolveResult res{SolveResult::Kind::Optimal, {}, 0, std::nullopt, ""};
    res.assignment.values.assign(inst.num_vars, 0);
    for (int root = 0; root < inst.num_vars; ++root) {
        if (parity[root] != -1) continue;
        std::vector<int> comp;
        parity[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : adj[v]) {
                if (parity[w] == -1) {
                    parity[w] = parity[v] ^ 1;
                    q.push(w);
                } else if (parity[w] == parity[v]) {
                    return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt,
                            "odd disequality cycle"};
                }
            }
        }
        long long cost[2] = {0, 0};
        bool feasible[2] = {true, true};
        for (int rv = 0; rv < 2; ++rv)
            for (int v : comp) {
                int val = parity[v] ^ rv;
                if (!forced[v][val]) feasible[rv] = false;
                cost[rv] = checked_add(cost[rv], inst.weights[v][val], "measure overflow");
            }
        int pick;
        if (!feasible[0] && !feasible[1])
            return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "forced contradiction"};
        if (!feasible[0]) pick = 1;
        else if (!feasible[1]) pick = 0;
        else if (cost[0] != cost[1]) pick = cost[0] < cost[1] ? 0 : 1;
        else {
            // Tie: lexicographically least means value 0 at the component's
            // smallest variable, which is the BFS root.
            pick = 0;
        }
        res.measure = checked_add(res.measure, cost[pick], "measure overflow");
        for (int v : comp) res.assignment.values[v] = parity[v] ^ pick;
    }
    return res;
}

namespace {

bool all_relations_within(const WeightedInstance& inst, const Relation& binary_allowed) {
    for (const auto& c : inst.constraints) {
        if (c.relation.arity == 1) {
            if (unary_kind(c.relation) == UnaryKind::Other && !c.relation.empty()) return false;
            continue;
        }
        if (!(c.relation == binary_allowed)) return false;
    }
    return true;
}

}  // namespace

SolveResult solve_with_verdict(const Verdict& verdict, const WeightedInstance& inst,
                               std::vector<std::string>* trace) {
    inst.validate();
    if (!verdict.tractable()) {
        SolveResult r;
        r.kind = SolveResult::Kind::NotCovered;
        r.witness = verdict.hardness();
        r.reason = "language classified NP-hard";
        return r;
    }
    if (inst.domain_size == 2) {
        if (all_relations_within(inst, leq_relation(2))) return solve_boolean_monotone(inst);
        if (all_relations_within(inst, neq_relation(2))) return solve_boolean_disequality(inst);
    }

    AbsorbResult absorbed = absorb_unary_constraints(inst);
    BinaryInstance bi = binarize(absorbed.instance, verdict.witness().majority);
    if (enforce_consistency(bi, trace) == ConsistencyStatus::Empty)
        return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "consistency emptied a domain"};
    MicrostructureGraph g = build_microstructure(bi);
    CliqueResult cr = solve_mmclique_exact(g);
    if (cr.size < inst.num_vars)
        return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt, "no full transversal clique"};
    if (cr.weight >= absorbed.threshold)
        return {SolveResult::Kind::Unsatisfiable, {}, 0, std::nullopt,
                "optimum violates an absorbed unary constraint"};
    SolveResult res{SolveResult::Kind::Optimal, {}, cr.weight, std::nullopt, ""};
    res.assignment.values.assign(inst.num_vars, -1);
    for (int v : cr.vertices) res.assignment.values[g.part[v]] = g.value[v];
    return res;
}

SolveResult solve(const ConstraintLanguage& gamma, const WeightedInstance& inst) {
    return solve_with_verdict(classify(gamma), inst);
}

}  // namespace minhom
