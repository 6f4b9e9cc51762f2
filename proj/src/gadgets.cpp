#include "minhom/gadgets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minhom {

void UndirectedGraph::validate() const {
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
    }
}

void TripartiteGraph::validate() const {
    for (int p : part)
        if (p < 0 || p > 2) throw std::invalid_argument("part label out of range");
    int n = num_vertices();
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (part[u] == part[v]) throw std::invalid_argument("edge within a part");
    }
}

WeightedInstance gadget_independent_set(const UndirectedGraph& g,
                                        const std::vector<int>& partition,
                                        const std::vector<std::pair<int, int>>& cycle_pairs) {
    g.validate();
    int m = static_cast<int>(cycle_pairs.size());
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("cycle length must be odd and at least 3");
    if (static_cast<int>(partition.size()) != g.num_vertices)
        throw std::invalid_argument("partition size mismatch");
    int d = 0;
    for (auto [a, b] : cycle_pairs) {
        if (a == b) throw std::invalid_argument("cycle pair needs distinct values");
        d = std::max({d, a + 1, b + 1});
    }
    for (int p : partition)
        if (p < 0 || p >= m) throw std::invalid_argument("partition label out of range");

    WeightedInstance inst;
    inst.num_vars = g.num_vertices;
    inst.domain_size = d;
    inst.weights.assign(inst.num_vars, std::vector<long long>(d, 1));
    for (int v = 0; v < g.num_vertices; ++v) {
        auto [a, b] = cycle_pairs[partition[v]];
        inst.weights[v][a] = 1;
        inst.weights[v][b] = 0;
        Constraint c;
        c.relation_name = "part" + std::to_string(partition[v]);
        c.relation = unary_relation(d, {a, b});
        c.scope = {v};
        inst.constraints.push_back(std::move(c));
    }
    for (auto [u, v] : g.edges) {
        int pu = partition[u], pv = partition[v];
        if ((pu + 1) % m == pv) {
            // keep orientation
        } else if ((pv + 1) % m == pu) {
            std::swap(u, v);
            std::swap(pu, pv);
        } else {
            throw std::invalid_argument("edge does not join consecutive parts");
        }
        auto [a1, b1] = cycle_pairs[pu];
        auto [a2, b2] = cycle_pairs[pv];
        Constraint c;
        c.relation_name = "box" + std::to_string(pu);
        c.relation = box_relation(d, a1, b1, a2, b2);
        c.scope = {u, v};
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

SubdivideResult gadget_subdivide(const TripartiteGraph& g, int d) {
    g.validate();
    if (d < 5 || d % 2 == 0) throw std::invalid_argument("d must be odd and at least 5");
    SubdivideResult res;
    int n = g.num_vertices();
    res.graph.num_vertices = n;
    res.cycle_class.resize(n);
    for (int v = 0; v < n; ++v) {
        // Canonical homomorphism: part 0 -> class 0, part 1 -> class d-2,
        // part 2 -> class d-1; path vertices fill classes 1..d-3.
        res.cycle_class[v] = g.part[v] == 0 ? 0 : (g.part[v] == 1 ? d - 2 : d - 1);
    }
    for (auto [u, v] : g.edges) {
        int pu = g.part[u], pv = g.part[v];
        if (pu > pv) {
            std::swap(u, v);
            std::swap(pu, pv);
        }
        if (pu == 0 && pv == 1) {
            int prev = u;  // class 0 end
            for (int j = 1; j <= d - 3; ++j) {
                int fresh = res.graph.num_vertices++;
                res.cycle_class.push_back(j);
                res.graph.edges.push_back({prev, fresh});
                prev = fresh;
            }
            res.graph.edges.push_back({prev, v});
        } else {
            res.graph.edges.push_back({u, v});
        }
    }
    // The returned classes form a homomorphism onto C_d.
    for (auto [u, v] : res.graph.edges) {
        int cu = res.cycle_class[u], cv = res.cycle_class[v];
        if ((cu + 1) % d != cv && (cv + 1) % d != cu)
            throw std::logic_error("subdivision broke the cycle homomorphism");
    }
    return res;
}

WeightedInstance gadget_maxcut(const UndirectedGraph& g) {
    g.validate();
    WeightedInstance inst;
    inst.domain_size = 2;
    int ne = static_cast<int>(g.edges.size());
    inst.num_vars = g.num_vertices + ne;
    inst.weights.assign(inst.num_vars, std::vector<long long>(2, 0));
    // Odd parity: x ^ y ^ z = 1 over {0,1}.
    std::vector<Tuple> ts;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                if ((x ^ y ^ z) == 1) ts.push_back({x, y, z});
    Relation lin_odd(3, 2, std::move(ts));
    for (int e = 0; e < ne; ++e) {
        auto [u, v] = g.edges[e];
        int xe = g.num_vertices + e;
        inst.weights[xe][1] = 1;  // x_e = 1 means the edge is uncut
        Constraint c;
        c.relation_name = "lin_odd";
        c.relation = lin_odd;
        c.scope = {xe, u, v};
        inst.constraints.push_back(std::move(c));
    }
    inst.validate();
    return inst;
}

}  // namespace minhom
