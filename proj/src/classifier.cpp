#include "minhom/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace minhom {

Relation witness_relation(const CrossedPair& w, int domain_size) {
    // {a,b}^2 minus the corner (b,b).
    return box_relation(domain_size, w.a, w.b, w.a, w.b);
}

Relation witness_relation(const LinWitness& w, int domain_size) {
    return lin_relation(domain_size, w.a, w.b);
}

ConstraintLanguage conservative_closure(const ConstraintLanguage& gamma) {
    ConstraintLanguage out = gamma;
    int d = gamma.domain_size;
    for (int mask = 1; mask < (1 << d); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < d; ++v)
            if (mask & (1 << v)) members.push_back(v);
        Relation u = unary_relation(d, members);
        bool present = false;
        for (const auto& [name, r] : out.relations)
            if (r == u) { present = true; break; }
        if (present) continue;
        std::string name = "u";
        for (std::size_t i = 0; i < members.size(); ++i)
            name += (i ? "_" : "") + std::to_string(members[i]);
        while (out.find(name)) name += "'";
        out.add(name, std::move(u));
    }
    return out;
}

namespace {

struct CycleSearch {
    int n;
    std::vector<std::vector<char>> adj;
    int target_len = 0;
    std::vector<int> path;
    std::vector<char> used;

    bool extend() {
        int len = static_cast<int>(path.size());
        if (len == target_len) return adj[path.back()][path.front()];
        for (int v = path.front() + 1; v < n; ++v) {
            if (used[v] || !adj[path.back()][v]) continue;
            // Canonical direction: second vertex smaller than last.
            if (len == target_len - 1 && v < path[1]) continue;
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

std::vector<int> shortest_odd_cycle(int num_vertices,
                                    const std::vector<std::pair<int, int>>& edges) {
    CycleSearch cs;
    cs.n = num_vertices;
    cs.adj.assign(num_vertices, std::vector<char>(num_vertices, 0));
    for (auto [u, v] : edges) cs.adj[u][v] = cs.adj[v][u] = 1;
    for (int len = 3; len <= num_vertices; len += 2) {
        cs.target_len = len;
        for (int start = 0; start + len <= num_vertices; ++start) {
            cs.path = {start};
            cs.used.assign(num_vertices, 0);
            cs.used[start] = 1;
            if (cs.extend()) return cs.path;
        }
    }
    return {};
}

namespace {

// Bounded pp-definability probe: true/false when decided, nullopt at cap.
std::optional<bool> probe_pp(const Relation& rho, const ConstraintLanguage& gamma) {
    try {
        return is_pp_member(rho, gamma);
    } catch (const PPTooLarge&) {
        return std::nullopt;
    }
}

}  // namespace

HardnessWitness extract_hardness_witness(const ConstraintLanguage& gamma_c,
                                         const LocalConditionsReport& report,
                                         const TFGraph& tf) {
    int d = gamma_c.domain_size;
    if (report.violation) {
        auto [a, b] = *report.violation;
        std::vector<HardnessWitness> candidates;
        candidates.push_back({CrossedPair{a, b}, false, ""});
        candidates.push_back({CrossedPair{b, a}, false, ""});
        candidates.push_back({LinWitness{a, b}, false, ""});
        bool any_capped = false;
        for (auto& w : candidates) {
            Relation rho = std::holds_alternative<CrossedPair>(w.kind)
                               ? witness_relation(std::get<CrossedPair>(w.kind), d)
                               : witness_relation(std::get<LinWitness>(w.kind), d);
            auto res = probe_pp(rho, gamma_c);
            if (!res) {
                any_capped = true;
                continue;
            }
            if (*res) {
                w.verified = true;
                return w;
            }
        }
        if (any_capped) {
            candidates[0].note = "pp-definability check exceeded the size cap";
            return candidates[0];
        }
        throw std::logic_error("no hardness predicate validated on the violating pair");
    }

    std::vector<int> cycle = shortest_odd_cycle(static_cast<int>(tf.vertices.size()), tf.edges);
    if (cycle.empty())
        throw std::logic_error("extract_hardness_witness called on a tractable language");
    OddBoxCycle obc;
    for (int v : cycle) obc.pairs.push_back(tf.vertices[v]);

    bool all_verified = true;
    std::string note;
    int k = static_cast<int>(obc.pairs.size());
    for (int i = 0; i < k; ++i) {
        auto [a, b] = obc.pairs[i];
        auto [c, dd] = obc.pairs[(i + 1) % k];
        // Canonical corner first, then the other three.
        std::vector<Relation> boxes = {
            box_relation(d, a, b, c, dd), box_relation(d, a, b, dd, c),
            box_relation(d, b, a, c, dd), box_relation(d, b, a, dd, c)};
        bool found = false, capped = false;
        for (const auto& rho : boxes) {
            auto res = probe_pp(rho, gamma_c);
            if (!res) capped = true;
            else if (*res) { found = true; break; }
        }
        if (!found) {
            if (!capped)
                throw std::logic_error("box predicate of the odd cycle is not definable");
            all_verified = false;
            note = "box pp-definability check exceeded the size cap";
        }
    }
    return {std::move(obc), all_verified, std::move(note)};
}

Verdict classify(const ConstraintLanguage& gamma) {
    Verdict v;
    v.closure = conservative_closure(gamma);
    LocalConditionsReport report = check_local_conditions(v.closure);
    if (!report.ok()) {
        TFGraph empty_tf;
        v.outcome = extract_hardness_witness(v.closure, report, empty_tf);
        return v;
    }
    TFGraph tf = build_tf(v.closure, report);
    auto part1 = tf_bipartition_part1(tf);
    if (!part1) {
        v.outcome = extract_hardness_witness(v.closure, report, tf);
        return v;
    }
    TractableWitness tw;
    tw.tf = tf;
    tw.bipartition_part1 = *part1;
    std::tie(tw.phi, tw.psi) = construct_tournament_pair(v.closure, tf, *part1);
    bool have_mbar = std::any_of(report.pairs.begin(), report.pairs.end(), [](const PairClass& pc) {
        return pc.side == PairSide::InMbar;
    });
    if (have_mbar) tw.arithmetical = construct_arithmetical(v.closure, report);
    tw.majority = construct_majority(v.closure, report, tf, *part1);
    tw.report = std::move(report);
    v.outcome = std::move(tw);
    return v;
}

}  // namespace minhom
