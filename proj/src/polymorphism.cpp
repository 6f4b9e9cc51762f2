#include "minhom/polymorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "table_search.hpp"

namespace minhom {

namespace {

std::vector<const Relation*> higher_arity_relations(const ConstraintLanguage& gamma) {
    std::vector<const Relation*> rels;
    for (const auto& [name, r] : gamma.relations)
        if (r.arity >= 2) rels.push_back(&r);
    return rels;
}

// result(args) = outer(inner_1(args), ..., inner_j(args)); all inner tables
// share the result arity.  Superposition of polymorphisms is a polymorphism.
OperationTable superpose(const OperationTable& outer, const std::vector<const OperationTable*>& inner) {
    if (static_cast<int>(inner.size()) != outer.arity)
        throw std::invalid_argument("superpose: inner count != outer arity");
    int k = inner[0]->arity;
    OperationTable out(k, outer.domain_size);
    Tuple mid(outer.arity);
    for (std::size_t e = 0; e < out.table.size(); ++e) {
        Tuple args = out.args_of(e);
        for (int i = 0; i < outer.arity; ++i) mid[i] = inner[i]->apply(args);
        out.table[e] = outer.apply(mid);
    }
    return out;
}

// f(a,b) = f(b,a) = target, with {a,b} the unordered pair.
std::vector<Prescription> collapse_prescriptions(int a, int b, int target) {
    return {{{a, b}, target}, {{b, a}, target}};
}

std::vector<Prescription> arithmetical_prescriptions(int a, int b) {
    std::vector<Prescription> ps;
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        ps.push_back({{x, x, y}, y});
        ps.push_back({{y, x, x}, y});
        ps.push_back({{y, x, y}, y});
    }
    return ps;
}

}  // namespace

int TFGraph::vertex_index(std::pair<int, int> v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

bool TFGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges.begin(), edges.end(), std::pair{i, j}) != edges.end();
}

std::optional<OperationTable> find_polymorphism(const ConstraintLanguage& gamma, int arity,
                                                const std::vector<Prescription>& prescriptions) {
    if (arity != 2 && arity != 3)
        throw std::invalid_argument("polymorphism search supports arity 2 and 3 only");
    for (const auto& p : prescriptions) {
        if (static_cast<int>(p.input.size()) != arity)
            throw std::invalid_argument("prescription input length != arity");
        if (std::find(p.input.begin(), p.input.end(), p.required_output) == p.input.end())
            throw std::invalid_argument("prescription violates conservativity");
    }

    detail::TableSearch search(arity, gamma.domain_size,
                               detail::conservative_candidates(arity, gamma.domain_size),
                               higher_arity_relations(gamma));
    OperationTable probe(arity, gamma.domain_size);
    for (const auto& p : prescriptions)
        if (!search.prescribe(probe.index(p.input), p.required_output)) return std::nullopt;
    return search.find();
}

PairClass pair_class(const ConstraintLanguage& gamma, int a, int b) {
    if (a == b) throw std::invalid_argument("pair_class needs two distinct elements");
    if (a > b) std::swap(a, b);
    PairClass pc;
    pc.pair = {a, b};
    auto down = find_polymorphism(gamma, 2, collapse_prescriptions(a, b, a));
    auto up = find_polymorphism(gamma, 2, collapse_prescriptions(a, b, b));
    if (down && up) {
        pc.side = PairSide::InM;
        pc.toward_first = std::move(down);
        pc.toward_second = std::move(up);
    } else {
        pc.side = PairSide::InMbar;
        pc.arithmetical_witness = find_polymorphism(gamma, 3, arithmetical_prescriptions(a, b));
    }
    return pc;
}

LocalConditionsReport check_local_conditions(const ConstraintLanguage& gamma) {
    LocalConditionsReport rep;
    for (int a = 0; a < gamma.domain_size; ++a) {
        for (int b = a + 1; b < gamma.domain_size; ++b) {
            PairClass pc = pair_class(gamma, a, b);
            if (pc.side == PairSide::InMbar && !pc.arithmetical_witness && !rep.violation)
                rep.violation = {a, b};
            rep.pairs.push_back(std::move(pc));
        }
    }
    return rep;
}

TFGraph build_tf(const ConstraintLanguage& gamma, const LocalConditionsReport& report) {
    TFGraph tf;
    for (const auto& pc : report.pairs) {
        if (pc.side != PairSide::InM) continue;
        tf.vertices.push_back(pc.pair);
        tf.vertices.push_back({pc.pair.second, pc.pair.first});
    }
    std::sort(tf.vertices.begin(), tf.vertices.end());
    for (std::size_t i = 0; i < tf.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < tf.vertices.size(); ++j) {
            auto [a, b] = tf.vertices[i];
            auto [c, d] = tf.vertices[j];
            std::vector<Prescription> ps = collapse_prescriptions(a, b, b);
            for (const auto& p : collapse_prescriptions(c, d, d)) ps.push_back(p);
            bool conflict = false;
            // Conflicting prescriptions on a shared entry mean no table exists.
            for (std::size_t s = 0; s < ps.size() && !conflict; ++s)
                for (std::size_t t = s + 1; t < ps.size(); ++t)
                    if (ps[s].input == ps[t].input && ps[s].required_output != ps[t].required_output) {
                        conflict = true;
                        break;
                    }
            if (conflict || !find_polymorphism(gamma, 2, ps))
                tf.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    }
    return tf;
}

std::optional<std::vector<std::pair<int, int>>> tf_bipartition_part1(const TFGraph& tf) {
    int n = static_cast<int>(tf.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [i, j] : tf.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> color(n, -1);
    // Vertices are sorted, so scanning in index order seeds each component at
    // its lexicographically least vertex with color 0.
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue = {s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
    }
    std::vector<std::pair<int, int>> part1;
    for (int v = 0; v < n; ++v)
        if (color[v] == 0) part1.push_back(tf.vertices[v]);
    return part1;
}

namespace {

bool collapses(const OperationTable& f, std::pair<int, int> p) {
    return f.apply2(p.first, p.second) == p.second && f.apply2(p.second, p.first) == p.second;
}

// Binary table collapsing (x,y) -> y on every listed ordered pair, built by
// the inductive composition over pairwise witnesses.
class CollapseBuilder {
public:
    CollapseBuilder(const ConstraintLanguage& gamma, std::vector<std::pair<int, int>> pairs)
        : gamma_(gamma), pairs_(std::move(pairs)) {}

    OperationTable build() {
        if (pairs_.empty()) return projection_table(2, gamma_.domain_size, 1);
        std::vector<int> all(pairs_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return witness(all);
    }

private:
    const ConstraintLanguage& gamma_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::vector<int>, OperationTable> memo_;

    OperationTable witness(std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        if (auto it = memo_.find(idx); it != memo_.end()) return it->second;
        OperationTable result(2, gamma_.domain_size);
        if (idx.size() <= 2) {
            std::vector<Prescription> ps;
            for (int i : idx)
                for (const auto& p :
                     collapse_prescriptions(pairs_[i].first, pairs_[i].second, pairs_[i].second))
                    ps.push_back(p);
            auto found = find_polymorphism(gamma_, 2, ps);
            if (!found)
                throw std::logic_error("collapse witness missing for a nonadjacent pair set");
            result = std::move(*found);
        } else {
            std::vector<int> s1(idx.begin() + 1, idx.end());            // drop first
            std::vector<int> s2 = idx;                                  // drop second
            s2.erase(s2.begin() + 1);
            std::vector<int> s3(idx.begin(), idx.end() - 1);            // drop last
            OperationTable f1 = witness(s1), f2 = witness(s2), f3 = witness(s3);
            result = superpose(f3, {&f1, &f2});
        }
        for (int i : idx)
            if (!collapses(result, pairs_[i]))
                throw std::logic_error("collapse composition lost a pair");
        memo_.emplace(std::move(idx), result);
        return result;
    }
};

// phi(x,y) = f(x, f(y,x)) turns an all-pairs collapse witness into a
// commutative operation on those pairs and a first projection on pairs where
// f restricts to a projection.
OperationTable symmetrize(const OperationTable& f) {
    OperationTable out(2, f.domain_size);
    for (int x = 0; x < f.domain_size; ++x)
        for (int y = 0; y < f.domain_size; ++y)
            out.table[static_cast<std::size_t>(x) * f.domain_size + y] =
                f.apply2(x, f.apply2(y, x));
    return out;
}

}  // namespace

std::pair<OperationTable, OperationTable> construct_tournament_pair(
    const ConstraintLanguage& gamma, const TFGraph& tf,
    const std::vector<std::pair<int, int>>& part1) {
    std::vector<std::pair<int, int>> part2;
    for (auto [x, y] : part1) part2.push_back({y, x});
    if (part1.size() + part2.size() != tf.vertices.size())
        throw std::invalid_argument("bipartition does not cover T_F");

    OperationTable phi = symmetrize(CollapseBuilder(gamma, part1).build());
    OperationTable psi = symmetrize(CollapseBuilder(gamma, part2).build());

    for (auto [x, y] : part1) {
        bool ok = phi.apply2(x, y) == y && phi.apply2(y, x) == y && psi.apply2(x, y) == x &&
                  psi.apply2(y, x) == x;
        if (!ok) throw std::logic_error("tournament pair identity check failed");
    }
    return {phi, psi};
}

OperationTable construct_arithmetical(const ConstraintLanguage& gamma,
                                      const LocalConditionsReport& report) {
    std::vector<std::pair<int, int>> mbar;
    std::vector<const OperationTable*> witnesses;
    for (const auto& pc : report.pairs) {
        if (pc.side != PairSide::InMbar) continue;
        if (!pc.arithmetical_witness)
            throw std::invalid_argument("local conditions violated; no arithmetical witness");
        mbar.push_back(pc.pair);
        witnesses.push_back(&*pc.arithmetical_witness);
    }
    if (mbar.empty()) throw std::invalid_argument("construct_arithmetical requires nonempty Mbar");

    OperationTable m = *witnesses[0];
    for (std::size_t k = 1; k < mbar.size(); ++k) {
        auto [a, b] = mbar[k];
        if (!is_arithmetical_on_pair(m, a, b)) {
            const OperationTable& mb = *witnesses[k];
            // The induction correction depends on which restricted binary of m
            // degenerated to the wrong projection on {a,b}.
            if (m.apply3(a, a, b) != b || m.apply3(b, b, a) != a) {
                // m(x,x,y) is the x-projection on the pair.
                OperationTable inner = superpose(m, {&mb, &mb, &m});
                m = inner;
            } else if (m.apply3(b, a, a) != b || m.apply3(a, b, b) != a) {
                // m(y,x,x) is the x-projection on the pair.
                m = superpose(m, {&m, &mb, &mb});
            } else {
                // m(y,x,y) degenerates to the middle projection.
                m = superpose(m, {&m, &mb, &m});
            }
        }
        for (std::size_t i = 0; i <= k; ++i)
            if (!is_arithmetical_on_pair(m, mbar[i].first, mbar[i].second))
                throw std::logic_error("arithmetical induction lost a pair");
    }
    return m;
}

namespace {

OperationTable majority_from_tournament(const OperationTable& phi, const OperationTable& psi) {
    // mu2(x,y,z) = phi(phi(psi(x,y), psi(y,z)), psi(x,z))
    int d = phi.domain_size;
    OperationTable out(3, d);
    for (std::size_t e = 0; e < out.table.size(); ++e) {
        Tuple a = out.args_of(e);
        int x = a[0], y = a[1], z = a[2];
        out.table[e] = phi.apply2(phi.apply2(psi.apply2(x, y), psi.apply2(y, z)), psi.apply2(x, z));
    }
    return out;
}

OperationTable majority_from_arithmetical(const OperationTable& m) {
    // mu1(x,y,z) = m(x, m(x,y,z), z)
    OperationTable out(3, m.domain_size);
    for (std::size_t e = 0; e < out.table.size(); ++e) {
        Tuple a = out.args_of(e);
        out.table[e] = m.apply3(a[0], m.apply3(a[0], a[1], a[2]), a[2]);
    }
    return out;
}

}  // namespace

OperationTable construct_majority(const ConstraintLanguage& gamma,
                                  const LocalConditionsReport& report, const TFGraph& tf,
                                  const std::vector<std::pair<int, int>>& part1) {
    if (!report.ok()) throw std::invalid_argument("construct_majority: local conditions violated");
    bool have_m = !tf.vertices.empty();
    bool have_mbar = std::any_of(report.pairs.begin(), report.pairs.end(), [](const PairClass& pc) {
        return pc.side == PairSide::InMbar;
    });

    OperationTable mu(3, gamma.domain_size);
    if (!have_m && !have_mbar) {
        // |A| <= 1: the unique table is trivially a majority.
        for (std::size_t e = 0; e < mu.table.size(); ++e) mu.table[e] = mu.args_of(e)[0];
    } else if (!have_m) {
        mu = majority_from_arithmetical(construct_arithmetical(gamma, report));
    } else if (!have_mbar) {
        auto [phi, psi] = construct_tournament_pair(gamma, tf, part1);
        mu = majority_from_tournament(phi, psi);
    } else {
        OperationTable mu1 = majority_from_arithmetical(construct_arithmetical(gamma, report));
        auto [phi, psi] = construct_tournament_pair(gamma, tf, part1);
        OperationTable mu2 = majority_from_tournament(phi, psi);
        for (std::size_t e = 0; e < mu.table.size(); ++e) {
            Tuple a = mu.args_of(e);
            int x = a[0], y = a[1], z = a[2];
            mu.table[e] = mu1.apply3(mu2.apply3(x, y, z), mu2.apply3(y, z, x), mu2.apply3(z, x, y));
        }
    }

    if (!is_majority(mu)) throw std::logic_error("constructed operation is not a majority");
    for (const auto& [name, r] : gamma.relations)
        if (!preserves(mu, r)) throw std::logic_error("constructed majority breaks relation " + name);
    return mu;
}

bool is_majority(const OperationTable& f) {
    if (f.arity != 3) return false;
    for (int x = 0; x < f.domain_size; ++x)
        for (int y = 0; y < f.domain_size; ++y)
            if (f.apply3(x, y, y) != y || f.apply3(y, x, y) != y || f.apply3(y, y, x) != y)
                return false;
    return true;
}

bool is_arithmetical_on_pair(const OperationTable& f, int a, int b) {
    if (f.arity != 3) return false;
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        if (f.apply3(x, x, y) != y || f.apply3(y, x, x) != y || f.apply3(y, x, y) != y)
            return false;
    return true;
}

}  // namespace minhom
