#include "table_search.hpp"

#include <map>
#include <set>

namespace minhom::detail {

std::size_t table_entry_count(int arity, int domain_size) {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
    return n;
}

static Tuple entry_args(std::size_t idx, int arity, int domain_size) {
    Tuple t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % domain_size);
        idx /= static_cast<std::size_t>(domain_size);
    }
    return t;
}

std::vector<std::vector<int>> conservative_candidates(int arity, int domain_size) {
    std::size_t n = table_entry_count(arity, domain_size);
    std::vector<std::vector<int>> cand(n);
    for (std::size_t e = 0; e < n; ++e) {
        Tuple args = entry_args(e, arity, domain_size);
        std::set<int> vals(args.begin(), args.end());
        cand[e].assign(vals.begin(), vals.end());
    }
    return cand;
}

std::vector<std::vector<int>> unary_closed_candidates(int arity, const ConstraintLanguage& gamma) {
    int d = gamma.domain_size;
    std::size_t n = table_entry_count(arity, d);
    std::vector<std::vector<int>> cand(n);
    std::vector<int> all(d);
    for (int v = 0; v < d; ++v) all[v] = v;
    for (std::size_t e = 0; e < n; ++e) cand[e] = all;

    for (const auto& [name, rho] : gamma.relations) {
        if (rho.arity != 1) continue;
        std::vector<bool> in(d, false);
        for (const auto& t : rho.tuples) in[t[0]] = true;
        for (std::size_t e = 0; e < n; ++e) {
            Tuple args = entry_args(e, arity, d);
            bool all_in = true;
            for (int a : args)
                if (!in[a]) { all_in = false; break; }
            if (!all_in) continue;
            std::erase_if(cand[e], [&](int v) { return !in[v]; });
        }
    }
    return cand;
}

TableSearch::TableSearch(int arity, int domain_size, std::vector<std::vector<int>> candidates,
                         const std::vector<const Relation*>& relations)
    : arity_(arity), domain_(domain_size), cand_(std::move(candidates)) {
    std::size_t n = table_entry_count(arity_, domain_);
    assign_.assign(n, -1);

    // Unary relations are already folded into the candidate sets; higher-arity
    // relations generate one constraint per choice of arity_-many tuples.
    std::set<std::pair<std::vector<std::size_t>, const Relation*>> seen;
    for (const Relation* rho : relations) {
        if (rho->arity < 2 || rho->tuples.empty()) continue;
        std::size_t t = rho->tuples.size();
        std::vector<std::size_t> pick(arity_, 0);
        for (;;) {
            std::vector<std::size_t> entries(rho->arity);
            for (int coord = 0; coord < rho->arity; ++coord) {
                std::size_t idx = 0;
                for (int i = 0; i < arity_; ++i)
                    idx = idx * static_cast<std::size_t>(domain_) +
                          static_cast<std::size_t>(rho->tuples[pick[i]][coord]);
                entries[coord] = idx;
            }
            if (seen.emplace(entries, rho).second)
                constraints_.push_back({std::move(entries), rho});
            int i = arity_ - 1;
            while (i >= 0 && pick[i] + 1 == t) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
    }

    touching_.assign(n, {});
    for (std::size_t cid = 0; cid < constraints_.size(); ++cid) {
        std::set<std::size_t> es(constraints_[cid].entries.begin(), constraints_[cid].entries.end());
        for (std::size_t e : es) touching_[e].push_back(cid);
    }
}

bool TableSearch::prescribe(std::size_t entry, int value) {
    auto& c = cand_[entry];
    if (std::find(c.begin(), c.end(), value) == c.end()) return false;
    c.assign(1, value);
    return true;
}

bool TableSearch::consistent_at(std::size_t cid) const {
    const auto& con = constraints_[cid];
    int m = con.rho->arity;
    Tuple out(m);
    int open = -1;
    for (int i = 0; i < m; ++i) {
        int v = assign_[con.entries[i]];
        if (v < 0) {
            if (open >= 0 && con.entries[i] != con.entries[open]) return true;  // two open entries
            open = i;
        }
        out[i] = v;
    }
    if (open < 0) return con.rho->contains(out);
    // Exactly one open entry (possibly at several coordinates): some candidate
    // value must complete the tuple.
    std::size_t oe = con.entries[open];
    for (int v : cand_[oe]) {
        Tuple trial = out;
        for (int i = 0; i < m; ++i)
            if (con.entries[i] == oe) trial[i] = v;
        if (con.rho->contains(trial)) return true;
    }
    return false;
}

bool TableSearch::dfs(std::size_t pos) {
    if (pos == order_.size()) return true;
    std::size_t e = order_[pos];
    for (int v : cand_[e]) {
        assign_[e] = v;
        bool ok = true;
        for (std::size_t cid : touching_[e])
            if (!consistent_at(cid)) { ok = false; break; }
        if (ok && dfs(pos + 1)) return true;
        assign_[e] = -1;
    }
    return false;
}

std::optional<OperationTable> TableSearch::find() {
    std::size_t n = assign_.size();
    order_.clear();
    for (std::size_t e = 0; e < n; ++e) {
        if (cand_[e].empty()) return std::nullopt;
        order_.push_back(e);
    }
    // Tightest entries first; among equals keep table order for determinism.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return cand_[a].size() < cand_[b].size();
    });
    if (!dfs(0)) return std::nullopt;
    OperationTable f(arity_, domain_);
    f.table = assign_;
    return f;
}

}  // namespace minhom::detail
