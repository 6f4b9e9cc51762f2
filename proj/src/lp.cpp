#include "minhom/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace minhom {

namespace {

class Simplex {
public:
    // Row-major tableau rows[i] = (B^{-1}A | B^{-1}b); basis_[i] = basic column
    // of row i.  Columns: n_ originals, then slacks, then artificials.
    Simplex(const std::vector<std::vector<Rational>>& a_ub, const std::vector<Rational>& b_ub,
            const std::vector<std::vector<Rational>>& a_eq, const std::vector<Rational>& b_eq,
            std::size_t n)
        : n_(n), m_(a_ub.size() + a_eq.size()) {
        std::size_t slacks = a_ub.size();
        n_total_ = n_ + slacks + m_;  // one artificial per row, some unused
        rows_.assign(m_, std::vector<Rational>(n_total_ + 1, Rational(0)));
        basis_.assign(m_, 0);
        artificial_start_ = n_ + slacks;

        for (std::size_t i = 0; i < m_; ++i) {
            bool is_ub = i < a_ub.size();
            const auto& coeffs = is_ub ? a_ub[i] : a_eq[i - a_ub.size()];
            Rational rhs = is_ub ? b_ub[i] : b_eq[i - a_ub.size()];
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = coeffs[j];
            if (is_ub) rows_[i][n_ + i] = 1;
            if (rhs < Rational(0)) {
                for (auto& v : rows_[i]) v = -v;
                rhs = -rhs;
            }
            rows_[i][n_total_] = rhs;
            if (is_ub && rows_[i][n_ + i] == Rational(1)) {
                basis_[i] = n_ + i;  // slack starts basic
            } else {
                rows_[i][artificial_start_ + i] = 1;
                basis_[i] = artificial_start_ + i;
                has_artificial_ = true;
            }
        }
    }

    LPResult solve(const std::vector<Rational>& c) {
        if (has_artificial_) {
            std::vector<Rational> phase1(n_total_, Rational(0));
            for (std::size_t j = artificial_start_; j < n_total_; ++j) phase1[j] = 1;
            if (!optimize(phase1, /*allow_artificials=*/true))
                throw std::logic_error("phase-1 objective unbounded");
            if (objective(phase1) > Rational(0)) return {LPResult::Status::Infeasible, {}, {}};
            purge_artificials();
        }
        std::vector<Rational> cost(n_total_, Rational(0));
        for (std::size_t j = 0; j < n_ && j < c.size(); ++j) cost[j] = c[j];
        if (!optimize(cost, /*allow_artificials=*/false))
            return {LPResult::Status::Unbounded, {}, {}};
        LPResult r{LPResult::Status::Optimal, objective(cost), std::vector<Rational>(n_, Rational(0))};
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) r.x[basis_[i]] = rows_[i][n_total_];
        return r;
    }

private:
    std::size_t n_, m_, n_total_ = 0, artificial_start_ = 0;
    bool has_artificial_ = false;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;

    Rational objective(const std::vector<Rational>& cost) const {
        Rational v(0);
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rows_[i][n_total_];
        return v;
    }

    Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
        Rational v = cost[j];
        for (std::size_t i = 0; i < m_; ++i) v -= cost[basis_[i]] * rows_[i][j];
        return v;
    }

    void pivot(std::size_t r, std::size_t col) {
        Rational p = rows_[r][col];
        for (auto& v : rows_[r]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][col] == Rational(0)) continue;
            Rational f = rows_[i][col];
            for (std::size_t j = 0; j <= n_total_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        basis_[r] = col;
    }

    // Bland's rule minimization; false on unbounded.
    bool optimize(const std::vector<Rational>& cost, bool allow_artificials) {
        std::size_t limit = allow_artificials ? n_total_ : artificial_start_;
        for (;;) {
            std::size_t enter = n_total_;
            for (std::size_t j = 0; j < limit; ++j)
                if (reduced_cost(cost, j) < Rational(0)) { enter = j; break; }
            if (enter == n_total_) return true;
            std::size_t leave = m_;
            Rational best(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= Rational(0)) continue;
                Rational ratio = rows_[i][n_total_] / rows_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    // After phase 1 at objective 0: swap basic artificials for real columns,
    // or drop redundant rows.
    void purge_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < artificial_start_) continue;
            std::size_t col = artificial_start_;
            for (std::size_t j = 0; j < artificial_start_; ++j)
                if (rows_[i][j] != Rational(0)) { col = j; break; }
            if (col < artificial_start_) {
                pivot(i, col);
            } else {
                // Redundant row (all real coefficients zero, rhs zero too).
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
                --i;
            }
        }
    }
};

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rational>>& a_ub,
                  const std::vector<Rational>& b_ub,
                  const std::vector<std::vector<Rational>>& a_eq,
                  const std::vector<Rational>& b_eq, const std::vector<Rational>& c) {
    if (a_ub.size() != b_ub.size() || a_eq.size() != b_eq.size())
        throw std::invalid_argument("solve_lp: constraint matrix/vector size mismatch");
    std::size_t n = c.size();
    for (const auto& row : a_ub)
        if (row.size() != n) throw std::invalid_argument("solve_lp: row width mismatch");
    for (const auto& row : a_eq)
        if (row.size() != n) throw std::invalid_argument("solve_lp: row width mismatch");
    return Simplex(a_ub, b_ub, a_eq, b_eq, n).solve(c);
}

}  // namespace minhom
