#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lfmd/rational.hpp"

namespace lfmd {

/// Covering LP in the fixed shape used throughout:
///   minimize  sum_j x_j
///   s.t.      sum_{j in rows[i]} x_j >= 1   for every row i
///             0 <= x_j <= 1
/// Rows hold sorted variable indices; callers deduplicate.
struct CoveringLp {
    int num_vars = 0;
    std::vector<std::vector<int>> rows;
};

enum class LpStatus { Optimal, Empty };

struct LpSolution {
    LpStatus status = LpStatus::Empty;
    Rational value;
    std::vector<Rational> primal;      // x_j, one per variable
    std::vector<Rational> dual;        // y_i >= 0, one per covering row
    std::vector<Rational> bound_dual;  // w_j >= 0, multipliers of x_j <= 1
};

/// Exact primal simplex for the covering LP, Bland's pivoting rule, bounded
/// variables. Equality form: -Ax + s = -1 with surplus s >= 0; the all-ones
/// point is feasible at the initial surplus basis, so no phase 1 is needed.
class CoveringSimplex {
public:
    explicit CoveringSimplex(const CoveringLp& lp) : lp_(lp) {}

    LpSolution solve() {
        const int n = lp_.num_vars;
        const int m = static_cast<int>(lp_.rows.size());
        if (m == 0) {
            LpSolution s;
            s.status = LpStatus::Empty;
            s.value = 0;
            s.primal.assign(n, Rational(0));
            s.bound_dual.assign(n, Rational(0));
            return s;
        }
        for (const auto& row : lp_.rows)
            if (row.empty()) throw std::logic_error("empty covering row is infeasible");

        const int ncols = n + m;
        tab_.assign(m, std::vector<Rational>(ncols, Rational(0)));
        for (int i = 0; i < m; ++i) {
            for (int j : lp_.rows[i]) tab_[i][j] = -1;
            tab_[i][n + i] = 1;
        }
        val_.assign(ncols, Rational(0));
        red_.assign(ncols, Rational(0));
        basis_.assign(m, 0);
        row_of_.assign(ncols, -1);
        at_upper_.assign(ncols, false);
        obj_ = 0;
        for (int j = 0; j < n; ++j) {
            val_[j] = 1;
            at_upper_[j] = true;
            red_[j] = 1;
            obj_ += 1;
        }
        for (int i = 0; i < m; ++i) {
            basis_[i] = n + i;
            row_of_[n + i] = i;
            val_[n + i] = static_cast<int>(lp_.rows[i].size()) - 1;
        }

        while (step(n)) {
        }

        LpSolution s;
        s.status = LpStatus::Optimal;
        s.value = obj_;
        s.primal.assign(val_.begin(), val_.begin() + n);
        s.dual.assign(m, Rational(0));
        for (int i = 0; i < m; ++i) s.dual[i] = red_[n + i];
        s.bound_dual.assign(n, Rational(0));
        for (int j = 0; j < n; ++j)
            if (red_[j] < 0) s.bound_dual[j] = -red_[j];
        return s;
    }

private:
    // One simplex iteration; false when optimal.
    bool step(int n) {
        const int m = static_cast<int>(basis_.size());
        const int ncols = n + m;

        // Bland: lowest-index eligible nonbasic column.
        int enter = -1;
        for (int j = 0; j < ncols; ++j) {
            if (row_of_[j] >= 0) continue;
            if (at_upper_[j] ? red_[j] > 0 : red_[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;

        const int sigma = at_upper_[enter] ? -1 : 1;  // direction of val[enter]

        // Ratio test: basic variables move by -sigma * t * tab[i][enter].
        bool limited = enter < n;  // x vars can flip to the opposite bound
        Rational tmax = 1;         // flip distance for x; s has no upper bound
        int leave_row = -1;
        Rational best = tmax;
        bool have_row_limit = false;
        for (int i = 0; i < m; ++i) {
            const Rational& w = tab_[i][enter];
            if (w == 0) continue;
            Rational delta = -sigma * w;  // d(val[basis_i]) / dt
            Rational lim;
            if (delta < 0) {
                lim = val_[basis_[i]] / -delta;  // lower bound 0
            } else if (basis_[i] < n) {
                lim = (1 - val_[basis_[i]]) / delta;  // upper bound 1
            } else {
                continue;  // surplus, unbounded above
            }
            bool better;
            if (!have_row_limit)
                better = !limited || lim < best;
            else
                better = lim < best || (lim == best && basis_[i] < basis_[leave_row]);
            if (better) {
                best = lim;
                leave_row = i;
                have_row_limit = true;
            }
        }

        if (!have_row_limit) {
            if (!limited) throw std::logic_error("covering LP cannot be unbounded");
            // Bound flip: entering variable crosses to its other bound.
            apply_shift(enter, sigma, tmax, m);
            at_upper_[enter] = !at_upper_[enter];
            return true;
        }
        if (limited && tmax < best) {
            apply_shift(enter, sigma, tmax, m);
            at_upper_[enter] = !at_upper_[enter];
            return true;
        }

        apply_shift(enter, sigma, best, m);
        pivot(leave_row, enter, n, ncols);
        return true;
    }

    void apply_shift(int enter, int sigma, const Rational& t, int m) {
        if (t == 0) return;
        Rational dv = Rational(sigma) * t;
        val_[enter] += dv;
        obj_ += red_[enter] * dv;
        for (int i = 0; i < m; ++i)
            if (tab_[i][enter] != 0) val_[basis_[i]] -= dv * tab_[i][enter];
    }

    void pivot(int r, int enter, int n, int ncols) {
        int leaving = basis_[r];
        at_upper_[leaving] = leaving < n && val_[leaving] == 1;
        row_of_[leaving] = -1;
        basis_[r] = enter;
        row_of_[enter] = r;
        at_upper_[enter] = false;

        std::vector<Rational>& prow = tab_[r];
        Rational piv = prow[enter];
        for (auto& e : prow)
            if (e != 0) e /= piv;
        prow[enter] = 1;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            Rational f = tab_[i][enter];
            if (f == 0) continue;
            auto& row = tab_[i];
            for (int j = 0; j < ncols; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
            row[enter] = 0;
        }
        Rational f = red_[enter];
        if (f != 0) {
            for (int j = 0; j < ncols; ++j)
                if (prow[j] != 0) red_[j] -= f * prow[j];
            red_[enter] = 0;
        }
    }

    const CoveringLp& lp_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> val_;   // current value of every variable
    std::vector<Rational> red_;   // reduced costs
    std::vector<int> basis_;      // variable index per row
    std::vector<int> row_of_;     // row per variable, -1 if nonbasic
    std::vector<char> at_upper_;  // nonbasic-at-upper flag
    Rational obj_;
};

inline LpSolution solve_covering_lp(const CoveringLp& lp) { return CoveringSimplex(lp).solve(); }

/// Independent optimality check: primal feasibility, dual feasibility for
///   max sum_i y_i - sum_j w_j  s.t.  (A^T y - w)_j <= 1,  y, w >= 0,
/// and exact equality of the two objectives.
inline bool verify_certificate(const CoveringLp& lp, const LpSolution& s) {
    const int n = lp.num_vars;
    if (s.status == LpStatus::Empty)
        return lp.rows.empty() && s.value == 0;
    if (static_cast<int>(s.primal.size()) != n) return false;
    if (s.dual.size() != lp.rows.size()) return false;
    if (static_cast<int>(s.bound_dual.size()) != n) return false;

    Rational primal_obj = 0;
    for (const auto& x : s.primal) {
        if (x < 0 || x > 1) return false;
        primal_obj += x;
    }
    for (const auto& row : lp.rows) {
        Rational sum = 0;
        for (int j : row) sum += s.primal[j];
        if (sum < 1) return false;
    }

    Rational dual_obj = 0;
    for (const auto& y : s.dual) {
        if (y < 0) return false;
        dual_obj += y;
    }
    std::vector<Rational> col_sum(n, Rational(0));
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        for (int j : lp.rows[i]) col_sum[j] += s.dual[i];
    for (int j = 0; j < n; ++j) {
        if (s.bound_dual[j] < 0) return false;
        if (col_sum[j] - s.bound_dual[j] > 1) return false;
        dual_obj -= s.bound_dual[j];
    }
    return primal_obj == dual_obj && primal_obj == s.value;
}

}  // namespace lfmd
