#pragma once

// Exact linear programming over the rationals. Constraint system is
// A x <= b with x free; variables are split into positive parts internally
// and a two-phase simplex with Bland's rule runs on the exact tableau, so
// termination is guaranteed and every reported optimum is exact.

#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class LpSense { Maximize, Minimize };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    RVec point;       // valid iff status == Optimal
    Rational value;   // objective at `point`
};

namespace detail {

// Dense tableau for  max c^T y  s.t.  E y = d,  y >= 0,  d >= 0 maintained.
struct Tableau {
    RMat a;                     // rows x cols
    RVec rhs;                   // >= 0 throughout
    std::vector<Eigen::Index> basis;

    void pivot(Eigen::Index row, Eigen::Index col)
    {
        const Rational p = a(row, col);
        a.row(row) /= p;
        rhs(row) /= p;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            a.row(r) -= f * a.row(row);
            rhs(r) -= f * rhs(row);
        }
        basis[static_cast<size_t>(row)] = col;
    }
};

// Bland's rule: entering = lowest-index improving column, leaving = lowest
// basic index among minimal ratios. Returns false iff unbounded.
inline bool simplex_max(Tableau& tab, const RVec& cost, Eigen::Index n_allowed)
{
    const Eigen::Index rows = tab.a.rows();
    for (;;) {
        // Reduced costs against the current basis.
        Eigen::Index entering = -1;
        for (Eigen::Index j = 0; j < n_allowed; ++j) {
            Rational rc = cost(j);
            for (Eigen::Index i = 0; i < rows; ++i) {
                const Eigen::Index bi = tab.basis[static_cast<size_t>(i)];
                if (tab.a(i, j) != 0 && cost(bi) != 0) rc -= cost(bi) * tab.a(i, j);
            }
            if (rc > 0) { entering = j; break; }
        }
        if (entering < 0) return true;

        Eigen::Index leaving = -1;
        Rational best_ratio;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (tab.a(i, entering) <= 0) continue;
            const Rational ratio = tab.rhs(i) / tab.a(i, entering);
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 tab.basis[static_cast<size_t>(i)] < tab.basis[static_cast<size_t>(leaving)])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) return false;
        tab.pivot(leaving, entering);
    }
}

}  // namespace detail

inline LpOutcome lp_solve(const RMat& a, const RVec& b, const RVec& obj, LpSense sense)
{
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (b.size() != m || obj.size() != n)
        throw InputError("lp_solve: inconsistent dimensions");

    const RVec c = sense == LpSense::Maximize ? obj : RVec(-obj);

    // Columns: y+ (n), y- (n), slacks (m), artificials (m).
    const Eigen::Index n_split = 2 * n;
    const Eigen::Index n_real = n_split + m;
    const Eigen::Index n_total = n_real + m;

    detail::Tableau tab;
    tab.a = RMat::Zero(m, n_total);
    tab.rhs = RVec::Zero(m);
    tab.basis.assign(static_cast<size_t>(m), -1);

    Eigen::Index n_artificial = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const Rational sign = b(i) < 0 ? Rational(-1) : Rational(1);
        for (Eigen::Index j = 0; j < n; ++j) {
            tab.a(i, j) = sign * a(i, j);
            tab.a(i, n + j) = -sign * a(i, j);
        }
        tab.a(i, n_split + i) = sign;  // slack
        tab.rhs(i) = sign * b(i);
        if (sign > 0) {
            tab.basis[static_cast<size_t>(i)] = n_split + i;
        } else {
            tab.a(i, n_real + i) = 1;  // artificial
            tab.basis[static_cast<size_t>(i)] = n_real + i;
            ++n_artificial;
        }
    }

    if (n_artificial > 0) {
        RVec phase1 = RVec::Zero(n_total);
        for (Eigen::Index i = 0; i < m; ++i)
            if (tab.basis[static_cast<size_t>(i)] >= n_real) phase1(n_real + i) = -1;
        detail::simplex_max(tab, phase1, n_total);  // bounded by construction

        Rational attained = 0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const Eigen::Index bi = tab.basis[static_cast<size_t>(i)];
            if (bi >= n_real) attained -= tab.rhs(i);
        }
        if (attained != 0) return {LpStatus::Infeasible, {}, {}};

        // Drive remaining (zero-valued) artificials out of the basis.
        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab.basis[static_cast<size_t>(i)] < n_real) continue;
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < n_real; ++j)
                if (tab.a(i, j) != 0) { col = j; break; }
            if (col >= 0) tab.pivot(i, col);
            // All-zero row: redundant constraint, artificial stays basic at 0
            // and is simply never allowed to enter again.
        }
    }

    RVec phase2 = RVec::Zero(n_total);
    for (Eigen::Index j = 0; j < n; ++j) {
        phase2(j) = c(j);
        phase2(n + j) = -c(j);
    }
    if (!detail::simplex_max(tab, phase2, n_real))
        return {LpStatus::Unbounded, {}, {}};

    RVec y = RVec::Zero(n_total);
    for (Eigen::Index i = 0; i < m; ++i)
        y(tab.basis[static_cast<size_t>(i)]) = tab.rhs(i);

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.point = RVec::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) out.point(j) = y(j) - y(n + j);
    out.value = obj.dot(out.point);
    return out;
}

// Feasibility of A x <= b with x free.
inline bool lp_feasible(const RMat& a, const RVec& b)
{
    return lp_solve(a, b, RVec::Zero(a.cols()), LpSense::Maximize).status == LpStatus::Optimal;
}

}  // namespace setopt
