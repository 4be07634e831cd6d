#pragma once

#include <optional>
#include <vector>

#include "polycut/linalg.hpp"

namespace polycut {

namespace detail {

// Maximizes t subject to r_j . y >= t for every row and t <= 1, over free y
// and t >= 0. The optimum is positive exactly when the strict system
// r_j . y > 0 is solvable. Dense tableau simplex; Bland's least-index rule
// on both the entering and the leaving choice, so no cycling.
struct SlackLp {
    std::size_t dim = 0;                 // length of y
    std::vector<RatVector> rows;

    struct Result {
        Rational optimum;
        RatVector y;
    };

    Result solve() const {
        const std::size_t m = dim;
        const std::size_t n_rows = rows.size() + 1;       // strict rows plus t <= 1
        const std::size_t n_struct = 2 * m + 1;           // u, w, t
        const std::size_t n_cols = n_struct + n_rows + 1; // slacks and rhs
        const std::size_t t_col = 2 * m;
        const std::size_t rhs_col = n_cols - 1;

        // Row j:  t - r_j.u + r_j.w + s_j = 0.   Last row:  t + s = 1.
        std::vector<RatVector> tab(n_rows, RatVector(n_cols, Rational(0)));
        for (std::size_t j = 0; j < rows.size(); ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                tab[j][k] = -rows[j][k];
                tab[j][m + k] = rows[j][k];
            }
            tab[j][t_col] = 1;
            tab[j][n_struct + j] = 1;
        }
        tab[n_rows - 1][t_col] = 1;
        tab[n_rows - 1][n_struct + n_rows - 1] = 1;
        tab[n_rows - 1][rhs_col] = 1;

        RatVector obj(n_cols, Rational(0));
        obj[t_col] = 1;
        Rational value = 0;

        std::vector<std::size_t> basis(n_rows);
        for (std::size_t j = 0; j < n_rows; ++j) basis[j] = n_struct + j;

        while (true) {
            std::size_t enter = n_cols;
            for (std::size_t c = 0; c + 1 < n_cols; ++c) {
                if (obj[c] > 0) { enter = c; break; }
            }
            if (enter == n_cols) break;

            std::size_t leave = n_rows;
            Rational best;
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (tab[r][enter] <= 0) continue;
                const Rational ratio = tab[r][rhs_col] / tab[r][enter];
                if (leave == n_rows || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == n_rows)
                throw std::logic_error("slack LP reported unbounded despite t <= 1");

            const Rational piv = tab[leave][enter];
            for (std::size_t c = 0; c < n_cols; ++c) tab[leave][c] /= piv;
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (r == leave || tab[r][enter] == 0) continue;
                const Rational f = tab[r][enter];
                for (std::size_t c = 0; c < n_cols; ++c)
                    tab[r][c] -= f * tab[leave][c];
            }
            const Rational f = obj[enter];
            if (f != 0) {
                for (std::size_t c = 0; c < n_cols; ++c) obj[c] -= f * tab[leave][c];
                value += f * tab[leave][rhs_col];
            }
            basis[leave] = enter;
        }

        RatVector var(n_struct, Rational(0));
        for (std::size_t r = 0; r < n_rows; ++r)
            if (basis[r] < n_struct) var[basis[r]] = tab[r][rhs_col];
        RatVector y(m);
        for (std::size_t k = 0; k < m; ++k) y[k] = var[k] - var[m + k];
        return {value, std::move(y)};
    }
};

} // namespace detail

/// Exact strict feasibility: find c with c.v > 0 on `positive`, c.v < 0 on
/// `negative` and c.v = 0 on `zero`, or decide no such c exists. Equalities
/// are eliminated by projecting onto the nullspace of the zero set; the
/// remaining strict system is decided by the max-min-slack program above.
/// Returned witnesses are scaled to primitive integer vectors.
inline std::optional<RatVector> strict_feasibility(const std::vector<RatVector>& positive,
                                                   const std::vector<RatVector>& negative,
                                                   const std::vector<RatVector>& zero) {
    std::size_t n = 0;
    for (const auto* group : {&positive, &negative, &zero})
        for (const auto& v : *group) {
            if (n == 0) n = v.size();
            if (v.size() != n || v.empty())
                throw input_error("strict_feasibility: dimension mismatch");
        }
    if (n == 0) throw input_error("strict_feasibility: no constraints given");

    std::vector<RatVector> basis;
    if (zero.empty()) {
        basis.resize(n, RatVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    } else {
        basis = nullspace(RatMatrix(n, zero));
    }
    const std::size_t m = basis.size();
    if (m == 0) {
        if (positive.empty() && negative.empty()) return RatVector(n, Rational(0));
        return std::nullopt;
    }

    detail::SlackLp lp;
    lp.dim = m;
    const auto project = [&](const RatVector& v, int s) {
        RatVector row(m);
        for (std::size_t k = 0; k < m; ++k) row[k] = s * dot(v, basis[k]);
        return row;
    };
    for (const auto& v : positive) lp.rows.push_back(project(v, 1));
    for (const auto& v : negative) lp.rows.push_back(project(v, -1));

    const auto result = lp.solve();
    if (result.optimum <= 0) return std::nullopt;

    RatVector c(n, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
        if (result.y[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) c[i] += result.y[k] * basis[k][i];
    }
    c = primitive_integer_direction(c);

    for (const auto& v : positive)
        if (dot(c, v) <= 0) throw std::logic_error("strict_feasibility witness failed re-check");
    for (const auto& v : negative)
        if (dot(c, v) >= 0) throw std::logic_error("strict_feasibility witness failed re-check");
    for (const auto& v : zero)
        if (dot(c, v) != 0) throw std::logic_error("strict_feasibility witness failed re-check");
    return c;
}

} // namespace polycut
