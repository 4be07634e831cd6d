#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycut/rational.hpp"

namespace polycut {

using RatVector = std::vector<Rational>;

/// Dense rational matrix. Rectangular by construction; an explicit column
/// count keeps zero-row matrices meaningful.
struct RatMatrix {
    std::size_t cols = 0;
    std::vector<RatVector> rows;

    RatMatrix() = default;
    explicit RatMatrix(std::size_t columns) : cols(columns) {}
    RatMatrix(std::size_t columns, std::vector<RatVector> r)
        : cols(columns), rows(std::move(r)) {
        for (const auto& row : rows)
            if (row.size() != cols) throw input_error("ragged matrix rows");
    }

    static RatMatrix from_rows(std::vector<RatVector> r) {
        if (r.empty()) throw input_error("cannot infer column count of an empty matrix");
        return RatMatrix(r.front().size(), std::move(r));
    }

    void add_row(RatVector row) {
        if (row.size() != cols) throw input_error("ragged matrix rows");
        rows.push_back(std::move(row));
    }
};

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw input_error("dimension mismatch in dot product");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

inline bool is_zero_vector(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// In-place reduced row echelon form. Pivots are chosen by least row index,
/// so the result is deterministic. Returns the pivot column per pivot row.
inline std::vector<std::size_t> rref_inplace(RatMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows.size() && m.rows[r][col] == 0) ++r;
        if (r == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[pivot_row]);
        const Rational inv = 1 / m.rows[pivot_row][col];
        for (std::size_t c = col; c < m.cols; ++c) m.rows[pivot_row][c] *= inv;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i == pivot_row || m.rows[i][col] == 0) continue;
            const Rational f = m.rows[i][col];
            for (std::size_t c = col; c < m.cols; ++c)
                m.rows[i][c] -= f * m.rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

inline std::size_t rank(RatMatrix m) { return rref_inplace(m).size(); }

/// Basis of {x : m x = 0} in the canonical form read off the reduced echelon
/// form: one vector per free column, with a unit entry in that column.
inline std::vector<RatVector> nullspace(RatMatrix m) {
    const std::size_t n = m.cols;
    const std::vector<std::size_t> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    basis.reserve(n - pivots.size());
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.rows[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True iff the points span an affine subspace of dimension count-1.
inline bool affinely_independent(const std::vector<RatVector>& points) {
    if (points.empty()) throw input_error("affinely_independent needs at least one point");
    const std::size_t n = points.front().size();
    RatMatrix diffs(n);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != n) throw input_error("dimension mismatch among points");
        RatVector row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = points[i][c] - points[0][c];
        diffs.add_row(std::move(row));
    }
    return rank(std::move(diffs)) == points.size() - 1;
}

/// Affine dimension of a point set (dimension of its affine hull).
/// Incremental elimination, so large vertex sets stay linear in their size.
inline std::size_t affine_dimension(const std::vector<RatVector>& points) {
    if (points.empty()) return 0;
    const std::size_t n = points.front().size();
    std::vector<RatVector> basis;
    std::vector<std::size_t> pivot;
    for (std::size_t i = 1; i < points.size() && basis.size() < n; ++i) {
        RatVector row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = points[i][c] - points[0][c];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (row[pivot[k]] == 0) continue;
            const Rational f = row[pivot[k]] / basis[k][pivot[k]];
            for (std::size_t c = 0; c < n; ++c)
                if (basis[k][c] != 0) row[c] -= f * basis[k][c];
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c] != 0) {
                pivot.push_back(c);
                basis.push_back(std::move(row));
                break;
            }
        }
    }
    return basis.size();
}

/// Solves m x = rhs. Returns one solution, or nothing when inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs) {
    if (rhs.size() != m.rows.size()) throw input_error("solve: rhs size mismatch");
    RatMatrix aug(m.cols + 1);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        RatVector row = m.rows[i];
        row.push_back(rhs[i]);
        aug.add_row(std::move(row));
    }
    const std::vector<std::size_t> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    RatVector x(m.cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.rows[i][m.cols];
    return x;
}

/// Rescales to the collinear integer vector with coprime entries, keeping
/// orientation. Zero vectors pass through unchanged.
inline RatVector primitive_integer_direction(const RatVector& v) {
    BigInt lcm_den = 1;
    for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    BigInt gcd_num = 0;
    std::vector<BigInt> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
    }
    if (gcd_num == 0) return v;
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(scaled[i] / gcd_num);
    return out;
}

} // namespace polycut
