#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "polycut/lp.hpp"

namespace polycut {

/// Per-vertex signs of a hyperplane evaluation, values in {-1, 0, +1}.
using SignPattern = std::vector<std::int8_t>;

inline SignPattern negated(SignPattern p) {
    for (auto& s : p) s = static_cast<std::int8_t>(-s);
    return p;
}

/// Canonical representative of the unordered decomposition: the
/// lexicographically smaller of a pattern and its negation.
inline SignPattern normalized(const SignPattern& p) {
    SignPattern neg = negated(p);
    return std::min(p, neg);
}

struct Hyperplane {
    RatVector coeffs;
    Rational rhs;

    Hyperplane(RatVector c, Rational r) : coeffs(std::move(c)), rhs(std::move(r)) {
        if (is_zero_vector(coeffs))
            throw input_error("hyperplane coefficients must not all be zero");
    }

    Hyperplane negated_form() const {
        RatVector c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = -coeffs[i];
        return Hyperplane(std::move(c), -rhs);
    }
};

/// A polytope given by its labeled integral vertices and skeleton edges.
struct SkeletonModel {
    std::vector<RatVector> vertices;
    std::vector<std::pair<int, int>> edges; // each pair sorted, list deduplicated
    std::size_t dim = 0;                    // affine dimension of the vertex set

    static SkeletonModel create(std::vector<RatVector> vertices,
                                std::vector<std::pair<int, int>> edges,
                                bool validate = true) {
        SkeletonModel m;
        m.vertices = std::move(vertices);
        m.edges = std::move(edges);
        if (m.vertices.empty()) throw input_error("model needs at least one vertex");
        const std::size_t n = m.vertices.front().size();
        for (auto& e : m.edges) {
            if (e.first > e.second) std::swap(e.first, e.second);
            if (e.first == e.second || e.first < 0 ||
                e.second >= static_cast<int>(m.vertices.size()))
                throw input_error("edge references invalid vertex indices");
        }
        if (validate) {
            for (const auto& v : m.vertices) {
                if (v.size() != n) throw input_error("vertices of mixed dimension");
                for (const auto& x : v)
                    if (!is_integer(x)) throw input_error("vertices must be integral");
            }
            std::vector<const RatVector*> ptrs;
            ptrs.reserve(m.vertices.size());
            for (const auto& v : m.vertices) ptrs.push_back(&v);
            std::sort(ptrs.begin(), ptrs.end(),
                      [](const RatVector* a, const RatVector* b) { return *a < *b; });
            for (std::size_t i = 1; i < ptrs.size(); ++i)
                if (*ptrs[i] == *ptrs[i - 1]) throw input_error("duplicate vertices");
            std::set<std::pair<int, int>> seen(m.edges.begin(), m.edges.end());
            if (seen.size() != m.edges.size()) throw input_error("duplicate edges");
        }
        m.dim = affine_dimension(m.vertices);
        return m;
    }
};

enum class WitnessKind { none, bad_edge, no_positive_vertex, no_negative_vertex };

struct CutReport {
    bool separating = false;
    SignPattern pattern;
    WitnessKind witness = WitnessKind::none;
    int edge_i = -1, edge_j = -1; // set for bad_edge witnesses
};

/// Exact signs of coeffs . v - rhs over the model's vertices.
inline SignPattern evaluate(const SkeletonModel& model, const Hyperplane& h) {
    SignPattern out;
    out.reserve(model.vertices.size());
    for (const auto& v : model.vertices) {
        if (v.size() != h.coeffs.size())
            throw input_error("hyperplane dimension does not match model");
        out.push_back(static_cast<std::int8_t>(sign_of(dot(h.coeffs, v) - h.rhs)));
    }
    return out;
}

/// Decides the cut from a precomputed pattern. Separating means strict signs
/// occur on both sides and no edge joins strictly opposite signs; the witness
/// is the first failure in vertex/edge order.
inline CutReport report_from_pattern(const SkeletonModel& model, SignPattern pattern) {
    CutReport rep;
    rep.pattern = std::move(pattern);
    bool has_pos = false, has_neg = false;
    for (const auto s : rep.pattern) {
        has_pos |= s > 0;
        has_neg |= s < 0;
    }
    if (!has_pos) {
        rep.witness = WitnessKind::no_positive_vertex;
        return rep;
    }
    if (!has_neg) {
        rep.witness = WitnessKind::no_negative_vertex;
        return rep;
    }
    for (const auto& [i, j] : model.edges) {
        if (static_cast<int>(rep.pattern[i]) * rep.pattern[j] < 0) {
            rep.witness = WitnessKind::bad_edge;
            rep.edge_i = i;
            rep.edge_j = j;
            return rep;
        }
    }
    rep.separating = true;
    return rep;
}

inline CutReport is_separating(const SkeletonModel& model, const Hyperplane& h) {
    return report_from_pattern(model, evaluate(model, h));
}

/// True iff conv(v_i, v_j) is an edge of conv(vertices): some linear
/// functional is maximized exactly at the pair. Decided by exact strict
/// feasibility on difference vectors against v_i.
inline bool edge_oracle(const std::vector<RatVector>& vertices, int i, int j) {
    if (i == j) throw input_error("edge_oracle needs two distinct indices");
    const RatVector& vi = vertices[i];
    const std::size_t n = vi.size();
    std::vector<RatVector> zero, negative;
    {
        RatVector d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = vertices[j][c] - vi[c];
        zero.push_back(std::move(d));
    }
    for (int w = 0; w < static_cast<int>(vertices.size()); ++w) {
        if (w == i || w == j) continue;
        RatVector d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = vertices[w][c] - vi[c];
        negative.push_back(std::move(d));
    }
    return strict_feasibility({}, negative, zero).has_value();
}

namespace detail {

inline std::size_t binomial_guarded(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        if (result > std::numeric_limits<std::size_t>::max() / (n - k + i)) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return result > cap ? cap + 1 : result;
}

// Coordinates of every vertex in an affine basis of the vertex set, so the
// candidate enumeration below works for models embedded in higher dimension.
inline std::vector<RatVector> affine_coordinates(const std::vector<RatVector>& vertices,
                                                 std::size_t dim) {
    const std::size_t n = vertices.front().size();
    RatMatrix basis(n);
    RatMatrix probe(n);
    for (std::size_t i = 1; i < vertices.size() && basis.rows.size() < dim; ++i) {
        RatVector d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = vertices[i][c] - vertices[0][c];
        probe.add_row(d);
        if (rank(probe) == basis.rows.size() + 1)
            basis.add_row(std::move(d));
        else
            probe.rows.pop_back();
    }
    // Columns of the solve system are the basis difference vectors.
    RatMatrix system(dim, std::vector<RatVector>(n, RatVector(dim)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < dim; ++k) system.rows[r][k] = basis.rows[k][r];
    std::vector<RatVector> coords;
    coords.reserve(vertices.size());
    for (const auto& v : vertices) {
        RatVector rhs(n);
        for (std::size_t c = 0; c < n; ++c) rhs[c] = v[c] - vertices[0][c];
        auto y = solve(system, rhs);
        if (!y) throw std::logic_error("vertex outside its own affine hull");
        coords.push_back(std::move(*y));
    }
    return coords;
}

} // namespace detail

/// Independent oracle: every separating hyperplane's decomposition, found by
/// enumerating hyperplanes spanned by affinely independent dim-subsets of
/// vertices. Patterns are normalized and returned sorted.
inline std::vector<SignPattern> enumerate_cuts_oracle(const SkeletonModel& model) {
    const std::size_t d = model.dim;
    if (d < 2) throw input_error("enumerate_cuts_oracle needs affine dimension >= 2");
    const std::size_t nverts = model.vertices.size();
    if (detail::binomial_guarded(nverts, d, guard_limit()) > guard_limit())
        throw resource_error("candidate hyperplane count exceeds guard");

    const std::vector<RatVector> coords = detail::affine_coordinates(model.vertices, d);

    std::set<SignPattern> found;
    std::vector<std::size_t> subset(d);
    for (std::size_t i = 0; i < d; ++i) subset[i] = i;
    const auto advance = [&]() -> bool {
        std::size_t i = d;
        while (i-- > 0) {
            if (subset[i] + (d - i) <= nverts - 1) {
                ++subset[i];
                for (std::size_t j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        // Hyperplane through the subset in affine coordinates: rows (y, -1).
        RatMatrix sys(d + 1);
        for (std::size_t s : subset) {
            RatVector row = coords[s];
            row.push_back(Rational(-1));
            sys.add_row(std::move(row));
        }
        const auto basis = nullspace(std::move(sys));
        if (basis.size() != 1) continue; // not affinely independent
        const RatVector& cand = basis.front();
        bool linear_part_zero = true;
        for (std::size_t k = 0; k < d && linear_part_zero; ++k)
            linear_part_zero = cand[k] == 0;
        if (linear_part_zero) continue;

        SignPattern pattern;
        pattern.reserve(nverts);
        for (const auto& y : coords) {
            Rational val = -cand[d];
            for (std::size_t k = 0; k < d; ++k)
                if (cand[k] != 0 && y[k] != 0) val += cand[k] * y[k];
            pattern.push_back(static_cast<std::int8_t>(sign_of(val)));
        }
        CutReport rep = report_from_pattern(model, std::move(pattern));
        if (rep.separating) found.insert(normalized(rep.pattern));
    } while (advance());

    return {found.begin(), found.end()};
}

} // namespace polycut
