#pragma once

#include <optional>
#include <set>
#include <vector>

#include "polycut/skeleton.hpp"

namespace polycut {

/// Canonical form x_1 + ... + x_k <= ell of a one-cut subpolytope of the
/// d-cube, with 2 <= k <= d and 1 <= ell < k.
struct CubeCutForm {
    int k = 0;
    int ell = 0;

    CubeCutForm(int k_, int ell_) : k(k_), ell(ell_) {
        if (k < 2 || ell < 1 || ell >= k) throw input_error("invalid cube cut form");
    }

    /// The form of the opposite half, reached by flipping every coordinate.
    CubeCutForm complement() const { return CubeCutForm(k, k - ell); }

    bool operator==(const CubeCutForm&) const = default;
};

/// A hyperplane sum_I x_i - sum_J x_j = h over disjoint nonempty index sets,
/// with 0 <= h < |I|. Indices are 1-based.
struct SecondCutSpec {
    std::vector<int> I;
    std::vector<int> J;
    int h = 0;
};

inline void validate_spec(int d, const SecondCutSpec& spec) {
    if (spec.I.empty() || spec.J.empty())
        throw input_error("second cut spec needs nonempty I and J");
    std::set<int> seen;
    for (const auto* side : {&spec.I, &spec.J})
        for (int idx : *side) {
            if (idx < 1 || idx > d) throw input_error("second cut index out of range");
            if (!seen.insert(idx).second) throw input_error("I and J must be disjoint");
        }
    if (spec.h < 0 || spec.h >= static_cast<int>(spec.I.size()))
        throw input_error("second cut offset must satisfy 0 <= h < |I|");
}

inline Hyperplane spec_hyperplane(int d, const SecondCutSpec& spec) {
    RatVector coeffs(d, Rational(0));
    for (int i : spec.I) coeffs[i - 1] = 1;
    for (int j : spec.J) coeffs[j - 1] = -1;
    return Hyperplane(std::move(coeffs), Rational(spec.h));
}

/// The unit cube: 2^d vertices in lexicographic order, edges between
/// vertices differing in one coordinate.
inline SkeletonModel cube_model(int d) {
    if (d < 2 || d > 20) throw input_error("cube dimension must be in [2, 20]");
    const std::size_t n = std::size_t(1) << d;
    std::vector<RatVector> vertices(n, RatVector(d));
    for (std::size_t v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j)
            vertices[v][j] = Rational((v >> (d - 1 - j)) & 1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n / 2 * d);
    for (std::size_t v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            const std::size_t u = v ^ (std::size_t(1) << b);
            if (u > v) edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
        }
    return SkeletonModel::create(std::move(vertices), std::move(edges), false);
}

/// Whether coeffs . x = 0 separates the cube: some positive and some
/// negative coefficient, and all nonzero coefficients of equal absolute value.
inline bool origin_cut_criterion(const RatVector& coeffs) {
    if (is_zero_vector(coeffs)) throw input_error("all-zero coefficient vector");
    bool has_pos = false, has_neg = false;
    Rational unit;
    for (const auto& a : coeffs) {
        if (a == 0) continue;
        has_pos |= a > 0;
        has_neg |= a < 0;
        const Rational mag = abs(a);
        if (unit == 0)
            unit = mag;
        else if (mag != unit)
            return false;
    }
    return has_pos && has_neg;
}

namespace detail {

struct SeparatingForm {
    std::vector<int> I, J; // 1-based indices of +1 and -1 after rescaling
    Rational scaled_rhs;   // rhs divided by the common coefficient magnitude
};

// Rescales by the common positive magnitude and splits the support by sign.
// Empty result means the nonzero coefficients do not share one magnitude.
inline std::optional<SeparatingForm> split_by_sign(const RatVector& coeffs,
                                                   const Rational& rhs) {
    SeparatingForm f;
    Rational unit;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Rational mag = abs(coeffs[i]);
        if (unit == 0)
            unit = mag;
        else if (mag != unit)
            return std::nullopt;
        (coeffs[i] > 0 ? f.I : f.J).push_back(static_cast<int>(i) + 1);
    }
    if (unit == 0) return std::nullopt;
    f.scaled_rhs = rhs / unit;
    return f;
}

} // namespace detail

/// Recognizer for the general separating form sum_I x - sum_J x = h with
/// both sides nonempty and integer 0 <= h < |I|. Rejection is a value.
inline std::optional<SecondCutSpec> recognize_second_cut_form(const RatVector& coeffs,
                                                              const Rational& rhs) {
    const auto f = detail::split_by_sign(coeffs, rhs);
    if (!f || f->I.empty() || f->J.empty()) return std::nullopt;
    if (!is_integer(f->scaled_rhs)) return std::nullopt;
    const BigInt h = numerator(f->scaled_rhs);
    if (h < 0 || h >= f->I.size()) return std::nullopt;
    SecondCutSpec spec;
    spec.I = f->I;
    spec.J = f->J;
    spec.h = static_cast<int>(h);
    return spec;
}

/// Canonical (k, ell) of a separating hyperplane of the cube, derived by
/// substituting x -> 1 - x on the negative support. Accepts every separating
/// form, including those with an empty negative side and a nonzero offset.
/// With fold_complement the smaller of ell and k - ell is returned, which
/// identifies a form with the form of its opposite half.
inline CubeCutForm canonicalize(const RatVector& coeffs, const Rational& rhs,
                                bool fold_complement = false) {
    const auto reject = [] { return input_error("not a separating hyperplane form"); };
    if (is_zero_vector(coeffs)) throw reject();
    const auto f = detail::split_by_sign(coeffs, rhs);
    if (!f) throw reject();
    const int k = static_cast<int>(f->I.size() + f->J.size());
    const Rational ell_q = f->scaled_rhs + static_cast<int>(f->J.size());
    if (k < 2 || !is_integer(ell_q)) throw reject();
    const BigInt ell_big = numerator(ell_q);
    if (ell_big < 1 || ell_big > k - 1) throw reject();
    int ell = static_cast<int>(ell_big);
    if (fold_complement) ell = std::min(ell, k - ell);
    return CubeCutForm(k, ell);
}

/// Number of one-cut subpolytopes of the d-cube up to the (k, ell) grid.
inline long long count_forms(int d) {
    if (d < 2) throw input_error("count_forms needs d >= 2");
    return static_cast<long long>(d) * (d - 1) / 2;
}

/// Arithmetic criterion for a second cut of the slice x_1 + ... + x_k <= ell.
inline bool second_cut_predicate(int d, int k, int ell, const SecondCutSpec& spec) {
    CubeCutForm form(k, ell); // validates the pair
    if (k > d) throw input_error("form does not fit the dimension");
    validate_spec(d, spec);
    int x = 0, y = 0; // |I inter [k]| and |J inter [k]|
    for (int i : spec.I) x += i <= k;
    for (int j : spec.J) y += j <= k;
    const int size_i = static_cast<int>(spec.I.size());
    const int size_j = static_cast<int>(spec.J.size());
    return size_j + spec.h + k - x <= ell || size_i - spec.h + k - y <= ell;
}

/// Skeleton of the slice {x in cube : x_1 + ... + x_k <= ell}. Vertices are
/// the surviving cube vertices; edges come from the exact edge oracle.
inline SkeletonModel subpolytope_model(int d, int k, int ell) {
    CubeCutForm form(k, ell);
    if (k > d) throw input_error("form does not fit the dimension");
    if (d > 6) throw resource_error("subpolytope edges are only computed for d <= 6");
    std::vector<RatVector> vertices;
    for (std::size_t v = 0; v < (std::size_t(1) << d); ++v) {
        int head = 0;
        for (int j = 0; j < k; ++j) head += (v >> (d - 1 - j)) & 1;
        if (head > ell) continue;
        RatVector vert(d);
        for (int j = 0; j < d; ++j) vert[j] = Rational((v >> (d - 1 - j)) & 1);
        vertices.push_back(std::move(vert));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(vertices.size()); ++j)
            if (edge_oracle(vertices, i, j)) edges.emplace_back(i, j);
    return SkeletonModel::create(std::move(vertices), std::move(edges), false);
}

} // namespace polycut
