#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polycut/skeleton.hpp"

namespace polycut {

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
                throw input_error("not a permutation of 1..n");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    /// From disjoint cycles over {1..n}; omitted elements are fixed points.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::vector<bool> used(n, false);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const int a = cycle[i];
                const int b = cycle[(i + 1) % cycle.size()];
                if (a < 1 || a > n) throw input_error("cycle element out of range");
                if (used[a - 1]) throw input_error("cycles are not disjoint");
                used[a - 1] = true;
                img[a - 1] = b;
            }
        }
        return Permutation(std::move(img));
    }

    int n() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i - 1]; }
    const std::vector<int>& one_line() const { return image_; }
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& other) const { return image_ < other.image_; }

    Permutation inverse() const {
        std::vector<int> img(n());
        for (int i = 1; i <= n(); ++i) img[image_[i - 1] - 1] = i;
        return Permutation(std::move(img));
    }

    /// Composition acting left to right on the argument: (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.n() != b.n()) throw input_error("composing permutations of different sizes");
        std::vector<int> img(a.n());
        for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
        return Permutation(std::move(img));
    }

    /// Cycles of length >= 2, each rotated to start at its smallest element,
    /// ordered by that element.
    std::vector<std::vector<int>> nontrivial_cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(n(), false);
        for (int start = 1; start <= n(); ++start) {
            if (seen[start - 1] || image_[start - 1] == start) continue;
            std::vector<int> cycle;
            for (int v = start; !seen[v - 1]; v = image_[v - 1]) {
                seen[v - 1] = true;
                cycle.push_back(v);
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

private:
    std::vector<int> image_;
};

inline int nontrivial_cycle_count(const Permutation& w) {
    return static_cast<int>(w.nontrivial_cycles().size());
}

/// Parses "(123)(456)" cycle form or one-line form, either as a digit string
/// like "2143" (n <= 9) or comma-separated like "2,1,4,3". Cycle form needs
/// the intended n to place fixed points.
inline Permutation parse_permutation(const std::string& text, int n = 0) {
    if (text.empty()) throw input_error("empty permutation");
    if (text.find('(') != std::string::npos) {
        if (n <= 0) throw input_error("cycle notation needs an explicit n");
        std::vector<std::vector<int>> cycles;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != '(') throw input_error("malformed cycle notation");
            const std::size_t close = text.find(')', pos);
            if (close == std::string::npos) throw input_error("malformed cycle notation");
            std::vector<int> cycle;
            std::string token;
            for (std::size_t i = pos + 1; i <= close; ++i) {
                const char ch = text[i];
                if (ch == ',' || ch == ' ' || ch == ')') {
                    if (!token.empty()) cycle.push_back(std::stoi(token));
                    token.clear();
                } else if (ch >= '0' && ch <= '9') {
                    // Bare digit runs mean one element per digit, as in (123).
                    if (n > 9 && text.find(',') == std::string::npos &&
                        text.find(' ') == std::string::npos)
                        throw input_error("use comma-separated cycles when n > 9");
                    cycle.push_back(ch - '0');
                } else {
                    throw input_error("malformed cycle notation");
                }
            }
            if (cycle.size() < 2) throw input_error("cycles need at least two elements");
            cycles.push_back(std::move(cycle));
            pos = close + 1;
        }
        return Permutation::from_cycles(cycles, n);
    }
    std::vector<int> img;
    if (text.find(',') != std::string::npos) {
        std::string token;
        for (const char ch : text + ",") {
            if (ch == ',') {
                if (token.empty()) throw input_error("malformed one-line permutation");
                img.push_back(std::stoi(token));
                token.clear();
            } else {
                token += ch;
            }
        }
    } else {
        for (const char ch : text) {
            if (ch < '1' || ch > '9') throw input_error("malformed one-line permutation");
            img.push_back(ch - '0');
        }
    }
    if (n > 0 && static_cast<int>(img.size()) != n)
        throw input_error("permutation length does not match n");
    return Permutation(std::move(img));
}

/// The n x n permutation matrix flattened row-major into length n^2:
/// entry (i, w(i)) is one.
inline RatVector perm_vertex(const Permutation& w) {
    const int n = w.n();
    RatVector v(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1) * n + (w(i) - 1)] = 1;
    return v;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Skeleton of the Birkhoff polytope: n! permutation-matrix vertices in
/// lexicographic one-line order, edges where w^-1 u is a single nontrivial
/// cycle.
inline SkeletonModel birkhoff_skeleton(int n) {
    if (n < 1 || n > 6) throw resource_error("birkhoff skeleton is guarded at n <= 6");
    const auto perms = all_permutations(n);
    std::vector<RatVector> vertices;
    vertices.reserve(perms.size());
    for (const auto& w : perms) vertices.push_back(perm_vertex(w));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
        const Permutation inv = perms[i].inverse();
        for (int j = i + 1; j < static_cast<int>(perms.size()); ++j)
            if (nontrivial_cycle_count(inv * perms[j]) == 1) edges.emplace_back(i, j);
    }
    return SkeletonModel::create(std::move(vertices), std::move(edges), false);
}

/// Exhaustive existence decision for n in {2, 3, 4}. Every sign pattern a
/// separating hyperplane could induce has both strict sides inside a common
/// non-neighborhood, so all candidate (S+, S-) pairs are enumerated and each
/// is decided by exact strict feasibility over the unknown (h, r).
inline std::optional<Hyperplane> search_separating(int n) {
    if (n < 2 || n > 4) throw input_error("search_separating supports n in {2, 3, 4}");
    const auto perms = all_permutations(n);
    const int nv = static_cast<int>(perms.size());
    std::vector<RatVector> lifted; // (vertex, -1) rows so r is one more unknown
    lifted.reserve(nv);
    for (const auto& w : perms) {
        RatVector row = perm_vertex(w);
        row.push_back(Rational(-1));
        lifted.push_back(std::move(row));
    }
    std::vector<std::vector<int>> non_neighbors(nv);
    for (int i = 0; i < nv; ++i) {
        const Permutation inv = perms[i].inverse();
        for (int j = 0; j < nv; ++j)
            if (j != i && nontrivial_cycle_count(inv * perms[j]) != 1)
                non_neighbors[i].push_back(j);
    }

    std::set<std::pair<std::vector<int>, std::vector<int>>> tried;
    for (int anchor = 0; anchor < nv; ++anchor) {
        const auto& candidates = non_neighbors[anchor];
        const int m = static_cast<int>(candidates.size());
        for (unsigned plus_bits = 1; plus_bits < (1u << m); ++plus_bits) {
            std::vector<int> plus;
            for (int b = 0; b < m; ++b)
                if (plus_bits >> b & 1) plus.push_back(candidates[b]);
            // S- avoids every neighbor of S+ and must contain the anchor.
            const auto non_adjacent = [&](int u, int v) {
                return std::find(non_neighbors[u].begin(), non_neighbors[u].end(), v) !=
                       non_neighbors[u].end();
            };
            std::vector<int> pool;
            for (int v : non_neighbors[plus.front()])
                if (std::all_of(plus.begin(), plus.end(),
                                [&](int u) { return non_adjacent(u, v); }))
                    pool.push_back(v);
            const int pm = static_cast<int>(pool.size());
            for (unsigned minus_bits = 1; minus_bits < (1u << pm); ++minus_bits) {
                std::vector<int> minus;
                for (int b = 0; b < pm; ++b)
                    if (minus_bits >> b & 1) minus.push_back(pool[b]);
                if (std::find(minus.begin(), minus.end(), anchor) == minus.end()) continue;
                auto key = std::make_pair(plus, minus);
                if (key.first > key.second) std::swap(key.first, key.second);
                if (!tried.insert(key).second) continue;

                std::vector<RatVector> positive, negative, zero;
                std::vector<bool> strict(nv, false);
                for (int v : plus) {
                    positive.push_back(lifted[v]);
                    strict[v] = true;
                }
                for (int v : minus) {
                    negative.push_back(lifted[v]);
                    strict[v] = true;
                }
                for (int v = 0; v < nv; ++v)
                    if (!strict[v]) zero.push_back(lifted[v]);
                if (const auto witness = strict_feasibility(positive, negative, zero)) {
                    RatVector coeffs(witness->begin(), witness->end() - 1);
                    return Hyperplane(std::move(coeffs), (*witness).back());
                }
            }
        }
    }
    return std::nullopt;
}

/// The two exact vertex identities behind the n = 4 impossibility argument:
/// the double transpositions pair off against four-cycles with equal sums.
inline bool vertex_sum_identities() {
    const auto vertex = [](const std::string& one_line) {
        return perm_vertex(parse_permutation(one_line));
    };
    const auto add = [](const RatVector& a, const RatVector& b) {
        RatVector out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    };
    const bool first = add(vertex("2143"), vertex("3412")) == add(vertex("2413"), vertex("3142"));
    const bool second = add(vertex("3412"), vertex("4321")) == add(vertex("4312"), vertex("3421"));
    return first && second;
}

/// Per-check result of the cycle-merging certificate for one permutation.
struct CertificateReport {
    bool identity_a = false;   // x_v + x_tau1 = x_tau2 + x_tau3
    bool identity_b = false;   // x_tau1 + x_sigma1 = x_sigma2 + x_sigma3
    bool adjacency = false;    // tau2, tau3 adjacent to v in the skeleton
    bool fewer_cycles = false; // tau2, tau3, sigma2, sigma3 drop below v's count
    std::vector<int> cycle_one, cycle_two; // the two merged cycles, in order

    bool passed() const { return identity_a && identity_b && adjacency && fewer_cycles; }
};

/// Verifies the inductive step of the general impossibility proof on a
/// permutation with two cycles of length >= 3: merging and splitting those
/// cycles produces the four comparison permutations whose vertex sums match.
inline CertificateReport cycle_merging_certificate(const Permutation& v) {
    const auto cycles = v.nontrivial_cycles();
    if (cycles.size() < 2)
        throw unsupported_error("certificate needs at least two nontrivial cycles");
    std::vector<std::size_t> long_idx;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (cycles[i].size() >= 3) long_idx.push_back(i);
    if (long_idx.size() < 2)
        throw unsupported_error("certificate needs two cycles of length >= 3");

    const std::vector<int>& c1 = cycles[long_idx[0]];
    const std::vector<int>& c2 = cycles[long_idx[1]];
    std::vector<std::vector<int>> rest;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (i != long_idx[0] && i != long_idx[1]) rest.push_back(cycles[i]);

    // The two chosen cycles play the roles of (1 2 5 A) and (3 4 6 B); the
    // comparison permutations swap their lead elements or concatenate them.
    const std::vector<int> c1_swapped = [&] {
        std::vector<int> c = c1; // (3 2 5 A)
        c[0] = c2[0];
        return c;
    }();
    const std::vector<int> c2_swapped = [&] {
        std::vector<int> c = c2; // (1 4 6 B)
        c[0] = c1[0];
        return c;
    }();
    std::vector<int> merged_12 = c1; // (1 2 5 A 3 4 6 B)
    merged_12.insert(merged_12.end(), c2.begin(), c2.end());
    std::vector<int> merged_32 = c1_swapped; // (3 2 5 A 1 4 6 B)
    merged_32.insert(merged_32.end(), c2_swapped.begin(), c2_swapped.end());

    const int n = v.n();
    const auto with_rest = [&](std::vector<std::vector<int>> own) {
        for (const auto& c : rest) own.push_back(c);
        return Permutation::from_cycles(own, n);
    };
    const Permutation tau1 = with_rest({c1_swapped, c2_swapped});
    const Permutation tau2 = with_rest({merged_12});
    const Permutation tau3 = with_rest({merged_32});
    const Permutation sigma1 = with_rest({});
    const Permutation sigma2 = with_rest({c1_swapped});
    const Permutation sigma3 = with_rest({c2_swapped});

    const auto add = [](const RatVector& a, const RatVector& b) {
        RatVector out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    };

    CertificateReport rep;
    rep.cycle_one = c1;
    rep.cycle_two = c2;
    rep.identity_a =
        add(perm_vertex(v), perm_vertex(tau1)) == add(perm_vertex(tau2), perm_vertex(tau3));
    rep.identity_b = add(perm_vertex(tau1), perm_vertex(sigma1)) ==
                     add(perm_vertex(sigma2), perm_vertex(sigma3));
    const Permutation inv = v.inverse();
    rep.adjacency = nontrivial_cycle_count(inv * tau2) == 1 &&
                    nontrivial_cycle_count(inv * tau3) == 1;
    const int base = nontrivial_cycle_count(v);
    rep.fewer_cycles = nontrivial_cycle_count(tau2) < base &&
                       nontrivial_cycle_count(tau3) < base &&
                       nontrivial_cycle_count(sigma2) < base &&
                       nontrivial_cycle_count(sigma3) < base;
    return rep;
}

} // namespace polycut
