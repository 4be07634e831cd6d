#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycut/poset.hpp"
#include "polycut/skeleton.hpp"

namespace polycut {

enum class Target { order, chain };
enum class Family { disjoint_chains, binary_tree, zigzag };

/// Hyperplane with coefficients keyed by element label. Labels missing from
/// the map carry coefficient zero.
struct PosetHyperplane {
    std::map<std::string, Rational> coeffs;
    Rational rhs;
};

/// Resolves labels against a poset's element order. Requires at least one
/// nonzero coefficient and rejects labels the poset does not have.
inline Hyperplane bind_hyperplane(const Poset& p, const PosetHyperplane& h) {
    RatVector coeffs(p.size(), Rational(0));
    for (const auto& [label, value] : h.coeffs) coeffs[p.index_of(label)] = value;
    return Hyperplane(std::move(coeffs), h.rhs);
}

/// Vertex masks of the target polytope, ascending: poset ideals for the
/// order polytope, antichains for the chain polytope.
inline std::vector<ElemSet> vertex_masks(const Poset& p, Target target) {
    return target == Target::order ? ideals(p) : antichains(p);
}

namespace detail {

inline std::vector<RatVector> mask_vertices(const Poset& p, const std::vector<ElemSet>& masks) {
    std::vector<RatVector> vertices;
    vertices.reserve(masks.size());
    for (ElemSet m : masks) {
        RatVector v(p.size());
        for (int i = 0; i < p.size(); ++i) v[i] = Rational((m >> i) & 1);
        vertices.push_back(std::move(v));
    }
    return vertices;
}

// Connectivity of every subset, precomputed for small posets.
struct ConnTable {
    const Poset* p;
    std::vector<bool> table;

    explicit ConnTable(const Poset& poset) : p(&poset) {
        if (p->size() <= 16) {
            table.resize(std::size_t(1) << p->size());
            for (ElemSet m = 1; m < table.size(); ++m) table[m] = connected_subset(*p, m);
        }
    }
    bool operator()(ElemSet m) const {
        if (!table.empty()) return m != 0 && table[m];
        return connected_subset(*p, m);
    }
};

inline std::vector<std::pair<int, int>> polytope_edges(const Poset& p, Target target,
                                                       const std::vector<ElemSet>& masks) {
    const ConnTable conn(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(masks.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(masks.size()); ++j) {
            const ElemSet a = masks[i], b = masks[j];
            if (target == Target::order && (a & ~b) && (b & ~a)) continue;
            if (conn(a ^ b)) edges.emplace_back(i, j);
        }
    return edges;
}

} // namespace detail

/// Order polytope skeleton: vertices are indicator vectors of ideals, edges
/// the inclusion pairs whose difference is connected in the poset.
inline SkeletonModel order_polytope_model(const Poset& p) {
    const auto masks = ideals(p);
    if (masks.size() > guard_limit()) throw resource_error("ideal count exceeds guard");
    return SkeletonModel::create(detail::mask_vertices(p, masks),
                                 detail::polytope_edges(p, Target::order, masks), false);
}

/// Chain polytope skeleton: vertices are indicator vectors of antichains,
/// edges the pairs whose symmetric difference is connected in the poset.
inline SkeletonModel chain_polytope_model(const Poset& p) {
    const auto masks = antichains(p);
    if (masks.size() > guard_limit()) throw resource_error("antichain count exceeds guard");
    return SkeletonModel::create(detail::mask_vertices(p, masks),
                                 detail::polytope_edges(p, Target::chain, masks), false);
}

inline SkeletonModel polytope_model(const Poset& p, Target target) {
    return target == Target::order ? order_polytope_model(p) : chain_polytope_model(p);
}

/// Facet equations of the order polytope: x_i = 0 for maximal elements,
/// x_j = 1 for minimal elements, x_i = x_j for covers x_i < x_j.
inline std::vector<Hyperplane> facets_order(const Poset& p) {
    std::vector<Hyperplane> out;
    const auto unit = [&](int i) {
        RatVector c(p.size(), Rational(0));
        c[i] = 1;
        return c;
    };
    for (int i = 0; i < p.size(); ++i)
        if (p.is_maximal(i)) out.emplace_back(unit(i), Rational(0));
    for (int i = 0; i < p.size(); ++i)
        if (p.is_minimal(i)) out.emplace_back(unit(i), Rational(1));
    for (auto [lo, hi] : p.covers()) {
        RatVector c(p.size(), Rational(0));
        c[lo] = 1;
        c[hi] = -1;
        out.emplace_back(std::move(c), Rational(0));
    }
    return out;
}

/// Facet equations of the chain polytope: x_i = 0 for every element and a
/// unit sum along every maximal chain.
inline std::vector<Hyperplane> facets_chain(const Poset& p) {
    std::vector<Hyperplane> out;
    for (int i = 0; i < p.size(); ++i) {
        RatVector c(p.size(), Rational(0));
        c[i] = 1;
        out.emplace_back(std::move(c), Rational(0));
    }
    for (const auto& chain : maximal_chains(p)) {
        RatVector c(p.size(), Rational(0));
        for (int v : chain) c[v] = 1;
        out.emplace_back(std::move(c), Rational(1));
    }
    return out;
}

/// Two vertex sets whose hyperplane values have strictly opposite signs
/// while their symmetric difference is connected in the poset.
struct BadPair {
    ElemSet first;
    ElemSet second;
    bool operator==(const BadPair&) const = default;
};

struct PosetCutReport {
    CutReport report;
    std::optional<BadPair> bad_pair;
};

namespace detail {

// Shared machinery for repeated cut checks against one poset and target.
struct CutContext {
    const Poset* p;
    Target target;
    std::vector<ElemSet> masks;
    ConnTable conn;

    CutContext(const Poset& poset, Target t)
        : p(&poset), target(t), masks(vertex_masks(poset, t)), conn(poset) {
        if (masks.size() > guard_limit()) throw resource_error("vertex count exceeds guard");
    }

    PosetCutReport check(const RatVector& coeffs, const Rational& rhs) const {
        PosetCutReport out;
        CutReport& rep = out.report;
        rep.pattern.reserve(masks.size());
        bool has_pos = false, has_neg = false;
        for (const ElemSet m : masks) {
            Rational value = -rhs;
            for (ElemSet rest = m; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                value += coeffs[v];
            }
            const auto s = static_cast<std::int8_t>(sign_of(value));
            has_pos |= s > 0;
            has_neg |= s < 0;
            rep.pattern.push_back(s);
        }
        if (!has_pos) {
            rep.witness = WitnessKind::no_positive_vertex;
            return out;
        }
        if (!has_neg) {
            rep.witness = WitnessKind::no_negative_vertex;
            return out;
        }
        // First bad pair in lexicographic bitmask order. Opposite-sign pairs
        // with connected symmetric difference are exactly the crossed edges.
        for (int i = 0; i < static_cast<int>(masks.size()); ++i) {
            if (rep.pattern[i] == 0) continue;
            for (int j = i + 1; j < static_cast<int>(masks.size()); ++j) {
                if (static_cast<int>(rep.pattern[i]) * rep.pattern[j] >= 0) continue;
                if (!conn(masks[i] ^ masks[j])) continue;
                rep.witness = WitnessKind::bad_edge;
                rep.edge_i = i;
                rep.edge_j = j;
                out.bad_pair = BadPair{masks[i], masks[j]};
                return out;
            }
        }
        rep.separating = true;
        return out;
    }
};

} // namespace detail

/// Separating-hyperplane check on the order or chain polytope, through the
/// vertex description: nontrivial strict values on both sides and no pair of
/// vertices with opposite strict signs and connected symmetric difference.
inline PosetCutReport checkcut(const Poset& p, const PosetHyperplane& h, Target target) {
    const Hyperplane bound = bind_hyperplane(p, h);
    return detail::CutContext(p, target).check(bound.coeffs, bound.rhs);
}

/// True iff (I, J) is a bad pair for h on the target polytope.
inline bool is_bad_pair(const Poset& p, const PosetHyperplane& h, Target target,
                        ElemSet first, ElemSet second) {
    const Hyperplane bound = bind_hyperplane(p, h);
    const auto masks = vertex_masks(p, target);
    if (std::find(masks.begin(), masks.end(), first) == masks.end() ||
        std::find(masks.begin(), masks.end(), second) == masks.end())
        return false;
    const auto value = [&](ElemSet m) {
        Rational v = -bound.rhs;
        for (int i = 0; i < p.size(); ++i)
            if (m >> i & 1) v += bound.coeffs[i];
        return v;
    };
    return sign_of(value(first)) * sign_of(value(second)) < 0 &&
           connected_subset(p, first ^ second);
}

/// The existence witnesses: x_i = x_j for the first incomparable pair cuts
/// the order polytope, and a unit total sum cuts the chain polytope.
inline std::pair<PosetHyperplane, PosetHyperplane> existence_witnesses(const Poset& p) {
    if (p.is_chain()) throw input_error("a chain admits no separating hyperplane witness");
    PosetHyperplane order_h;
    bool found = false;
    for (int a = 0; a < p.size() && !found; ++a)
        for (int b = a + 1; b < p.size() && !found; ++b)
            if (!p.comparable(a, b)) {
                order_h.coeffs[p.labels()[a]] = 1;
                order_h.coeffs[p.labels()[b]] = -1;
                found = true;
            }
    order_h.rhs = 0;
    PosetHyperplane chain_h;
    for (const auto& label : p.labels()) chain_h.coeffs[label] = 1;
    chain_h.rhs = 1;
    return {order_h, chain_h};
}

// ---- family recognizers -------------------------------------------------

inline bool is_disjoint_chains(const Poset& p) {
    std::vector<int> up(p.size(), 0), down(p.size(), 0);
    for (auto [lo, hi] : p.covers()) {
        ++up[lo];
        ++down[hi];
    }
    for (int v = 0; v < p.size(); ++v)
        if (up[v] > 1 || down[v] > 1) return false;
    return true;
}

inline bool is_binary_tree(const Poset& p) {
    if (!connected_subset(p, p.full_mask())) return false;
    std::vector<int> up(p.size(), 0), down(p.size(), 0);
    for (auto [lo, hi] : p.covers()) {
        ++up[lo];
        ++down[hi];
    }
    for (int v = 0; v < p.size(); ++v) {
        if (up[v] > 1) return false;
        if (down[v] != 0 && down[v] != 2) return false;
    }
    return true;
}

inline bool is_zigzag(const Poset& p) {
    if (!connected_subset(p, p.full_mask())) return false;
    if (static_cast<int>(p.covers().size()) != p.size() - 1) return false;
    std::vector<int> up(p.size(), 0), down(p.size(), 0);
    for (auto [lo, hi] : p.covers()) {
        ++up[lo];
        ++down[hi];
    }
    for (int v = 0; v < p.size(); ++v) {
        if (up[v] + down[v] > 2) return false;
        if (up[v] > 0 && down[v] > 0) return false; // every element minimal or maximal
    }
    return true;
}

inline bool in_family(const Poset& p, Family family) {
    switch (family) {
        case Family::disjoint_chains: return is_disjoint_chains(p);
        case Family::binary_tree: return is_binary_tree(p);
        case Family::zigzag: return is_zigzag(p);
    }
    return false;
}

// ---- sign extensions ------------------------------------------------------

namespace detail {

inline std::map<int, int> resolve_minimal_signs(const Poset& p,
                                                const std::map<std::string, int>& signs) {
    std::map<int, int> out;
    for (const auto& [label, s] : signs) {
        if (s != 1 && s != -1) throw input_error("minimal signs must be +1 or -1");
        const int idx = p.index_of(label);
        if (!p.is_minimal(idx)) throw input_error("'" + label + "' is not minimal");
        out[idx] = s;
    }
    for (int v : p.minimal_elements())
        if (!out.count(v))
            throw input_error("missing sign for minimal element '" + p.labels()[v] + "'");
    return out;
}

// Parent coefficient from the signs of the ideals generated by its children.
inline int tree_rule(int left, int right) {
    if (left > right) std::swap(left, right);
    if (left < 0 && right < 0) return 1;
    if (left > 0 && right > 0) return -1;
    if (left < 0 && right > 0) return 0;
    if (left == 0 && right == 0) return 0;
    return right > 0 ? -1 : 1; // (0, +) -> -,  (0, -) -> + handled by sign
}

} // namespace detail

/// Coefficients alternate +-1 up each chain from its assigned minimal sign.
inline PosetHyperplane extend_from_minimal(const Poset& p,
                                           const std::map<std::string, int>& signs) {
    if (!is_disjoint_chains(p)) throw input_error("poset is not a disjoint union of chains");
    const auto minimal_signs = detail::resolve_minimal_signs(p, signs);
    std::vector<int> next(p.size(), -1);
    for (auto [lo, hi] : p.covers()) next[lo] = hi;
    PosetHyperplane out;
    out.rhs = 0;
    for (const auto& [start, s] : minimal_signs) {
        int sign = s;
        for (int v = start; v != -1; v = next[v]) {
            out.coeffs[p.labels()[v]] = sign;
            sign = -sign;
        }
    }
    return out;
}

/// Bottom-up tree extension by the six local rules. Each parent coefficient
/// is a function of the signs of the ideals its two children generate.
inline PosetHyperplane local_rules_extend(const Poset& p,
                                          const std::map<std::string, int>& signs) {
    if (!is_binary_tree(p)) throw input_error("poset is not a connected binary tree");
    const auto leaf_signs = detail::resolve_minimal_signs(p, signs);
    std::vector<std::vector<int>> children(p.size());
    for (auto [lo, hi] : p.covers()) children[hi].push_back(lo);

    std::vector<int> coeff(p.size(), 0), subtree_sum(p.size(), 0);
    auto fill = [&](auto&& self, int v) -> void {
        if (children[v].empty()) {
            coeff[v] = leaf_signs.at(v);
            subtree_sum[v] = coeff[v];
            return;
        }
        for (int c : children[v]) self(self, c);
        const int sl = sign_of(Rational(subtree_sum[children[v][0]]));
        const int sr = sign_of(Rational(subtree_sum[children[v][1]]));
        coeff[v] = detail::tree_rule(sl, sr);
        subtree_sum[v] = subtree_sum[children[v][0]] + subtree_sum[children[v][1]] + coeff[v];
    };
    for (int v = 0; v < p.size(); ++v)
        if (p.is_maximal(v)) fill(fill, v);

    PosetHyperplane out;
    out.rhs = 0;
    for (int v = 0; v < p.size(); ++v) out.coeffs[p.labels()[v]] = coeff[v];
    return out;
}

namespace detail {

// Fence extension: a maximal element over one minimal alternates, one over
// two minimals follows the tree rule for its children's signs.
inline std::vector<int> zigzag_extension(const Poset& p,
                                         const std::vector<int>& minimal_signs) {
    std::vector<std::vector<int>> children(p.size());
    for (auto [lo, hi] : p.covers()) children[hi].push_back(lo);
    std::vector<int> coeff(p.size(), 0);
    for (int v = 0; v < p.size(); ++v)
        if (p.is_minimal(v)) coeff[v] = minimal_signs[v];
    for (int v = 0; v < p.size(); ++v) {
        if (p.is_minimal(v)) continue;
        if (children[v].size() == 1)
            coeff[v] = -coeff[children[v][0]];
        else
            coeff[v] = tree_rule(coeff[children[v][0]], coeff[children[v][1]]);
    }
    return coeff;
}

} // namespace detail

/// Verdict of the three-condition description against one hyperplane.
struct ClassifierVerdict {
    Family family{};
    bool min_signs = false;        // minimal elements carry both strict signs
    bool equal_abs = false;        // nonzero coefficients share one magnitude
    bool unique_extension = false; // minimal signs reproduce the hyperplane
    bool separating = false;
    std::optional<BadPair> evidence;
};

/// Evaluates the description conditions for the requested family and decides
/// separation: by the conditions themselves for disjoint chains, by the
/// vertex criterion for trees and zigzags. Classification covers hyperplanes
/// through the origin.
inline ClassifierVerdict classify(const Poset& p, const PosetHyperplane& h, Family family) {
    if (!in_family(p, family)) throw input_error("poset is not in the requested family");
    if (h.rhs != 0) throw input_error("classification applies to hyperplanes through the origin");
    const Hyperplane bound = bind_hyperplane(p, h);
    const RatVector& c = bound.coeffs;

    ClassifierVerdict v;
    v.family = family;

    Rational unit;
    v.equal_abs = true;
    for (const auto& q : c) {
        if (q == 0) continue;
        const Rational mag = abs(q);
        if (unit == 0)
            unit = mag;
        else if (mag != unit)
            v.equal_abs = false;
    }

    if (family == Family::disjoint_chains) {
        // Conditions read on the support: elements with zero coefficient are
        // dropped, which leaves shorter disjoint chains.
        std::vector<int> next(p.size(), -1);
        for (auto [lo, hi] : p.covers()) next[lo] = hi;
        bool pruned_pos = false, pruned_neg = false;
        bool alternating = true;
        for (int start : p.minimal_elements()) {
            int prev_sign = 0;
            for (int e = start; e != -1; e = next[e]) {
                const int s = sign_of(c[e]);
                if (s == 0) continue;
                if (prev_sign == 0) {
                    pruned_pos |= s > 0;
                    pruned_neg |= s < 0;
                } else if (s == prev_sign) {
                    alternating = false;
                }
                prev_sign = s;
            }
        }
        v.min_signs = pruned_pos && pruned_neg;
        v.unique_extension = v.equal_abs && alternating;
        v.separating = v.min_signs && v.equal_abs && v.unique_extension;
    } else {
        std::vector<int> minimal_signs(p.size(), 0);
        bool minimals_signed = true, pos = false, neg = false;
        for (int e : p.minimal_elements()) {
            const int s = sign_of(c[e]);
            minimal_signs[e] = s;
            minimals_signed &= s != 0;
            pos |= s > 0;
            neg |= s < 0;
        }
        v.min_signs = minimals_signed && pos && neg;
        v.unique_extension = false;
        if (v.equal_abs && minimals_signed) {
            std::vector<int> ext;
            if (family == Family::binary_tree) {
                std::map<std::string, int> signs;
                for (int e : p.minimal_elements()) signs[p.labels()[e]] = minimal_signs[e];
                const auto ph = local_rules_extend(p, signs);
                ext.resize(p.size());
                for (int e = 0; e < p.size(); ++e)
                    ext[e] = static_cast<int>(numerator(ph.coeffs.at(p.labels()[e])));
            } else {
                ext = detail::zigzag_extension(p, minimal_signs);
            }
            std::vector<int> lower_covers(p.size(), 0);
            for (auto [lo, hi] : p.covers()) ++lower_covers[hi];
            bool match = true;
            for (int e = 0; e < p.size() && match; ++e) {
                if (c[e] == ext[e] * unit) continue;
                // A fence endpoint over a single minimal may drop to zero;
                // the zero-avoiding extension is the nonzero representative.
                match = family == Family::zigzag && c[e] == 0 && p.is_maximal(e) &&
                        lower_covers[e] == 1;
            }
            v.unique_extension = match;
        }
    }

    const PosetCutReport cut = checkcut(p, h, Target::order);
    if (family != Family::disjoint_chains) v.separating = cut.report.separating;
    if (!v.separating) v.evidence = cut.bad_pair;
    return v;
}

/// Decomposition patterns of the target polytope, through the generic
/// vertex-spanned-hyperplane oracle.
inline std::vector<SignPattern> enumerate_poset_cuts(const Poset& p, Target target) {
    return enumerate_cuts_oracle(polytope_model(p, target));
}

// ---- text format ---------------------------------------------------------

/// Parses the hyperplane text format:
///   hyperplane v1
///   coeff a 1
///   coeff b -1/2
///   rhs 0
/// The rhs line is required and must come after every coeff line.
inline PosetHyperplane parse_hyperplane(std::istream& in) {
    std::string line;
    PosetHyperplane out;
    bool saw_magic = false, saw_rhs = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (!saw_magic) {
            std::string version;
            ls >> version;
            if (word != "hyperplane" || version != "v1")
                throw input_error("expected header 'hyperplane v1'");
            saw_magic = true;
            continue;
        }
        if (word == "coeff") {
            if (saw_rhs) throw input_error("coeff line after rhs");
            std::string label, value, extra;
            if (!(ls >> label >> value) || (ls >> extra))
                throw input_error("coeff line needs a label and a rational");
            if (!detail::is_identifier(label))
                throw input_error("label '" + label + "' is not an ASCII identifier");
            if (!out.coeffs.emplace(label, parse_rational(value)).second)
                throw input_error("duplicate coefficient for '" + label + "'");
        } else if (word == "rhs") {
            std::string value, extra;
            if (!(ls >> value) || (ls >> extra)) throw input_error("rhs line needs a rational");
            if (saw_rhs) throw input_error("duplicate rhs line");
            out.rhs = parse_rational(value);
            saw_rhs = true;
        } else {
            throw input_error("unknown hyperplane directive '" + word + "'");
        }
    }
    if (!saw_magic) throw input_error("expected header 'hyperplane v1'");
    if (!saw_rhs) throw input_error("missing rhs line");
    return out;
}

inline std::string format_hyperplane(const PosetHyperplane& h) {
    std::ostringstream os;
    os << "hyperplane v1\n";
    for (const auto& [label, value] : h.coeffs)
        os << "coeff " << label << ' ' << to_string(value) << '\n';
    os << "rhs " << to_string(h.rhs) << '\n';
    return os.str();
}

} // namespace polycut
