#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polycut/errors.hpp"

namespace polycut {

/// Subset of poset elements as a bitmask over the element order.
using ElemSet = std::uint32_t;

/// A finite poset: labeled elements plus cover relations. The covers must be
/// acyclic and form a transitive reduction. Derived closure masks make the
/// enumeration operations cheap.
class Poset {
public:
    static constexpr int max_elements = 24;

    static Poset create(std::vector<std::string> labels,
                        std::vector<std::pair<int, int>> covers) {
        Poset p;
        p.labels_ = std::move(labels);
        p.covers_ = std::move(covers);
        const int n = static_cast<int>(p.labels_.size());
        if (n == 0) throw input_error("poset needs at least one element");
        if (n > max_elements) throw resource_error("poset exceeds the element guard");
        {
            std::map<std::string, int> seen;
            for (int i = 0; i < n; ++i)
                if (!seen.emplace(p.labels_[i], i).second)
                    throw input_error("duplicate element label '" + p.labels_[i] + "'");
        }
        std::vector<std::vector<int>> up(n);
        for (auto [lo, hi] : p.covers_) {
            if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
                throw input_error("cover references invalid elements");
            up[lo].push_back(hi);
        }
        p.below_.assign(n, 0);
        p.above_.assign(n, 0);
        // Strict order masks by depth-first closure; cycles surface as an
        // element reachable from itself.
        std::vector<int> state(n, 0);
        auto dfs = [&](auto&& self, int v) -> void {
            state[v] = 1;
            for (int w : up[v]) {
                if (state[w] == 1) throw input_error("cover relation has a cycle");
                if (state[w] == 0) self(self, w);
                p.above_[v] |= p.above_[w] | (ElemSet(1) << w);
            }
            state[v] = 2;
        };
        for (int v = 0; v < n; ++v)
            if (state[v] == 0) dfs(dfs, v);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (p.above_[v] >> w & 1) p.below_[w] |= ElemSet(1) << v;
        for (auto [lo, hi] : p.covers_) {
            // A cover implied by two shorter relations is not a reduction.
            for (int mid = 0; mid < n; ++mid)
                if ((p.above_[lo] >> mid & 1) && (p.above_[mid] >> hi & 1))
                    throw input_error("cover " + p.labels_[lo] + " < " + p.labels_[hi] +
                                      " is implied by other covers");
        }
        return p;
    }

    /// Builds a poset from a full strict-order relation, reducing the covers.
    static Poset from_relation(std::vector<std::string> labels,
                               const std::vector<ElemSet>& strictly_below) {
        const int n = static_cast<int>(labels.size());
        std::vector<std::pair<int, int>> covers;
        for (int hi = 0; hi < n; ++hi)
            for (int lo = 0; lo < n; ++lo) {
                if (!(strictly_below[hi] >> lo & 1)) continue;
                bool implied = false;
                for (int mid = 0; mid < n && !implied; ++mid)
                    implied = (strictly_below[hi] >> mid & 1) &&
                              (strictly_below[mid] >> lo & 1);
                if (!implied) covers.emplace_back(lo, hi);
            }
        return create(std::move(labels), std::move(covers));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        throw input_error("unknown element label '" + label + "'");
    }

    bool less(int a, int b) const { return above_[a] >> b & 1; }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
    ElemSet strictly_below(int v) const { return below_[v]; }
    ElemSet strictly_above(int v) const { return above_[v]; }
    ElemSet comparability(int v) const { return below_[v] | above_[v]; }

    ElemSet full_mask() const { return (ElemSet(1) << size()) - 1; }

    bool is_minimal(int v) const { return below_[v] == 0; }
    bool is_maximal(int v) const { return above_[v] == 0; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (is_minimal(v)) out.push_back(v);
        return out;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < size(); ++v)
            if (is_maximal(v)) out.push_back(v);
        return out;
    }

    bool is_chain() const {
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (!comparable(a, b)) return false;
        return true;
    }

    /// Downward closure of a set.
    ElemSet ideal_generated_by(ElemSet gens) const {
        ElemSet out = gens;
        for (int v = 0; v < size(); ++v)
            if (gens >> v & 1) out |= below_[v];
        return out;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<ElemSet> below_, above_;
};

/// All poset ideals (downward closed subsets) as ascending bitmasks.
inline std::vector<ElemSet> ideals(const Poset& p) {
    const int n = p.size();
    std::vector<ElemSet> out;
    for (ElemSet mask = 0;; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v & 1) && (p.strictly_below(v) & ~mask)) ok = false;
        if (ok) out.push_back(mask);
        if (mask == p.full_mask()) break;
    }
    return out;
}

/// All antichains as ascending bitmasks.
inline std::vector<ElemSet> antichains(const Poset& p) {
    const int n = p.size();
    std::vector<ElemSet> out;
    for (ElemSet mask = 0;; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v & 1) && (p.comparability(v) & mask)) ok = false;
        if (ok) out.push_back(mask);
        if (mask == p.full_mask()) break;
    }
    return out;
}

/// Maximal elements of an ideal, which form an antichain.
inline ElemSet ideal_maxima(const Poset& p, ElemSet ideal) {
    ElemSet out = 0;
    for (int v = 0; v < p.size(); ++v)
        if ((ideal >> v & 1) && !(p.strictly_above(v) & ideal)) out |= ElemSet(1) << v;
    return out;
}

/// Saturated chains running from a minimal to a maximal element. Depth-first
/// from minimal elements in index order, so the output is deterministic.
inline std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> covers_up(n);
    for (auto [lo, hi] : p.covers()) covers_up[lo].push_back(hi);
    for (auto& v : covers_up) std::sort(v.begin(), v.end());

    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (covers_up[v].empty())
            out.push_back(path);
        else
            for (int w : covers_up[v]) self(self, w);
        path.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (p.is_minimal(v)) dfs(dfs, v);
    return out;
}

/// Connectivity of the comparability graph induced on a subset. The empty
/// set counts as disconnected, singletons as connected.
inline bool connected_subset(const Poset& p, ElemSet subset) {
    if (subset == 0) return false;
    const int start = std::countr_zero(subset);
    ElemSet reached = ElemSet(1) << start;
    ElemSet frontier = reached;
    while (frontier) {
        ElemSet next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= p.comparability(v) & subset & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == subset;
}

/// Exact linear extension count by depth-first enumeration over currently
/// available minimal elements.
inline long long count_linear_extensions(const Poset& p) {
    const int n = p.size();
    if (n > 10) throw resource_error("linear extension count is guarded at 10 elements");
    long long count = 0;
    auto dfs = [&](auto&& self, ElemSet placed) -> void {
        if (placed == p.full_mask()) {
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            if (p.strictly_below(v) & ~placed) continue;
            self(self, placed | (ElemSet(1) << v));
        }
    };
    dfs(dfs, 0);
    return count;
}

// ---- family generators ------------------------------------------------

namespace detail {

inline std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26)
            labels[i] = std::string(1, static_cast<char>('a' + i));
        else
            labels[i] = "e" + std::to_string(i + 1);
    }
    return labels;
}

} // namespace detail

/// Disjoint union of chains, one per entry of `lengths`. Elements are ordered
/// chain by chain, bottom to top.
inline Poset disjoint_chains(const std::vector<int>& lengths) {
    if (lengths.empty()) throw input_error("disjoint_chains needs at least one chain");
    int n = 0;
    for (int len : lengths) {
        if (len < 1) throw input_error("chain lengths must be positive");
        n += len;
    }
    std::vector<std::pair<int, int>> covers;
    int base = 0;
    for (int len : lengths) {
        for (int j = 0; j + 1 < len; ++j) covers.emplace_back(base + j, base + j + 1);
        base += len;
    }
    return Poset::create(detail::default_labels(n), std::move(covers));
}

/// Rooted binary tree poset from a parenthesized structure: "*" is a leaf and
/// "(LR)" an internal node over two subtrees. The root is the unique maximal
/// element and covers point child < parent. Elements are ordered by
/// depth-first post-order, so leaves come before their ancestors.
inline Poset binary_tree(const std::string& structure) {
    std::vector<std::pair<int, int>> covers;
    int next = 0;
    std::size_t pos = 0;
    auto parse = [&](auto&& self) -> int {
        if (pos >= structure.size()) throw input_error("malformed tree structure");
        if (structure[pos] == '*') {
            ++pos;
            return next++;
        }
        if (structure[pos] != '(') throw input_error("malformed tree structure");
        ++pos;
        const int left = self(self);
        const int right = self(self);
        if (pos >= structure.size() || structure[pos] != ')')
            throw input_error("malformed tree structure");
        ++pos;
        const int node = next++;
        covers.emplace_back(left, node);
        covers.emplace_back(right, node);
        return node;
    };
    parse(parse);
    if (pos != structure.size()) throw input_error("malformed tree structure");
    return Poset::create(detail::default_labels(next), std::move(covers));
}

enum class ZigzagStart { up, down };

/// Fence poset x_1 < x_2 > x_3 < ... (start = up) or with the first relation
/// descending (start = down).
inline Poset zigzag(int n, ZigzagStart start) {
    if (n < 1) throw input_error("zigzag needs at least one element");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) {
        const bool upward = (i % 2 == 0) == (start == ZigzagStart::up);
        if (upward)
            covers.emplace_back(i, i + 1);
        else
            covers.emplace_back(i + 1, i);
    }
    return Poset::create(detail::default_labels(n), std::move(covers));
}

// ---- text format -------------------------------------------------------

namespace detail {

inline bool is_identifier(const std::string& label) {
    if (label.empty()) return false;
    for (const char ch : label) {
        const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                        (ch >= '0' && ch <= '9') || ch == '_';
        if (!ok) return false;
    }
    return true;
}

} // namespace detail

/// Parses the poset text format:
///   poset v1
///   elements a b c
///   cover a b
/// Lines starting with '#' are comments; labels are ASCII identifiers.
inline Poset parse_poset(std::istream& in) {
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> cover_labels;
    bool saw_magic = false, saw_elements = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (!saw_magic) {
            std::string version;
            ls >> version;
            if (word != "poset" || version != "v1")
                throw input_error("expected header 'poset v1'");
            saw_magic = true;
            continue;
        }
        if (word == "elements") {
            if (saw_elements) throw input_error("duplicate elements line");
            std::string label;
            while (ls >> label) {
                if (!detail::is_identifier(label))
                    throw input_error("label '" + label + "' is not an ASCII identifier");
                labels.push_back(label);
            }
            saw_elements = true;
        } else if (word == "cover") {
            std::string lo, hi, extra;
            if (!(ls >> lo >> hi) || (ls >> extra))
                throw input_error("cover line needs exactly two labels");
            cover_labels.emplace_back(lo, hi);
        } else {
            throw input_error("unknown poset directive '" + word + "'");
        }
    }
    if (!saw_magic) throw input_error("expected header 'poset v1'");
    if (!saw_elements) throw input_error("missing elements line");
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (!index.emplace(labels[i], i).second)
            throw input_error("duplicate element label '" + labels[i] + "'");
    std::vector<std::pair<int, int>> covers;
    for (const auto& [lo, hi] : cover_labels) {
        const auto a = index.find(lo), b = index.find(hi);
        if (a == index.end()) throw input_error("unknown element label '" + lo + "'");
        if (b == index.end()) throw input_error("unknown element label '" + hi + "'");
        covers.emplace_back(a->second, b->second);
    }
    return Poset::create(std::move(labels), std::move(covers));
}

inline std::string format_poset(const Poset& p) {
    std::ostringstream os;
    os << "poset v1\nelements";
    for (const auto& label : p.labels()) os << ' ' << label;
    os << '\n';
    for (auto [lo, hi] : p.covers())
        os << "cover " << p.labels()[lo] << ' ' << p.labels()[hi] << '\n';
    return os.str();
}

} // namespace polycut
