// Acceptance suite: runs every criterion the project must satisfy and prints
// one PASS/FAIL line per criterion. All arithmetic is exact, so comparisons
// are equalities; the exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "polycut/polycut.hpp"

using namespace polycut;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string label)
        : number_(number), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}

    void record(bool ok) { ok_ &= ok; }
    void note(const std::string& text) { notes_.push_back(text); }

    ~Criterion() {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        std::printf("%s criterion %2d: %s (%lld ms)\n", ok_ ? "PASS" : "FAIL", number_,
                    label_.c_str(), static_cast<long long>(elapsed));
        for (const auto& n : notes_) std::printf("       %s\n", n.c_str());
        std::fflush(stdout);
        failures += !ok_;
    }

private:
    int number_;
    std::string label_;
    bool ok_ = true;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

// Iterates assignments in {lo..hi}^n, calling f with each vector.
template <typename F>
void sweep_vectors(int n, int lo, int hi, F&& f) {
    std::vector<int> digits(n, lo);
    while (true) {
        f(digits);
        int i = 0;
        while (i < n && digits[i] == hi) digits[i++] = lo;
        if (i == n) return;
        ++digits[i];
    }
}

std::vector<Poset> corpus_small;  // all labeled posets on 1..4 elements
std::vector<Poset> corpus_five;   // fixed-seed sample of labeled posets on 5

void build_corpora() {
    for (int n = 1; n <= 4; ++n)
        for (auto& p : testsupport::all_labeled_posets(n)) corpus_small.push_back(std::move(p));
    corpus_five = testsupport::sampled_labeled_posets(5, 200, 424242u);
}

PosetHyperplane hyperplane_from(const Poset& p, const std::vector<int>& coeffs, int rhs) {
    PosetHyperplane h;
    for (int i = 0; i < p.size(); ++i) h.coeffs[p.labels()[i]] = coeffs[i];
    h.rhs = rhs;
    return h;
}

bool all_zero(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

void criterion1() {
    Criterion c(1, "origin hyperplane criterion matches the cube decision, d = 2..4");
    for (int d = 2; d <= 4; ++d) {
        const auto model = cube_model(d);
        sweep_vectors(d, -2, 2, [&](const std::vector<int>& digits) {
            if (all_zero(digits)) return;
            RatVector coeffs(d);
            for (int i = 0; i < d; ++i) coeffs[i] = digits[i];
            const bool predicted = origin_cut_criterion(coeffs);
            const bool actual =
                is_separating(model, Hyperplane(std::move(coeffs), Rational(0))).separating;
            c.record(predicted == actual);
        });
    }
}

void criterion2() {
    Criterion c(2, "canonical form count equals d(d-1)/2 for d = 2..5");
    for (int d = 2; d <= 5; ++d) {
        std::set<std::pair<int, int>> forms;
        sweep_vectors(d, -1, 1, [&](const std::vector<int>& digits) {
            if (all_zero(digits)) return;
            RatVector coeffs(d);
            for (int i = 0; i < d; ++i) coeffs[i] = digits[i];
            if (!origin_cut_criterion(coeffs)) return;
            const auto form = canonicalize(coeffs, Rational(0));
            forms.emplace(form.k, form.ell);
        });
        c.record(static_cast<long long>(forms.size()) == count_forms(d));
    }
}

// Slice containment: every cube vertex on the spec hyperplane satisfies
// x_1 + ... + x_k <= ell. The hyperplane never crosses cube edge interiors,
// so vertex containment decides containment of the whole cube section.
bool hyperplane_section_inside_slice(int d, int k, int ell, const SecondCutSpec& spec) {
    for (unsigned v = 0; v < (1u << d); ++v) {
        int value = 0, head = 0;
        for (int i = 0; i < d; ++i) {
            const int bit = (v >> (d - 1 - i)) & 1;
            if (i < k) head += bit;
            for (int x : spec.I)
                if (x - 1 == i) value += bit;
            for (int x : spec.J)
                if (x - 1 == i) value -= bit;
        }
        if (value == spec.h && head > ell) return false;
    }
    return true;
}

void criterion3() {
    Criterion c(3, "second cut criterion matches the slice skeleton decision, d <= 5");
    long long checked = 0, miss_incomplete = 0, miss_unsound = 0, containment_miss = 0;
    for (int d = 2; d <= 5; ++d) {
        for (int k = 2; k <= d; ++k)
            for (int ell = 1; ell < k; ++ell) {
                const auto model = subpolytope_model(d, k, ell);
                // Assignments of each index to I, J or neither.
                sweep_vectors(d, 0, 2, [&](const std::vector<int>& assign) {
                    SecondCutSpec spec;
                    for (int i = 0; i < d; ++i) {
                        if (assign[i] == 1) spec.I.push_back(i + 1);
                        if (assign[i] == 2) spec.J.push_back(i + 1);
                    }
                    if (spec.I.empty() || spec.J.empty()) return;
                    for (spec.h = 0; spec.h < static_cast<int>(spec.I.size()); ++spec.h) {
                        const bool predicted = second_cut_predicate(d, k, ell, spec);
                        const bool actual =
                            is_separating(model, spec_hyperplane(d, spec)).separating;
                        c.record(predicted == actual);
                        miss_incomplete += !predicted && actual;
                        miss_unsound += predicted && !actual;
                        containment_miss +=
                            predicted != hyperplane_section_inside_slice(d, k, ell, spec);
                        ++checked;
                    }
                });
            }
    }
    c.note("checked " + std::to_string(checked) + " (form, spec) instances");
    c.note("criterion-true but slice-separating: " + std::to_string(miss_incomplete) +
           " (e.g. x3 = x1 on the d = 3, k = 2, l = 1 prism separates while leaving the slice)");
    c.note("criterion-false despite separating never observed the other way: " +
           std::to_string(miss_unsound) + " unsound instances");
    c.note("criterion matches 'hyperplane section stays inside the slice' on " +
           std::to_string(checked - containment_miss) + "/" + std::to_string(checked) +
           " instances");
}

void criterion4() {
    Criterion c(4, "ideal/antichain adjacency rules match the LP edge oracle");
    const auto check_poset = [&](const Poset& p) {
        for (const Target target : {Target::order, Target::chain}) {
            const auto model = polytope_model(p, target);
            std::set<std::pair<int, int>> edges(model.edges.begin(), model.edges.end());
            const int nv = static_cast<int>(model.vertices.size());
            for (int i = 0; i < nv; ++i)
                for (int j = i + 1; j < nv; ++j)
                    c.record(edges.count({i, j}) ==
                             static_cast<std::size_t>(edge_oracle(model.vertices, i, j)));
        }
    };
    for (const auto& p : corpus_small) check_poset(p);
    for (const auto& p : corpus_five) check_poset(p);
    c.note("posets: " + std::to_string(corpus_small.size()) + " exhaustive + " +
           std::to_string(corpus_five.size()) + " sampled on five elements");
}

void criterion5() {
    Criterion c(5, "incomparable-pair and unit-sum hyperplane equivalences");
    const auto check_poset = [&](const Poset& p) {
        for (int a = 0; a < p.size(); ++a)
            for (int b = a + 1; b < p.size(); ++b) {
                PosetHyperplane h;
                h.coeffs[p.labels()[a]] = 1;
                h.coeffs[p.labels()[b]] = -1;
                h.rhs = 0;
                const bool cut = checkcut(p, h, Target::order).report.separating;
                c.record(cut == !p.comparable(a, b));
            }
        PosetHyperplane sum;
        for (const auto& label : p.labels()) sum.coeffs[label] = 1;
        sum.rhs = 1;
        c.record(checkcut(p, sum, Target::chain).report.separating == !p.is_chain());
    };
    for (const auto& p : corpus_small) check_poset(p);
    for (const auto& p : corpus_five) check_poset(p);
}

void criterion6() {
    Criterion c(6, "existence witnesses pass on every non-chain, error on chains");
    const auto check_poset = [&](const Poset& p) {
        if (p.is_chain()) {
            try {
                existence_witnesses(p);
                c.record(false);
            } catch (const input_error&) {
                c.record(true);
            }
            return;
        }
        const auto [order_h, chain_h] = existence_witnesses(p);
        c.record(checkcut(p, order_h, Target::order).report.separating);
        c.record(checkcut(p, chain_h, Target::chain).report.separating);
    };
    for (const auto& p : corpus_small) check_poset(p);
    for (const auto& p : corpus_five) check_poset(p);
}

void criterion7() {
    Criterion c(7, "disjoint chain classifier matches the cut decision, <= 7 elements");
    // Multisets of chain lengths summing to n.
    std::vector<std::vector<int>> shapes;
    const auto partitions = [&](auto&& self, int remaining, int max_part,
                                std::vector<int>& acc) -> void {
        if (remaining == 0) {
            shapes.push_back(acc);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            acc.push_back(part);
            self(self, remaining - part, part, acc);
            acc.pop_back();
        }
    };
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> acc;
        partitions(partitions, n, n, acc);
    }

    long long swept = 0;
    for (const auto& shape : shapes) {
        const Poset p = disjoint_chains(shape);
        const int n = p.size();
        long long separating_vectors = 0;
        std::set<SignPattern> separating_patterns;
        const detail::CutContext ctx(p, Target::order);
        sweep_vectors(n, -1, 1, [&](const std::vector<int>& digits) {
            if (all_zero(digits)) return;
            const auto h = hyperplane_from(p, digits, 0);
            const auto verdict = classify(p, h, Family::disjoint_chains);
            const auto cut = ctx.check(bind_hyperplane(p, h).coeffs, Rational(0));
            c.record(verdict.separating == cut.report.separating);
            ++swept;
            if (cut.report.separating) {
                ++separating_vectors;
                separating_patterns.insert(normalized(cut.report.pattern));
            }
        });

        // Resolution of the claimed 2^(number of minimal elements) count: the
        // oracle reports the true decomposition count wherever the candidate
        // guard admits it (every shape up to five elements except 1+1+1+1+1).
        if (n >= 2 && n <= 5) {
            std::string shape_text;
            for (int len : shape) shape_text += (shape_text.empty() ? "" : "+") + std::to_string(len);
            const int m = static_cast<int>(p.minimal_elements().size());
            std::string summary = "chains " + shape_text + ": 2^m = " + std::to_string(1 << m) +
                                  ", sign assignments 2^m - 2 = " + std::to_string((1 << m) - 2) +
                                  ", separating {-1,0,1} vectors = " +
                                  std::to_string(separating_vectors) + " (" +
                                  std::to_string(separating_patterns.size()) + " decompositions)";
            try {
                const auto oracle = enumerate_poset_cuts(p, Target::order);
                summary += ", oracle total = " + std::to_string(oracle.size());
                for (const auto& pat : separating_patterns)
                    c.record(std::find(oracle.begin(), oracle.end(), pat) != oracle.end());
            } catch (const resource_error&) {
                summary += ", oracle skipped (candidate guard)";
            }
            c.note(summary);
        }
    }
    c.note("swept " + std::to_string(swept) + " hyperplanes over " +
           std::to_string(shapes.size()) + " chain posets");
}

void criterion8() {
    Criterion c(8, "binary tree regression instances");
    {
        const Poset tree = Poset::create({"a", "b", "p", "d", "e", "f", "g"},
                                         {{0, 2}, {1, 2}, {2, 3}, {4, 3}, {5, 4}, {6, 4}});
        PosetHyperplane h;
        h.coeffs = {{"a", 1}, {"b", 1}, {"p", -2}, {"d", 0}, {"e", 2}, {"f", -1}, {"g", -1}};
        h.rhs = 0;
        const auto cut = checkcut(tree, h, Target::order);
        c.record(cut.report.separating);
        if (!cut.report.separating) {
            c.note("(a) the seven-node magnitude-two hyperplane is not separating: the");
            c.note("    ideals {a,b,f} and {a,b,p,f} form a bad pair (values +1 and -1");
            c.note("    across the connected difference {p}); the LP edge oracle confirms");
            c.note("    the crossed edge, and no separating hyperplane with unequal");
            c.note("    nonzero magnitudes exists on this tree for coefficients in");
            c.note("    {-2..2}, rhs 0 (exhaustive)");
        }
    }
    {
        const Poset tree = Poset::create(
            {"a", "b", "p", "c", "d", "q", "g", "e", "f", "r", "u", "v", "s", "t", "o"},
            {{0, 2}, {1, 2}, {3, 5}, {4, 5}, {2, 6}, {5, 6},
             {7, 9}, {8, 9}, {10, 12}, {11, 12}, {9, 13}, {12, 13},
             {6, 14}, {13, 14}});
        PosetHyperplane h;
        h.coeffs = {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"p", -1}, {"q", -1},
                    {"g", -1}, {"e", -1}, {"f", -1}, {"u", -1}, {"v", -1}, {"r", 1},
                    {"s", 1}, {"t", 1}, {"o", 0}};
        h.rhs = 0;
        const auto verdict = classify(tree, h, Family::binary_tree);
        c.record(verdict.min_signs && verdict.equal_abs && verdict.unique_extension);
        c.record(!verdict.separating);
        const auto cut = checkcut(tree, h, Target::order);
        c.record(cut.bad_pair.has_value());

        const auto gen = [&](std::initializer_list<const char*> labels) {
            ElemSet m = 0;
            for (const char* l : labels) m |= ElemSet(1) << tree.index_of(l);
            return tree.ideal_generated_by(m);
        };
        const ElemSet known_first = gen({"g", "e", "f"});
        const ElemSet known_second = gen({"a", "b", "c", "d", "e", "f"});
        c.record(is_bad_pair(tree, h, Target::order, known_first, known_second));
        if (cut.bad_pair) {
            const std::set<ElemSet> reported{cut.bad_pair->first, cut.bad_pair->second};
            const bool matches = reported == std::set<ElemSet>{known_first, known_second};
            c.record(matches);
            if (!matches) {
                c.note("(b) the expected pair <g,e,f> vs <a,b,c,d,e,f> is a confirmed bad");
                c.note("    pair, but the first pair in bitmask order is {a,b,c,e,f} vs");
                c.note("    <a,b,c,d,e,f>, whose lower ideal is a proper subset of the");
                c.note("    expected pair's and so precedes it under any element numbering");
            }
        }
    }
}

void criterion9() {
    Criterion c(9, "zigzag description is exact under the minimal-sign condition, <= 7 elements");
    {
        const Poset v = Poset::create({"a", "b", "c"}, {{2, 0}, {2, 1}});
        PosetHyperplane h;
        h.coeffs = {{"a", -1}, {"b", -1}, {"c", 1}};
        h.rhs = 0;
        c.record(checkcut(v, h, Target::order).report.separating);
    }
    long long restricted = 0;
    for (int n = 1; n <= 7; ++n)
        for (const ZigzagStart start : {ZigzagStart::up, ZigzagStart::down}) {
            if (n == 1 && start == ZigzagStart::down) continue;
            const Poset p = zigzag(n, start);
            sweep_vectors(n, -1, 1, [&](const std::vector<int>& digits) {
                if (all_zero(digits)) return;
                const auto h = hyperplane_from(p, digits, 0);
                const auto verdict = classify(p, h, Family::zigzag);
                if (!verdict.min_signs) return;
                ++restricted;
                c.record((verdict.equal_abs && verdict.unique_extension) == verdict.separating);
            });
        }
    c.note("restricted sweep covered " + std::to_string(restricted) + " hyperplanes");
}

void criterion10() {
    Criterion c(10, "Birkhoff polytopes admit no cut");
    const auto b3 = birkhoff_skeleton(3);
    c.record(b3.vertices.size() == 6 && b3.edges.size() == 15);
    c.record(!search_separating(3).has_value());
    c.record(!search_separating(4).has_value());

    for (int n = 2; n <= 4; ++n) {
        const auto model = birkhoff_skeleton(n);
        std::set<std::pair<int, int>> edges(model.edges.begin(), model.edges.end());
        const int nv = static_cast<int>(model.vertices.size());
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                c.record(edges.count({i, j}) ==
                         static_cast<std::size_t>(edge_oracle(model.vertices, i, j)));
    }

    c.record(vertex_sum_identities());

    std::mt19937 rng(987654321u);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        std::vector<int> elems(n);
        std::iota(elems.begin(), elems.end(), 1);
        std::shuffle(elems.begin(), elems.end(), rng);
        const int len1 = 3 + static_cast<int>(rng() % (n - 5));
        const int len2 = 3 + static_cast<int>(rng() % (n - len1 - 2));
        std::vector<std::vector<int>> cycles = {
            {elems.begin(), elems.begin() + len1},
            {elems.begin() + len1, elems.begin() + len1 + len2}};
        if (n - len1 - len2 >= 2 && rng() % 2 == 0)
            cycles.push_back({elems.begin() + len1 + len2, elems.end()});
        c.record(cycle_merging_certificate(Permutation::from_cycles(cycles, n)).passed());
    }

    const auto b4 = birkhoff_skeleton(4);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& model = trial % 2 == 0 ? b3 : b4;
        const int dim = static_cast<int>(model.vertices.front().size());
        RatVector coeffs(dim);
        bool nonzero = false;
        for (auto& x : coeffs) {
            x = entry(rng);
            nonzero |= x != 0;
        }
        if (!nonzero) continue;
        const Rational rhs(entry(rng));
        c.record(!is_separating(model, Hyperplane(std::move(coeffs), rhs)).separating);
    }
}

void criterion11() {
    Criterion c(11, "property suite: symmetry, bijection and oracle containment");
    std::mt19937 rng(55555u);
    std::uniform_int_distribution<int> entry(-3, 3);

    const Poset v = Poset::create({"a", "b", "c"}, {{2, 0}, {2, 1}});
    const std::vector<SkeletonModel> models = {cube_model(3), order_polytope_model(v),
                                               chain_polytope_model(v), birkhoff_skeleton(3)};
    for (const auto& model : models) {
        const int dim = static_cast<int>(model.vertices.front().size());
        for (int trial = 0; trial < 40; ++trial) {
            RatVector coeffs(dim);
            bool nonzero = false;
            for (auto& x : coeffs) {
                x = Rational(entry(rng)) / (1 + rng() % 3);
                nonzero |= x != 0;
            }
            if (!nonzero) continue;
            const Rational rhs = Rational(entry(rng)) / (1 + rng() % 3);
            const Hyperplane h(coeffs, rhs);
            const auto base = is_separating(model, h);

            const auto neg = is_separating(model, h.negated_form());
            c.record(base.separating == neg.separating);
            c.record(base.pattern == negated(neg.pattern));

            const Rational scale = Rational(1 + rng() % 5) / (1 + rng() % 5);
            RatVector scaled(dim);
            for (int i = 0; i < dim; ++i) scaled[i] = coeffs[i] * scale;
            const auto sc = is_separating(model, Hyperplane(std::move(scaled), rhs * scale));
            c.record(base.separating == sc.separating && base.pattern == sc.pattern &&
                     base.witness == sc.witness && base.edge_i == sc.edge_i &&
                     base.edge_j == sc.edge_j);
        }
    }

    for (const auto& p : corpus_five) c.record(ideals(p).size() == antichains(p).size());

    const std::vector<SkeletonModel> oracle_models = {
        cube_model(2), cube_model(3), order_polytope_model(Poset::create({"a", "b"}, {{0, 1}})),
        chain_polytope_model(v)};
    for (const auto& model : oracle_models) {
        const auto oracle = enumerate_cuts_oracle(model);
        const int dim = static_cast<int>(model.vertices.front().size());
        for (int trial = 0; trial < 150; ++trial) {
            RatVector coeffs(dim);
            bool nonzero = false;
            for (auto& x : coeffs) {
                x = entry(rng);
                nonzero |= x != 0;
            }
            if (!nonzero) continue;
            const Rational rhs(entry(rng));
            const auto rep = is_separating(model, Hyperplane(std::move(coeffs), rhs));
            if (!rep.separating) continue;
            c.record(std::find(oracle.begin(), oracle.end(), normalized(rep.pattern)) !=
                     oracle.end());
        }
    }
}

} // namespace

int main() {
    build_corpora();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
