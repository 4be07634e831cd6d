#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "polycut/poset.hpp"

using namespace polycut;

namespace {

Poset two_chain() { return Poset::create({"a", "b"}, {{0, 1}}); }
Poset two_antichain() { return Poset::create({"a", "b"}, {}); }
// c below both a and b.
Poset v_poset() { return Poset::create({"a", "b", "c"}, {{2, 0}, {2, 1}}); }

} // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(Poset::create({"a", "a"}, {}), input_error);
    CHECK_THROWS_AS(Poset::create({"a", "b"}, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Poset::create({"a"}, {{0, 0}}), input_error);
    // a < b, b < c plus the implied a < c is not a transitive reduction.
    CHECK_THROWS_AS(Poset::create({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), input_error);
    const Poset p = Poset::create({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(p.is_chain());
}

TEST_CASE("ideal enumeration") {
    CHECK(ideals(two_antichain()).size() == 4);
    CHECK(ideals(two_chain()).size() == 3);
    CHECK(ideals(v_poset()).size() == 5);
    const auto masks = ideals(two_chain());
    CHECK(masks == std::vector<ElemSet>{0b00, 0b01, 0b11});
}

TEST_CASE("antichain enumeration") {
    CHECK(antichains(two_chain()).size() == 3);
    CHECK(antichains(two_antichain()).size() == 4);
    const auto masks = antichains(v_poset());
    CHECK(masks == std::vector<ElemSet>{0b000, 0b001, 0b010, 0b011, 0b100});
}

TEST_CASE("maximal chains") {
    CHECK(maximal_chains(two_chain()) == std::vector<std::vector<int>>{{0, 1}});
    CHECK(maximal_chains(v_poset()) == std::vector<std::vector<int>>{{2, 0}, {2, 1}});
    const Poset anti3 = Poset::create({"a", "b", "c"}, {});
    CHECK(maximal_chains(anti3).size() == 3);
}

TEST_CASE("connected subsets") {
    CHECK_FALSE(connected_subset(two_antichain(), 0b11));
    CHECK(connected_subset(two_chain(), 0b11));
    CHECK_FALSE(connected_subset(v_poset(), 0b011)); // the two maximal elements
    CHECK(connected_subset(v_poset(), 0b101));
    CHECK(connected_subset(v_poset(), 0b001));
    CHECK_FALSE(connected_subset(v_poset(), 0));
}

TEST_CASE("ideal and antichain counts agree through the maxima bijection") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nd(1, 6);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = nd(rng);
        std::vector<ElemSet> below(n, 0);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (coin(rng) == 0) below[j] |= (ElemSet(1) << i) | below[i];
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
        const Poset p = Poset::from_relation(labels, below);

        const auto ids = ideals(p);
        const auto antis = antichains(p);
        CHECK(ids.size() == antis.size());
        std::set<ElemSet> anti_set(antis.begin(), antis.end());
        std::set<ElemSet> images;
        for (const ElemSet ideal : ids) {
            const ElemSet maxima = ideal_maxima(p, ideal);
            CHECK(anti_set.count(maxima) == 1);
            CHECK(p.ideal_generated_by(maxima) == ideal);
            images.insert(maxima);
        }
        CHECK(images.size() == ids.size());
    }
}

TEST_CASE("comparability connectivity matches Hasse connectivity on order-convex sets") {
    // For order-convex subsets the two notions coincide; exhaustive over all
    // labeled posets with up to five elements.
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : testsupport::all_labeled_posets(n)) {
            std::vector<ElemSet> hasse_adj(n, 0);
            for (auto [lo, hi] : p.covers()) {
                hasse_adj[lo] |= ElemSet(1) << hi;
                hasse_adj[hi] |= ElemSet(1) << lo;
            }
            const auto hasse_connected = [&](ElemSet s) {
                if (s == 0) return false;
                ElemSet reached = s & (~s + 1);
                while (true) {
                    ElemSet next = reached;
                    for (int v = 0; v < n; ++v)
                        if (reached >> v & 1) next |= hasse_adj[v] & s;
                    if (next == reached) break;
                    reached = next;
                }
                return reached == s;
            };
            for (ElemSet s = 0; s < (ElemSet(1) << n); ++s) {
                bool convex = true;
                for (int a = 0; a < n && convex; ++a)
                    for (int b = 0; b < n && convex; ++b) {
                        if (!(s >> a & 1) || !(s >> b & 1) || !p.less(a, b)) continue;
                        for (int mid = 0; mid < n && convex; ++mid)
                            if (p.less(a, mid) && p.less(mid, b) && !(s >> mid & 1))
                                convex = false;
                    }
                if (convex) CHECK(connected_subset(p, s) == hasse_connected(s));
            }
        }
    }
}

TEST_CASE("linear extension counts") {
    CHECK(count_linear_extensions(Poset::create({"a", "b", "c"}, {{0, 1}, {1, 2}})) == 1);
    CHECK(count_linear_extensions(two_antichain()) == 2);
    CHECK(count_linear_extensions(v_poset()) == 2);
    const Poset anti3 = Poset::create({"a", "b", "c"}, {});
    CHECK(count_linear_extensions(anti3) == 6);
}

TEST_CASE("linear extension count agrees with the ideal lattice path count") {
    // Independent oracle: extensions correspond to maximal chains of the
    // ideal lattice, counted by dynamic programming over ideals.
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : testsupport::all_labeled_posets(n)) {
            std::map<ElemSet, long long> paths{{0, 1}};
            for (const ElemSet ideal : ideals(p)) {
                if (ideal == 0) continue;
                long long total = 0;
                for (int v = 0; v < n; ++v) {
                    if (!(ideal >> v & 1)) continue;
                    if (p.strictly_above(v) & ideal) continue; // v not maximal in it
                    total += paths.at(ideal & ~(ElemSet(1) << v));
                }
                paths[ideal] = total;
            }
            CHECK(count_linear_extensions(p) == paths.at(p.full_mask()));
        }
}

TEST_CASE("disjoint chain generator") {
    const Poset p = disjoint_chains({4, 3});
    CHECK(p.size() == 7);
    CHECK(p.covers().size() == 5);
    CHECK(p.minimal_elements() == std::vector<int>{0, 4});
    CHECK_THROWS_AS(disjoint_chains({}), input_error);
    CHECK_THROWS_AS(disjoint_chains({0}), input_error);
    // Cover count closed form.
    const std::vector<int> lengths{2, 1, 3};
    int expected = 0;
    for (int len : lengths) expected += len - 1;
    CHECK(static_cast<int>(disjoint_chains(lengths).covers().size()) == expected);
}

TEST_CASE("binary tree generator") {
    const Poset three = binary_tree("(**)");
    CHECK(three.size() == 3);
    CHECK(three.maximal_elements() == std::vector<int>{2});
    CHECK(three.minimal_elements() == std::vector<int>{0, 1});

    const Poset seven = binary_tree("((**)(**))");
    CHECK(seven.size() == 7);
    CHECK(seven.covers().size() == 6);
    CHECK(seven.maximal_elements() == std::vector<int>{6});
    CHECK(seven.minimal_elements() == std::vector<int>{0, 1, 3, 4});

    CHECK_THROWS_AS(binary_tree("(*"), input_error);
    CHECK_THROWS_AS(binary_tree("(*)"), input_error);
    CHECK_THROWS_AS(binary_tree("**"), input_error);
}

TEST_CASE("zigzag generator") {
    const Poset up3 = zigzag(3, ZigzagStart::up);
    CHECK(up3.covers() == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
    CHECK(up3.maximal_elements() == std::vector<int>{1});

    const Poset down3 = zigzag(3, ZigzagStart::down);
    CHECK(down3.covers() == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});
    CHECK(down3.minimal_elements() == std::vector<int>{1});

    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(zigzag(n, ZigzagStart::up).covers().size()) == n - 1);
}

TEST_CASE("poset text format round trip") {
    const std::string text = "poset v1\nelements a b c\ncover c a\ncover c b\n";
    std::istringstream in(text);
    const Poset p = parse_poset(in);
    CHECK(p.size() == 3);
    CHECK(p.less(2, 0));
    CHECK(format_poset(p) == text);

    const std::string commented = "# a comment\nposet v1\nelements a b\n# another\ncover a b\n";
    std::istringstream in2(commented);
    CHECK(parse_poset(in2).less(0, 1));
}

TEST_CASE("poset text format errors") {
    const auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_poset(in), input_error);
    };
    reject("");
    reject("poset v2\nelements a\n");
    reject("poset v1\n");
    reject("poset v1\nelements a a\n");
    reject("poset v1\nelements a b\ncover a\n");
    reject("poset v1\nelements a b\ncover a c\n");
    reject("poset v1\nelements a b\nedge a b\n");
    reject("poset v1\nelements a b\ncover a b\ncover b a\n");
}

TEST_CASE("guards") {
    std::vector<std::string> labels(11);
    for (int i = 0; i < 11; ++i) labels[i] = "x" + std::to_string(i);
    const Poset big = Poset::create(labels, {});
    CHECK_THROWS_AS(count_linear_extensions(big), resource_error);

    std::vector<std::string> too_many(25);
    for (int i = 0; i < 25; ++i) too_many[i] = "x" + std::to_string(i);
    CHECK_THROWS_AS(Poset::create(too_many, {}), resource_error);
}
