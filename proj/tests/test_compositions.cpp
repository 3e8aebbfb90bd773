#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsymtab/compositions.hpp"

using namespace qsymtab;

namespace {

// independent cover oracle: apply the two cover rules directly
std::set<Composition> brute_force_covers(const Composition& alpha) {
    std::set<Composition> out;
    std::vector<int> appended = alpha.parts();
    appended.push_back(1);
    out.insert(Composition(appended));
    for (int j = 1; j <= alpha.length(); ++j) {
        bool rightmost = true;
        for (int i = j + 1; i <= alpha.length(); ++i)
            if (alpha.part(i) == alpha.part(j)) rightmost = false;
        if (!rightmost) continue;
        std::vector<int> parts = alpha.parts();
        parts[static_cast<size_t>(j - 1)] += 1;
        out.insert(Composition(parts));
    }
    return out;
}

std::vector<std::set<int>> subsets_of(int n) {
    std::vector<std::set<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) s.insert(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("composition basics and parsing") {
    Composition a({1, 2, 1, 2});
    CHECK(a.weight() == 6);
    CHECK(a.length() == 4);
    CHECK(a.str() == "(1,2,1,2)");
    CHECK(Composition::parse("(1,2,1,2)") == a);
    CHECK(Composition::parse("1,2,1,2") == a);
    CHECK(Composition::parse("()").empty());
    CHECK(Composition().weight() == 0);
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(WeakComposition({0, 2, 0, 1}).collapse() == Composition({2, 1}));
}

TEST_CASE("subset correspondence") {
    CHECK(comp_of_subset({1, 5}, 7) == Composition({1, 4, 2}));
    CHECK(comp_of_subset({}, 5) == Composition({5}));
    CHECK(comp_of_subset({1, 2, 3}, 4) == Composition({1, 1, 1, 1}));
    CHECK_THROWS_AS(comp_of_subset({7}, 7), std::invalid_argument);

    // round trip both ways, exhaustively
    for (int n = 0; n <= 10; ++n) {
        for (const auto& s : subsets_of(std::max(0, n - 1))) {
            Composition c = comp_of_subset(s, n);
            CHECK(c.weight() == n);
            CHECK(subset_of_comp(c) == s);
        }
    }
}

TEST_CASE("complement") {
    CHECK(complement(Composition({1, 4, 2})) == Composition({2, 1, 1, 2, 1}));
    CHECK(complement(Composition({5})) == Composition({1, 1, 1, 1, 1}));
    CHECK(complement(Composition({1, 1, 2})) == Composition({3, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const Composition& c : compositions_of(n))
            CHECK(complement(complement(c)) == c);
}

TEST_CASE("covers match the brute-force rules") {
    for (int n = 0; n <= 8; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            std::set<Composition> covers(lc_covers_of(alpha).begin(),
                                         lc_covers_of(alpha).end());
            CHECK(covers == brute_force_covers(alpha));
            for (const Composition& beta : covers)
                CHECK(lc_relation(alpha, beta) == LcRelation::Covers);
        }
}

TEST_CASE("L_c relation examples") {
    CHECK(lc_relation(Composition({1, 2}), Composition({1, 2, 1})) == LcRelation::Covers);
    CHECK(lc_relation(Composition({1}), Composition({2, 2, 3})) == LcRelation::StrictlyBelow);
    CHECK(lc_relation(Composition({2}), Composition({2})) == LcRelation::IncomparableOrEqual);
    for (int n = 0; n <= 5; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            std::vector<int> appended = alpha.parts();
            appended.push_back(1);
            CHECK(lc_relation(alpha, Composition(appended)) == LcRelation::Covers);
        }
}

TEST_CASE("order implies containment but not conversely") {
    for (int n = 1; n <= 7; ++n)
        for (const Composition& beta : compositions_of(n))
            for (int k = 0; k < n; ++k)
                for (const Composition& alpha : compositions_of(k))
                    if (lc_relation(alpha, beta) != LcRelation::IncomparableOrEqual)
                        CHECK(contains(alpha, beta));
    // witness for the failure of the converse
    Composition alpha({1, 1}), beta({2, 1});
    CHECK(contains(alpha, beta));
    CHECK(lc_relation(alpha, beta) == LcRelation::IncomparableOrEqual);
}

TEST_CASE("deconcatenations") {
    auto splits = deconcatenations(Composition({2, 1}));
    REQUIRE(splits.size() == 4);
    CHECK(splits[0].left == Composition());
    CHECK(splits[0].right == Composition({2, 1}));
    CHECK_FALSE(splits[0].near);
    CHECK(splits[1].left == Composition({1}));
    CHECK(splits[1].right == Composition({1, 1}));
    CHECK(splits[1].near);
    CHECK(splits[2].left == Composition({2}));
    CHECK(splits[2].right == Composition({1}));
    CHECK_FALSE(splits[2].near);
    CHECK(splits[3].left == Composition({2, 1}));
    CHECK(splits[3].right == Composition());

    CHECK(deconcatenations(Composition({1})).size() == 2);
    auto single = deconcatenations(Composition({4}));
    CHECK(single.size() == 5);
    CHECK(std::count_if(single.begin(), single.end(),
                        [](const Deconcatenation& d) { return d.near; }) == 3);

    for (int n = 0; n <= 7; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            auto all = deconcatenations(alpha);
            CHECK(static_cast<int>(all.size()) == n + 1);
            for (const auto& d : all) {
                Composition glued =
                    d.near ? near_concat(d.left, d.right) : concat(d.left, d.right);
                CHECK(glued == alpha);
            }
        }
}

TEST_CASE("partition statistics") {
    CHECK(shape_of(Composition({1, 3, 2, 3, 2})) == Partition({3, 3, 2, 2, 1}));
    CHECK(Partition({3, 3, 2, 1}).conjugate() == Partition({4, 3, 2}));
    CHECK(Partition({3, 3, 2, 1}).conjugate().conjugate() == Partition({3, 3, 2, 1}));
    CHECK(refines(Composition({1, 1, 1}), Composition({3})));
    CHECK(refines(Composition({1, 2, 1}), Composition({3, 1})));
    CHECK_FALSE(refines(Composition({2, 1, 1}), Composition({1, 3})));
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("descending lex extends dominance") {
    for (int n = 1; n <= 9; ++n) {
        auto partitions = partitions_of(n);
        for (const Partition& lambda : partitions)
            for (const Partition& mu : partitions)
                if (dominance_leq(mu, lambda) && !(lambda == mu))
                    CHECK(lambda > mu);  // lexicographic comparison
    }
}

TEST_CASE("declared total order") {
    auto comps = compositions_of(4);
    REQUIRE(comps.size() == 8);
    CHECK(comps[0] == Composition({4}));
    CHECK(comps[1] == Composition({1, 3}));
    CHECK(comps[2] == Composition({3, 1}));
    CHECK(comps[3] == Composition({2, 2}));
    CHECK(comps[4] == Composition({1, 1, 2}));
    CHECK(comps[5] == Composition({1, 2, 1}));
    CHECK(comps[6] == Composition({2, 1, 1}));
    CHECK(comps[7] == Composition({1, 1, 1, 1}));
}

TEST_CASE("skew shapes") {
    SkewShape s(Composition({3, 4, 1, 4}), Composition({2, 3}));
    CHECK(s.size() == 7);
    CHECK(s.rows() == 4);
    CHECK(s.contains_cell(1, 3));
    CHECK_FALSE(s.contains_cell(1, 2));
    CHECK_FALSE(s.contains_cell(2, 5));
    CHECK(s.inner().parts() == std::vector<int>{2, 3, 0, 0});
    CHECK_THROWS_AS(SkewShape(Composition({1}), Composition({2})), std::invalid_argument);
}
