#include <doctest.h>

#include <algorithm>
#include <set>

#include "treespace/trees.hpp"

using namespace treespace;

TEST_CASE("star tree canonical encoding") {
    LabeledTree star = LabeledTree::star(3);
    CHECK(star.encoding() == "(0,1,2,3)");
    CHECK(star.internal_edge_count() == 0);
    CHECK(star.bipartitions().empty());
}

TEST_CASE("one-edge tree encodings identify v_A with its complement") {
    // The tree separating {0,1} from {2,3}, built with both node orders.
    LabeledTree a({0, 1, 2, 3}, 2, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}, {{0, 1}});
    LabeledTree b({0, 1, 2, 3}, 2, {{0, 1}, {1, 1}, {2, 0}, {3, 0}}, {{1, 0}});
    CHECK(a.encoding() == b.encoding());
    CHECK(a.encoding() == "(0,1,(2,3))");
    auto bips = a.bipartitions();
    REQUIRE(bips.size() == 1);
    CHECK(bips[0].side_other == std::vector<int>{2, 3});
}

TEST_CASE("degree validation rejects degree-2 nodes") {
    // A path of two internal nodes with too few leaves.
    CHECK_THROWS(LabeledTree({0, 1, 2}, 2, {{0, 0}, {1, 0}, {2, 1}}, {{0, 1}}));
}

TEST_CASE("caterpillar bipartitions follow the spine") {
    LabeledTree cat = LabeledTree::caterpillar(4, Perm::identity(3));
    CHECK(cat.encoding() == "(0,1,(2,(3,4)))");
    auto bips = cat.bipartitions();
    REQUIRE(bips.size() == 2);
    CHECK(bips[0].side_other == std::vector<int>{2, 3, 4});
    CHECK(bips[1].side_other == std::vector<int>{3, 4});
}

TEST_CASE("caterpillars are pairwise distinct") {
    for (int n : {4, 5}) {
        std::set<std::string> encs;
        for (const Perm& s : all_perms(n - 1)) encs.insert(LabeledTree::caterpillar(n, s).encoding());
        CHECK(encs.size() == static_cast<std::size_t>(factorial(n - 1)));
    }
}

TEST_CASE("binary census matches the double factorial") {
    for (int n = 2; n <= 6; ++n) {
        auto trees = enumerate_trees(n, n - 2);
        CHECK(trees.size() == static_cast<std::size_t>(double_factorial_odd(n)));
        // Duplicate-free by construction.
        std::set<std::string> encs;
        for (const auto& t : trees) encs.insert(t.encoding());
        CHECK(encs.size() == trees.size());
    }
}

TEST_CASE("n=5 top level has 105 trees") {
    CHECK(enumerate_trees(5, 3).size() == 105);
}

TEST_CASE("n=3 vertex level has the three bipartition trees") {
    auto trees = enumerate_trees(3, 1);
    CHECK(trees.size() == 3);
}

TEST_CASE("k=0 gives the star and bad k throws") {
    CHECK(enumerate_trees(2, 0).size() == 1);
    CHECK_THROWS_AS(enumerate_trees(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(4, -1), std::invalid_argument);
}

TEST_CASE("relabel is an action and identity fixes encodings") {
    LabeledTree cat = LabeledTree::caterpillar(4, Perm::identity(3));
    CHECK(cat.relabel(Perm::identity(5)).encoding() == cat.encoding());

    // Transposition (1 2) on the one-edge tree {0,1}|{2,3} gives {0,2}|{1,3}.
    LabeledTree v01 = parse_tree("(0,1,(2,3))");
    LabeledTree v02({0, 1, 2, 3}, 2, {{0, 0}, {2, 0}, {1, 1}, {3, 1}}, {{0, 1}});
    LabeledTree moved = v01.relabel(Perm::transposition(4, 1, 2));
    CHECK(moved.encoding() == v02.encoding());
    CHECK(moved.bipartitions()[0].side_other == std::vector<int>{1, 3});

    // Full orbit of v_{0,1} under all of Sigma_4 is the whole vertex set.
    std::set<std::string> orbit;
    for (const Perm& s : all_perms(4)) orbit.insert(v01.relabel(s).encoding());
    CHECK(orbit.size() == 3);

    // Action contract: relabel twice equals relabel by the composite.
    for (const Perm& s : all_perms(4))
        for (const Perm& t : {Perm::transposition(4, 0, 3), Perm::from_cycles(4, {{0, 1, 2}})}) {
            CHECK(v01.relabel(s).relabel(t).encoding() == v01.relabel(compose(t, s)).encoding());
        }
}

TEST_CASE("contract_edge faces") {
    LabeledTree cat = LabeledTree::caterpillar(4, Perm::identity(3));
    auto bips = cat.bipartitions();
    LabeledTree f0 = cat.contract_edge(bips[0]);
    CHECK(f0.internal_edge_count() == 1);
    CHECK(f0.bipartitions()[0].side_other == bips[1].side_other);
    LabeledTree f1 = cat.contract_edge(bips[1]);
    CHECK(f1.bipartitions()[0].side_other == bips[0].side_other);

    // Contracting everything yields the star.
    LabeledTree s = f0.contract_edge(f0.bipartitions()[0]);
    CHECK(s.encoding() == LabeledTree::star(4).encoding());

    CHECK_THROWS(cat.contract_edge(Bipartition{{1, 3}}));
}

TEST_CASE("contract commutes with relabel") {
    for (const auto& t : enumerate_trees(5, 3)) {
        auto bips = t.bipartitions();
        const Perm sigma = Perm::from_cycles(6, {{1, 4, 2}, {3, 5}});
        for (const auto& e : bips) {
            // sigma . e
            std::vector<int> img;
            for (int v : e.side_other) img.push_back(sigma(v));
            std::sort(img.begin(), img.end());
            Bipartition e2{img};
            if (std::binary_search(img.begin(), img.end(), 0)) continue;  // canonical side flip, skip
            CHECK(t.relabel(sigma).contract_edge(e2).encoding() ==
                  t.contract_edge(e).relabel(sigma).encoding());
        }
    }
}

TEST_CASE("split_at_root and graft are inverse") {
    LabeledTree star2 = LabeledTree::star(2);
    auto [y, z] = star2.split_at_root();
    CHECK(y.encoding() == "(0,1)");
    CHECK(z.encoding() == "(0,2)");
    CHECK(LabeledTree::graft(y, z).encoding() == star2.encoding());

    LabeledTree cat = LabeledTree::caterpillar(4, Perm::identity(3));
    auto [cy, cz] = cat.split_at_root();
    CHECK(cy.encoding() == "(0,1)");
    CHECK(cz.labels() == std::vector<int>{0, 2, 3, 4});

    for (const auto& t : enumerate_trees(5, 3)) {
        auto [a, b] = t.split_at_root();
        CHECK(LabeledTree::graft(a, b).encoding() == t.encoding());
    }
    CHECK_THROWS(LabeledTree::star(4).split_at_root());
}

TEST_CASE("bipartitions of one tree are pairwise compatible") {
    for (const auto& t : enumerate_trees(6, 4)) {
        auto bips = t.bipartitions();
        for (std::size_t i = 0; i < bips.size(); ++i)
            for (std::size_t j = i + 1; j < bips.size(); ++j)
                CHECK(compatible(bips[i], bips[j], t.labels()));
    }
    // Incompatible pair: {1,2} and {2,3} overlap without nesting.
    CHECK_FALSE(compatible(Bipartition{{1, 2}}, Bipartition{{2, 3}}, {0, 1, 2, 3, 4}));
}

TEST_CASE("parse_tree round-trips encodings") {
    for (int k : {1, 2, 3}) {
        for (const auto& t : enumerate_trees(5, k)) {
            CHECK(parse_tree(t.encoding()).encoding() == t.encoding());
        }
    }
    CHECK_THROWS(parse_tree("(0,1"));
    CHECK_THROWS(parse_tree("(0,1,2,3)x"));
}
