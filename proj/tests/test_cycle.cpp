#include <doctest.h>

#include <random>

#include <json.hpp>

#include "treespace/cycle.hpp"

using namespace treespace;

namespace {
Bipartition bip(std::vector<int> side) { return Bipartition{std::move(side)}; }
}  // namespace

TEST_CASE("two-label star term") {
    CycleTerm term = cycle_term(LabeledTree::star(2));
    CHECK(term.edge_word.empty());
    CHECK(term.monomial_sign == -1);
    CHECK(term.monomial.text() == "[a,b]");
    CHECK(term.coeff == Int(-1) * SuperLieElement::basis(2, Flavor::Super, {1}));
}

TEST_CASE("spine tree term with the root at one end") {
    // Leaves 0,1 at one end node, pendants 2 and 3, leaves 4,5 at the other.
    LabeledTree t = LabeledTree::caterpillar(5, Perm::identity(4));
    CycleTerm term = cycle_term(t);
    std::vector<Bipartition> expect = {bip({2, 3, 4, 5}), bip({3, 4, 5}), bip({4, 5})};
    CHECK(term.edge_word == expect);
    CHECK(term.monomial_sign == 1);
    CHECK(term.monomial.text() == "[a,[b,[c,[d,e]]]]");
    CHECK(term.coeff == SuperLieElement::basis(5, Flavor::Super, {1, 2, 3, 4}));
}

TEST_CASE("spine tree term with the root in the middle") {
    // Node layout: {1,2} - {0} - {3} - {4,5}.
    LabeledTree t({0, 1, 2, 3, 4, 5}, 4,
                  {{1, 0}, {2, 0}, {0, 1}, {3, 2}, {4, 3}, {5, 3}},
                  {{0, 1}, {1, 2}, {2, 3}});
    CycleTerm term = cycle_term(t);
    std::vector<Bipartition> expect = {bip({1, 2}), bip({3, 4, 5}), bip({4, 5})};
    CHECK(term.edge_word == expect);
    CHECK(term.monomial_sign == -1);
    CHECK(term.monomial.text() == "[[a,b],[c,[d,e]]]");
    // -[[1,2],[3,[4,5]]] = -lambda_{1234} - lambda_{2134}.
    SuperLieElement want(5, Flavor::Super);
    want.add({1, 2, 3, 4}, Int(-1));
    want.add({2, 1, 3, 4}, Int(-1));
    CHECK(term.coeff == want);
}

TEST_CASE("cross tree term") {
    // Root node {0,1}, a bare central node, cherries {2,3} and {4,5}.
    LabeledTree t({0, 1, 2, 3, 4, 5}, 4,
                  {{0, 0}, {1, 0}, {2, 2}, {3, 2}, {4, 3}, {5, 3}},
                  {{0, 1}, {1, 2}, {1, 3}});
    CycleTerm term = cycle_term(t);
    std::vector<Bipartition> expect = {bip({2, 3, 4, 5}), bip({2, 3}), bip({4, 5})};
    CHECK(term.edge_word == expect);
    CHECK(term.monomial_sign == -1);
    CHECK(term.monomial.text() == "[a,[[b,c],[d,e]]]");
}

TEST_CASE("terms do not depend on the order of the root subtrees") {
    for (int n = 3; n <= 6; ++n)
        for (const LabeledTree& t : enumerate_trees(n, n - 2))
            CHECK(cycle_term_order_independent(t));
}

TEST_CASE("fundamental cycle term counts") {
    OrientedComplex t3 = build_tree_complex(3);
    ModuleChain f3 = build_fundamental_cycle(t3);
    CHECK(f3.coeffs.size() == 3);
    // Each term is +- one super monomial; its basis expansion is pinned here.
    auto coeff_of = [&](const std::string& key) { return f3.coeffs.at(t3.index_of(0, key)); };
    CHECK(coeff_of("(0,1,(2,3))") == SuperLieElement::basis(3, Flavor::Super, {1, 2}));
    CHECK(coeff_of("(0,(1,3),2)") == SuperLieElement::basis(3, Flavor::Super, {2, 1}));
    SuperLieElement v03(3, Flavor::Super);  // -[[x1,x2],x3]
    v03.add({1, 2}, Int(-1));
    v03.add({2, 1}, Int(-1));
    CHECK(coeff_of("(0,(1,2),3)") == v03);

    OrientedComplex t4 = build_tree_complex(4);
    ModuleChain f4 = build_fundamental_cycle(t4);
    CHECK(f4.coeffs.size() == 15);
}

TEST_CASE("the fundamental cycle is a cycle but single terms are not") {
    OrientedComplex t4 = build_tree_complex(4);
    ModuleChain f4 = build_fundamental_cycle(t4);
    CHECK(boundary_of_module_chain(f4, t4).is_zero());

    ModuleChain single;
    single.n = 4;
    single.degree = 1;
    single.coeffs.emplace(f4.coeffs.begin()->first, f4.coeffs.begin()->second);
    CHECK_FALSE(boundary_of_module_chain(single, t4).is_zero());

    OrientedComplex t5 = build_tree_complex(5);
    CHECK(boundary_of_module_chain(build_fundamental_cycle(t5), t5).is_zero());
}

TEST_CASE("invariance under the subgroup fixing the root label") {
    for (int n : {4, 5}) {
        OrientedComplex c = build_tree_complex(n);
        ModuleChain f = build_fundamental_cycle(c);
        for (int i = 1; i + 1 <= n; ++i)
            CHECK(verify_invariance(f, c, Perm::transposition(n + 1, i, i + 1)));
        CHECK_THROWS_AS(verify_invariance(f, c, Perm::transposition(n + 1, 0, 1)),
                        std::invalid_argument);
    }
}

TEST_CASE("caterpillar cochains evaluate to signed basis brackets") {
    for (int n : {4, 5}) {
        OrientedComplex c = build_tree_complex(n);
        ModuleChain f = build_fundamental_cycle(c);
        std::set<std::vector<int>> seen;
        for (const Perm& sigma : all_perms(n - 1)) {
            SuperLieElement v = theta_eval(caterpillar_indicator(c, sigma), f);
            auto [sign, word] = v.single_basis_term();
            REQUIRE(sign != 0);
            std::vector<int> expect(n - 1);
            for (int i = 0; i < n - 1; ++i) expect[i] = sigma(i) + 1;
            CHECK(word == expect);
            seen.insert(word);
        }
        CHECK(seen.size() == static_cast<std::size_t>(factorial(n - 1)));
    }
}

TEST_CASE("pairing kills coboundaries and the zero cochain") {
    OrientedComplex c = build_tree_complex(5);
    ModuleChain f = build_fundamental_cycle(c);
    CHECK(theta_eval({}, f).is_zero());

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Cochain g;
        for (int row = 0; row < 105; ++row)
            if (rng() % 3 == 0) g[row] = Int(static_cast<long long>(rng() % 7) - 3);
        Cochain fs = caterpillar_indicator(c, Perm::identity(4));
        Cochain shifted = fs;
        for (const auto& [id, v] : coboundary(c, g)) {
            shifted[id] += v;
            if (shifted[id].is_zero()) shifted.erase(id);
        }
        CHECK(theta_eval(shifted, f) == theta_eval(fs, f));
    }
}

TEST_CASE("five-label census matches the displayed shape classes") {
    OrientedComplex c = build_tree_complex(5);
    ModuleChain f = build_fundamental_cycle(c);
    N5Census census = verify_n5_cycle_census(c, f);
    CHECK(census.chain_end == 60);
    CHECK(census.chain_mid == 30);
    CHECK(census.cross == 15);
    CHECK(census.all_terms_match);
}

TEST_CASE("every five-label coefficient re-expands to its raw monomial") {
    // The stored basis form of each coefficient and the raw monomial must be
    // the same element of the module, word for word in the associative ring.
    OrientedComplex c = build_tree_complex(5);
    for (const std::string& key : c.keys[2]) {
        CycleTerm term = cycle_term(parse_tree(key));
        AssocExpansion raw = assoc_expand(term.monomial, Flavor::Super);
        if (term.monomial_sign < 0)
            for (auto& [w, v] : raw) v = -v;
        CHECK(assoc_expand(term.coeff) == raw);
    }
}

TEST_CASE("cycle export is well-formed") {
    OrientedComplex c = build_tree_complex(4);
    ModuleChain f = build_fundamental_cycle(c);
    auto j = nlohmann::json::parse(dump_cycle_json(c, f));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("term_count") == 15);
    CHECK(j.at("terms").size() == 15);
}
