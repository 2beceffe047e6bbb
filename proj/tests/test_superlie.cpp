#include <doctest.h>

#include <random>

#include "treespace/superlie.hpp"

using namespace treespace;

namespace {

using Mono = BracketMonomial;

Mono L(int i) { return Mono::leaf(i); }
Mono B(const Mono& a, const Mono& b) { return Mono::bracket(a, b); }

/// Random full bracketing of the labels [lo..hi] (inclusive).
Mono random_monomial(int lo, int hi, std::mt19937_64& rng) {
    if (lo == hi) return L(lo);
    std::uniform_int_distribution<int> cut(lo, hi - 1);
    int c = cut(rng);
    return B(random_monomial(lo, c, rng), random_monomial(c + 1, hi, rng));
}

/// All bracketings of the label sequence labels[lo..hi].
void all_monomials(const std::vector<int>& labels, int lo, int hi, std::vector<Mono>& out) {
    if (lo == hi) {
        out.push_back(L(labels[lo]));
        return;
    }
    for (int c = lo; c < hi; ++c) {
        std::vector<Mono> ls, rs;
        all_monomials(labels, lo, c, ls);
        all_monomials(labels, c + 1, hi, rs);
        for (const Mono& a : ls)
            for (const Mono& b : rs) out.push_back(B(a, b));
    }
}

std::vector<Mono> exhaustive_monomials(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<Mono> out;
    do {
        all_monomials(labels, 0, n - 1, out);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

}  // namespace

TEST_CASE("two-generator brackets normalize with the flavor sign") {
    // Odd generators commute inside the superbracket: [x2,x1] = [x1,x2].
    SuperLieElement super = normalize(B(L(2), L(1)), Flavor::Super);
    CHECK(super == SuperLieElement::basis(2, Flavor::Super, {1}));

    SuperLieElement ord = normalize(B(L(2), L(1)), Flavor::Ordinary);
    CHECK(ord == Int(-1) * SuperLieElement::basis(2, Flavor::Ordinary, {1}));
}

TEST_CASE("left-composite superbracket unfolds by the Jacobi rule") {
    // [[x1,x2],x3] = [x1,[x2,x3]] + [x2,[x1,x3]] in the super flavor.
    SuperLieElement e = normalize(B(B(L(1), L(2)), L(3)), Flavor::Super);
    SuperLieElement expect(3, Flavor::Super);
    expect.add({1, 2}, Int(1));
    expect.add({2, 1}, Int(1));
    CHECK(e == expect);
    CHECK(e.text() == "[a,[b,c]] + [b,[a,c]]");
}

TEST_CASE("associative expansion of degree-2 brackets") {
    AssocExpansion ord = assoc_expand(B(L(1), L(2)), Flavor::Ordinary);
    AssocExpansion expect_ord = {{{1, 2}, Int(1)}, {{2, 1}, Int(-1)}};
    CHECK(ord == expect_ord);

    AssocExpansion sup = assoc_expand(B(L(1), L(2)), Flavor::Super);
    AssocExpansion expect_sup = {{{1, 2}, Int(1)}, {{2, 1}, Int(1)}};
    CHECK(sup == expect_sup);
}

TEST_CASE("normalize is idempotent on basis brackets") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> word(n - 1);
        std::iota(word.begin(), word.end(), 1);
        do {
            for (Flavor f : {Flavor::Ordinary, Flavor::Super}) {
                SuperLieElement e = normalize(lambda_bracket(word, n), f);
                CHECK(e == SuperLieElement::basis(n, f, word));
            }
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("normalize agrees with the associative oracle, exhaustively to n=4") {
    for (int n = 2; n <= 4; ++n) {
        for (const Mono& m : exhaustive_monomials(n)) {
            for (Flavor f : {Flavor::Ordinary, Flavor::Super}) {
                SuperLieElement e = normalize(m, f);
                CHECK(assoc_expand(e) == assoc_expand(m, f));
            }
        }
    }
}

TEST_CASE("normalize agrees with the associative oracle on random monomials") {
    std::mt19937_64 rng(20240817);
    for (int n : {5, 6}) {
        for (int trial = 0; trial < 500; ++trial) {
            Mono shaped = random_monomial(1, n, rng);
            // Random labeling.
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            Mono m = shaped.substitute(Perm(img));
            for (Flavor f : {Flavor::Ordinary, Flavor::Super}) {
                SuperLieElement e = normalize(m, f);
                CHECK(assoc_expand(e) == assoc_expand(m, f));
            }
        }
    }
}

TEST_CASE("normalize rejects non-multilinear input") {
    CHECK_THROWS_AS(normalize(B(L(1), L(1)), Flavor::Super), std::invalid_argument);
    CHECK_THROWS_AS(normalize(B(L(1), L(3)), Flavor::Super), std::invalid_argument);
}

TEST_CASE("super Jacobi identity holds for random homogeneous arguments") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);  // up to 7
        // Split {1..n} into three consecutive nonempty blocks, randomized by a
        // label shuffle afterwards.
        int c1 = 1 + static_cast<int>(rng() % (n - 2));
        int c2 = c1 + 1 + static_cast<int>(rng() % (n - c1 - 1));
        Mono x = random_monomial(1, c1, rng);
        Mono y = random_monomial(c1 + 1, c2, rng);
        Mono z = random_monomial(c2 + 1, n, rng);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        x = x.substitute(Perm(img));
        y = y.substitute(Perm(img));
        z = z.substitute(Perm(img));
        const int dx = x.degree(), dy = y.degree(), dz = z.degree();
        auto sgn = [](int e) { return e % 2 == 0 ? Int(1) : Int(-1); };
        std::vector<std::pair<Int, Mono>> terms = {
            {sgn(dz * dx), B(B(x, y), z)},
            {sgn(dx * dy), B(B(y, z), x)},
            {sgn(dy * dz), B(B(z, x), y)},
        };
        CHECK(normalize(terms, n, Flavor::Super).is_zero());
    }
}

TEST_CASE("theta on two generators") {
    // gamma = id: theta([x1,x2]) = +[x1,x2].
    CHECK(theta(B(L(1), L(2))) == SuperLieElement::basis(2, Flavor::Super, {1}));
    // gamma = (12): the sign flips, and the superbracket itself is symmetric.
    CHECK(theta(B(L(2), L(1))) == Int(-1) * SuperLieElement::basis(2, Flavor::Super, {1}));
    // Consistency with the other evaluation order through normalize.
    SuperLieElement ord = normalize(B(L(2), L(1)), Flavor::Ordinary);
    CHECK(theta(ord) == Int(-1) * SuperLieElement::basis(2, Flavor::Super, {1}));
}

TEST_CASE("theta maps the ordinary basis onto the super basis up to sign") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> word(n - 1);
        std::iota(word.begin(), word.end(), 1);
        do {
            SuperLieElement img = theta(SuperLieElement::basis(n, Flavor::Ordinary, word));
            auto [sign, w] = img.single_basis_term();
            CHECK(sign != 0);
            CHECK(w == word);
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

TEST_CASE("theta equivariance: theta(sigma.g) = sign(sigma) sigma.theta(g)") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> word(n - 1);
        std::iota(word.begin(), word.end(), 1);
        std::vector<std::vector<int>> words;
        do {
            words.push_back(word);
        } while (std::next_permutation(word.begin(), word.end()));
        for (const Perm& sigma : all_perms(n)) {
            for (const auto& w : words) {
                SuperLieElement g = SuperLieElement::basis(n, Flavor::Ordinary, w);
                SuperLieElement lhs = theta(permute_generators(g, sigma));
                SuperLieElement rhs = Int(sigma.sign()) * permute_generators(theta(g), sigma);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("permute_generators matrix entries on the two-dimensional module") {
    // Basis order: e1 = lambda_{(1,2)} = [x1,[x2,x3]], e2 = lambda_{(2,1)}.
    SuperLieElement e1 = SuperLieElement::basis(3, Flavor::Ordinary, {1, 2});
    SuperLieElement e2 = SuperLieElement::basis(3, Flavor::Ordinary, {2, 1});

    CHECK(permute_generators(e1, Perm::identity(3)) == e1);

    // (x1 x2): swaps the basis vectors.
    Perm swap12 = Perm::transposition(3, 0, 1);
    CHECK(permute_generators(e1, swap12) == e2);
    CHECK(permute_generators(e2, swap12) == e1);

    // (x1 x2 x3): e1 -> -e2, e2 -> e1 - e2; trace -1.
    Perm cyc = Perm::from_cycles(3, {{0, 1, 2}});
    CHECK(permute_generators(e1, cyc) == Int(-1) * e2);
    CHECK(permute_generators(e2, cyc) == e1 - e2);
}

TEST_CASE("bracket text parser") {
    ParsedBrackets p = parse_bracket_text("-[a,[b,[c,[d,e]]]]");
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].first == Int(-1));
    CHECK(p.terms[0].second.text() == "[a,[b,[c,[d,e]]]]");
    CHECK(p.alphabet == std::vector<std::string>{"a", "b", "c", "d", "e"});

    // Arbitrary alphabets map onto 1..n in sorted order.
    ParsedBrackets q = parse_bracket_text("[z2,[z10,z1]] + 2*[z1,[z10,z2]]");
    REQUIRE(q.terms.size() == 2);
    CHECK(q.terms[1].first == Int(2));
    CHECK(q.alphabet == std::vector<std::string>{"z1", "z10", "z2"});

    SuperLieElement e = normalize(q.terms, 3, Flavor::Super);
    CHECK(assoc_expand(e) ==
          assoc_expand(normalize(q.terms, 3, Flavor::Super)));  // sanity on types
    CHECK_THROWS(parse_bracket_text("[a,b"));
    CHECK_THROWS(parse_bracket_text(""));
}

TEST_CASE("monomial shape strings") {
    CHECK(B(L(1), B(L(2), B(L(3), B(L(4), L(5))))).shape() == "[*,[*,[*,[*,*]]]]");
    CHECK(B(B(L(1), L(2)), B(L(3), B(L(4), L(5)))).shape() == "[[*,*],[*,[*,*]]]");
}
