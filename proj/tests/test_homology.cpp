#include <doctest.h>

#include <numeric>

#include "treespace/homology.hpp"

using namespace treespace;

TEST_CASE("smith normal form basics") {
    IntMat id3 = IntMat::Identity(3, 3);
    auto s = smith_normal_form(id3, false);
    CHECK(s.rank == 3);
    CHECK(s.invariant_factors() == std::vector<Int>{Int(1), Int(1), Int(1)});

    IntMat diag(2, 2);
    diag << Int(2), Int(0), Int(0), Int(3);
    auto s2 = smith_normal_form(diag, false);
    CHECK(s2.invariant_factors() == std::vector<Int>{Int(1), Int(6)});
}

TEST_CASE("smith transforms reconstruct the diagonal form") {
    IntMat a(3, 4);
    a << Int(2), Int(4), Int(4), Int(0),
         Int(-6), Int(6), Int(12), Int(6),
         Int(10), Int(4), Int(16), Int(-2);
    auto s = smith_normal_form(a, true);
    IntMat lhs = s.row_t * a * s.col_t;
    CHECK(lhs == s.d);
    // Inverses really invert.
    CHECK(IntMat(s.row_t * s.row_t_inv) == IntMat(IntMat::Identity(3, 3)));
    CHECK(IntMat(s.col_t * s.col_t_inv) == IntMat(IntMat::Identity(4, 4)));
    // Divisibility chain.
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(divides(f[i], f[i + 1]));
}

TEST_CASE("kernel basis and integral solver") {
    IntMat a(2, 3);
    a << Int(1), Int(2), Int(3),
         Int(2), Int(4), Int(6);
    IntMat k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK(IntMat(a * k).isZero());

    IntegralSolver<Int> solver(a);
    VecX<Int> b(2);
    b << Int(5), Int(10);
    VecX<Int> x = solver.solve(b);
    CHECK(IntMat(a * x) == IntMat(b));
    VecX<Int> bad(2);
    bad << Int(1), Int(1);
    CHECK(!solver.contains(bad));
}

TEST_CASE("lattice equality") {
    IntMat a(2, 2), b(2, 2), c(2, 2);
    a << Int(1), Int(0), Int(0), Int(1);
    b << Int(1), Int(1), Int(0), Int(1);
    c << Int(2), Int(0), Int(0), Int(1);
    CHECK(lattice_equal(a, b));
    CHECK_FALSE(lattice_equal(a, c));
}

TEST_CASE("boundary rank of the ten-vertex complex") {
    OrientedComplex t4 = build_tree_complex(4);
    CHECK(rank_of(to_int_mat(t4.boundary[1])) == 9);
}

TEST_CASE("reduced homology of the tree complexes is a wedge of spheres") {
    for (int n = 4; n <= 5; ++n) {
        HomologyResult h = homology(build_tree_complex(n), true);
        CHECK(h.concentrated_free(n - 3, factorial(n - 1)));
    }
    HomologyResult h3 = homology(build_tree_complex(3), true);
    CHECK(h3.at(0).betti == 2);
}

TEST_CASE("partition nerve has matching Betti data") {
    HomologyResult h = homology(build_partition_nerve(4), true);
    CHECK(h.concentrated_free(1, 6));
}

TEST_CASE("homology rejects a corrupted boundary") {
    OrientedComplex t5 = build_tree_complex(5);
    // Flip one sign in the top boundary; the square law breaks.
    for (SpMat::InnerIterator it(t5.boundary[2], 0); it; ++it) {
        it.valueRef() = -it.value();
        break;
    }
    CHECK_THROWS_AS(homology(t5, true), std::invalid_argument);
}

TEST_CASE("lambda basis brackets are linearly independent over the integers") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::vector<int>> words;
        std::vector<int> w(n - 1);
        std::iota(w.begin(), w.end(), 1);
        do {
            words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));

        // Matrix of associative expansions: rows = words of length n, columns
        // = basis brackets.
        std::map<std::vector<int>, int> row_of;
        std::vector<AssocExpansion> cols;
        for (const auto& word : words) {
            cols.push_back(assoc_expand(lambda_bracket(word, n), Flavor::Super));
            for (const auto& [aw, cv] : cols.back())
                if (!row_of.count(aw)) {
                    int next = static_cast<int>(row_of.size());
                    row_of[aw] = next;
                }
        }
        IntMat m = IntMat::Zero(row_of.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [aw, cv] : cols[j]) m(row_of[aw], j) = cv;
        CHECK(rank_of(m) == static_cast<Eigen::Index>(words.size()));
    }
}

TEST_CASE("action traces on top homology") {
    OrientedComplex t4 = build_tree_complex(4);
    CHECK(action_trace(t4, Perm::identity(5), 1) == Int(6));

    // Unreduced degree-0 homology is the one-dimensional trivial module;
    // exercises the quotient by the boundary lattice.
    CHECK(action_trace(t4, Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), 0, false) == Int(1));
    CHECK(action_trace(t4, Perm::transposition(5, 1, 2), 0, true) == Int(0));
}

TEST_CASE("top homology restricted to the two-point stabilizer is regular") {
    for (int n : {4, 5}) {
        Character chi = action_character(build_tree_complex(n), n - 3, true);
        CHECK(chi.dimension() == Int(factorial(n - 1)));
        Character res = restrict_character(restrict_character(chi));  // fix 0 and one label
        CHECK(res == regular_character(n - 1));
    }
}

TEST_CASE("homology character equals the sign-twisted Lie character") {
    // Degree n-3 cohomology carries the super module; with self-inverse
    // classes its character equals that of homology, so the homology
    // character must be sign * Lie character.
    for (int n : {4, 5}) {
        Character hom = action_character(build_tree_complex(n), n - 3, true);
        Character res = restrict_character(hom);  // to the subgroup fixing 0
        CHECK(res == tensor_sign(lie_character(n, Flavor::Ordinary)));
        CHECK(res == lie_character(n, Flavor::Super));
    }
}

TEST_CASE("tree space and partition nerve carry the same character") {
    for (int n : {4, 5}) {
        Character tree = restrict_character(action_character(build_tree_complex(n), n - 3, true));
        Character nerve = action_character(build_partition_nerve(n), n - 3, true);
        CHECK(tree == nerve);
    }
}
