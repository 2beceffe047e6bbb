#pragma once

// The fundamental cycle of the tree complex with coefficients in the super
// module, built by the grafting recursion:
//
//   base: a single-label tree contributes x_label (and no edges);
//   step: splitting off subtrees Y and Z at the root, the orientation word
//   is w = rho_Y w_Y rho_Z w_Z (root edges of one-leaf parts are leaf edges
//   of the whole and are skipped) and the coefficient is (-1)^{|Y|}[c_Y,c_Z].
//
// The term is independent of the Y/Z order, so the minimal-label convention
// of split_at_root is a normalization, not a choice that matters.

#include <map>

#include "treespace/complexes.hpp"
#include "treespace/superlie.hpp"

namespace treespace {

struct CycleTerm {
    LabeledTree tree;
    std::vector<Bipartition> edge_word;  // orientation word, one entry per internal edge
    int monomial_sign = 1;               // sign carried by the raw coefficient monomial
    BracketMonomial monomial;            // unsigned raw super-Lie monomial
    SuperLieElement coeff;               // monomial_sign * normalize(monomial), super flavor
};

/// Builds the term of a binary tree on labels {0..n}.
CycleTerm cycle_term(const LabeledTree& t);

/// Recomputes the term with the two root subtrees taken in the opposite
/// order and checks that the chain contribution is identical.
bool cycle_term_order_independent(const LabeledTree& t);

/// A chain with coefficients in the super module, supported on the simplices
/// of one degree of a tree complex.
struct ModuleChain {
    int n = 0;
    int degree = -1;
    std::map<int, SuperLieElement> coeffs;  // simplex id -> coefficient

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const ModuleChain& o) const {
        return n == o.n && degree == o.degree && coeffs == o.coeffs;
    }
};

/// Sum of all top-simplex terms, each converted to the complex's canonical
/// edge order by the sign of the word permutation. Term construction is
/// independent per tree and runs on `jobs` workers (0 = environment default);
/// the result does not depend on the worker count.
ModuleChain build_fundamental_cycle(const OrientedComplex& c, int jobs = 0);

/// Applies the integer boundary matrix entrywise to the coefficients.
ModuleChain boundary_of_module_chain(const ModuleChain& f, const OrientedComplex& c);

/// True iff sigma . f == f, acting on simplices by relabeling and on
/// coefficients by the matching generator permutation. Requires sigma(0)=0.
bool verify_invariance(const ModuleChain& f, const OrientedComplex& c, const Perm& sigma);

/// Integer cochain on the top simplices, sparse.
using Cochain = std::map<int, Int>;

/// Pairing sum_X f(X) . F_X; evaluation of top cochains against the cycle.
SuperLieElement theta_eval(const Cochain& f, const ModuleChain& chain);

/// Indicator cochain of the caterpillar simplex of sigma (a permutation of
/// {1..n-1}, 0-based), on the canonical orientation.
Cochain caterpillar_indicator(const OrientedComplex& c, const Perm& sigma);

/// Coboundary of a codimension-one cochain: (delta g)(s) = g(boundary s).
Cochain coboundary(const OrientedComplex& c, const Cochain& g);

/// JSON export: one record per top simplex with the tree, the orientation
/// sign to canonical order, the raw monomial and the stored coefficient,
/// plus a census of terms per (rooted, unlabeled) tree shape.
std::string dump_cycle_json(const OrientedComplex& c, const ModuleChain& f);

/// Census check for n = 5: groups the 105 terms into the three tree shapes,
/// reconstructs the displayed term of each class from the tree's own labels
/// and compares it against the stored coefficient.
struct N5Census {
    long long chain_end = 0;   // root label at an end node, coefficient +[a,[b,[c,[d,e]]]]
    long long chain_mid = 0;   // root label at the middle node, coefficient -[[a,b],[c,[d,e]]]
    long long cross = 0;       // central node of three edges, coefficient -[a,[[b,c],[d,e]]]
    bool all_terms_match = false;
};
N5Census verify_n5_cycle_census(const OrientedComplex& c, const ModuleChain& f);

}  // namespace treespace
