#pragma once

// Multilinear parts of the free Lie ring and the free Lie superring on
// generators x_1..x_n, in the left-regulated bracket basis
//
//     lambda_w = [x_{w1}, [x_{w2}, ... [x_{w_{n-1}}, x_n] ...]]
//
// indexed by the words w that order {1..n-1}. The ordinary flavor uses the
// classical antisymmetry/Jacobi relations; the super flavor treats every
// generator as odd, so with |a| = number of generators in a monomial,
//
//     [a,b] = (-1)^{|a||b|+1} [b,a]
//     [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|} [b,[a,c]].
//
// Normalization anchors x_n innermost: swap arguments when the right one
// does not contain x_n, unfold composite left arguments by the Jacobi rule.
// The associative expansion ([a,b] = ab - (-1)^{|a||b|} ba into the free
// associative ring) serves as the independent ground truth for all of this.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treespace/int.hpp"
#include "treespace/perm.hpp"

namespace treespace {

enum class Flavor { Ordinary, Super };

/// A fully bracketed product with each generator at exactly one leaf.
class BracketMonomial {
public:
    static BracketMonomial leaf(int label);
    static BracketMonomial bracket(const BracketMonomial& a, const BracketMonomial& b);

    bool is_leaf() const { return nodes_[root_].left < 0; }
    int degree() const { return degree_; }

    /// Generator labels read left to right.
    std::vector<int> leaf_labels() const;

    /// Verifies the labels are exactly {1..n} for n = degree().
    bool is_multilinear() const;

    /// Replaces label i by gen_perm(i-1)+1.
    BracketMonomial substitute(const Perm& gen_perm) const;

    /// "[a,[b,c]]" with letters for labels <= 26, else "x<i>".
    std::string text() const;

    /// "[*,[*,*]]": the bracket shape with labels erased.
    std::string shape() const;

    // Traversal interface: node handles are indices, the root is root().
    int root() const { return root_; }
    bool node_is_leaf(int v) const { return nodes_[v].left < 0; }
    int node_label(int v) const { return nodes_[v].label; }
    int node_left(int v) const { return nodes_[v].left; }
    int node_right(int v) const { return nodes_[v].right; }

private:
    struct Node {
        int label;  // leaf label, or -1
        int left;
        int right;
    };
    std::vector<Node> nodes_;
    int root_ = -1;
    int degree_ = 0;
};

/// Integer combination of left-regulated basis brackets; the value type for
/// both Lie_n (ordinary) and the superring multilinear part (super).
class SuperLieElement {
public:
    SuperLieElement() = default;
    SuperLieElement(int n, Flavor flavor) : n_(n), flavor_(flavor) {}

    static SuperLieElement basis(int n, Flavor flavor, const std::vector<int>& word);

    int n() const { return n_; }
    Flavor flavor() const { return flavor_; }
    bool is_zero() const { return coeffs_.empty(); }
    int support_size() const { return static_cast<int>(coeffs_.size()); }

    const std::map<std::vector<int>, Int>& coeffs() const { return coeffs_; }

    /// Adds c * lambda_word; erases the entry if the total cancels.
    void add(const std::vector<int>& word, const Int& c);

    SuperLieElement& operator+=(const SuperLieElement& o);
    SuperLieElement& operator-=(const SuperLieElement& o);
    friend SuperLieElement operator+(SuperLieElement a, const SuperLieElement& b) { return a += b; }
    friend SuperLieElement operator-(SuperLieElement a, const SuperLieElement& b) { return a -= b; }
    friend SuperLieElement operator*(const Int& c, const SuperLieElement& e);

    bool operator==(const SuperLieElement& o) const {
        return n_ == o.n_ && flavor_ == o.flavor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const SuperLieElement& o) const { return !(*this == o); }

    /// If the element is +/- a single basis bracket, returns (sign, word).
    std::pair<int, std::vector<int>> single_basis_term() const;

    /// Signed sum of bracket words, e.g. "[a,[b,c]] - [b,[a,c]]".
    std::string text() const;

private:
    int n_ = 0;
    Flavor flavor_ = Flavor::Super;
    std::map<std::vector<int>, Int> coeffs_;
};

/// Word-indexed expansion in the free associative (super)ring.
using AssocExpansion = std::map<std::vector<int>, Int>;

/// Left-regulated monomial for a word ordering {1..n-1} (anchor x_n).
BracketMonomial lambda_bracket(const std::vector<int>& word, int n);

/// Rewrites a monomial into the left-regulated basis. Throws on
/// non-multilinear input.
SuperLieElement normalize(const BracketMonomial& m, Flavor flavor);

/// Normalizes an integer combination of monomials.
SuperLieElement normalize(const std::vector<std::pair<Int, BracketMonomial>>& terms, int n,
                          Flavor flavor);

AssocExpansion assoc_expand(const BracketMonomial& m, Flavor flavor);

/// Expands an element through its basis brackets; the reference equivalence
/// test for elements.
AssocExpansion assoc_expand(const SuperLieElement& e);

/// The sign-corrected reinterpretation of an ordinary multilinear monomial as
/// a super one: multiply by the sign of the left-to-right variable order and
/// reread every bracket as a superbracket.
SuperLieElement theta(const BracketMonomial& ordinary_monomial);
SuperLieElement theta(const SuperLieElement& ordinary_element);

/// Substitutes x_i -> x_{sigma(i)} (sigma 0-based on generator indices) and
/// renormalizes; with sign_twist, additionally multiplies by sign(sigma).
SuperLieElement permute_generators(const SuperLieElement& e, const Perm& sigma,
                                   bool sign_twist = false);

/// Parser for signed sums of bracket words over an arbitrary identifier
/// alphabet; distinct identifiers are mapped to 1..n in sorted order.
struct ParsedBrackets {
    std::vector<std::pair<Int, BracketMonomial>> terms;
    std::vector<std::string> alphabet;
};
ParsedBrackets parse_bracket_text(const std::string& text);

}  // namespace treespace
