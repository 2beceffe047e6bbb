#pragma once

// The extension story: inside the tree complex on {0..n+1}, the open stars
// of the n+1 vertices whose root side is {0,i} are pairwise disjoint; their
// complement X is a full subcomplex. The short exact sequence
//
//   0 -> H_{n-2}(ambient) -> H_{n-2}(ambient, X) -> H_{n-3}(X) -> 0
//
// is certified integrally (Smith forms and lattice equalities), and the
// induced/hat character identity is checked class by class.

#include "treespace/cycle.hpp"
#include "treespace/homology.hpp"

namespace treespace {

struct PairComplex {
    int n = 0;               // parameter of the quotient piece; ambient lives on {0..n+1}
    OrientedComplex ambient;  // tree complex on n+1 non-root labels
    OrientedComplex sub;      // X, rebuilt as a standalone complex
    /// Per degree: sub simplex id -> ambient id.
    std::vector<std::vector<int>> sub_to_ambient;
    /// Per degree: relative basis position -> ambient id (simplices meeting
    /// the stars).
    std::vector<std::vector<int>> rel_to_ambient;
    /// Relative boundary matrices (degree >= 1).
    std::vector<SpMat> rel_boundary;

    std::vector<long long> rel_f;  // relative basis sizes per degree
};

PairComplex build_complement_subcomplex(int n);

/// Homology of the quotient chain complex.
HomologyResult relative_homology(const PairComplex& p);

struct ExactnessReport {
    int n = 0;
    long long rank_left = 0;    // top homology of the ambient complex
    long long rank_middle = 0;  // top relative homology
    long long rank_right = 0;   // homology of X one degree down
    bool left_injective = false;
    bool cokernel_torsion_free = false;  // of the map into relative homology
    bool middle_exact = false;           // image = kernel as integer lattices
    bool right_surjective = false;
    bool ranks_expected = false;  // (n!, (n+1)(n-1)!, (n-1)!)
    std::string diagnostic;

    bool exact() const {
        return left_injective && cokernel_torsion_free && middle_exact && right_surjective &&
               ranks_expected;
    }
};

/// Builds the three maps with explicit integer matrices and certifies
/// exactness of the sequence via Smith forms.
ExactnessReport exactness_check(const PairComplex& p);

/// Character of the full label group on homology of a tree complex whose
/// relabelings must fix 0 (used for X); classes are indexed by partitions of
/// the non-root label count.
Character stabilizer_action_character(const OrientedComplex& c, int k, bool reduced);

/// The sign-twisted character of the full group on top homology of the tree
/// complex on {0..n}; its restriction to the subgroup fixing 0 is checked to
/// be the ordinary Lie character before returning.
Character hat_lie_character(int n);

struct WhitehouseCharacterReport {
    int n = 0;
    Character induced;   // induction of the Lie character to the next group
    Character lie_next;  // Lie character of the next rank
    Character hat;       // hat character from homology
    bool equal = false;
    std::vector<std::string> mismatch_classes;
};

/// Class-by-class check of induced = lie_next + hat.
WhitehouseCharacterReport whitehouse_character_check(int n);

}  // namespace treespace
