#pragma once

// Exact integral homology of oriented complexes via Smith normal form, and
// traces of induced symmetric-group actions on homology.

#include "treespace/characters.hpp"
#include "treespace/complexes.hpp"
#include "treespace/smith.hpp"

namespace treespace {

struct HomologyDegree {
    long long betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility-ordered
};

struct HomologyResult {
    bool reduced = true;
    int dim = -1;
    std::vector<HomologyDegree> degrees;  // indexed by k = 0..dim
    /// Kernel lattice basis of the top boundary map (columns); filled when
    /// requested. In the top degree this is a basis of the homology itself.
    MatX<Int> top_cycle_basis;

    const HomologyDegree& at(int k) const { return degrees.at(k); }
    /// True when homology is free of the given rank in degree k and zero in
    /// every other degree.
    bool concentrated_free(int k, long long rank) const;
};

/// Boundary matrix C_k -> C_{k-1} as a dense exact matrix, with the reduced
/// convention in degree 0 (the augmentation row) and an empty matrix above
/// the dimension.
IntMat boundary_matrix(const OrientedComplex& c, int k, bool reduced);

HomologyResult homology(const OrientedComplex& c, bool reduced = true,
                        bool with_top_basis = false);

/// Trace of the map induced by the relabeling sigma on H_k. Requires the
/// homology in degree k to be free (asserted via the Smith form); works in
/// every degree, quotienting by the boundary lattice where one exists.
Int action_trace(const OrientedComplex& c, const Perm& sigma, int k, bool reduced = true);

/// The full character of the relabeling action on H_k, over the symmetric
/// group permuting the complex's label set ({0..n} for tree complexes,
/// {1..n} with 0 pinned for the partition nerve). With sign_twist the value
/// on each class is multiplied by the class sign.
Character action_character(const OrientedComplex& c, int k, bool reduced = true,
                           bool sign_twist = false);

}  // namespace treespace
