#pragma once

// Oriented simplicial complexes for the space of fully-grown trees and for
// the nerve of the non-trivial partition lattice.
//
// Tree complex on parameter n: vertices are the bipartition trees v_A on
// labels {0..n}; a k-simplex is a tree with k+1 internal edges, its vertex
// list ordered by the canonical edge order (bipartitions sorted by
// side_other). The i-th face contracts the i-th edge with sign (-1)^i.
//
// Partition nerve on parameter n: vertices are the non-trivial partitions of
// {1..n}; a k-simplex is a strictly refining chain of k+1 partitions, oriented
// coarse to fine; the i-th face deletes the i-th entry.

#include <map>
#include <string>
#include <vector>

#include "treespace/trees.hpp"
#include "treespace/types.hpp"

namespace treespace {

/// Set partition of {1..n}: blocks sorted internally and by minimum.
using Partition = std::vector<std::vector<int>>;

std::string partition_text(const Partition& p);
Partition canonical_partition(Partition p);
/// True iff every block of `fine` is contained in a block of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);
/// All partitions of {1..n} with between 2 and n-1 blocks, sorted by text key.
std::vector<Partition> nontrivial_partitions(int n);

/// A strictly refining chain, coarsest first.
struct PartitionChain {
    std::vector<Partition> chain;
    std::string text() const;
};

class OrientedComplex {
public:
    enum class Space { TreeSpace, PartitionNerve };

    Space space = Space::TreeSpace;
    int n = 0;
    int dim = -1;          // -1 encodes the empty complex
    std::string note;      // diagnostic for degenerate parameters

    /// Per degree k: canonical text keys in id order (ids are dense and
    /// sorted by key, so reports are stable across runs).
    std::vector<std::vector<std::string>> keys;
    /// Per degree k, per simplex: vertex ids in orientation order.
    std::vector<std::vector<std::vector<int>>> verts;
    /// boundary[k] maps k-chains to (k-1)-chains (columns are k-simplices);
    /// boundary[0] is the empty matrix.
    std::vector<SpMat> boundary;

    /// Vertex payloads: bipartitions for tree complexes, partitions for the
    /// nerve.
    std::vector<Bipartition> vertex_bips;
    std::vector<Partition> vertex_partitions;

    bool empty() const { return dim < 0; }
    long long simplex_count(int k) const {
        return (k < 0 || k > dim) ? 0 : static_cast<long long>(keys[k].size());
    }
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    /// Id of the simplex with the given canonical key, or -1.
    int index_of(int k, const std::string& key) const;

    /// Image id and orientation sign of a simplex under a relabeling.
    /// Tree complexes accept any permutation of {0..n}; the nerve requires
    /// sigma(0) = 0 and throws otherwise.
    std::pair<int, int> simplex_image(int k, int id, const Perm& sigma) const;
};

/// The complex of fully-grown trees on labels {0..n}; empty with a diagnostic
/// note when n < 3.
OrientedComplex build_tree_complex(int n);

/// The nerve of the non-trivial partition lattice of {1..n}.
OrientedComplex build_partition_nerve(int n);

/// For each count c, the number of (dim-1)-simplices lying in exactly c
/// top-dimensional simplices.
std::map<long long, long long> codim1_incidence_report(const OrientedComplex& c);

/// Exact check of boundary[k-1] * boundary[k] == 0 for all k.
bool boundary_square_is_zero(const OrientedComplex& c);

/// Signed permutation matrix per degree, rows indexed by source simplices:
/// M[id, image_id] = sign. Composition satisfies M_{tau o sigma} =
/// M_sigma * M_tau, matching the right action of relabeling on chains.
std::vector<SpMat> induced_simplicial_map(const OrientedComplex& c, const Perm& sigma);

/// (image id, sign) for every simplex of one degree under the relabeling.
std::vector<std::pair<int, int>> degree_action(const OrientedComplex& c, const Perm& sigma, int k);

/// Checks degree-wise equivariance of the boundary against the maps returned
/// by induced_simplicial_map.
bool action_commutes_with_boundary(const OrientedComplex& c, const std::vector<SpMat>& maps);

/// Versioned portable dump (f-vector, simplex keys, boundary triplets).
std::string dump_complex_json(const OrientedComplex& c);

/// Minimal reload of a dump: enough structure to re-check boundary laws.
struct ComplexDump {
    int schema = 0;
    std::string space;
    int n = 0;
    int dim = -1;
    std::vector<long long> f_vector;
    std::vector<std::vector<std::string>> keys;
    std::vector<SpMat> boundary;
};
ComplexDump load_complex_json(const std::string& text);

/// Validates a loaded dump: shape consistency and an exact boundary-square
/// check. Returns a human-readable diagnostic, empty on success.
std::string validate_complex_dump(const ComplexDump& d);

}  // namespace treespace
