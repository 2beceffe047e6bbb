#pragma once

// Combinatorial trees with labeled leaves: construction, canonical form,
// enumeration, bipartitions, grafting, contraction and relabeling.
//
// A tree here is the combinatorial type only: leaves carry distinct integer
// labels, one of which is the root label 0, and every internal node has
// degree >= 3. Edge lengths are never stored. The standard label set is
// {0..n}; subtrees produced by split_at_root keep their original labels, so
// general (non-contiguous) label sets are permitted internally.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treespace/perm.hpp"

namespace treespace {

/// An internal edge of a tree, recorded as the leaf bipartition it induces.
/// Only the side not containing the root label 0 is stored, so the identity
/// v_A = v_{complement} holds by construction.
struct Bipartition {
    std::vector<int> side_other;  // sorted, never contains 0

    bool operator==(const Bipartition& o) const { return side_other == o.side_other; }
    bool operator<(const Bipartition& o) const { return side_other < o.side_other; }

    std::string key() const;
};

/// Two bipartitions of one label set are compatible iff some side of one
/// contains a side of the other; a set of pairwise-compatible bipartitions is
/// exactly the edge set of a tree.
bool compatible(const Bipartition& a, const Bipartition& b, const std::vector<int>& labels);

class LabeledTree {
public:
    /// Builds a tree from explicit parts. `leaf_attach[i]` pairs a leaf label
    /// with its node; `edges` lists internal node pairs. Validates the degree
    /// and connectivity invariants (>= 3 per node once the label set has at
    /// least three elements).
    LabeledTree(std::vector<int> labels, int num_nodes,
                std::vector<std::pair<int, int>> leaf_attach,
                std::vector<std::pair<int, int>> edges);

    /// The unique one-edge tree on labels {0, other}.
    static LabeledTree leaf_pair(int other);

    /// Star tree: one node carrying labels {0..n}.
    static LabeledTree star(int n);

    /// Caterpillar with spine order 0, sigma(1), ..., sigma(n-1), n where
    /// sigma permutes {1..n-1} (passed 0-based: position i holds label
    /// sigma_images[i]+1).
    static LabeledTree caterpillar(int n, const Perm& sigma);

    const std::vector<int>& labels() const { return labels_; }
    /// Number of non-root labels.
    int n() const { return static_cast<int>(labels_.size()) - 1; }
    int num_nodes() const { return num_nodes_; }
    int internal_edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& leaf_attachments() const { return leaf_attach_; }
    const std::vector<std::pair<int, int>>& internal_edge_list() const { return edges_; }
    bool is_binary() const;

    /// Deterministic text form: root at the node carrying label 0, sort child
    /// encodings by (minimal contained label, then lexicographically), print
    /// as nested parentheses. Equal strings iff label-preserving isomorphic.
    const std::string& encoding() const;

    /// Canonical form of the rooted shape with all non-root labels erased;
    /// equal strings iff the trees agree up to relabeling {1..n}.
    std::string shape_encoding() const;

    /// Bipartitions induced by the internal edges, in canonical order (sorted
    /// by side_other). This order is the reference orientation everywhere.
    std::vector<Bipartition> bipartitions() const;

    /// Merges the endpoints of the internal edge inducing `e`.
    LabeledTree contract_edge(const Bipartition& e) const;

    /// Applies label -> sigma(label) over the standard label set {0..n}.
    LabeledTree relabel(const Perm& sigma) const;

    /// Cuts both non-root edges at the root node of a binary tree; each part
    /// is re-rooted with a new leaf 0. The part containing the smaller
    /// minimal nonzero label comes first.
    std::pair<LabeledTree, LabeledTree> split_at_root() const;

    /// Inverse of split_at_root: joins Y and Z at a fresh root node.
    static LabeledTree graft(const LabeledTree& y, const LabeledTree& z);

    bool operator==(const LabeledTree& o) const { return encoding() == o.encoding(); }

private:
    LabeledTree() = default;
    void validate() const;
    void build_adjacency();

    std::vector<int> labels_;                     // sorted, contains 0
    int num_nodes_ = 0;                           // internal nodes 0..num_nodes_-1
    std::vector<std::pair<int, int>> leaf_attach_;  // (label, node)
    std::vector<std::pair<int, int>> edges_;        // internal edges
    std::vector<std::vector<int>> node_leaves_;     // per node: labels
    std::vector<std::vector<int>> node_nbrs_;       // per node: adjacent nodes
    mutable std::string encoding_;                  // cached
};

/// Parses the nested-parentheses encoding back into a tree.
LabeledTree parse_tree(const std::string& text);

/// All isomorphism classes of trees on labels {0..n} with exactly k internal
/// edges, deduplicated and sorted by encoding. Binary shapes come from
/// iterated leaf insertion; k < n-2 from contracting edge subsets.
/// Throws std::invalid_argument when k is outside [0, max(0, n-2)].
std::vector<LabeledTree> enumerate_trees(int n, int k);

}  // namespace treespace
