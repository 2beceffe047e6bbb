#include "treespace/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace treespace {

std::string Bipartition::key() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < side_other.size(); ++i) {
        if (i) os << ',';
        os << side_other[i];
    }
    return os.str();
}

bool compatible(const Bipartition& a, const Bipartition& b, const std::vector<int>&) {
    // Both complements contain 0, so compatibility reduces to the stored sides
    // being nested or disjoint.
    const auto& x = a.side_other;
    const auto& y = b.side_other;
    bool disjoint = true;
    bool x_in_y = true;
    bool y_in_x = true;
    for (int v : x) {
        if (std::binary_search(y.begin(), y.end(), v))
            disjoint = false;
        else
            x_in_y = false;
    }
    for (int v : y)
        if (!std::binary_search(x.begin(), x.end(), v)) y_in_x = false;
    return disjoint || x_in_y || y_in_x;
}

LabeledTree::LabeledTree(std::vector<int> labels, int num_nodes,
                         std::vector<std::pair<int, int>> leaf_attach,
                         std::vector<std::pair<int, int>> edges)
    : labels_(std::move(labels)),
      num_nodes_(num_nodes),
      leaf_attach_(std::move(leaf_attach)),
      edges_(std::move(edges)) {
    std::sort(labels_.begin(), labels_.end());
    build_adjacency();
    validate();
}

LabeledTree LabeledTree::leaf_pair(int other) {
    LabeledTree t;
    t.labels_ = {0, other};
    t.num_nodes_ = 1;
    t.leaf_attach_ = {{0, 0}, {other, 0}};
    t.build_adjacency();
    return t;
}

LabeledTree LabeledTree::star(int n) {
    LabeledTree t;
    t.num_nodes_ = 1;
    for (int i = 0; i <= n; ++i) {
        t.labels_.push_back(i);
        t.leaf_attach_.push_back({i, 0});
    }
    t.build_adjacency();
    t.validate();
    return t;
}

LabeledTree LabeledTree::caterpillar(int n, const Perm& sigma) {
    if (n < 3) throw std::invalid_argument("caterpillar: requires n >= 3");
    if (sigma.size() != n - 1) throw std::invalid_argument("caterpillar: sigma must permute {1..n-1}");
    // Spine nodes 0..n-2. Node 0 carries {0, sigma(1)}; node i-1 carries
    // sigma(i); the last node also carries n.
    LabeledTree t;
    t.num_nodes_ = n - 1;
    for (int i = 0; i <= n; ++i) t.labels_.push_back(i);
    t.leaf_attach_.push_back({0, 0});
    for (int i = 1; i <= n - 1; ++i) t.leaf_attach_.push_back({sigma(i - 1) + 1, i - 1});
    t.leaf_attach_.push_back({n, n - 2});
    for (int i = 0; i + 1 < n - 1; ++i) t.edges_.push_back({i, i + 1});
    t.build_adjacency();
    t.validate();
    return t;
}

void LabeledTree::build_adjacency() {
    node_leaves_.assign(num_nodes_, {});
    node_nbrs_.assign(num_nodes_, {});
    for (auto [label, node] : leaf_attach_) node_leaves_[node].push_back(label);
    for (auto& v : node_leaves_) std::sort(v.begin(), v.end());
    for (auto [u, v] : edges_) {
        node_nbrs_[u].push_back(v);
        node_nbrs_[v].push_back(u);
    }
    encoding_.clear();
}

void LabeledTree::validate() const {
    if (labels_.size() < 2) throw std::invalid_argument("tree: needs at least two labels");
    if (!std::binary_search(labels_.begin(), labels_.end(), 0))
        throw std::invalid_argument("tree: root label 0 missing");
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("tree: duplicate labels");
    if (leaf_attach_.size() != labels_.size())
        throw std::invalid_argument("tree: leaf attachment is not total on the label set");
    for (auto [label, node] : leaf_attach_)
        if (node < 0 || node >= num_nodes_) throw std::invalid_argument("tree: leaf attached to missing node");
    if (static_cast<int>(edges_.size()) != num_nodes_ - 1)
        throw std::invalid_argument("tree: internal edges do not form a tree");
    // Connectivity.
    if (num_nodes_ > 0) {
        std::vector<bool> seen(num_nodes_, false);
        std::vector<int> stack = {0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : node_nbrs_[u])
                if (!seen[v]) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != num_nodes_) throw std::invalid_argument("tree: internal edges not connected");
    }
    // Degree >= 3 except for the degenerate two-label tree.
    if (labels_.size() > 2) {
        for (int u = 0; u < num_nodes_; ++u) {
            int deg = static_cast<int>(node_leaves_[u].size() + node_nbrs_[u].size());
            if (deg < 3) throw std::invalid_argument("tree: node of degree < 3");
        }
    }
}

bool LabeledTree::is_binary() const {
    if (labels_.size() == 2) return false;
    for (int u = 0; u < num_nodes_; ++u)
        if (node_leaves_[u].size() + node_nbrs_[u].size() != 3) return false;
    return true;
}

namespace {
struct EncItem {
    int min_label;
    std::string text;
    bool operator<(const EncItem& o) const {
        return min_label != o.min_label ? min_label < o.min_label : text < o.text;
    }
};
}  // namespace

const std::string& LabeledTree::encoding() const {
    if (!encoding_.empty()) return encoding_;
    // Recursive encoding rooted at the node carrying label 0.
    int root = -1;
    for (auto [label, node] : leaf_attach_)
        if (label == 0) root = node;
    auto encode_node = [&](auto&& self, int u, int parent) -> EncItem {
        std::vector<EncItem> items;
        for (int l : node_leaves_[u]) items.push_back({l, std::to_string(l)});
        for (int v : node_nbrs_[u])
            if (v != parent) items.push_back(self(self, v, u));
        std::sort(items.begin(), items.end());
        std::string text = "(";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) text += ',';
            text += items[i].text;
        }
        text += ')';
        return {items.front().min_label, std::move(text)};
    };
    encoding_ = encode_node(encode_node, root, -1).text;
    return encoding_;
}

std::string LabeledTree::shape_encoding() const {
    int root = -1;
    for (auto [label, node] : leaf_attach_)
        if (label == 0) root = node;
    auto encode_node = [&](auto&& self, int u, int parent) -> std::string {
        std::vector<std::string> items;
        for (int l : node_leaves_[u]) items.push_back(l == 0 ? "0" : "*");
        for (int v : node_nbrs_[u])
            if (v != parent) items.push_back(self(self, v, u));
        std::sort(items.begin(), items.end());
        std::string text = "(";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) text += ',';
            text += items[i];
        }
        return text + ")";
    };
    return encode_node(encode_node, root, -1);
}

std::vector<Bipartition> LabeledTree::bipartitions() const {
    std::vector<Bipartition> out;
    for (auto [u, v] : edges_) {
        // Labels on the v side of the edge (u, v).
        std::vector<int> side;
        std::vector<bool> seen(num_nodes_, false);
        seen[u] = true;
        std::vector<int> stack = {v};
        seen[v] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int l : node_leaves_[w]) side.push_back(l);
            for (int x : node_nbrs_[w])
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        std::sort(side.begin(), side.end());
        if (!side.empty() && side.front() == 0) {
            // Keep the side not containing the root label.
            std::vector<int> other;
            for (int l : labels_)
                if (!std::binary_search(side.begin(), side.end(), l)) other.push_back(l);
            side = std::move(other);
        }
        out.push_back(Bipartition{std::move(side)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabeledTree LabeledTree::contract_edge(const Bipartition& e) const {
    for (auto [u, v] : edges_) {
        // Recompute the bipartition of this edge and compare.
        std::vector<int> side;
        std::vector<bool> seen(num_nodes_, false);
        seen[u] = true;
        std::vector<int> stack = {v};
        seen[v] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int l : node_leaves_[w]) side.push_back(l);
            for (int x : node_nbrs_[w])
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        std::sort(side.begin(), side.end());
        std::vector<int> other;
        for (int l : labels_)
            if (!std::binary_search(side.begin(), side.end(), l)) other.push_back(l);
        const std::vector<int>& nonzero_side = (!side.empty() && side.front() == 0) ? other : side;
        if (nonzero_side != e.side_other) continue;

        // Merge v into u.
        std::vector<int> remap(num_nodes_);
        int next = 0;
        for (int w = 0; w < num_nodes_; ++w) remap[w] = (w == v) ? -1 : next++;
        remap[v] = remap[u];
        std::vector<std::pair<int, int>> la;
        for (auto [label, node] : leaf_attach_) la.push_back({label, remap[node]});
        std::vector<std::pair<int, int>> ed;
        for (auto [a, b] : edges_) {
            int ra = remap[a], rb = remap[b];
            if (ra == rb) continue;
            ed.push_back({ra, rb});
        }
        LabeledTree merged(labels_, num_nodes_ - 1, std::move(la), std::move(ed));
        return parse_tree(merged.encoding());
    }
    throw std::invalid_argument("contract_edge: not an internal edge of this tree");
}

LabeledTree LabeledTree::relabel(const Perm& sigma) const {
    const int m = static_cast<int>(labels_.size());
    if (sigma.size() != m) throw std::invalid_argument("relabel: permutation size mismatch");
    for (int i = 0; i < m; ++i)
        if (labels_[i] != i) throw std::invalid_argument("relabel: tree labels must be {0..n}");
    std::vector<std::pair<int, int>> la;
    for (auto [label, node] : leaf_attach_) la.push_back({sigma(label), node});
    LabeledTree t(labels_, num_nodes_, std::move(la), edges_);
    return parse_tree(t.encoding());
}

std::pair<LabeledTree, LabeledTree> LabeledTree::split_at_root() const {
    if (labels_.size() < 3) throw std::invalid_argument("split_at_root: requires n >= 2");
    if (!is_binary()) throw std::invalid_argument("split_at_root: tree is not binary");
    int root = -1;
    for (auto [label, node] : leaf_attach_)
        if (label == 0) root = node;

    auto subtree_through_node = [&](int v) -> LabeledTree {
        // Component of v with the root node removed, re-rooted by a new leaf 0
        // attached at v.
        std::vector<int> order;
        std::vector<int> remap(num_nodes_, -1);
        std::vector<bool> seen(num_nodes_, false);
        seen[root] = true;
        std::vector<int> stack = {v};
        seen[v] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            remap[w] = static_cast<int>(order.size());
            order.push_back(w);
            for (int x : node_nbrs_[w])
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        std::vector<int> labels = {0};
        std::vector<std::pair<int, int>> la = {{0, remap[v]}};
        for (auto [label, node] : leaf_attach_)
            if (remap[node] >= 0) {
                labels.push_back(label);
                la.push_back({label, remap[node]});
            }
        std::vector<std::pair<int, int>> ed;
        for (auto [a, b] : edges_)
            if (remap[a] >= 0 && remap[b] >= 0) ed.push_back({remap[a], remap[b]});
        return LabeledTree(std::move(labels), static_cast<int>(order.size()), std::move(la),
                           std::move(ed));
    };

    std::vector<LabeledTree> parts;
    for (int l : node_leaves_[root])
        if (l != 0) parts.push_back(leaf_pair(l));
    for (int v : node_nbrs_[root]) parts.push_back(subtree_through_node(v));
    if (parts.size() != 2) throw std::logic_error("split_at_root: root node is not trivalent");

    auto min_nonzero = [](const LabeledTree& t) {
        for (int l : t.labels())
            if (l != 0) return l;
        return -1;
    };
    if (min_nonzero(parts[0]) > min_nonzero(parts[1])) std::swap(parts[0], parts[1]);
    return {parts[0], parts[1]};
}

LabeledTree LabeledTree::graft(const LabeledTree& y, const LabeledTree& z) {
    std::vector<int> labels = {0};
    std::vector<std::pair<int, int>> la = {{0, 0}};
    std::vector<std::pair<int, int>> ed;
    int next_node = 1;
    for (const LabeledTree* part : {&y, &z}) {
        for (int l : part->labels_)
            if (l != 0) labels.push_back(l);
        if (part->labels_.size() == 2) {
            // A one-edge part contributes its single non-root leaf directly.
            la.push_back({part->labels_.back(), 0});
            continue;
        }
        int offset = next_node;
        next_node += part->num_nodes_;
        int part_root = -1;
        for (auto [label, node] : part->leaf_attach_) {
            if (label == 0) {
                part_root = node;
                continue;
            }
            la.push_back({label, offset + node});
        }
        for (auto [a, b] : part->edges_) ed.push_back({offset + a, offset + b});
        ed.push_back({0, offset + part_root});
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("graft: overlapping label sets");
    return LabeledTree(std::move(labels), next_node, std::move(la), std::move(ed));
}

LabeledTree parse_tree(const std::string& text) {
    std::size_t pos = 0;
    std::vector<int> labels;
    std::vector<std::pair<int, int>> la;
    std::vector<std::pair<int, int>> ed;
    int num_nodes = 0;

    auto fail = [&](const char* msg) { throw std::invalid_argument(std::string("parse_tree: ") + msg); };

    auto parse_node = [&](auto&& self, int parent) -> int {
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        int me = num_nodes++;
        if (parent >= 0) ed.push_back({parent, me});
        bool first = true;
        while (true) {
            if (pos >= text.size()) fail("unterminated node");
            if (!first) {
                if (text[pos] == ')') break;
                if (text[pos] != ',') fail("expected ','");
                ++pos;
            }
            first = false;
            if (text[pos] == '(') {
                self(self, me);
            } else {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) fail("expected a label");
                int label = std::stoi(text.substr(start, pos - start));
                labels.push_back(label);
                la.push_back({label, me});
            }
        }
        ++pos;  // ')'
        return me;
    };
    parse_node(parse_node, -1);
    if (pos != text.size()) fail("trailing characters");
    std::sort(labels.begin(), labels.end());
    return LabeledTree(std::move(labels), num_nodes, std::move(la), std::move(ed));
}

namespace {

/// Binary trees on {0..n} by iterated leaf insertion; each tree arises
/// exactly once, so no deduplication is needed at this level.
std::vector<LabeledTree> enumerate_binary(int n) {
    std::vector<LabeledTree> cur = {LabeledTree::star(2)};
    std::vector<int> all_labels(n + 1);
    std::iota(all_labels.begin(), all_labels.end(), 0);
    for (int m = 3; m <= n; ++m) {
        std::vector<int> labels(all_labels.begin(), all_labels.begin() + m + 1);
        std::vector<LabeledTree> next;
        next.reserve(cur.size() * (2 * m - 3));
        for (const LabeledTree& t : cur) {
            const auto& la = t.leaf_attachments();
            const auto& ed = t.internal_edge_list();
            const int fresh = t.num_nodes();
            // Subdivide each leaf edge.
            for (std::size_t i = 0; i < la.size(); ++i) {
                auto la2 = la;
                la2[i] = {la[i].first, fresh};
                la2.push_back({m, fresh});
                auto ed2 = ed;
                ed2.push_back({la[i].second, fresh});
                next.push_back(LabeledTree(labels, fresh + 1, std::move(la2), std::move(ed2)));
            }
            // Subdivide each internal edge.
            for (std::size_t i = 0; i < ed.size(); ++i) {
                auto la2 = la;
                la2.push_back({m, fresh});
                auto ed2 = ed;
                ed2[i] = {ed[i].first, fresh};
                ed2.push_back({fresh, ed[i].second});
                next.push_back(LabeledTree(labels, fresh + 1, std::move(la2), std::move(ed2)));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::vector<LabeledTree> enumerate_trees(int n, int k) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be positive");
    const int kmax = std::max(0, n - 2);
    if (k < 0 || k > kmax) throw std::invalid_argument("enumerate_trees: k outside [0, n-2]");
    if (n == 1) return {LabeledTree::leaf_pair(1)};
    if (k == 0) return {LabeledTree::star(n)};

    std::vector<LabeledTree> binaries = enumerate_binary(n);
    if (k == n - 2) {
        std::sort(binaries.begin(), binaries.end(),
                  [](const LabeledTree& a, const LabeledTree& b) { return a.encoding() < b.encoding(); });
        return binaries;
    }

    // Contract (n-2-k)-subsets of internal edges of every binary tree and
    // deduplicate by encoding.
    std::map<std::string, LabeledTree> seen;
    const int drop = n - 2 - k;
    for (const LabeledTree& b : binaries) {
        std::vector<Bipartition> bips = b.bipartitions();
        const int e = static_cast<int>(bips.size());
        std::vector<int> pick(drop);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            LabeledTree t = b;
            for (int i : pick) t = t.contract_edge(bips[i]);
            seen.emplace(t.encoding(), t);
            // Next combination.
            int i = drop - 1;
            while (i >= 0 && pick[i] == e - drop + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < drop; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<LabeledTree> out;
    out.reserve(seen.size());
    for (auto& [enc, t] : seen) out.push_back(std::move(t));
    return out;
}

}  // namespace treespace
