#include "treespace/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "treespace/parallel.hpp"

namespace treespace {

namespace {

struct RawTerm {
    std::vector<Bipartition> word;
    int sign = 1;
    BracketMonomial monomial;
};

int nonzero_label_count(const LabeledTree& t) {
    return static_cast<int>(t.labels().size()) - 1;
}

RawTerm raw_term(const LabeledTree& t) {
    if (t.labels().size() == 2) {
        RawTerm r;
        r.monomial = BracketMonomial::leaf(t.labels().back());
        return r;
    }
    auto [y, z] = t.split_at_root();
    RawTerm ry = raw_term(y);
    RawTerm rz = raw_term(z);
    RawTerm out;
    auto append_part = [&](const LabeledTree& part, RawTerm& rp) {
        if (part.labels().size() >= 3) {
            // The part's root edge becomes an internal edge of the whole,
            // separating the part's non-root labels from the rest.
            std::vector<int> side(part.labels().begin() + 1, part.labels().end());
            out.word.push_back(Bipartition{std::move(side)});
        }
        for (auto& b : rp.word) out.word.push_back(std::move(b));
    };
    append_part(y, ry);
    append_part(z, rz);
    out.sign = ry.sign * rz.sign * (nonzero_label_count(y) % 2 == 0 ? 1 : -1);
    out.monomial = BracketMonomial::bracket(ry.monomial, rz.monomial);
    return out;
}

/// Parity (+-1) of the permutation sorting `word` into the canonical edge
/// order.
int word_to_canonical_sign(const std::vector<Bipartition>& word) {
    int swaps = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[j] < word[i]) ++swaps;
    return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

CycleTerm cycle_term(const LabeledTree& t) {
    if (!t.is_binary() && t.labels().size() != 2)
        throw std::invalid_argument("cycle_term: tree is not binary");
    for (std::size_t i = 0; i < t.labels().size(); ++i)
        if (t.labels()[i] != static_cast<int>(i))
            throw std::invalid_argument("cycle_term: labels must be {0..n}");
    CycleTerm term{t, {}, 1, BracketMonomial::leaf(1), SuperLieElement()};
    RawTerm r = raw_term(t);
    term.edge_word = std::move(r.word);
    term.monomial_sign = r.sign;
    term.monomial = std::move(r.monomial);
    term.coeff = Int(term.monomial_sign) * normalize(term.monomial, Flavor::Super);
    return term;
}

bool cycle_term_order_independent(const LabeledTree& t) {
    if (t.labels().size() < 3) return true;
    auto [y, z] = t.split_at_root();
    RawTerm ry = raw_term(y);
    RawTerm rz = raw_term(z);

    auto assemble = [&](const LabeledTree& first, const RawTerm& rf, const LabeledTree& second,
                        const RawTerm& rs) {
        RawTerm out;
        auto append_part = [&](const LabeledTree& part, const RawTerm& rp) {
            if (part.labels().size() >= 3) {
                std::vector<int> side(part.labels().begin() + 1, part.labels().end());
                out.word.push_back(Bipartition{std::move(side)});
            }
            for (const auto& b : rp.word) out.word.push_back(b);
        };
        append_part(first, rf);
        append_part(second, rs);
        out.sign = rf.sign * rs.sign * (nonzero_label_count(first) % 2 == 0 ? 1 : -1);
        out.monomial = BracketMonomial::bracket(rf.monomial, rs.monomial);
        return out;
    };
    RawTerm fwd = assemble(y, ry, z, rz);
    RawTerm rev = assemble(z, rz, y, ry);
    SuperLieElement a = Int(word_to_canonical_sign(fwd.word) * fwd.sign) *
                        normalize(fwd.monomial, Flavor::Super);
    SuperLieElement b = Int(word_to_canonical_sign(rev.word) * rev.sign) *
                        normalize(rev.monomial, Flavor::Super);
    return a == b;
}

ModuleChain build_fundamental_cycle(const OrientedComplex& c, int jobs) {
    if (c.space != OrientedComplex::Space::TreeSpace)
        throw std::invalid_argument("build_fundamental_cycle: needs a tree complex");
    ModuleChain f;
    f.n = c.n;
    f.degree = c.dim;
    if (c.empty()) return f;
    if (jobs <= 0) jobs = default_jobs();
    const int count = static_cast<int>(c.keys[c.dim].size());
    std::vector<SuperLieElement> slots(count);
    parallel_for(jobs, count, [&](int id) {
        CycleTerm term = cycle_term(parse_tree(c.keys[c.dim][id]));
        slots[id] = Int(word_to_canonical_sign(term.edge_word)) * term.coeff;
    });
    for (int id = 0; id < count; ++id)
        if (!slots[id].is_zero()) f.coeffs.emplace(id, std::move(slots[id]));
    return f;
}

ModuleChain boundary_of_module_chain(const ModuleChain& f, const OrientedComplex& c) {
    if (f.degree < 1 || f.degree > c.dim)
        throw std::invalid_argument("boundary_of_module_chain: degree out of range");
    ModuleChain out;
    out.n = f.n;
    out.degree = f.degree - 1;
    const SpMat& b = c.boundary[f.degree];
    std::map<int, SuperLieElement> acc;
    for (const auto& [id, coeff] : f.coeffs) {
        for (SpMat::InnerIterator it(b, id); it; ++it) {
            auto [slot, inserted] = acc.try_emplace(static_cast<int>(it.row()), f.n, Flavor::Super);
            slot->second += Int(static_cast<long long>(it.value())) * coeff;
        }
    }
    for (auto& [row, coeff] : acc)
        if (!coeff.is_zero()) out.coeffs.emplace(row, std::move(coeff));
    return out;
}

bool verify_invariance(const ModuleChain& f, const OrientedComplex& c, const Perm& sigma) {
    if (sigma.size() != c.n + 1 || sigma(0) != 0)
        throw std::invalid_argument("verify_invariance: coefficients only carry the subgroup fixing 0");
    std::vector<int> gen(c.n);
    for (int i = 1; i <= c.n; ++i) gen[i - 1] = sigma(i) - 1;
    const Perm gperm(gen);

    auto action = degree_action(c, sigma, f.degree);
    ModuleChain moved;
    moved.n = f.n;
    moved.degree = f.degree;
    for (const auto& [id, coeff] : f.coeffs) {
        auto [img, s] = action[id];
        SuperLieElement img_coeff = Int(s) * permute_generators(coeff, gperm);
        auto [slot, inserted] = moved.coeffs.try_emplace(img, f.n, Flavor::Super);
        slot->second += img_coeff;
        if (slot->second.is_zero()) moved.coeffs.erase(slot);
    }
    return moved == f;
}

SuperLieElement theta_eval(const Cochain& f, const ModuleChain& chain) {
    SuperLieElement out(chain.n, Flavor::Super);
    for (const auto& [id, v] : f) {
        auto it = chain.coeffs.find(id);
        if (it != chain.coeffs.end()) out += v * it->second;
    }
    return out;
}

Cochain caterpillar_indicator(const OrientedComplex& c, const Perm& sigma) {
    LabeledTree cat = LabeledTree::caterpillar(c.n, sigma);
    int id = c.index_of(c.dim, cat.encoding());
    if (id < 0) throw std::logic_error("caterpillar_indicator: simplex not found");
    return {{id, Int(1)}};
}

Cochain coboundary(const OrientedComplex& c, const Cochain& g) {
    Cochain out;
    const SpMat& b = c.boundary[c.dim];
    for (int col = 0; col < b.outerSize(); ++col) {
        Int v(0);
        for (SpMat::InnerIterator it(b, col); it; ++it) {
            auto found = g.find(static_cast<int>(it.row()));
            if (found != g.end()) v += Int(static_cast<long long>(it.value())) * found->second;
        }
        if (!v.is_zero()) out[col] = v;
    }
    return out;
}

std::string dump_cycle_json(const OrientedComplex& c, const ModuleChain& f) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "fundamental-cycle";
    j["n"] = c.n;
    j["degree"] = f.degree;
    j["term_count"] = f.coeffs.size();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    std::map<std::string, long long> census;
    for (const auto& [id, coeff] : f.coeffs) {
        LabeledTree t = parse_tree(c.keys[f.degree][id]);
        CycleTerm term = cycle_term(t);
        nlohmann::ordered_json rec;
        rec["tree"] = t.encoding();
        rec["shape"] = t.shape_encoding();
        nlohmann::ordered_json word = nlohmann::ordered_json::array();
        for (const auto& b : term.edge_word) word.push_back(b.key());
        rec["edge_word"] = std::move(word);
        rec["orientation_sign"] = word_to_canonical_sign(term.edge_word);
        rec["monomial"] = (term.monomial_sign < 0 ? "-" : "") + term.monomial.text();
        rec["coefficient"] = coeff.text();
        terms.push_back(std::move(rec));
        ++census[t.shape_encoding()];
    }
    j["terms"] = std::move(terms);
    nlohmann::ordered_json cj = nlohmann::ordered_json::array();
    for (const auto& [shape, count] : census) cj.push_back({{"shape", shape}, {"count", count}});
    j["census"] = std::move(cj);
    return j.dump(2) + "\n";
}

namespace {

/// Local adjacency view of a tree for shape classification.
struct TreeView {
    std::vector<std::vector<int>> node_leaves;
    std::vector<std::vector<int>> node_nbrs;
    int root_node = -1;

    explicit TreeView(const LabeledTree& t)
        : node_leaves(t.num_nodes()), node_nbrs(t.num_nodes()) {
        for (auto [label, node] : t.leaf_attachments()) {
            node_leaves[node].push_back(label);
            if (label == 0) root_node = node;
        }
        for (auto& v : node_leaves) std::sort(v.begin(), v.end());
        for (auto [u, v] : t.internal_edge_list()) {
            node_nbrs[u].push_back(v);
            node_nbrs[v].push_back(u);
        }
    }
};

Bipartition side_of(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    return Bipartition{std::move(labels)};
}

}  // namespace

N5Census verify_n5_cycle_census(const OrientedComplex& c, const ModuleChain& f) {
    if (c.n != 5 || f.degree != 2)
        throw std::invalid_argument("verify_n5_cycle_census: expects the five-label top chain");
    N5Census census;
    census.all_terms_match = true;

    using BM = BracketMonomial;
    for (int id = 0; id < static_cast<int>(c.keys[2].size()); ++id) {
        LabeledTree t = parse_tree(c.keys[2][id]);
        TreeView view(t);
        const auto& root_leaves = view.node_leaves[view.root_node];

        std::vector<Bipartition> word;
        int display_sign = 0;
        BM mono = BM::leaf(1);
        auto pendant_of = [&](int node) {
            for (int l : view.node_leaves[node])
                if (l != 0) return l;
            throw std::logic_error("expected a pendant leaf");
        };

        if (root_leaves.size() == 2) {
            int a = root_leaves[0] == 0 ? root_leaves[1] : root_leaves[0];
            int center = view.node_nbrs[view.root_node][0];
            if (view.node_leaves[center].empty()) {
                // Central node carries two cherries: -<i,j,k> (x) [a,[[b,c],[d,e]]].
                std::vector<std::vector<int>> blocks;
                for (int v : view.node_nbrs[center])
                    if (v != view.root_node) blocks.push_back(view.node_leaves[v]);
                if (*std::min_element(blocks[1].begin(), blocks[1].end()) <
                    *std::min_element(blocks[0].begin(), blocks[0].end()))
                    std::swap(blocks[0], blocks[1]);
                const int b = blocks[0][0], cc = blocks[0][1], d = blocks[1][0], e = blocks[1][1];
                word = {side_of({b, cc, d, e}), side_of(blocks[0]), side_of(blocks[1])};
                display_sign = -1;
                mono = BM::bracket(BM::leaf(a),
                                   BM::bracket(BM::bracket(BM::leaf(b), BM::leaf(cc)),
                                               BM::bracket(BM::leaf(d), BM::leaf(e))));
                ++census.cross;
            } else {
                // Spine with the root at one end: +<x,y,z> (x) [a,[b,[c,[d,e]]]].
                int v1 = center;
                int b = pendant_of(v1);
                int v2 = -1;
                for (int v : view.node_nbrs[v1])
                    if (v != view.root_node) v2 = v;
                int cc = pendant_of(v2);
                int v3 = -1;
                for (int v : view.node_nbrs[v2])
                    if (v != v1) v3 = v;
                const int d = view.node_leaves[v3][0], e = view.node_leaves[v3][1];
                word = {side_of({b, cc, d, e}), side_of({cc, d, e}), side_of({d, e})};
                display_sign = 1;
                mono = BM::bracket(
                    BM::leaf(a),
                    BM::bracket(BM::leaf(b), BM::bracket(BM::leaf(cc),
                                                         BM::bracket(BM::leaf(d), BM::leaf(e)))));
                ++census.chain_end;
            }
        } else {
            // Root label pendant in the middle: -<p,q,r> (x) [[a,b],[c,[d,e]]].
            int two_side = -1, three_side = -1;
            for (int v : view.node_nbrs[view.root_node]) {
                if (view.node_leaves[v].size() == 2 && view.node_nbrs[v].size() == 1)
                    two_side = v;
                else
                    three_side = v;
            }
            const int a = view.node_leaves[two_side][0], b = view.node_leaves[two_side][1];
            const int cc = pendant_of(three_side);
            int far = -1;
            for (int v : view.node_nbrs[three_side])
                if (v != view.root_node) far = v;
            const int d = view.node_leaves[far][0], e = view.node_leaves[far][1];
            word = {side_of({a, b}), side_of({cc, d, e}), side_of({d, e})};
            display_sign = -1;
            mono = BM::bracket(BM::bracket(BM::leaf(a), BM::leaf(b)),
                               BM::bracket(BM::leaf(cc), BM::bracket(BM::leaf(d), BM::leaf(e))));
            ++census.chain_mid;
        }

        SuperLieElement expected =
            Int(display_sign * word_to_canonical_sign(word)) * normalize(mono, Flavor::Super);
        auto it = f.coeffs.find(id);
        if (it == f.coeffs.end() || it->second != expected) census.all_terms_match = false;
    }
    return census;
}

}  // namespace treespace
