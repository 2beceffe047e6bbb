#include "treespace/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace treespace {

std::string partition_text(const Partition& p) {
    std::ostringstream os;
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (b) os << '|';
        for (std::size_t i = 0; i < p[b].size(); ++i) {
            if (i) os << ',';
            os << p[b][i];
        }
    }
    return os.str();
}

Partition canonical_partition(Partition p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return p;
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.size() <= coarse.size()) return false;
    for (const auto& fb : fine) {
        bool inside = false;
        for (const auto& cb : coarse) {
            if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

std::vector<Partition> nontrivial_partitions(int n) {
    // Restricted-growth enumeration of all set partitions of {1..n}.
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    auto emit = [&] {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks < 2 || blocks > n - 1) return;
        Partition p(blocks);
        for (int i = 0; i < n; ++i) p[rgs[i]].push_back(i + 1);
        out.push_back(canonical_partition(std::move(p)));
    };
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n >= 1) rec(rec, 1, 0);  // rgs[0] = 0 fixed
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return partition_text(a) < partition_text(b);
    });
    return out;
}

std::string PartitionChain::text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) os << " < ";
        os << partition_text(chain[i]);
    }
    return os.str();
}

std::vector<long long> OrientedComplex::f_vector() const {
    std::vector<long long> f;
    for (int k = 0; k <= dim; ++k) f.push_back(simplex_count(k));
    return f;
}

long long OrientedComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dim; ++k) chi += (k % 2 == 0 ? 1 : -1) * simplex_count(k);
    return chi;
}

int OrientedComplex::index_of(int k, const std::string& key) const {
    if (k < 0 || k > dim) return -1;
    const auto& v = keys[k];
    auto it = std::lower_bound(v.begin(), v.end(), key);
    if (it == v.end() || *it != key) return -1;
    return static_cast<int>(it - v.begin());
}

namespace {

/// Parity of the permutation sorting v, as +-1 (v must have distinct entries).
int sort_parity(std::vector<int> v) {
    int swaps = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) ++swaps;
    return swaps % 2 == 0 ? 1 : -1;
}

Bipartition apply_perm(const Bipartition& b, const Perm& sigma, int n) {
    std::vector<int> img;
    img.reserve(b.side_other.size());
    bool has_zero = false;
    for (int x : b.side_other) {
        int y = sigma(x);
        if (y == 0) has_zero = true;
        img.push_back(y);
    }
    std::sort(img.begin(), img.end());
    if (!has_zero) return Bipartition{std::move(img)};
    std::vector<int> other;
    for (int l = 0; l <= n; ++l)
        if (!std::binary_search(img.begin(), img.end(), l)) other.push_back(l);
    return Bipartition{std::move(other)};
}

Partition apply_perm(const Partition& p, const Perm& sigma) {
    Partition q;
    q.reserve(p.size());
    for (const auto& blk : p) {
        std::vector<int> b2;
        b2.reserve(blk.size());
        for (int x : blk) b2.push_back(sigma(x));
        q.push_back(std::move(b2));
    }
    return canonical_partition(std::move(q));
}

/// vertex_image[v] = image vertex id under the relabeling;
/// vertex_rank[v] = position of v in the canonical edge order (tree spaces).
struct ActionTables {
    std::vector<int> vertex_image;
    std::vector<int> vertex_rank;
    bool tree;
};

ActionTables action_tables(const OrientedComplex& c, const Perm& sigma) {
    ActionTables t;
    t.tree = (c.space == OrientedComplex::Space::TreeSpace);
    if (t.tree) {
        const int nv = static_cast<int>(c.vertex_bips.size());
        std::map<std::string, int> by_key;
        for (int v = 0; v < nv; ++v) by_key[c.vertex_bips[v].key()] = v;
        t.vertex_image.resize(nv);
        for (int v = 0; v < nv; ++v)
            t.vertex_image[v] = by_key.at(apply_perm(c.vertex_bips[v], sigma, c.n).key());
        // Rank vertices by their bipartition, the canonical edge order.
        std::vector<int> idx(nv);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return c.vertex_bips[a].side_other < c.vertex_bips[b].side_other;
        });
        t.vertex_rank.resize(nv);
        for (int r = 0; r < nv; ++r) t.vertex_rank[idx[r]] = r;
    } else {
        const int nv = static_cast<int>(c.vertex_partitions.size());
        std::map<std::string, int> by_key;
        for (int v = 0; v < nv; ++v) by_key[partition_text(c.vertex_partitions[v])] = v;
        t.vertex_image.resize(nv);
        for (int v = 0; v < nv; ++v)
            t.vertex_image[v] = by_key.at(partition_text(apply_perm(c.vertex_partitions[v], sigma)));
    }
    return t;
}

std::pair<int, int> image_of(const OrientedComplex& c, int k, int id, const ActionTables& t,
                             const std::map<std::vector<int>, int>& lookup) {
    const std::vector<int>& vs = c.verts[k][id];
    std::vector<int> img;
    img.reserve(vs.size());
    for (int v : vs) img.push_back(t.vertex_image[v]);
    int sign = 1;
    if (t.tree) {
        // Restore the canonical edge order; the sign is the parity of the
        // reordering.
        std::vector<int> ranks;
        ranks.reserve(img.size());
        for (int v : img) ranks.push_back(t.vertex_rank[v]);
        sign = sort_parity(ranks);
        std::sort(img.begin(), img.end(),
                  [&](int a, int b) { return t.vertex_rank[a] < t.vertex_rank[b]; });
    }
    auto it = lookup.find(img);
    if (it == lookup.end()) throw std::logic_error("simplex image not found");
    return {it->second, sign};
}

std::map<std::vector<int>, int> verts_lookup(const OrientedComplex& c, int k) {
    std::map<std::vector<int>, int> lk;
    for (int id = 0; id < static_cast<int>(c.verts[k].size()); ++id) lk[c.verts[k][id]] = id;
    return lk;
}

void check_action_domain(const OrientedComplex& c, const Perm& sigma) {
    if (sigma.size() != c.n + 1) throw std::invalid_argument("relabeling: permutation size mismatch");
    if (c.space == OrientedComplex::Space::PartitionNerve && sigma(0) != 0)
        throw std::invalid_argument("relabeling: the partition nerve only carries the subgroup fixing 0");
}

}  // namespace

std::pair<int, int> OrientedComplex::simplex_image(int k, int id, const Perm& sigma) const {
    check_action_domain(*this, sigma);
    ActionTables t = action_tables(*this, sigma);
    return image_of(*this, k, id, t, verts_lookup(*this, k));
}

OrientedComplex build_tree_complex(int n) {
    OrientedComplex c;
    c.space = OrientedComplex::Space::TreeSpace;
    c.n = n;
    if (n < 3) {
        c.note = "empty complex: no tree on {0.." + std::to_string(n) + "} has an internal edge";
        return c;
    }
    c.dim = n - 3;
    c.keys.resize(c.dim + 1);
    c.verts.resize(c.dim + 1);
    c.boundary.resize(c.dim + 1);

    std::vector<LabeledTree> vertex_trees = enumerate_trees(n, 1);
    std::map<std::string, int> vertex_by_bip;
    for (int i = 0; i < static_cast<int>(vertex_trees.size()); ++i) {
        c.keys[0].push_back(vertex_trees[i].encoding());
        Bipartition b = vertex_trees[i].bipartitions()[0];
        vertex_by_bip[b.key()] = i;
        c.vertex_bips.push_back(std::move(b));
        c.verts[0].push_back({i});
    }

    std::map<std::vector<int>, int> prev_lookup;
    for (int i = 0; i < static_cast<int>(c.verts[0].size()); ++i) prev_lookup[c.verts[0][i]] = i;

    for (int k = 1; k <= c.dim; ++k) {
        std::vector<LabeledTree> trees = enumerate_trees(n, k + 1);
        std::map<std::vector<int>, int> lookup;
        for (int id = 0; id < static_cast<int>(trees.size()); ++id) {
            c.keys[k].push_back(trees[id].encoding());
            std::vector<int> vs;
            for (const Bipartition& b : trees[id].bipartitions()) vs.push_back(vertex_by_bip.at(b.key()));
            lookup[vs] = id;
            c.verts[k].push_back(std::move(vs));
        }
        std::vector<Eigen::Triplet<std::int64_t>> trips;
        trips.reserve(trees.size() * (k + 1));
        for (int id = 0; id < static_cast<int>(trees.size()); ++id) {
            const auto& vs = c.verts[k][id];
            for (int i = 0; i <= k; ++i) {
                std::vector<int> face = vs;
                face.erase(face.begin() + i);
                trips.emplace_back(prev_lookup.at(face), id, i % 2 == 0 ? 1 : -1);
            }
        }
        SpMat b(c.simplex_count(k - 1), c.simplex_count(k));
        b.setFromTriplets(trips.begin(), trips.end());
        c.boundary[k] = std::move(b);
        prev_lookup = std::move(lookup);
    }
    return c;
}

OrientedComplex build_partition_nerve(int n) {
    OrientedComplex c;
    c.space = OrientedComplex::Space::PartitionNerve;
    c.n = n;
    if (n < 3) {
        c.note = "empty complex: every partition of {1.." + std::to_string(n) + "} is trivial";
        return c;
    }
    c.dim = n - 3;
    c.keys.resize(c.dim + 1);
    c.verts.resize(c.dim + 1);
    c.boundary.resize(c.dim + 1);

    c.vertex_partitions = nontrivial_partitions(n);
    const int nv = static_cast<int>(c.vertex_partitions.size());
    for (int i = 0; i < nv; ++i) {
        c.keys[0].push_back(partition_text(c.vertex_partitions[i]));
        c.verts[0].push_back({i});
    }

    // finer[i]: all j whose partition strictly refines partition i.
    std::vector<std::vector<int>> finer(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (refines(c.vertex_partitions[j], c.vertex_partitions[i])) finer[i].push_back(j);

    std::map<std::vector<int>, int> prev_lookup;
    for (int i = 0; i < nv; ++i) prev_lookup[c.verts[0][i]] = i;

    std::vector<std::vector<int>> chains;
    for (int i = 0; i < nv; ++i) chains.push_back({i});
    for (int k = 1; k <= c.dim; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& ch : chains)
            for (int j : finer[ch.back()]) {
                auto ext = ch;
                ext.push_back(j);
                next.push_back(std::move(ext));
            }
        chains = std::move(next);

        // Dense ids sorted by chain key.
        std::vector<std::pair<std::string, std::vector<int>>> keyed;
        keyed.reserve(chains.size());
        for (auto& ch : chains) {
            std::string key;
            for (std::size_t i = 0; i < ch.size(); ++i) {
                if (i) key += " < ";
                key += c.keys[0][ch[i]];
            }
            keyed.push_back({std::move(key), std::move(ch)});
        }
        std::sort(keyed.begin(), keyed.end());
        std::map<std::vector<int>, int> lookup;
        chains.clear();
        for (int id = 0; id < static_cast<int>(keyed.size()); ++id) {
            c.keys[k].push_back(keyed[id].first);
            c.verts[k].push_back(keyed[id].second);
            lookup[keyed[id].second] = id;
            chains.push_back(keyed[id].second);
        }

        std::vector<Eigen::Triplet<std::int64_t>> trips;
        for (int id = 0; id < static_cast<int>(c.verts[k].size()); ++id) {
            const auto& vs = c.verts[k][id];
            for (int i = 0; i <= k; ++i) {
                std::vector<int> face = vs;
                face.erase(face.begin() + i);
                trips.emplace_back(prev_lookup.at(face), id, i % 2 == 0 ? 1 : -1);
            }
        }
        SpMat b(c.simplex_count(k - 1), c.simplex_count(k));
        b.setFromTriplets(trips.begin(), trips.end());
        c.boundary[k] = std::move(b);
        prev_lookup = std::move(lookup);
    }
    return c;
}

std::map<long long, long long> codim1_incidence_report(const OrientedComplex& c) {
    if (c.dim < 1)
        throw std::invalid_argument("codim1_incidence_report: complex has no codimension-1 simplices");
    const SpMat& top = c.boundary[c.dim];
    std::vector<long long> count(top.rows(), 0);
    for (int k = 0; k < top.outerSize(); ++k)
        for (SpMat::InnerIterator it(top, k); it; ++it) ++count[it.row()];
    std::map<long long, long long> hist;
    for (long long x : count) ++hist[x];
    return hist;
}

namespace {
bool sparse_is_zero(const SpMat& a) {
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            if (it.value() != 0) return false;
    return true;
}
}  // namespace

bool boundary_square_is_zero(const OrientedComplex& c) {
    for (int k = 2; k <= c.dim; ++k)
        if (!sparse_is_zero(c.boundary[k - 1] * c.boundary[k])) return false;
    return true;
}

std::vector<std::pair<int, int>> degree_action(const OrientedComplex& c, const Perm& sigma, int k) {
    check_action_domain(c, sigma);
    if (k < 0 || k > c.dim) throw std::invalid_argument("degree_action: degree out of range");
    ActionTables t = action_tables(c, sigma);
    auto lookup = verts_lookup(c, k);
    std::vector<std::pair<int, int>> out;
    const int count = static_cast<int>(c.verts[k].size());
    out.reserve(count);
    for (int id = 0; id < count; ++id) out.push_back(image_of(c, k, id, t, lookup));
    return out;
}

std::vector<SpMat> induced_simplicial_map(const OrientedComplex& c, const Perm& sigma) {
    check_action_domain(c, sigma);
    std::vector<SpMat> out;
    if (c.empty()) return out;
    ActionTables t = action_tables(c, sigma);
    for (int k = 0; k <= c.dim; ++k) {
        auto lookup = verts_lookup(c, k);
        std::vector<Eigen::Triplet<std::int64_t>> trips;
        const int count = static_cast<int>(c.verts[k].size());
        trips.reserve(count);
        for (int id = 0; id < count; ++id) {
            auto [img, sign] = image_of(c, k, id, t, lookup);
            trips.emplace_back(id, img, sign);
        }
        SpMat m(count, count);
        m.setFromTriplets(trips.begin(), trips.end());
        out.push_back(std::move(m));
    }
    return out;
}

bool action_commutes_with_boundary(const OrientedComplex& c, const std::vector<SpMat>& maps) {
    for (int k = 1; k <= c.dim; ++k) {
        SpMat lhs = c.boundary[k] * SpMat(maps[k].transpose());
        SpMat rhs = SpMat(maps[k - 1].transpose()) * c.boundary[k];
        if (!sparse_is_zero(lhs - rhs)) return false;
    }
    return true;
}

std::string dump_complex_json(const OrientedComplex& c) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "complex";
    j["space"] = c.space == OrientedComplex::Space::TreeSpace ? "tree-space" : "partition-nerve";
    j["n"] = c.n;
    j["dim"] = c.dim;
    if (!c.note.empty()) j["note"] = c.note;
    j["f_vector"] = c.f_vector();
    nlohmann::ordered_json simplices = nlohmann::ordered_json::array();
    for (int k = 0; k <= c.dim; ++k) simplices.push_back(c.keys[k]);
    j["simplices"] = std::move(simplices);
    nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
    for (int k = 0; k <= c.dim; ++k) {
        nlohmann::ordered_json trips = nlohmann::ordered_json::array();
        if (k >= 1) {
            for (int col = 0; col < c.boundary[k].outerSize(); ++col)
                for (SpMat::InnerIterator it(c.boundary[k], col); it; ++it)
                    trips.push_back({it.row(), it.col(), it.value()});
        }
        boundary.push_back(std::move(trips));
    }
    j["boundary"] = std::move(boundary);
    return j.dump(2) + "\n";
}

ComplexDump load_complex_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ComplexDump d;
    d.schema = j.at("schema").get<int>();
    d.space = j.at("space").get<std::string>();
    d.n = j.at("n").get<int>();
    d.dim = j.at("dim").get<int>();
    d.f_vector = j.at("f_vector").get<std::vector<long long>>();
    for (const auto& lvl : j.at("simplices")) d.keys.push_back(lvl.get<std::vector<std::string>>());
    const auto& bnd = j.at("boundary");
    for (int k = 0; k <= d.dim; ++k) {
        long long rows = k >= 1 ? d.f_vector[k - 1] : 0;
        long long cols = k >= 1 ? d.f_vector[k] : 0;
        SpMat m(rows, cols);
        if (k >= 1) {
            std::vector<Eigen::Triplet<std::int64_t>> trips;
            for (const auto& t : bnd.at(k))
                trips.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>());
            m.setFromTriplets(trips.begin(), trips.end());
        }
        d.boundary.push_back(std::move(m));
    }
    return d;
}

std::string validate_complex_dump(const ComplexDump& d) {
    if (d.schema != 1) return "unsupported schema " + std::to_string(d.schema);
    if (static_cast<int>(d.f_vector.size()) != d.dim + 1) return "f_vector length does not match dim";
    for (int k = 0; k <= d.dim; ++k)
        if (static_cast<long long>(d.keys[k].size()) != d.f_vector[k])
            return "simplex list length mismatch in degree " + std::to_string(k);
    for (int k = 1; k <= d.dim; ++k) {
        const SpMat& b = d.boundary[k];
        for (int col = 0; col < b.outerSize(); ++col) {
            long long nnz = 0;
            for (SpMat::InnerIterator it(b, col); it; ++it) {
                if (it.value() != 1 && it.value() != -1)
                    return "boundary entry not +-1 in degree " + std::to_string(k);
                ++nnz;
            }
            if (nnz != k + 1)
                return "boundary column " + std::to_string(col) + " of degree " + std::to_string(k) +
                       " has " + std::to_string(nnz) + " entries, expected " + std::to_string(k + 1);
        }
    }
    for (int k = 2; k <= d.dim; ++k) {
        SpMat prod = d.boundary[k - 1] * d.boundary[k];
        for (int j = 0; j < prod.outerSize(); ++j)
            for (SpMat::InnerIterator it(prod, j); it; ++it)
                if (it.value() != 0)
                    return "boundary square is nonzero in degree " + std::to_string(k) + " at (" +
                           std::to_string(it.row()) + "," + std::to_string(it.col()) + ")";
    }
    return "";
}

}  // namespace treespace
