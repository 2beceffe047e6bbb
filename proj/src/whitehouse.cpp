#include "treespace/whitehouse.hpp"

#include <algorithm>
#include <sstream>

namespace treespace {

namespace {

/// A vertex bipartition v_{0i}: the side with the root has exactly two
/// labels, so the stored side has all but one of the others.
bool is_root_pair_vertex(const Bipartition& b, int ambient_n) {
    return static_cast<int>(b.side_other.size()) == ambient_n - 1;
}

}  // namespace

PairComplex build_complement_subcomplex(int n) {
    if (n < 2) throw std::invalid_argument("build_complement_subcomplex: needs n >= 2");
    PairComplex p;
    p.n = n;
    p.ambient = build_tree_complex(n + 1);
    const OrientedComplex& amb = p.ambient;
    const int dim = amb.dim;

    // Vertices of X and their new ids.
    const int nv = static_cast<int>(amb.vertex_bips.size());
    std::vector<int> sub_vertex_id(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v)
        if (!is_root_pair_vertex(amb.vertex_bips[v], amb.n)) sub_vertex_id[v] = next++;

    OrientedComplex& sub = p.sub;
    sub.space = OrientedComplex::Space::TreeSpace;
    sub.n = amb.n;
    sub.dim = dim;
    sub.keys.resize(dim + 1);
    sub.verts.resize(dim + 1);
    sub.boundary.resize(dim + 1);
    p.sub_to_ambient.resize(dim + 1);
    p.rel_to_ambient.resize(dim + 1);

    for (int v = 0; v < nv; ++v)
        if (sub_vertex_id[v] >= 0) sub.vertex_bips.push_back(amb.vertex_bips[v]);

    // Split each degree into sub simplices (all vertices kept) and relative
    // basis simplices (the rest). Filtering preserves the key-sorted order.
    std::vector<std::vector<int>> rel_pos(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        const int count = static_cast<int>(amb.verts[k].size());
        rel_pos[k].assign(count, -1);
        for (int id = 0; id < count; ++id) {
            bool inside = true;
            for (int v : amb.verts[k][id])
                if (sub_vertex_id[v] < 0) inside = false;
            if (inside) {
                std::vector<int> remapped;
                remapped.reserve(amb.verts[k][id].size());
                for (int v : amb.verts[k][id]) remapped.push_back(sub_vertex_id[v]);
                sub.keys[k].push_back(amb.keys[k][id]);
                sub.verts[k].push_back(std::move(remapped));
                p.sub_to_ambient[k].push_back(id);
            } else {
                rel_pos[k][id] = static_cast<int>(p.rel_to_ambient[k].size());
                p.rel_to_ambient[k].push_back(id);
            }
        }
        p.rel_f.push_back(static_cast<long long>(p.rel_to_ambient[k].size()));
    }

    // Boundaries of the subcomplex and of the quotient.
    p.rel_boundary.resize(dim + 1);
    for (int k = 1; k <= dim; ++k) {
        std::vector<int> sub_pos(amb.verts[k - 1].size(), -1);
        for (int i = 0; i < static_cast<int>(p.sub_to_ambient[k - 1].size()); ++i)
            sub_pos[p.sub_to_ambient[k - 1][i]] = i;

        std::vector<Eigen::Triplet<std::int64_t>> sub_trips, rel_trips;
        for (int i = 0; i < static_cast<int>(p.sub_to_ambient[k].size()); ++i) {
            int id = p.sub_to_ambient[k][i];
            for (SpMat::InnerIterator it(amb.boundary[k], id); it; ++it) {
                int row = sub_pos[it.row()];
                if (row < 0) throw std::logic_error("subcomplex is not closed under faces");
                sub_trips.emplace_back(row, i, it.value());
            }
        }
        for (int i = 0; i < static_cast<int>(p.rel_to_ambient[k].size()); ++i) {
            int id = p.rel_to_ambient[k][i];
            for (SpMat::InnerIterator it(amb.boundary[k], id); it; ++it) {
                int row = rel_pos[k - 1][it.row()];
                if (row >= 0) rel_trips.emplace_back(row, i, it.value());
            }
        }
        SpMat sb(p.sub_to_ambient[k - 1].size(), p.sub_to_ambient[k].size());
        sb.setFromTriplets(sub_trips.begin(), sub_trips.end());
        sub.boundary[k] = std::move(sb);
        SpMat rb(p.rel_to_ambient[k - 1].size(), p.rel_to_ambient[k].size());
        rb.setFromTriplets(rel_trips.begin(), rel_trips.end());
        p.rel_boundary[k] = std::move(rb);
    }
    return p;
}

HomologyResult relative_homology(const PairComplex& p) {
    const int dim = p.ambient.dim;
    HomologyResult r;
    r.reduced = false;
    r.dim = dim;
    std::vector<Eigen::Index> ranks(dim + 2, 0);
    std::vector<std::vector<Int>> factors(dim + 2);
    for (int k = 1; k <= dim; ++k) {
        SmithResult<Int> s = smith_normal_form(to_int_mat(p.rel_boundary[k]), false);
        ranks[k] = s.rank;
        factors[k] = s.invariant_factors();
    }
    for (int k = 0; k <= dim; ++k) {
        HomologyDegree deg;
        deg.betti = p.rel_f[k] - ranks[k] - ranks[k + 1];
        if (k + 1 <= dim)
            for (const Int& f : factors[k + 1])
                if (f > Int(1)) deg.torsion.push_back(f);
        r.degrees.push_back(std::move(deg));
    }
    return r;
}

ExactnessReport exactness_check(const PairComplex& p) {
    ExactnessReport rep;
    rep.n = p.n;
    const int top = p.ambient.dim;  // = n - 2
    std::ostringstream diag;

    // Top homology of the ambient complex and of the quotient: kernels of the
    // top boundary maps (no higher chains exist).
    IntMat k_amb = kernel_basis(boundary_matrix(p.ambient, top, true));
    IntMat k_rel = kernel_basis(to_int_mat(p.rel_boundary[top]));
    rep.rank_left = k_amb.cols();
    rep.rank_middle = k_rel.cols();

    // The quotient projection on top chains, applied to ambient cycles.
    const auto& rel_ids = p.rel_to_ambient[top];
    IntMat projected(rel_ids.size(), k_amb.cols());
    for (int i = 0; i < static_cast<int>(rel_ids.size()); ++i) projected.row(i) = k_amb.row(rel_ids[i]);
    IntegralSolver<Int> rel_solver(k_rel);
    IntMat m1 = rel_solver.solve(projected);  // coords of j(cycles) in the relative cycle basis

    SmithResult<Int> m1_snf = smith_normal_form(m1, false);
    rep.left_injective = (m1_snf.rank == k_amb.cols());
    rep.cokernel_torsion_free = true;
    for (const Int& f : m1_snf.invariant_factors())
        if (f != Int(1)) rep.cokernel_torsion_free = false;
    if (!rep.left_injective) diag << "quotient map drops rank on top homology; ";
    if (!rep.cokernel_torsion_free)
        diag << "quotient map has torsion cokernel (nontrivial invariant factor); ";

    // Connecting map: lift a relative cycle by zero-extension, take the
    // ambient boundary, read the result inside X.
    const auto& amb_bnd = p.ambient.boundary[top];
    std::vector<int> sub_pos(p.ambient.verts[top - 1].size(), -1);
    for (int i = 0; i < static_cast<int>(p.sub_to_ambient[top - 1].size()); ++i)
        sub_pos[p.sub_to_ambient[top - 1][i]] = i;
    IntMat delta = IntMat::Zero(p.sub_to_ambient[top - 1].size(), k_rel.cols());
    for (Eigen::Index j = 0; j < k_rel.cols(); ++j) {
        // Full ambient boundary of the zero-extended lift; only the sum is
        // guaranteed to vanish outside the subcomplex.
        IntVec ambient_boundary = IntVec::Zero(p.ambient.simplex_count(top - 1));
        for (int i = 0; i < static_cast<int>(rel_ids.size()); ++i) {
            const Int& c = k_rel(i, j);
            if (c.is_zero()) continue;
            for (SpMat::InnerIterator it(amb_bnd, rel_ids[i]); it; ++it)
                ambient_boundary(it.row()) += Int(static_cast<long long>(it.value())) * c;
        }
        for (Eigen::Index row = 0; row < ambient_boundary.size(); ++row) {
            if (ambient_boundary(row).is_zero()) continue;
            if (sub_pos[row] < 0) {
                diag << "boundary of a lifted relative cycle leaves the subcomplex; ";
                rep.diagnostic = diag.str();
                return rep;
            }
            delta(sub_pos[row], j) = ambient_boundary(row);
        }
    }

    // Homology of X in degree top-1 as cycles modulo boundaries.
    IntMat z_x = kernel_basis(boundary_matrix(p.sub, top - 1, true));
    IntegralSolver<Int> zx_solver(z_x);
    IntMat d_coords = zx_solver.solve(delta);
    IntMat u_coords = zx_solver.solve(boundary_matrix(p.sub, top, true));
    SmithResult<Int> u_snf = smith_normal_form(u_coords, false);
    rep.rank_right = z_x.cols() - u_snf.rank;

    // Surjectivity onto the quotient: [delta | boundaries] spans the full
    // cycle lattice.
    IntMat span(z_x.cols(), d_coords.cols() + u_coords.cols());
    span << d_coords, u_coords;
    SmithResult<Int> span_snf = smith_normal_form(span, false);
    rep.right_surjective = (span_snf.rank == z_x.cols());
    for (const Int& f : span_snf.invariant_factors())
        if (f != Int(1)) rep.right_surjective = false;
    if (!rep.right_surjective) diag << "connecting map misses part of the subcomplex homology; ";

    // Exactness in the middle: the kernel lattice of the induced connecting
    // map equals the image lattice of the quotient map.
    // ker = projections to the first r2 coordinates of ker[d_coords | -u_coords].
    IntMat paired(z_x.cols(), d_coords.cols() + u_coords.cols());
    paired << d_coords, (-1) * u_coords;
    IntMat pair_kernel = kernel_basis(paired);
    IntMat kernel_gens = pair_kernel.topRows(d_coords.cols());
    rep.middle_exact = lattice_equal(kernel_gens, m1);
    if (!rep.middle_exact) diag << "image of top homology differs from the connecting kernel; ";

    rep.ranks_expected = (rep.rank_left == factorial(p.n)) &&
                         (rep.rank_middle == (p.n + 1) * factorial(p.n - 1)) &&
                         (rep.rank_right == factorial(p.n - 1));
    if (!rep.ranks_expected)
        diag << "ranks (" << rep.rank_left << "," << rep.rank_middle << "," << rep.rank_right
             << ") differ from the expected (" << factorial(p.n) << ","
             << (p.n + 1) * factorial(p.n - 1) << "," << factorial(p.n - 1) << "); ";
    rep.diagnostic = diag.str();
    return rep;
}

Character stabilizer_action_character(const OrientedComplex& c, int k, bool reduced) {
    const int m = c.n;  // the subgroup fixing 0 permutes {1..n}
    Character chi;
    chi.m = m;
    for (const auto& type : partitions_of(m)) {
        Perm rep = class_representative(m, type);
        std::vector<int> img(c.n + 1);
        img[0] = 0;
        for (int i = 0; i < m; ++i) img[i + 1] = rep(i) + 1;
        chi.values[partition_key(type)] = action_trace(c, Perm(img), k, reduced);
    }
    return chi;
}

Character hat_lie_character(int n) {
    if (n < 3) throw std::invalid_argument("hat_lie_character: needs n >= 3");
    OrientedComplex c = build_tree_complex(n);
    Character hat = action_character(c, n - 3, true, /*sign_twist=*/true);
    if (restrict_character(hat) != lie_character(n, Flavor::Ordinary))
        throw std::logic_error("hat_lie_character: restriction does not match the Lie character");
    return hat;
}

WhitehouseCharacterReport whitehouse_character_check(int n) {
    WhitehouseCharacterReport rep;
    rep.n = n;
    rep.induced = induce_character(lie_character(n, Flavor::Ordinary));
    rep.lie_next = lie_character(n + 1, Flavor::Ordinary);
    rep.hat = hat_lie_character(n);
    rep.equal = true;
    for (const auto& type : partitions_of(n + 1)) {
        const std::string key = partition_key(type);
        if (rep.induced.values.at(key) != rep.lie_next.values.at(key) + rep.hat.values.at(key)) {
            rep.equal = false;
            rep.mismatch_classes.push_back(key);
        }
    }
    return rep;
}

}  // namespace treespace
