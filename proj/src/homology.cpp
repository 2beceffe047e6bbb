#include "treespace/homology.hpp"

#include <stdexcept>

namespace treespace {

namespace {

/// Dense product of a sparse machine-integer matrix with an exact matrix.
IntMat sp_times(const SpMat& a, const IntMat& b) {
    IntMat out = IntMat::Zero(a.rows(), b.cols());
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it) {
            const Int f(static_cast<long long>(it.value()));
            out.row(it.row()) += f * b.row(it.col());
        }
    return out;
}

}  // namespace

bool HomologyResult::concentrated_free(int k, long long rank) const {
    for (int d = 0; d < static_cast<int>(degrees.size()); ++d) {
        if (!degrees[d].torsion.empty()) return false;
        if (degrees[d].betti != (d == k ? rank : 0)) return false;
    }
    return k <= dim;
}

IntMat boundary_matrix(const OrientedComplex& c, int k, bool reduced) {
    if (k == 0) {
        if (!reduced) return IntMat::Zero(0, c.simplex_count(0));
        IntMat aug = IntMat::Zero(1, c.simplex_count(0));
        for (long long j = 0; j < c.simplex_count(0); ++j) aug(0, j) = Int(1);
        return aug;
    }
    if (k > c.dim) return IntMat::Zero(c.simplex_count(c.dim), 0);
    return to_int_mat(c.boundary[k]);
}

HomologyResult homology(const OrientedComplex& c, bool reduced, bool with_top_basis) {
    HomologyResult r;
    r.reduced = reduced;
    r.dim = c.dim;
    if (c.empty()) return r;
    if (!boundary_square_is_zero(c))
        throw std::invalid_argument("homology: boundary square is nonzero, corrupt complex");

    // One Smith form per boundary degree.
    std::vector<Eigen::Index> ranks(c.dim + 2, 0);
    std::vector<std::vector<Int>> factors(c.dim + 2);
    for (int k = 0; k <= c.dim; ++k) {
        SmithResult<Int> s = smith_normal_form(boundary_matrix(c, k, reduced), false);
        ranks[k] = s.rank;
        factors[k] = s.invariant_factors();
    }
    ranks[c.dim + 1] = 0;

    for (int k = 0; k <= c.dim; ++k) {
        HomologyDegree deg;
        deg.betti = c.simplex_count(k) - ranks[k] - ranks[k + 1];
        if (k + 1 <= c.dim)
            for (const Int& f : factors[k + 1])
                if (f > Int(1)) deg.torsion.push_back(f);
        r.degrees.push_back(std::move(deg));
    }

    if (with_top_basis) r.top_cycle_basis = kernel_basis(boundary_matrix(c, c.dim, reduced));
    return r;
}

Int action_trace(const OrientedComplex& c, const Perm& sigma, int k, bool reduced) {
    if (c.empty() || k < 0 || k > c.dim) throw std::invalid_argument("action_trace: degree out of range");

    IntMat cycles = kernel_basis(boundary_matrix(c, k, reduced));
    const Eigen::Index z = cycles.cols();
    if (z == 0) return Int(0);
    IntegralSolver<Int> cycle_solver(cycles);

    // Column-action matrix in degree k: transpose of the row-convention map.
    std::vector<SpMat> maps = induced_simplicial_map(c, sigma);
    SpMat col_action = maps[k].transpose();
    IntMat images = sp_times(col_action, cycles);
    IntMat x = cycle_solver.solve(images);  // z x z, integral by saturation

    if (k == c.dim) {
        Int t(0);
        for (Eigen::Index i = 0; i < z; ++i) t += x(i, i);
        return t;
    }

    // Quotient by the boundary lattice: adapt the cycle basis via the Smith
    // form of the boundary coordinates and take the trace of the free block.
    IntMat u = cycle_solver.solve(boundary_matrix(c, k + 1, reduced));
    SmithResult<Int> s = smith_normal_form(u, true);
    for (Eigen::Index i = 0; i < s.rank; ++i)
        if (s.d(i, i) != Int(1))
            throw std::domain_error("action_trace: homology has torsion in this degree");
    IntMat xhat = s.row_t * x * s.row_t_inv;
    Int t(0);
    for (Eigen::Index i = s.rank; i < z; ++i) t += xhat(i, i);
    return t;
}

Character action_character(const OrientedComplex& c, int k, bool reduced, bool sign_twist) {
    const int m = c.space == OrientedComplex::Space::TreeSpace ? c.n + 1 : c.n;
    Character chi;
    chi.m = m;
    for (const auto& type : partitions_of(m)) {
        Perm rep = class_representative(m, type);
        if (c.space == OrientedComplex::Space::PartitionNerve) {
            // Embed as a permutation of {0..n} fixing 0.
            std::vector<int> img(c.n + 1);
            img[0] = 0;
            for (int i = 0; i < c.n; ++i) img[i + 1] = rep(i) + 1;
            rep = Perm(img);
        }
        Int value = action_trace(c, rep, k, reduced);
        if (sign_twist) value = Int(sign_of_class(type)) * value;
        chi.values[partition_key(type)] = value;
    }
    return chi;
}

}  // namespace treespace
