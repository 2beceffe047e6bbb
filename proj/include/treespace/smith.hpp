#pragma once

// Smith normal form over the integers, with optional unimodular transforms,
// plus the lattice utilities built on it: kernel bases, exact integral
// solving, and lattice comparisons. Everything is exact; Int has no overflow.
//
// Pivoting is deterministic: the smallest nonzero |entry| in the remaining
// submatrix wins, ties broken by (row, col). Boundary matrices are full of
// +-1 entries, so pivots stay unimodular and fill-in stays tame.

#include <optional>
#include <stdexcept>
#include <vector>

#include "treespace/types.hpp"

namespace treespace {

template <class S>
struct SmithResult {
    MatX<S> d;  // diagonal form, same shape as the input
    // When transforms are requested: d = row_t * a * col_t, with row_t and
    // col_t unimodular and row_t_inv, col_t_inv their inverses.
    MatX<S> row_t, row_t_inv, col_t, col_t_inv;
    bool with_transforms = false;
    Eigen::Index rank = 0;

    std::vector<S> invariant_factors() const {
        std::vector<S> f;
        for (Eigen::Index i = 0; i < rank; ++i) f.push_back(d(i, i));
        return f;
    }
};

template <class S>
SmithResult<S> smith_normal_form(const MatX<S>& input, bool with_transforms) {
    SmithResult<S> r;
    r.d = input;
    r.with_transforms = with_transforms;
    const Eigen::Index m = input.rows();
    const Eigen::Index n = input.cols();
    if (with_transforms) {
        r.row_t = MatX<S>::Identity(m, m);
        r.row_t_inv = MatX<S>::Identity(m, m);
        r.col_t = MatX<S>::Identity(n, n);
        r.col_t_inv = MatX<S>::Identity(n, n);
    }
    MatX<S>& d = r.d;

    auto row_add = [&](Eigen::Index dst, Eigen::Index src, const S& f) {
        d.row(dst) += f * d.row(src);
        if (with_transforms) {
            r.row_t.row(dst) += f * r.row_t.row(src);
            r.row_t_inv.col(src) -= f * r.row_t_inv.col(dst);
        }
    };
    auto col_add = [&](Eigen::Index dst, Eigen::Index src, const S& f) {
        d.col(dst) += f * d.col(src);
        if (with_transforms) {
            r.col_t.col(dst) += f * r.col_t.col(src);
            r.col_t_inv.row(src) -= f * r.col_t_inv.row(dst);
        }
    };
    auto row_swap = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        d.row(i).swap(d.row(j));
        if (with_transforms) {
            r.row_t.row(i).swap(r.row_t.row(j));
            r.row_t_inv.col(i).swap(r.row_t_inv.col(j));
        }
    };
    auto col_swap = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        d.col(i).swap(d.col(j));
        if (with_transforms) {
            r.col_t.col(i).swap(r.col_t.col(j));
            r.col_t_inv.row(i).swap(r.col_t_inv.row(j));
        }
    };
    auto row_negate = [&](Eigen::Index i) {
        d.row(i) = -d.row(i);
        if (with_transforms) {
            r.row_t.row(i) = -r.row_t.row(i);
            r.row_t_inv.col(i) = -r.row_t_inv.col(i);
        }
    };

    const S zero(0), one(1);
    Eigen::Index t = 0;
    const Eigen::Index steps = std::min(m, n);
    for (; t < steps; ++t) {
        // Deterministic pivot: smallest nonzero absolute value, then position.
        Eigen::Index pr = -1, pc = -1;
        S best = zero;
        for (Eigen::Index i = t; i < m && best != one; ++i)
            for (Eigen::Index j = t; j < n; ++j) {
                const S& x = d(i, j);
                if (x == zero) continue;
                S a = abs(x);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                    if (best == one) break;
                }
            }
        if (pr < 0) break;  // remaining submatrix is zero
        row_swap(t, pr);
        col_swap(t, pc);

        while (true) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (d(i, t) == zero) continue;
                S q = d(i, t) / d(t, t);
                if (q != zero) row_add(i, t, -q);
                if (d(i, t) != zero) {
                    // Remainder smaller than the pivot: promote it.
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (d(t, j) == zero) continue;
                S q = d(t, j) / d(t, t);
                if (q != zero) col_add(j, t, -q);
                if (d(t, j) != zero) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot row and column are clear; enforce divisibility of the
            // remaining entries by the pivot.
            bool fixed = true;
            for (Eigen::Index i = t + 1; i < m && fixed; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j) {
                    if ((d(i, j) % d(t, t)) != zero) {
                        row_add(t, i, one);
                        fixed = false;
                        break;
                    }
                }
            if (fixed) break;
        }
        if (d(t, t) < zero) row_negate(t);
    }
    r.rank = 0;
    for (Eigen::Index i = 0; i < steps; ++i)
        if (d(i, i) != zero) ++r.rank;
    return r;
}

template <class S>
Eigen::Index rank_of(const MatX<S>& a) {
    return smith_normal_form(a, false).rank;
}

/// Basis of the integer kernel lattice (columns); the lattice is a direct
/// summand, so this basis is saturated.
template <class S>
MatX<S> kernel_basis(const MatX<S>& a) {
    SmithResult<S> r = smith_normal_form(a, true);
    const Eigen::Index n = a.cols();
    MatX<S> k(n, n - r.rank);
    for (Eigen::Index j = r.rank; j < n; ++j) k.col(j - r.rank) = r.col_t.col(j);
    return k;
}

/// Exact solver for a fixed integer matrix: decides membership of the column
/// span lattice and produces integral solutions.
template <class S>
class IntegralSolver {
public:
    explicit IntegralSolver(const MatX<S>& a)
        : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a, true)) {}

    Eigen::Index rank() const { return snf_.rank; }

    std::optional<VecX<S>> try_solve(const VecX<S>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("IntegralSolver: size mismatch");
        VecX<S> y = snf_.row_t * b;
        VecX<S> z = VecX<S>::Zero(cols_);
        const S zero(0);
        for (Eigen::Index i = 0; i < rows_; ++i) {
            if (i < snf_.rank && i < cols_) {
                if ((y(i) % snf_.d(i, i)) != zero) return std::nullopt;
                z(i) = y(i) / snf_.d(i, i);
            } else if (y(i) != zero) {
                return std::nullopt;
            }
        }
        return VecX<S>(snf_.col_t * z);
    }

    /// Solves a x = b exactly over the integers; throws when b is outside the
    /// column-span lattice.
    VecX<S> solve(const VecX<S>& b) const {
        auto x = try_solve(b);
        if (!x) throw std::domain_error("IntegralSolver: no integral solution");
        return *x;
    }

    MatX<S> solve(const MatX<S>& b) const {
        MatX<S> x(cols_, b.cols());
        for (Eigen::Index j = 0; j < b.cols(); ++j) x.col(j) = solve(VecX<S>(b.col(j)));
        return x;
    }

    bool contains(const VecX<S>& b) const { return try_solve(b).has_value(); }

private:
    Eigen::Index rows_, cols_;
    SmithResult<S> snf_;
};

/// Equality of the column-span lattices of two generator matrices.
template <class S>
bool lattice_equal(const MatX<S>& a, const MatX<S>& b) {
    if (a.rows() != b.rows()) return false;
    IntegralSolver<S> sa(a), sb(b);
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!sa.contains(VecX<S>(b.col(j)))) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (!sb.contains(VecX<S>(a.col(j)))) return false;
    return true;
}

}  // namespace treespace
