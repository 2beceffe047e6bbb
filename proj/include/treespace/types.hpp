#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "treespace/int.hpp"

namespace treespace {

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = MatX<Int>;
using IntVec = VecX<Int>;

/// Boundary and action matrices have tiny entries; they are kept sparse in
/// machine integers and densified into IntMat only where exact elimination
/// needs headroom.
using SpMat = Eigen::SparseMatrix<std::int64_t>;

inline IntMat to_int_mat(const SpMat& s) {
    IntMat d = IntMat::Zero(s.rows(), s.cols());
    for (int k = 0; k < s.outerSize(); ++k)
        for (SpMat::InnerIterator it(s, k); it; ++it)
            d(it.row(), it.col()) = Int(static_cast<long long>(it.value()));
    return d;
}

}  // namespace treespace
