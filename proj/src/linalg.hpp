#pragma once

#include <Eigen/Core>

namespace shiftlab::detail {

struct LeftSingular {
  Eigen::MatrixXcd u;     ///< m x min(m,n) (thin) or m x m (full)
  Eigen::VectorXd sigma;  ///< descending
};

/// SVD through LAPACK's divide-and-conquer driver. Eigen 3.4's BDCSVD can
/// return a U that does not span the input when many singular values
/// coincide, which is the normal situation for shift-generated bases.
LeftSingular left_singular(const Eigen::MatrixXcd& a, bool full = false);

}  // namespace shiftlab::detail

namespace shiftlab::detail {

/// Singular values only, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

struct HermitianEigen {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXcd vectors; ///< empty unless requested
};

/// Eigen-decomposition of a Hermitian matrix (lower triangle is read).
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& a, bool vectors);

}  // namespace shiftlab::detail
