#pragma once

#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "shiftlab/fourier.hpp"
#include "shiftlab/inner_outer.hpp"

namespace shiftlab {

// Ambient window of order N: the H² coefficients 0..N stacked over the H²₋
// coefficients -1..-N, dimension 2N+1. It is exactly the coefficient window of
// a FourierSeries of order N, reordered, so conversions are lossless.

inline int ambient_dim(int order) { return 2 * order + 1; }
/// Row of coefficient index n (in [-N, N]) in the ambient vector.
inline int ambient_row(int order, int index) { return index >= 0 ? index : order - index; }

Eigen::VectorXcd to_ambient(const FourierSeries& f);
FourierSeries from_ambient(const Eigen::VectorXcd& v, int order);

/// Finite-dimensional subspace of the ambient window, stored by an
/// orthonormal basis.
struct Subspace {
  Eigen::MatrixXcd basis;
  int ambient_N = kDefaultOrder;
  nlohmann::json meta = nlohmann::json::object();

  int dim() const noexcept { return static_cast<int>(basis.cols()); }
  /// Orthogonal projector onto the subspace.
  Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

/// Truncation of S ⊕ S⋆ to the ambient window.
///
/// The H² block is the compression of S to polynomials of degree <= N
/// (z^N is sent to 0); that window is invariant under S*, so the compression
/// of an S-invariant subspace is invariant under this matrix. The H²₋ block
/// is S⋆ restricted to span{z^-1..z^-N}, which it leaves invariant.
class AmbientOperator {
 public:
  explicit AmbientOperator(int order);

  int order() const noexcept { return order_; }
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& vectors) const;
  Eigen::MatrixXcd matrix() const;
  /// Rows where the truncated action differs from S ⊕ S⋆ (top H² index).
  std::vector<int> domain_mask() const { return {order_}; }
  /// Rows of the top `edge_fraction` of H² indices.
  std::vector<int> edge_rows(const Numerics& numerics = default_numerics()) const;

 private:
  int order_;
};

/// Orthonormal basis for the span of the columns; rank decided by singular
/// values above rank_tol * (largest). All-zero input gives dimension 0.
Subspace orthonormalize(const Eigen::MatrixXcd& vectors, int order,
                        const Numerics& numerics = default_numerics(),
                        nlohmann::json meta = nlohmann::json::object());

Subspace zero_subspace(int order);
/// H² ⊕ {0}
Subspace h2_block(int order);
/// {0} ⊕ H²₋
Subspace h2minus_block(int order);
Subspace direct_sum(const Subspace& a, const Subspace& b, const Numerics& numerics = default_numerics());
Subspace orthogonal_complement(const Subspace& y);
/// Compress to a smaller window (order <= ambient_N) and re-orthonormalize.
Subspace compress(const Subspace& y, int order, const Numerics& numerics = default_numerics());

/// Window compression of inner·H² ⊕ {0}.
Subspace beurling_subspace(const FourierSeries& inner, const Numerics& numerics = default_numerics());

/// K_theta = H² ⊖ theta H², embedded in the H² block.
Subspace model_space(const BlaschkeSpec& theta, int order, const Numerics& numerics = default_numerics());
Subspace model_space(const FourierSeries& inner, const Numerics& numerics = default_numerics());

/// C_theta f = theta conj(z) conj(f). Throws NotInModelSpace when f is
/// farther than membership_tol * |f| from K_theta.
FourierSeries conjugation_apply(const BlaschkeSpec& theta, const FourierSeries& f,
                                const Numerics& numerics = default_numerics());

/// conj(z) conj(K_theta) in the H²₋ block, built from the model space.
Subspace pminus_model_space(const BlaschkeSpec& theta, int order, const Numerics& numerics = default_numerics());
Subspace pminus_model_space(const FourierSeries& inner, const Numerics& numerics = default_numerics());

/// One-sided gap |(I - P_to) P_from|.
double directed_gap(const Subspace& from, const Subspace& to);
/// |P_1 - P_2| in operator norm. Throws AmbientMismatch on different windows.
double gap(const Subspace& y1, const Subspace& y2);

/// max over basis columns v of dist(A v, Y).
double invariance_residual(const Subspace& y, const AmbientOperator& op);

struct SplittingVerdict {
  bool splits = false;
  Subspace x_part;       ///< P_{H²} Y
  Subspace xprime_part;  ///< P_{H²₋} Y
};

SplittingVerdict splitting_test(const Subspace& y, const Numerics& numerics = default_numerics());

struct ReducingVerdict {
  bool reducing = false;
  double residual_y = 0.0;
  double residual_complement = 0.0;
};

ReducingVerdict reducing_test(const Subspace& y, const AmbientOperator& op,
                              const Numerics& numerics = default_numerics());

struct DefectReport {
  int dimension = 0;                ///< eigenvalues of I - T*T above defect_tol, edge artifacts excluded
  int spurious = 0;                 ///< excluded: eigenvector concentrated on the edge rows
  std::vector<double> eigenvalues;  ///< all eigenvalues above defect_tol, descending
};

/// Defect of T = P_Y A|_Y. Throws NotInvariant when Y is not invariant.
DefectReport defect_dimension(const Subspace& y, const AmbientOperator& op,
                              const Numerics& numerics = default_numerics());

}  // namespace shiftlab
