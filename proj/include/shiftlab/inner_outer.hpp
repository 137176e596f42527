#pragma once

#include <vector>

#include <Eigen/Core>

#include "shiftlab/fourier.hpp"

namespace shiftlab {

/// A finite Blaschke product  c * prod_i (z - a_i) / (1 - conj(a_i) z).
struct BlaschkeSpec {
  std::vector<Complex> zeros;              ///< with multiplicity
  Complex unimodular_constant{1.0, 0.0};

  int degree() const noexcept { return static_cast<int>(zeros.size()); }
  /// Throws Margin / NotUnimodular when the invariants fail.
  void validate(const Numerics& numerics = default_numerics()) const;
  /// Exact value at a point of the closed disk.
  Complex evaluate(Complex z) const;
  /// The Blaschke product with conjugated zeros and constant (the ~ involution).
  BlaschkeSpec conjugated() const;
};

/// Taylor coefficients on [0, N]. Throws Margin for bad zeros and
/// TruncationOverflow when the coefficient tail past N exceeds the budget.
FourierSeries blaschke_series(const BlaschkeSpec& b, int order, const Numerics& numerics = default_numerics());

/// Recovers zeros and constant from the series of an inner function.
///
/// The zeros are the conjugated eigenvalues of the backward shift compressed
/// to the numerical model space of `inner`; nearby eigenvalues (a split
/// multiple zero) are replaced by their mean. Throws NotInner when the
/// reconstructed product does not reproduce the boundary values.
BlaschkeSpec blaschke_from_series(const FourierSeries& inner, const Numerics& numerics = default_numerics());

/// Orthonormal coefficient basis ((N+1) x d, H² indices 0..N) of the
/// numerical model space H² ⊖ inner·H²: the left singular vectors of the
/// truncated multiplication operator whose singular values fall below
/// rank_tol relative to the largest.
Eigen::MatrixXcd model_space_basis(const FourierSeries& inner, const Numerics& numerics = default_numerics());

/// Outer function with positive value at the origin, stored with the
/// boundary modulus it was built from.
struct OuterFunction {
  FourierSeries series;
  Eigen::VectorXd modulus_samples;  ///< on Grid(modulus_samples.size())

  Grid grid() const { return Grid(static_cast<int>(modulus_samples.size())); }
};

/// g = exp(c0/2 + sum_{n>=1} c_n z^n), c_n the Fourier coefficients of log w^2,
/// so that |g| = w on the grid and g(0) > 0.
/// Throws FloorViolation when some w_j < modulus_floor.
OuterFunction outer_from_modulus(const Eigen::VectorXd& modulus, int order,
                                 const Numerics& numerics = default_numerics());

/// The outer g2 with |g1|^2 + |g2|^2 = 1 on the circle and g2(0) > 0.
/// Throws ExtremePoint when 1 - |g1|^2 dips below extremality_floor.
OuterFunction complementary_outer(const OuterFunction& g1, const Numerics& numerics = default_numerics());

struct ExtremalityDiagnostic {
  bool passes = false;
  double margin = 0.0;  ///< min over the grid of 1 - |g1|^2
};

ExtremalityDiagnostic check_nonextreme(const OuterFunction& g1, const Numerics& numerics = default_numerics());

/// True iff no zero of `b1` lies within zero_merge_tol of a zero of `b2`.
bool is_coprime(const BlaschkeSpec& b1, const BlaschkeSpec& b2, const Numerics& numerics = default_numerics());

/// Modulus scale * prod_i |1 - b_i xi| / (1 + |b_i|), sampled on a grid.
/// With |b_i| < 1 the polynomial has no zeros in the closed disk, so the
/// result is the modulus of an outer function bounded by `scale`.
struct OuterSpec {
  double scale = 0.5;
  std::vector<Complex> factors;

  Eigen::VectorXd modulus(const Grid& grid) const;
};

}  // namespace shiftlab
