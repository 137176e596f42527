#pragma once

#include <complex>

#include <Eigen/Core>

#include "shiftlab/config.hpp"

namespace shiftlab {

using Complex = std::complex<double>;

/// A function on the unit circle, stored as its Fourier coefficients on the
/// symmetric window [-N, N].
///
/// H² functions are the series supported on [0, N], H²₋ functions the ones
/// supported on [-N, -1]. Values are immutable once built; every operation
/// returns a new series.
class FourierSeries {
 public:
  explicit FourierSeries(int order = 1);
  /// `coeffs` is in index order -N..N and must have 2N+1 entries.
  FourierSeries(int order, Eigen::VectorXcd coeffs);

  template <class CoeffAt>
  static FourierSeries from_function(int order, CoeffAt&& coeff_at) {
    FourierSeries f(order);
    for (int n = -order; n <= order; ++n) f.coeffs_[n + order] = coeff_at(n);
    return f;
  }
  static FourierSeries monomial(int order, int power, Complex c = 1.0);
  static FourierSeries constant(int order, Complex c);

  int order() const noexcept { return order_; }
  /// Coefficient of z^n; zero outside the window.
  Complex at(int n) const noexcept {
    return (n < -order_ || n > order_) ? Complex{} : coeffs_[n + order_];
  }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }

  double norm() const { return coeffs_.norm(); }
  /// l2 mass of the coefficients whose index lies outside [lo, hi].
  double norm_outside(int lo, int hi) const;
  /// Zero-pad or cut to a new truncation order.
  FourierSeries with_order(int order) const;

  FourierSeries& operator+=(const FourierSeries& other);
  FourierSeries& operator-=(const FourierSeries& other);
  FourierSeries& operator*=(Complex scale);

 private:
  int order_;
  Eigen::VectorXcd coeffs_;
};

FourierSeries operator+(FourierSeries lhs, const FourierSeries& rhs);
FourierSeries operator-(FourierSeries lhs, const FourierSeries& rhs);
FourierSeries operator*(Complex scale, FourierSeries f);

/// The M-th roots of unity e^{2 pi i j/M}, M a power of two.
class Grid {
 public:
  explicit Grid(int size);
  /// Smallest power of two >= 2(2N+1), unless `numerics.grid_size` overrides.
  static Grid for_order(int order, const Numerics& numerics = default_numerics());

  int size() const noexcept { return size_; }
  Complex point(int j) const;

 private:
  int size_;
};

/// Series plus the l2 mass that did not fit in its window.
struct BandLimited {
  FourierSeries series;
  double out_of_band = 0.0;
};

/// Tail loss reported by index-shifting operations.
struct ShiftResult {
  FourierSeries series;
  double tail_loss = 0.0;
};

/// Entry j is sum_n c_n (point j)^n. Throws SizeMismatch when M < 2(2N+1).
Eigen::VectorXcd samples_from_fourier(const FourierSeries& f, const Grid& grid);

/// Inverse of samples_from_fourier on band-limited input. Energy found
/// outside [-N, N] is returned in `out_of_band`.
BandLimited fourier_from_samples(const Eigen::VectorXcd& samples, const Grid& grid, int order);

FourierSeries project_plus(const FourierSeries& f);
FourierSeries project_minus(const FourierSeries& f);

/// (Sf)(z) = z f(z) for f in H². Throws TruncationOverflow when the
/// coefficient pushed past N exceeds the tail budget.
ShiftResult shift_apply(const FourierSeries& f, const Numerics& numerics = default_numerics());

/// Backward shift S* on H²: drop the constant term, shift indices down.
FourierSeries backward_shift(const FourierSeries& f, const Numerics& numerics = default_numerics());

/// Compression of multiplication by z to H²₋.
FourierSeries costar_apply(const FourierSeries& g, const Numerics& numerics = default_numerics());

/// (Jf)(z) = conj(z) f(conj z): coefficient a_n of f lands on z^{-(n+1)}.
FourierSeries j_map(const FourierSeries& f, const Numerics& numerics = default_numerics());

/// f~(z) = conj(f(conj z)): conjugate each coefficient in place.
FourierSeries tilde(const FourierSeries& f);

/// Pointwise complex conjugate on the circle: c_n -> conj(c_{-n}).
FourierSeries boundary_conj(const FourierSeries& f);

/// Product of two boundary functions, computed on an alias-free grid and cut
/// back to the larger of the two windows.
BandLimited boundary_product(const FourierSeries& f, const FourierSeries& g,
                             const Numerics& numerics = default_numerics());

/// sqrt(mean |f(xi_j)|^2) over the grid.
double quadrature_norm(const FourierSeries& f, const Grid& grid);

/// Largest k whose tail beyond k still carries more than tail_budget * |f|.
int effective_degree(const FourierSeries& f, const Numerics& numerics = default_numerics());

}  // namespace shiftlab
