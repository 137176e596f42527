#include "shiftlab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {
namespace {

void require_order(int order) {
  if (order < 1) throw DomainError(ErrorKind::SizeMismatch, "truncation order must be >= 1");
}

// Mass on indices < 0 (for H² inputs) relative to the whole vector.
void require_h2(const FourierSeries& f, const Numerics& numerics, const char* op) {
  if (f.norm_outside(0, f.order()) > numerics.tail_budget * std::max(f.norm(), 1e-300))
    throw DomainError(ErrorKind::Support, std::string(op) + " expects an H2 vector (support in [0,N])");
}

void require_h2minus(const FourierSeries& f, const Numerics& numerics, const char* op) {
  if (f.norm_outside(-f.order(), -1) > numerics.tail_budget * std::max(f.norm(), 1e-300))
    throw DomainError(ErrorKind::Support, std::string(op) + " expects an H2- vector (support in [-N,-1])");
}

void check_tail(double loss, double input_norm, const Numerics& numerics, const char* op) {
  if (loss > numerics.tail_budget * input_norm)
    throw DomainError(ErrorKind::TruncationOverflow,
                      std::string(op) + " pushed mass " + std::to_string(loss) +
                          " past the window; raise N");
}

}  // namespace

FourierSeries::FourierSeries(int order) : order_(order) {
  require_order(order);
  coeffs_ = Eigen::VectorXcd::Zero(2 * order + 1);
}

FourierSeries::FourierSeries(int order, Eigen::VectorXcd coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require_order(order);
  if (coeffs_.size() != 2 * order + 1)
    throw DomainError(ErrorKind::SizeMismatch, "expected 2N+1 coefficients, got " +
                                                   std::to_string(coeffs_.size()));
}

FourierSeries FourierSeries::monomial(int order, int power, Complex c) {
  FourierSeries f(order);
  if (power < -order || power > order)
    throw DomainError(ErrorKind::TruncationOverflow, "monomial power outside window");
  f.coeffs_[power + order] = c;
  return f;
}

FourierSeries FourierSeries::constant(int order, Complex c) { return monomial(order, 0, c); }

double FourierSeries::norm_outside(int lo, int hi) const {
  double sum = 0.0;
  for (int n = -order_; n <= order_; ++n)
    if (n < lo || n > hi) sum += std::norm(coeffs_[n + order_]);
  return std::sqrt(sum);
}

FourierSeries FourierSeries::with_order(int order) const {
  return from_function(order, [this](int n) { return at(n); });
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
  if (other.order_ != order_) throw DomainError(ErrorKind::SizeMismatch, "order mismatch in +");
  coeffs_ += other.coeffs_;
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
  if (other.order_ != order_) throw DomainError(ErrorKind::SizeMismatch, "order mismatch in -");
  coeffs_ -= other.coeffs_;
  return *this;
}

FourierSeries& FourierSeries::operator*=(Complex scale) {
  coeffs_ *= scale;
  return *this;
}

FourierSeries operator+(FourierSeries lhs, const FourierSeries& rhs) { return lhs += rhs; }
FourierSeries operator-(FourierSeries lhs, const FourierSeries& rhs) { return lhs -= rhs; }
FourierSeries operator*(Complex scale, FourierSeries f) { return f *= scale; }

Grid::Grid(int size) : size_(size) {
  if (size < 2 || (size & (size - 1)) != 0)
    throw DomainError(ErrorKind::SizeMismatch, "grid size must be a power of two");
}

Grid Grid::for_order(int order, const Numerics& numerics) {
  if (numerics.grid_size > 0) {
    if (numerics.grid_size < 2 * (2 * order + 1))
      throw DomainError(ErrorKind::SizeMismatch, "grid override smaller than 2(2N+1)");
    return Grid(numerics.grid_size);
  }
  int size = 2;
  while (size < 2 * (2 * order + 1)) size *= 2;
  return Grid(size);
}

Complex Grid::point(int j) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * j / size_);
}

Eigen::VectorXcd samples_from_fourier(const FourierSeries& f, const Grid& grid) {
  const int m = grid.size();
  const int order = f.order();
  if (m < 2 * (2 * order + 1))
    throw DomainError(ErrorKind::SizeMismatch, "grid of size " + std::to_string(m) +
                                                   " too small for order " + std::to_string(order));
  Eigen::VectorXcd spectrum = Eigen::VectorXcd::Zero(m);
  for (int n = -order; n <= order; ++n) spectrum[(n + m) % m] = f.at(n);
  return detail::fft_backward(spectrum);
}

BandLimited fourier_from_samples(const Eigen::VectorXcd& samples, const Grid& grid, int order) {
  const int m = grid.size();
  if (samples.size() != m) throw DomainError(ErrorKind::SizeMismatch, "sample count != grid size");
  if (2 * order + 1 > m) throw DomainError(ErrorKind::SizeMismatch, "order exceeds grid resolution");
  Eigen::VectorXcd spectrum = detail::fft_forward(samples) / static_cast<double>(m);
  BandLimited result{FourierSeries(order), 0.0};
  Eigen::VectorXcd coeffs(2 * order + 1);
  double kept = 0.0;
  for (int n = -order; n <= order; ++n) {
    coeffs[n + order] = spectrum[(n + m) % m];
    kept += std::norm(coeffs[n + order]);
  }
  result.series = FourierSeries(order, std::move(coeffs));
  result.out_of_band = std::sqrt(std::max(0.0, spectrum.squaredNorm() - kept));
  return result;
}

FourierSeries project_plus(const FourierSeries& f) {
  return FourierSeries::from_function(f.order(), [&](int n) { return n >= 0 ? f.at(n) : Complex{}; });
}

FourierSeries project_minus(const FourierSeries& f) {
  return FourierSeries::from_function(f.order(), [&](int n) { return n < 0 ? f.at(n) : Complex{}; });
}

ShiftResult shift_apply(const FourierSeries& f, const Numerics& numerics) {
  require_h2(f, numerics, "shift_apply");
  const int order = f.order();
  ShiftResult result{FourierSeries::from_function(order, [&](int n) { return n >= 1 ? f.at(n - 1) : Complex{}; }),
                     std::abs(f.at(order))};
  check_tail(result.tail_loss, f.norm(), numerics, "shift_apply");
  return result;
}

FourierSeries backward_shift(const FourierSeries& f, const Numerics& numerics) {
  require_h2(f, numerics, "backward_shift");
  return FourierSeries::from_function(f.order(), [&](int n) { return n >= 0 ? f.at(n + 1) : Complex{}; });
}

FourierSeries costar_apply(const FourierSeries& g, const Numerics& numerics) {
  require_h2minus(g, numerics, "costar_apply");
  // z g shifts every index up by one; the z^{-1} term lands on z^0 and is
  // removed by P-.
  return FourierSeries::from_function(g.order(), [&](int n) { return n <= -1 ? g.at(n - 1) : Complex{}; });
}

FourierSeries j_map(const FourierSeries& f, const Numerics& numerics) {
  require_h2(f, numerics, "j_map");
  const int order = f.order();
  check_tail(std::abs(f.at(order)), f.norm(), numerics, "j_map");
  return FourierSeries::from_function(order, [&](int n) { return n <= -1 ? f.at(-n - 1) : Complex{}; });
}

FourierSeries tilde(const FourierSeries& f) {
  return FourierSeries(f.order(), f.coeffs().conjugate());
}

FourierSeries boundary_conj(const FourierSeries& f) {
  return FourierSeries::from_function(f.order(), [&](int n) { return std::conj(f.at(-n)); });
}

BandLimited boundary_product(const FourierSeries& f, const FourierSeries& g, const Numerics& numerics) {
  const int order = std::max(f.order(), g.order());
  // Products of two band-[-N,N] functions live on [-2N, 2N]; a grid of size
  // >= 2(2N+1) holds them without wrap-around.
  const Grid grid = Grid::for_order(order, numerics);
  const Eigen::VectorXcd product =
      samples_from_fourier(f.with_order(order), grid).cwiseProduct(samples_from_fourier(g.with_order(order), grid));
  return fourier_from_samples(product, grid, order);
}

double quadrature_norm(const FourierSeries& f, const Grid& grid) {
  return samples_from_fourier(f, grid).norm() / std::sqrt(static_cast<double>(grid.size()));
}

int effective_degree(const FourierSeries& f, const Numerics& numerics) {
  const double budget = numerics.tail_budget * f.norm();
  double tail = 0.0;
  for (int k = f.order(); k >= 0; --k) {
    tail += std::norm(f.at(k));
    if (std::sqrt(tail) > budget) return k;
  }
  return 0;
}

}  // namespace shiftlab
