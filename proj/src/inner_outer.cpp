#include "shiftlab/inner_outer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "fft.hpp"
#include "linalg.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

void BlaschkeSpec::validate(const Numerics& numerics) const {
  for (const Complex& a : zeros) {
    if (!(std::abs(a) < 1.0 - numerics.blaschke_margin))
      throw DomainError(ErrorKind::Margin, "Blaschke zero of modulus " + std::to_string(std::abs(a)) +
                                               " is outside the disk margin");
  }
  if (std::abs(std::abs(unimodular_constant) - 1.0) > numerics.unimodular_tol)
    throw DomainError(ErrorKind::NotUnimodular, "Blaschke constant is not unimodular");
}

Complex BlaschkeSpec::evaluate(Complex z) const {
  Complex value = unimodular_constant;
  for (const Complex& a : zeros) value *= (z - a) / (1.0 - std::conj(a) * z);
  return value;
}

BlaschkeSpec BlaschkeSpec::conjugated() const {
  BlaschkeSpec out{{}, std::conj(unimodular_constant)};
  for (const Complex& a : zeros) out.zeros.push_back(std::conj(a));
  return out;
}

FourierSeries blaschke_series(const BlaschkeSpec& b, int order, const Numerics& numerics) {
  b.validate(numerics);
  // Work on [0, 2N] so the discarded tail can be measured, not guessed.
  const int length = 2 * order + 1;
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(length);
  coeffs[0] = b.unimodular_constant;
  Eigen::VectorXcd damped(length);
  for (const Complex& a : b.zeros) {
    // (z - a)/(1 - conj(a) z) * s : divide by (1 - conj(a) z), then multiply by (z - a).
    Complex carry{};
    for (int k = 0; k < length; ++k) {
      carry = coeffs[k] + std::conj(a) * carry;
      damped[k] = carry;
    }
    for (int k = length - 1; k >= 0; --k) coeffs[k] = (k > 0 ? damped[k - 1] : Complex{}) - a * damped[k];
  }
  const double tail = coeffs.tail(order).norm();
  if (tail > numerics.tail_budget)
    throw DomainError(ErrorKind::TruncationOverflow, "Blaschke coefficient tail " + std::to_string(tail) +
                                                         " past N=" + std::to_string(order) + "; raise N");
  return FourierSeries::from_function(order, [&](int n) { return n >= 0 ? coeffs[n] : Complex{}; });
}

Eigen::MatrixXcd model_space_basis(const FourierSeries& inner, const Numerics& numerics) {
  const int order = inner.order();
  const int size = order + 1;
  // Column k holds the window part of inner * z^k.
  Eigen::MatrixXcd multiplication = Eigen::MatrixXcd::Zero(size, size);
  for (int k = 0; k < size; ++k)
    for (int n = k; n < size; ++n) multiplication(n, k) = inner.at(n - k);
  const detail::LeftSingular svd = detail::left_singular(multiplication, true);
  const auto& sigma = svd.sigma;
  const double cut = numerics.rank_tol * (sigma.size() ? sigma[0] : 0.0);
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > cut) ++rank;
  return svd.u.rightCols(size - rank);
}

BlaschkeSpec blaschke_from_series(const FourierSeries& inner, const Numerics& numerics) {
  const Eigen::MatrixXcd basis = model_space_basis(inner, numerics);
  const int degree = static_cast<int>(basis.cols());
  BlaschkeSpec spec;
  if (degree > 0) {
    Eigen::MatrixXcd shifted = Eigen::MatrixXcd::Zero(basis.rows(), degree);
    shifted.topRows(basis.rows() - 1) = basis.bottomRows(basis.rows() - 1);
    const Eigen::MatrixXcd compressed = basis.adjoint() * shifted;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(compressed, false);
    std::vector<Complex> eig(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(eig.begin(), eig.end(), [](Complex x, Complex y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    // A multiple zero splits into a ring of radius ~eps^{1/m}; its mean is
    // accurate, so clusters are collapsed onto their centroid.
    std::vector<bool> used(eig.size(), false);
    for (std::size_t i = 0; i < eig.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> cluster{i};
      used[i] = true;
      for (std::size_t c = 0; c < cluster.size(); ++c)
        for (std::size_t j = 0; j < eig.size(); ++j)
          if (!used[j] && std::abs(eig[j] - eig[cluster[c]]) < numerics.zero_cluster_tol) {
            used[j] = true;
            cluster.push_back(j);
          }
      Complex mean{};
      for (auto idx : cluster) mean += eig[idx];
      mean /= static_cast<double>(cluster.size());
      for (std::size_t c = 0; c < cluster.size(); ++c) spec.zeros.push_back(std::conj(mean));
    }
  }
  const Grid grid = Grid::for_order(inner.order(), numerics);
  const Eigen::VectorXcd values = samples_from_fourier(inner, grid);
  Complex ratio_sum{};
  for (int j = 0; j < grid.size(); ++j) ratio_sum += values[j] / spec.evaluate(grid.point(j));
  spec.unimodular_constant = ratio_sum / std::abs(ratio_sum);
  double misfit = 0.0;
  for (int j = 0; j < grid.size(); ++j)
    misfit = std::max(misfit, std::abs(values[j] - spec.evaluate(grid.point(j))));
  if (misfit > numerics.outer_modulus_tol)
    throw DomainError(ErrorKind::NotInner, "series is not a finite Blaschke product (misfit " +
                                               std::to_string(misfit) + ")");
  return spec;
}

OuterFunction outer_from_modulus(const Eigen::VectorXd& modulus, int order, const Numerics& numerics) {
  const Grid grid(static_cast<int>(modulus.size()));
  const int m = grid.size();
  if (m < 2 * (2 * order + 1)) throw DomainError(ErrorKind::SizeMismatch, "modulus grid too small for order");
  if (modulus.minCoeff() < numerics.modulus_floor)
    throw DomainError(ErrorKind::FloorViolation, "modulus sample " + std::to_string(modulus.minCoeff()) +
                                                     " below floor; clamp explicitly");

  Eigen::VectorXcd log_modulus = modulus.array().log().cast<Complex>();
  const Eigen::VectorXcd ell = detail::fft_forward(log_modulus) / static_cast<double>(m);
  // Analytic completion: keep n = 0 and the Nyquist term once, double 0 < n < M/2.
  Eigen::VectorXcd analytic = Eigen::VectorXcd::Zero(m);
  analytic[0] = ell[0].real();
  for (int n = 1; n < m / 2; ++n) analytic[n] = 2.0 * ell[n];
  analytic[m / 2] = ell[m / 2].real();
  const Eigen::VectorXcd exponent = detail::fft_backward(analytic);
  const Eigen::VectorXcd values = exponent.array().exp();

  const BandLimited band = fourier_from_samples(values, grid, order);
  FourierSeries series = project_plus(band.series);
  const Complex origin = series.at(0);
  series *= std::abs(origin) / origin;  // g(0) > 0 exactly

  OuterFunction g{std::move(series), modulus};
  const Eigen::VectorXcd check = samples_from_fourier(g.series, grid);
  const double misfit = (check.cwiseAbs() - modulus).cwiseAbs().maxCoeff();
  if (misfit > numerics.outer_modulus_tol)
    throw DomainError(ErrorKind::TruncationOverflow, "outer function needs more than N=" + std::to_string(order) +
                                                         " coefficients (modulus misfit " + std::to_string(misfit) +
                                                         ")");
  return g;
}

ExtremalityDiagnostic check_nonextreme(const OuterFunction& g1, const Numerics& numerics) {
  const Eigen::VectorXcd values = samples_from_fourier(g1.series, g1.grid());
  const double margin = (1.0 - values.cwiseAbs2().array()).minCoeff();
  return {margin >= numerics.extremality_floor, margin};
}

OuterFunction complementary_outer(const OuterFunction& g1, const Numerics& numerics) {
  const Eigen::VectorXcd values = samples_from_fourier(g1.series, g1.grid());
  const Eigen::ArrayXd slack = 1.0 - values.cwiseAbs2().array();
  if (slack.minCoeff() < numerics.extremality_floor)
    throw DomainError(ErrorKind::ExtremePoint, "1 - |g1|^2 reaches " + std::to_string(slack.minCoeff()) +
                                                   "; g1 is (numerically) an extreme point");
  return outer_from_modulus(slack.sqrt().matrix(), g1.series.order(), numerics);
}

bool is_coprime(const BlaschkeSpec& b1, const BlaschkeSpec& b2, const Numerics& numerics) {
  for (const Complex& a : b1.zeros)
    for (const Complex& b : b2.zeros)
      if (std::abs(a - b) <= numerics.zero_merge_tol) return false;
  return true;
}

Eigen::VectorXd OuterSpec::modulus(const Grid& grid) const {
  Eigen::VectorXd w(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    double value = scale;
    for (const Complex& b : factors) value *= std::abs(1.0 - b * grid.point(j)) / (1.0 + std::abs(b));
    w[j] = value;
  }
  return w;
}

}  // namespace shiftlab
