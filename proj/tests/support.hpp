#pragma once

// Hand-rolled random generators and independent reference computations shared
// by the unit tests and the acceptance binary.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "shiftlab/classification.hpp"

namespace testkit {

using shiftlab::Complex;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }
  Complex gaussian() { return {normal(), normal()}; }
  Complex phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }
  Complex point(double rmax) { return std::sqrt(uniform(0.0, 1.0)) * rmax * phase(); }
  Complex annulus(double rmin, double rmax) { return uniform(rmin, rmax) * phase(); }

  /// Random H² polynomial supported on [0, degree].
  shiftlab::FourierSeries h2_vector(int order, int degree) {
    return shiftlab::FourierSeries::from_function(
        order, [&](int n) { return (n >= 0 && n <= degree) ? gaussian() : Complex{}; });
  }

  shiftlab::FourierSeries any_vector(int order) {
    return shiftlab::FourierSeries::from_function(order, [&](int) { return gaussian(); });
  }

  shiftlab::BlaschkeSpec blaschke(int min_degree, int max_degree, double rmax) {
    shiftlab::BlaschkeSpec b;
    const int degree = integer(min_degree, max_degree);
    for (int i = 0; i < degree; ++i) b.zeros.push_back(point(rmax));
    b.unimodular_constant = phase();
    return b;
  }

  /// Free data of a generic nonsplitting Θ.
  shiftlab::ThetaProvenance provenance() {
    shiftlab::ThetaProvenance p;
    shiftlab::OuterSpec g;
    g.scale = uniform(0.3, 0.85);
    const int factors = integer(1, 2);
    for (int i = 0; i < factors; ++i) g.factors.push_back(annulus(0.2, 0.6));
    p.g1_spec = g;
    p.alpha1 = blaschke(0, 2, 0.5);
    p.alpha2 = blaschke(0, 2, 0.5);
    p.beta1 = blaschke(0, 2, 0.5);
    p.beta2 = blaschke(0, 2, 0.5);
    p.lambda.value = phase();
    return p;
  }

  /// Haar-ish random 2x2 unitary from the QR of a Gaussian matrix.
  Eigen::Matrix2cd unitary() {
    Eigen::Matrix2cd g;
    g << gaussian(), gaussian(), gaussian(), gaussian();
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

/// Taylor coefficients of a finite Blaschke product by direct power-series
/// multiplication of its factors, independent of the library's evaluation.
inline std::vector<Complex> blaschke_taylor(const shiftlab::BlaschkeSpec& b, int count) {
  std::vector<Complex> c(count, Complex{});
  c[0] = b.unimodular_constant;
  for (const Complex& a : b.zeros) {
    // (z - a) / (1 - conj(a) z) = (z - a) * sum_k conj(a)^k z^k
    std::vector<Complex> factor(count, Complex{});
    Complex power = 1.0;
    for (int k = 0; k < count; ++k) {
      factor[k] += -a * power;
      if (k + 1 < count) factor[k + 1] += power;
      power *= std::conj(a);
    }
    std::vector<Complex> next(count, Complex{});
    for (int i = 0; i < count; ++i)
      for (int j = 0; i + j < count; ++j) next[i + j] += c[i] * factor[j];
    c.swap(next);
  }
  return c;
}

/// Orthonormal basis of a column span via a pivoted QR, independent of the
/// library's SVD path. Columns whose R diagonal falls below tol * |R00| are
/// dropped.
inline Eigen::MatrixXcd span_basis(const Eigen::MatrixXcd& v, double tol = 1e-10) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(v);
  qr.setThreshold(tol);
  const Eigen::Index rank = qr.rank();
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(v.rows(), rank);
  return q;
}

/// Projector-difference norm, computed the long way.
inline double projector_gap(const Eigen::MatrixXcd& q1, const Eigen::MatrixXcd& q2) {
  const Eigen::MatrixXcd d = q1 * q1.adjoint() - q2 * q2.adjoint();
  if (d.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(d, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace testkit
