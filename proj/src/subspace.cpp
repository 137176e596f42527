#include "shiftlab/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "linalg.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {
namespace {

int count_above(const Eigen::VectorXd& sigma, double cut) {
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > cut) ++rank;
  return rank;
}

// Largest singular value of a (possibly empty) matrix.
double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return detail::singular_values(m)[0];
}

// Column-wise distance of `vectors` from span(basis), maximized.
double max_distance(const Eigen::MatrixXcd& vectors, const Eigen::MatrixXcd& basis) {
  if (vectors.cols() == 0) return 0.0;
  Eigen::MatrixXcd residual = vectors;
  if (basis.cols() > 0) residual -= basis * (basis.adjoint() * vectors);
  return residual.colwise().norm().maxCoeff();
}

}  // namespace

Eigen::VectorXcd to_ambient(const FourierSeries& f) {
  const int order = f.order();
  Eigen::VectorXcd v(ambient_dim(order));
  for (int n = -order; n <= order; ++n) v[ambient_row(order, n)] = f.at(n);
  return v;
}

FourierSeries from_ambient(const Eigen::VectorXcd& v, int order) {
  if (v.size() != ambient_dim(order)) throw DomainError(ErrorKind::SizeMismatch, "ambient vector size");
  return FourierSeries::from_function(order, [&](int n) { return v[ambient_row(order, n)]; });
}

AmbientOperator::AmbientOperator(int order) : order_(order) {
  if (order < 1) throw DomainError(ErrorKind::SizeMismatch, "ambient order must be >= 1");
}

Eigen::MatrixXcd AmbientOperator::apply(const Eigen::MatrixXcd& vectors) const {
  const int n = order_;
  if (vectors.rows() != ambient_dim(n)) throw DomainError(ErrorKind::SizeMismatch, "operator input rows");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(vectors.rows(), vectors.cols());
  // H² block: index k -> k+1, index N leaves the window.
  out.middleRows(1, n) = vectors.topRows(n);
  // H²₋ block (row N+k holds index -k): index -k-1 -> -k, index -1 -> 0 is cut.
  out.middleRows(n + 1, n - 1) = vectors.middleRows(n + 2, n - 1);
  return out;
}

Eigen::MatrixXcd AmbientOperator::matrix() const {
  return apply(Eigen::MatrixXcd::Identity(ambient_dim(order_), ambient_dim(order_)));
}

std::vector<int> AmbientOperator::edge_rows(const Numerics& numerics) const {
  std::vector<int> rows;
  const int first = static_cast<int>(std::ceil((1.0 - numerics.edge_fraction) * order_));
  for (int k = first; k <= order_; ++k) rows.push_back(k);
  return rows;
}

Subspace orthonormalize(const Eigen::MatrixXcd& vectors, int order, const Numerics& numerics, nlohmann::json meta) {
  if (vectors.rows() != ambient_dim(order))
    throw DomainError(ErrorKind::SizeMismatch, "vectors must have 2N+1 rows");
  Subspace out{Eigen::MatrixXcd(vectors.rows(), 0), order, std::move(meta)};
  if (vectors.cols() == 0) return out;
  const detail::LeftSingular svd = detail::left_singular(vectors);
  const auto& sigma = svd.sigma;
  if (sigma.size() == 0 || !(sigma[0] > 0.0)) return out;
  const int rank = count_above(sigma, numerics.rank_tol * sigma[0]);
  out.basis = svd.u.leftCols(rank);
  return out;
}

Subspace zero_subspace(int order) {
  return Subspace{Eigen::MatrixXcd(ambient_dim(order), 0), order, {{"recipe", "zero"}}};
}

Subspace h2_block(int order) {
  return Subspace{Eigen::MatrixXcd::Identity(ambient_dim(order), order + 1), order, {{"recipe", "h2_block"}}};
}

Subspace h2minus_block(int order) {
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ambient_dim(order), order);
  basis.bottomRows(order) = Eigen::MatrixXcd::Identity(order, order);
  return Subspace{std::move(basis), order, {{"recipe", "h2minus_block"}}};
}

Subspace direct_sum(const Subspace& a, const Subspace& b, const Numerics& numerics) {
  if (a.ambient_N != b.ambient_N) throw DomainError(ErrorKind::AmbientMismatch, "direct_sum windows differ");
  Eigen::MatrixXcd stacked(a.basis.rows(), a.dim() + b.dim());
  stacked << a.basis, b.basis;
  return orthonormalize(stacked, a.ambient_N, numerics);
}

Subspace orthogonal_complement(const Subspace& y) {
  const int n = ambient_dim(y.ambient_N);
  if (y.dim() == 0) return Subspace{Eigen::MatrixXcd::Identity(n, n), y.ambient_N, {{"recipe", "complement"}}};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(y.basis);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  return Subspace{q.rightCols(n - y.dim()), y.ambient_N, {{"recipe", "complement"}}};
}

Subspace compress(const Subspace& y, int order, const Numerics& numerics) {
  if (order > y.ambient_N) throw DomainError(ErrorKind::AmbientMismatch, "cannot compress to a larger window");
  const int big = y.ambient_N;
  Eigen::MatrixXcd rows(ambient_dim(order), y.dim());
  for (int n = -order; n <= order; ++n) rows.row(ambient_row(order, n)) = y.basis.row(ambient_row(big, n));
  return orthonormalize(rows, order, numerics, y.meta);
}

Subspace beurling_subspace(const FourierSeries& inner, const Numerics& numerics) {
  const int order = inner.order();
  Eigen::MatrixXcd columns = Eigen::MatrixXcd::Zero(ambient_dim(order), order + 1);
  for (int k = 0; k <= order; ++k)
    for (int n = k; n <= order; ++n) columns(n, k) = inner.at(n - k);
  return orthonormalize(columns, order, numerics, {{"recipe", "beurling"}});
}

Subspace model_space(const FourierSeries& inner, const Numerics& numerics) {
  const int order = inner.order();
  const Eigen::MatrixXcd coeffs = model_space_basis(inner, numerics);
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ambient_dim(order), coeffs.cols());
  basis.topRows(order + 1) = coeffs;
  return Subspace{std::move(basis), order, {{"recipe", "model_space"}}};
}

Subspace model_space(const BlaschkeSpec& theta, int order, const Numerics& numerics) {
  Subspace k = model_space(blaschke_series(theta, order, numerics), numerics);
  if (k.dim() != theta.degree())
    throw DomainError(ErrorKind::TruncationOverflow, "numerical model space has dimension " + std::to_string(k.dim()) +
                                                         ", expected " + std::to_string(theta.degree()));
  return k;
}

FourierSeries conjugation_apply(const BlaschkeSpec& theta, const FourierSeries& f, const Numerics& numerics) {
  const int order = f.order();
  const Subspace k = model_space(theta, order, numerics);
  const Eigen::VectorXcd v = to_ambient(f);
  const double distance = (v - k.basis * (k.basis.adjoint() * v)).norm();
  if (distance > numerics.membership_tol * std::max(v.norm(), 1e-300))
    throw DomainError(ErrorKind::NotInModelSpace, "input is " + std::to_string(distance) + " away from K_theta");
  // conj(z) conj(f): coefficient of z^n is conj(f_{-n-1}).
  const FourierSeries reflected =
      FourierSeries::from_function(order, [&](int n) { return std::conj(f.at(-n - 1)); });
  return boundary_product(blaschke_series(theta, order, numerics), reflected, numerics).series;
}

Subspace pminus_model_space(const FourierSeries& inner, const Numerics& numerics) {
  const int order = inner.order();
  const Subspace k = model_space(inner, numerics);
  // f = sum a_n z^n  ->  conj(z) conj(f) = sum conj(a_n) z^{-n-1}; a_N falls off the window.
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ambient_dim(order), k.dim());
  for (int n = 0; n < order; ++n) basis.row(ambient_row(order, -n - 1)) = k.basis.row(n).conjugate();
  const double lost = k.dim() ? k.basis.row(order).norm() : 0.0;
  if (lost > numerics.tail_budget)
    throw DomainError(ErrorKind::TruncationOverflow, "model space reaches the top index; raise N");
  return Subspace{std::move(basis), order, {{"recipe", "pminus_model_space"}}};
}

Subspace pminus_model_space(const BlaschkeSpec& theta, int order, const Numerics& numerics) {
  Subspace y = pminus_model_space(blaschke_series(theta, order, numerics), numerics);
  if (y.dim() != theta.degree())
    throw DomainError(ErrorKind::TruncationOverflow, "numerical model space has wrong dimension");
  return y;
}

double directed_gap(const Subspace& from, const Subspace& to) {
  if (from.dim() == 0) return 0.0;
  if (to.dim() == 0) return 1.0;
  const Eigen::MatrixXcd residual = from.basis - to.basis * (to.basis.adjoint() * from.basis);
  return std::min(1.0, spectral_norm(residual));
}

double gap(const Subspace& y1, const Subspace& y2) {
  if (y1.ambient_N != y2.ambient_N) throw DomainError(ErrorKind::AmbientMismatch, "gap between different windows");
  return std::max(directed_gap(y1, y2), directed_gap(y2, y1));
}

double invariance_residual(const Subspace& y, const AmbientOperator& op) {
  if (y.ambient_N != op.order()) throw DomainError(ErrorKind::AmbientMismatch, "operator and subspace windows differ");
  return max_distance(op.apply(y.basis), y.basis);
}

SplittingVerdict splitting_test(const Subspace& y, const Numerics& numerics) {
  const int order = y.ambient_N;
  const int n = ambient_dim(order);
  auto block_part = [&](int first, int rows) {
    Subspace part{Eigen::MatrixXcd(n, 0), order, nlohmann::json::object()};
    if (y.dim() == 0) return part;
    // The basis is orthonormal, so singular values of a block are cosines in
    // [0, 1] and the rank cut is absolute.
    const detail::LeftSingular svd = detail::left_singular(y.basis.middleRows(first, rows));
    const int rank = count_above(svd.sigma, numerics.rank_tol);
    part.basis = Eigen::MatrixXcd::Zero(n, rank);
    part.basis.middleRows(first, rows) = svd.u.leftCols(rank);
    return part;
  };
  SplittingVerdict verdict;
  verdict.x_part = block_part(0, order + 1);
  verdict.xprime_part = block_part(order + 1, order);
  verdict.splits = verdict.x_part.dim() + verdict.xprime_part.dim() == y.dim();
  return verdict;
}

ReducingVerdict reducing_test(const Subspace& y, const AmbientOperator& op, const Numerics& numerics) {
  ReducingVerdict verdict;
  verdict.residual_y = invariance_residual(y, op);
  verdict.residual_complement = invariance_residual(orthogonal_complement(y), op);
  verdict.reducing =
      verdict.residual_y < numerics.invariance_tol && verdict.residual_complement < numerics.invariance_tol;
  return verdict;
}

DefectReport defect_dimension(const Subspace& y, const AmbientOperator& op, const Numerics& numerics) {
  const double residual = invariance_residual(y, op);
  if (residual >= numerics.invariance_tol)
    throw DomainError(ErrorKind::NotInvariant, "defect requires an invariant subspace (residual " +
                                                   std::to_string(residual) + ")");
  DefectReport report;
  if (y.dim() == 0) return report;
  const Eigen::MatrixXcd t = y.basis.adjoint() * op.apply(y.basis);
  const Eigen::MatrixXcd defect =
      Eigen::MatrixXcd::Identity(y.dim(), y.dim()) - t.adjoint() * t;
  const detail::HermitianEigen solver = detail::hermitian_eigen(defect, true);
  const auto edge = op.edge_rows(numerics);
  for (int i = y.dim() - 1; i >= 0; --i) {
    const double lambda = solver.values[i];
    if (lambda <= numerics.defect_tol) break;
    report.eigenvalues.push_back(lambda);
    const Eigen::VectorXcd v = y.basis * solver.vectors.col(i);
    double edge_mass = 0.0;
    for (int row : edge) edge_mass += std::norm(v[row]);
    if (edge_mass > numerics.edge_mass * v.squaredNorm())
      ++report.spurious;
    else
      ++report.dimension;
  }
  return report;
}

}  // namespace shiftlab
