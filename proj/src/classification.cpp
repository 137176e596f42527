#include "shiftlab/classification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "shiftlab/errors.hpp"

namespace shiftlab {
namespace {

double hermitian_norm(const Eigen::Matrix2cd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double operator_norm(const Eigen::Matrix2cd& m) { return std::sqrt(hermitian_norm(m.adjoint() * m)); }

FourierSeries analytic_product(const FourierSeries& f, const FourierSeries& g, const Numerics& numerics) {
  // Window coefficients of a product of H² series only involve window
  // coefficients of the factors, so the cut product is exact up to rounding.
  return project_plus(boundary_product(f, g, numerics).series);
}

nlohmann::json complex_json(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

}  // namespace

void Lambda::validate(const Numerics& numerics) const {
  if (std::abs(std::abs(value) - 1.0) > numerics.unimodular_tol)
    throw DomainError(ErrorKind::NotUnimodular, "lambda must have modulus 1");
}

ThetaMatrix ThetaMatrix::with_order(int order) const {
  return ThetaMatrix{theta11.with_order(order), theta12.with_order(order), theta21.with_order(order),
                     theta22.with_order(order), provenance};
}

std::vector<Eigen::Matrix2cd> boundary_matrices(const ThetaMatrix& t, const Grid& grid) {
  const int order = t.order();
  std::array<Eigen::VectorXcd, 4> s;
  const FourierSeries* entries[4] = {&t.theta11, &t.theta12, &t.theta21, &t.theta22};
  for (int i = 0; i < 4; ++i) {
    if (entries[i]->order() != order) throw DomainError(ErrorKind::SizeMismatch, "theta entries differ in order");
    s[i] = samples_from_fourier(*entries[i], grid);
  }
  std::vector<Eigen::Matrix2cd> out(grid.size());
  for (int j = 0; j < grid.size(); ++j)
    out[j] << s[0][j], std::conj(s[2][j]), s[1][j], std::conj(s[3][j]);
  return out;
}

double theta_unitarity_defect(const ThetaMatrix& t, const Numerics& numerics) {
  double defect = 0.0;
  for (const auto& m : boundary_matrices(t, Grid::for_order(t.order(), numerics)))
    defect = std::max(defect, hermitian_norm(m.adjoint() * m - Eigen::Matrix2cd::Identity()));
  return defect;
}

Subspace construct_splitting(const SplittingSpec& spec, int order, const Numerics& numerics) {
  Subspace x = zero_subspace(order);
  nlohmann::json meta{{"recipe", "splitting"}};
  if (const auto* theta = std::get_if<BlaschkeSpec>(&spec.x_choice)) {
    x = beurling_subspace(blaschke_series(*theta, order, numerics), numerics);
    meta["x"] = "theta H2";
  } else {
    meta["x"] = "zero";
  }
  Subspace xprime = h2minus_block(order);
  if (const auto* theta = std::get_if<BlaschkeSpec>(&spec.xprime_choice)) {
    xprime = pminus_model_space(*theta, order, numerics);
    meta["xprime"] = "conj(z) conj(K_theta')";
  } else {
    meta["xprime"] = "full";
  }
  Subspace y = direct_sum(x, xprime, numerics);
  y.meta = std::move(meta);
  return y;
}

Subspace construct_nonsplitting(const ThetaMatrix& t, int gen_degree, Route route, const Numerics& numerics) {
  const int order = t.order();
  if (gen_degree < 0 || gen_degree > order)
    throw DomainError(ErrorKind::SizeMismatch, "generator degree must lie in [0, N]");
  const double defect = theta_unitarity_defect(t, numerics);
  if (defect > numerics.unitarity_tol)
    throw DomainError(ErrorKind::NotUnitary, "theta matrix unitarity defect " + std::to_string(defect));
  int degree = 0;
  for (const FourierSeries* f : {&t.theta11, &t.theta12, &t.theta21, &t.theta22})
    degree = std::max(degree, effective_degree(*f, numerics));
  if (degree + gen_degree > order)
    throw DomainError(ErrorKind::TruncationOverflow, "entries of effective degree " + std::to_string(degree) +
                                                         " plus generator degree " + std::to_string(gen_degree) +
                                                         " exceed N=" + std::to_string(order));

  const int dim = ambient_dim(order);
  // Column j*(N+1)+k is the image of z^k e_{j+1}.
  Eigen::MatrixXcd gens = Eigen::MatrixXcd::Zero(dim, 2 * (order + 1));
  auto col = [&](int j, int k) { return j * (order + 1) + k; };
  const FourierSeries* upper[2] = {&t.theta21, &t.theta22};  // lands in H²
  const FourierSeries* lower[2] = {&t.theta11, &t.theta12};  // conjugated, lands in H²₋

  if (route == Route::Direct) {
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k <= gen_degree; ++k) {
        auto c = gens.col(col(j, k));
        for (int n = k; n <= order; ++n) c[n] = upper[j]->at(n - k);
        // P₋(conj(θ) z^k): index -m carries conj(θ_{k+m}).
        for (int m = 1; m <= order; ++m) c[ambient_row(order, -m)] = std::conj(lower[j]->at(k + m));
      }
  } else {
    const Grid grid = Grid::for_order(order, numerics);
    Eigen::VectorXcd up[2], low[2];
    for (int j = 0; j < 2; ++j) {
      up[j] = samples_from_fourier(*upper[j], grid);
      low[j] = samples_from_fourier(*lower[j], grid).conjugate();
    }
    Eigen::VectorXcd power(grid.size());
    for (int k = 0; k <= gen_degree; ++k) {
      for (int p = 0; p < grid.size(); ++p) power[p] = grid.point(static_cast<int>((static_cast<long>(p) * k) % grid.size()));
      for (int j = 0; j < 2; ++j) {
        // Θ* (z^k e_j) = (conj θ1j z^k, θ2j z^k); the analytic half goes to H², the other half to H²₋.
        const FourierSeries h2 = project_plus(fourier_from_samples(up[j].cwiseProduct(power), grid, order).series);
        const FourierSeries h2m = project_minus(fourier_from_samples(low[j].cwiseProduct(power), grid, order).series);
        gens.col(col(j, k)) = to_ambient(h2 + h2m);
      }
    }
  }

  const AmbientOperator op(order);
  for (int j = 0; j < 2; ++j)
    for (int k = gen_degree + 1; k <= order; ++k) gens.col(col(j, k)) = op.apply(gens.col(col(j, k - 1)));

  return orthonormalize(gens, order, numerics,
                        {{"recipe", "nonsplitting"},
                         {"route", route == Route::Direct ? "direct" : "compact"},
                         {"gen_degree", gen_degree}});
}

Subspace construct_from_theta(const ThetaMatrix& t, int gen_degree, const Numerics& numerics) {
  const ProportionalityVerdict verdict = proportionality_test(t, numerics);
  if (!verdict.proportional) return construct_nonsplitting(t, gen_degree, Route::Direct, numerics);
  Subspace y = direct_sum(beurling_subspace(*verdict.theta_prime_series, numerics),
                          pminus_model_space(*verdict.theta_series, numerics), numerics);
  y.meta = {{"recipe", "proportional"},
            {"alpha", {complex_json(verdict.alpha[0]), complex_json(verdict.alpha[1])}},
            {"theta_degree", verdict.theta ? verdict.theta->degree() : -1},
            {"theta_prime_degree", verdict.theta_prime ? verdict.theta_prime->degree() : -1}};
  return y;
}

ThetaMatrix parametrize_theta(const OuterFunction& g1, const BlaschkeSpec& alpha1, const BlaschkeSpec& alpha2,
                              const BlaschkeSpec& beta1, const BlaschkeSpec& beta2, const Lambda& lambda,
                              const Numerics& numerics) {
  lambda.validate(numerics);
  if (!is_coprime(beta1, beta2, numerics))
    throw DomainError(ErrorKind::Coprimality, "beta1 and beta2 share a zero");
  const OuterFunction g2 = complementary_outer(g1, numerics);
  const int order = g1.series.order();
  const FourierSeries a1 = blaschke_series(alpha1, order, numerics);
  const FourierSeries a2 = blaschke_series(alpha2, order, numerics);
  const FourierSeries b1 = blaschke_series(beta1, order, numerics);
  const FourierSeries b2 = blaschke_series(beta2, order, numerics);

  ThetaMatrix t;
  t.theta11 = analytic_product(analytic_product(a1, b1, numerics), g1.series, numerics);
  t.theta12 = analytic_product(analytic_product(a1, b2, numerics), g2.series, numerics);
  t.theta21 = -lambda.value * analytic_product(analytic_product(a2, b2, numerics), g2.series, numerics);
  t.theta22 = lambda.value * analytic_product(analytic_product(a2, b1, numerics), g1.series, numerics);
  t.provenance = ThetaProvenance{std::nullopt, g1.modulus_samples, alpha1, alpha2, beta1, beta2, lambda};
  return t;
}

ThetaMatrix parametrize_theta(const ThetaProvenance& p, int order, const Numerics& numerics) {
  Eigen::VectorXd modulus;
  if (p.g1_spec) {
    modulus = p.g1_spec->modulus(Grid::for_order(order, numerics));
  } else if (p.g1_modulus_samples) {
    modulus = *p.g1_modulus_samples;
  } else {
    throw DomainError(ErrorKind::Degenerate, "provenance carries no g1 data");
  }
  ThetaMatrix t = parametrize_theta(outer_from_modulus(modulus, order, numerics), p.alpha1, p.alpha2, p.beta1,
                                    p.beta2, p.lambda, numerics);
  t.provenance = p;
  return t;
}

ExampleSubspace example_subspace(Complex a, Complex alpha, int order, const Numerics& numerics) {
  const BlaschkeSpec ba{{a}, 1.0};
  ba.validate(numerics);
  if (std::abs(alpha) == 0.0)
    throw DomainError(ErrorKind::Degenerate, "alpha = 0 makes theta11 = 0, proportional to theta12");
  if (!(std::abs(alpha) < 1.0)) throw DomainError(ErrorKind::Degenerate, "alpha must lie in the open unit disk");
  const double s = std::sqrt(1.0 - std::norm(alpha));
  const Complex beta = std::conj(alpha) * (1.0 - std::norm(a)) / s;

  const int dim = ambient_dim(order);
  Eigen::MatrixXcd gens = Eigen::MatrixXcd::Zero(dim, order + 1);
  Complex ak = 1.0;  // u(a) for u = z^k
  for (int k = 0; k <= order; ++k) {
    gens(k, k) = 1.0;
    Complex am = 1.0;  // a^{m-1}
    for (int m = 1; m <= order; ++m) {
      gens(ambient_row(order, -m), k) = beta * ak * am;
      am *= a;
    }
    ak *= a;
  }

  ExampleSubspace out;
  out.beta = beta;
  out.y_explicit = orthonormalize(gens, order, numerics,
                                  {{"recipe", "example"},
                                   {"a", complex_json(a)},
                                   {"alpha", complex_json(alpha)},
                                   {"beta", complex_json(beta)}});
  const FourierSeries b = alpha * blaschke_series(ba, order, numerics);
  out.theta.theta11 = b;
  out.theta.theta22 = b;
  out.theta.theta12 = FourierSeries::constant(order, -s);
  out.theta.theta21 = FourierSeries::constant(order, s);
  return out;
}

ThetaMatrix apply_omega(const ThetaMatrix& t, const Eigen::Matrix2cd& omega, const Numerics& numerics) {
  const double defect = hermitian_norm(omega.adjoint() * omega - Eigen::Matrix2cd::Identity());
  if (defect > numerics.omega_unitary_tol)
    throw DomainError(ErrorKind::NotUnitary, "omega is not unitary (defect " + std::to_string(defect) + ")");
  ThetaMatrix out;
  out.theta11 = omega(0, 0) * t.theta11 + omega(0, 1) * t.theta12;
  out.theta12 = omega(1, 0) * t.theta11 + omega(1, 1) * t.theta12;
  out.theta21 = std::conj(omega(0, 0)) * t.theta21 + std::conj(omega(0, 1)) * t.theta22;
  out.theta22 = std::conj(omega(1, 0)) * t.theta21 + std::conj(omega(1, 1)) * t.theta22;
  return out;
}

ProportionalityVerdict proportionality_test(const ThetaMatrix& t, const Numerics& numerics) {
  const Grid grid = Grid::for_order(t.order(), numerics);
  Eigen::MatrixXcd samples(grid.size(), 2);
  samples.col(0) = samples_from_fourier(t.theta11, grid);
  samples.col(1) = samples_from_fourier(t.theta12, grid);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(samples, Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();

  ProportionalityVerdict verdict;
  verdict.singular_ratio = sigma[0] > 0.0 ? sigma[1] / sigma[0] : 1.0;
  verdict.proportional = verdict.singular_ratio < numerics.rank_tol;
  if (!verdict.proportional) return verdict;

  // Rows of `samples` are θ(ξ)(α1, α2), so the top right singular vector is conj(α).
  Eigen::Vector2cd alpha = svd.matrixV().col(0).conjugate();
  const int lead = std::abs(alpha[0]) >= std::abs(alpha[1]) ? 0 : 1;
  alpha *= std::abs(alpha[lead]) / alpha[lead];
  verdict.alpha = alpha;

  const Complex a1 = alpha[0], a2 = alpha[1];
  verdict.theta_series = std::conj(a1) * t.theta11 + std::conj(a2) * t.theta12;
  verdict.theta_prime_series = std::conj(a2) * t.theta21 - std::conj(a1) * t.theta22;
  Eigen::Matrix2cd omega;
  omega << std::conj(a1), std::conj(a2), a2, -a1;
  verdict.omega = omega;
  try {
    verdict.theta = blaschke_from_series(*verdict.theta_series, numerics);
    verdict.theta_prime = blaschke_from_series(*verdict.theta_prime_series, numerics);
  } catch (const DomainError&) {
    // Series remain authoritative; the Blaschke form is a convenience.
  }
  return verdict;
}

OmegaFit fit_omega(const ThetaMatrix& t, const ThetaMatrix& t_prime, const Numerics& numerics) {
  const int order = std::max(t.order(), t_prime.order());
  const Grid grid = Grid::for_order(order, numerics);
  const auto m = boundary_matrices(t.with_order(order), grid);
  const auto mp = boundary_matrices(t_prime.with_order(order), grid);
  Eigen::Matrix2cd cross = Eigen::Matrix2cd::Zero();
  for (int j = 0; j < grid.size(); ++j) cross += mp[j] * m[j].adjoint();
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);

  OmegaFit fit;
  fit.omega = svd.matrixU() * svd.matrixV().adjoint();
  double mean_frobenius = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const Eigen::Matrix2cd e = mp[j] - fit.omega * m[j];
    fit.sup_residual = std::max(fit.sup_residual, operator_norm(e));
    mean_frobenius += e.squaredNorm();
  }
  mean_frobenius /= grid.size();
  // sup |E|² >= mean |E|² >= mean |E|_F² / 2 for every Ω, and the fitted Ω
  // minimizes the last mean.
  fit.lower_bound = std::sqrt(mean_frobenius / 2.0);
  return fit;
}

std::string to_string(EquivalenceVerdict v) {
  switch (v) {
    case EquivalenceVerdict::Consistent: return "consistent";
    case EquivalenceVerdict::Inconsistent: return "INCONSISTENT-WITH-THEOREM";
    case EquivalenceVerdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

EquivalenceVerdict equivalence_verdict(double gap_value, const OmegaFit& fit, const Numerics& numerics) {
  const bool same = gap_value < numerics.equiv_same_tol;
  const bool distinct = gap_value > numerics.equiv_distinct_gap;
  const bool fits = fit.sup_residual < numerics.equiv_same_tol;
  const bool no_fit = fit.lower_bound > numerics.omega_far;
  if ((same && fits) || (distinct && no_fit)) return EquivalenceVerdict::Consistent;
  if ((same && no_fit) || (distinct && fits)) return EquivalenceVerdict::Inconsistent;
  return EquivalenceVerdict::Indeterminate;
}

Complex beta_from_subspace(const Subspace& y) {
  const int order = y.ambient_N;
  const Eigen::MatrixXcd top = y.basis.topRows(order + 1);
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(order + 1);
  target[0] = 1.0;
  const Eigen::VectorXcd c = top.completeOrthogonalDecomposition().solve(target);
  return (y.basis * c)[ambient_row(order, -1)];
}

}  // namespace shiftlab
