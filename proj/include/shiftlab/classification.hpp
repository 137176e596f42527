#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "shiftlab/fourier.hpp"
#include "shiftlab/inner_outer.hpp"
#include "shiftlab/subspace.hpp"

namespace shiftlab {

/// A unimodular scalar.
struct Lambda {
  Complex value{1.0, 0.0};

  void validate(const Numerics& numerics = default_numerics()) const;
};

/// The free data of a parametrized nonsplitting subspace. g1 is kept either
/// as an OuterSpec (re-instantiable at any order) or as raw modulus samples.
struct ThetaProvenance {
  std::optional<OuterSpec> g1_spec;
  std::optional<Eigen::VectorXd> g1_modulus_samples;
  BlaschkeSpec alpha1, alpha2, beta1, beta2;
  Lambda lambda;
};

/// Four H² entries with  Θ(ξ) = [[θ11, conj θ21], [θ12, conj θ22]]  unitary
/// on the circle.
struct ThetaMatrix {
  FourierSeries theta11, theta12, theta21, theta22;
  std::optional<ThetaProvenance> provenance;

  int order() const { return theta11.order(); }
  /// Zero-pad or cut every entry to a new window.
  ThetaMatrix with_order(int order) const;
};

/// Boundary values Θ(ξ_j) at every grid point.
std::vector<Eigen::Matrix2cd> boundary_matrices(const ThetaMatrix& t, const Grid& grid);

/// max over the grid of |Θ*Θ - I| (operator norm).
double theta_unitarity_defect(const ThetaMatrix& t, const Numerics& numerics = default_numerics());

struct ZeroPart {};
struct FullPart {};

/// Data of a splitting subspace X ⊕ X': X is {0} or θH², X' is H²₋ or
/// conj(z) conj(K_θ').
struct SplittingSpec {
  std::variant<ZeroPart, BlaschkeSpec> x_choice;
  std::variant<FullPart, BlaschkeSpec> xprime_choice;
};

Subspace construct_splitting(const SplittingSpec& spec, int order, const Numerics& numerics = default_numerics());

/// How the generators of a nonsplitting subspace are evaluated.
enum class Route {
  Direct,   ///< coefficient bookkeeping on the four entries
  Compact,  ///< boundary values of Θ* applied on the grid, then P₊ / P₋
};

/// Window compression of
///   { (θ21 u1 + θ22 u2) ⊕ P₋(conj θ11 u1 + conj θ12 u2) : u1, u2 ∈ H² }.
///
/// The generators u = z^k e_j for k <= gen_degree are evaluated by `route`;
/// higher powers are reached by applying the ambient operator, which keeps
/// the result independent of gen_degree. Throws NotUnitary when the
/// unitarity defect exceeds unitarity_tol and TruncationOverflow when the
/// entries' effective degree plus gen_degree exceeds the window.
Subspace construct_nonsplitting(const ThetaMatrix& t, int gen_degree, Route route = Route::Direct,
                                const Numerics& numerics = default_numerics());

/// Returns the splitting form θ'H² ⊕ conj(θ) K_θ when θ11 and θ12 are
/// proportional, the nonsplitting construction otherwise.
Subspace construct_from_theta(const ThetaMatrix& t, int gen_degree, const Numerics& numerics = default_numerics());

/// θ11 = α1 β1 g1,  θ12 = α1 β2 g2,  θ21 = -λ α2 β2 g2,  θ22 = λ α2 β1 g1,
/// with g2 the complementary outer function of g1.
/// Throws ExtremePoint or Coprimality when the data is not admissible.
ThetaMatrix parametrize_theta(const OuterFunction& g1, const BlaschkeSpec& alpha1, const BlaschkeSpec& alpha2,
                              const BlaschkeSpec& beta1, const BlaschkeSpec& beta2, const Lambda& lambda,
                              const Numerics& numerics = default_numerics());

/// Rebuild from stored provenance at the given order.
ThetaMatrix parametrize_theta(const ThetaProvenance& p, int order, const Numerics& numerics = default_numerics());

struct ExampleSubspace {
  Subspace y_explicit;
  Complex beta;
  ThetaMatrix theta;
};

/// Y = { u ⊕ β u(a) conj(z) / (1 - a conj(z)) },  β = conj(α)(1-|a|²)/sqrt(1-|α|²),
/// together with the matrix θ11 = θ22 = α b_a, θ12 = -sqrt(1-|α|²) = -θ21
/// that produces it. Throws Degenerate for α = 0.
ExampleSubspace example_subspace(Complex a, Complex alpha, int order, const Numerics& numerics = default_numerics());

/// Reads β off any basis of the example subspace: the element whose H² part
/// is the constant 1 has z^{-1} coefficient β.
Complex beta_from_subspace(const Subspace& y);

/// Matrix of Ω Θ for a constant unitary Ω. Throws NotUnitary when
/// |Ω*Ω - I| > omega_unitary_tol.
ThetaMatrix apply_omega(const ThetaMatrix& t, const Eigen::Matrix2cd& omega,
                        const Numerics& numerics = default_numerics());

struct ProportionalityVerdict {
  bool proportional = false;
  double singular_ratio = 0.0;  ///< σ2/σ1 of the boundary samples of (θ11, θ12)
  Eigen::Vector2cd alpha = Eigen::Vector2cd::Zero();
  std::optional<FourierSeries> theta_series, theta_prime_series;
  std::optional<BlaschkeSpec> theta, theta_prime;
  std::optional<Eigen::Matrix2cd> omega;
};

/// When θ11 = α1 θ and θ12 = α2 θ, returns θ, θ' = conj(α2) θ21 - conj(α1) θ22
/// and Ω = [[conj α1, conj α2], [α2, -α1]], for which Ω Θ = diag(θ, conj θ').
ProportionalityVerdict proportionality_test(const ThetaMatrix& t, const Numerics& numerics = default_numerics());

struct OmegaFit {
  Eigen::Matrix2cd omega;
  double sup_residual = 0.0;  ///< sup over the grid of |Θ' - ΩΘ| at the fitted Ω
  double lower_bound = 0.0;   ///< no constant unitary Ω does better than this on the grid
};

/// Least-squares (Procrustes) unitary Ω with Θ' ≈ ΩΘ.
OmegaFit fit_omega(const ThetaMatrix& t, const ThetaMatrix& t_prime, const Numerics& numerics = default_numerics());

enum class EquivalenceVerdict { Consistent, Inconsistent, Indeterminate };

std::string to_string(EquivalenceVerdict v);

/// Same subspace iff some constant Ω relates the matrices.
EquivalenceVerdict equivalence_verdict(double gap_value, const OmegaFit& fit,
                                       const Numerics& numerics = default_numerics());

}  // namespace shiftlab
