#include <cmath>
#include <numbers>

#include "doctest.h"
#include "shiftlab/classification.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/subspace.hpp"
#include "support.hpp"

using namespace shiftlab;
using testkit::Gen;

namespace {

Eigen::VectorXcd unit(int order, int index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(ambient_dim(order));
  v[ambient_row(order, index)] = 1.0;
  return v;
}

Subspace span(int order, std::initializer_list<Eigen::VectorXcd> vectors) {
  Eigen::MatrixXcd m(ambient_dim(order), static_cast<Eigen::Index>(vectors.size()));
  Eigen::Index c = 0;
  for (const auto& v : vectors) m.col(c++) = v;
  return orthonormalize(m, order);
}

Subspace span_of_series(const FourierSeries& f) {
  return orthonormalize(to_ambient(f), f.order());
}

// Orthonormal basis of z̄·conj(K_θ) obtained by reflecting model-space
// coefficients by hand: a_n of f lands on index -(n+1), conjugated.
Subspace reflected_model_space(const Subspace& k) {
  const int order = k.ambient_N;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ambient_dim(order), k.dim());
  for (int c = 0; c < k.dim(); ++c)
    for (int n = 0; n < order; ++n) m(ambient_row(order, -(n + 1)), c) = std::conj(k.basis(n, c));
  return orthonormalize(m, order);
}

const AmbientOperator kOp8(8);

}  // namespace

TEST_CASE("ambient layout round trips a series") {
  Gen gen(31);
  const FourierSeries f = gen.any_vector(12);
  CHECK((from_ambient(to_ambient(f), 12).coeffs() - f.coeffs()).norm() == 0.0);
  CHECK(ambient_row(12, 0) == 0);
  CHECK(ambient_row(12, 12) == 12);
  CHECK(ambient_row(12, -1) == 13);
  CHECK(ambient_row(12, -12) == 24);
}

TEST_CASE("the ambient operator is S on H² and S⋆ on H²₋") {
  Gen gen(32);
  for (int trial = 0; trial < 10; ++trial) {
    const FourierSeries f = gen.h2_vector(16, 15);
    const FourierSeries g = project_minus(gen.any_vector(16));
    const AmbientOperator op(16);
    const Eigen::VectorXcd image = op.apply(to_ambient(f + g));
    const Eigen::VectorXcd expected = to_ambient(shift_apply(f).series + costar_apply(g));
    CHECK((image - expected).norm() == 0.0);
    CHECK((op.matrix() * to_ambient(f + g) - image).norm() < 1e-14);
  }
  const std::vector<int> edge = AmbientOperator(128).edge_rows();
  CHECK(edge.front() == 116);
  CHECK(edge.back() == 128);
}

TEST_CASE("orthonormalize decides rank") {
  CHECK(span(8, {unit(8, 0), unit(8, 0)}).dim() == 1);
  CHECK(span(8, {unit(8, 0) + unit(8, 1), unit(8, 0) - unit(8, 1)}).dim() == 2);
  CHECK(orthonormalize(Eigen::MatrixXcd::Zero(17, 3), 8).dim() == 0);

  Gen gen(33);
  Eigen::MatrixXcd frame(ambient_dim(32), 10);
  for (auto& x : frame.reshaped()) x = gen.gaussian();
  Eigen::MatrixXcd mix(10, 50);
  for (auto& x : mix.reshaped()) x = gen.gaussian();
  const Subspace y = orthonormalize(frame * mix, 32);
  CHECK(y.dim() == 10);
  CHECK((y.basis.adjoint() * y.basis - Eigen::MatrixXcd::Identity(10, 10)).norm() < 1e-13);
  CHECK(testkit::projector_gap(y.basis, testkit::span_basis(frame)) < 1e-12);
}

TEST_CASE("model_space examples") {
  const Subspace z2 = model_space(BlaschkeSpec{{0.0, 0.0}, 1.0}, 16);
  CHECK(gap(z2, span(16, {unit(16, 0), unit(16, 1)})) < 1e-14);
  CHECK(model_space(BlaschkeSpec{{}, {0.6, 0.8}}, 16).dim() == 0);

  // K_{b_0.5} is spanned by the kernel 1 / (1 - 0.5 z).
  const FourierSeries kernel = FourierSeries::from_function(64, [](int n) -> Complex {
    return n >= 0 ? std::pow(0.5, n) : 0.0;
  });
  CHECK(gap(model_space(BlaschkeSpec{{0.5}, 1.0}, 64), span_of_series(kernel)) < 1e-10);
}

TEST_CASE("property: model_space is orthogonal to θ times polynomials") {
  Gen gen(34);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 96;
    const BlaschkeSpec theta = gen.blaschke(1, 5, 0.7);
    const Subspace k = model_space(theta, order);
    REQUIRE(k.dim() == theta.degree());
    const FourierSeries p = gen.h2_vector(order, order - theta.degree() - 1);
    const FourierSeries product = boundary_product(blaschke_series(theta, order), p).series;
    // The part of θp past N is cut; it is tiny because θ's tail is.
    CHECK((k.basis.adjoint() * to_ambient(project_plus(product))).norm() / p.norm() < 1e-10);
  }
}

TEST_CASE("conjugation_apply examples") {
  const BlaschkeSpec z2{{0.0, 0.0}, 1.0};
  const FourierSeries one = FourierSeries::constant(16, 1.0), z = FourierSeries::monomial(16, 1);
  CHECK((conjugation_apply(z2, one).coeffs() - z.coeffs()).norm() < 1e-14);
  CHECK((conjugation_apply(z2, z).coeffs() - one.coeffs()).norm() < 1e-14);

  const FourierSeries kernel = FourierSeries::from_function(64, [](int n) -> Complex {
    return n >= 0 ? std::pow(0.5, n) * std::sqrt(0.75) : 0.0;
  });
  const FourierSeries image = conjugation_apply(BlaschkeSpec{{0.5}, 1.0}, kernel);
  const Complex c = kernel.coeffs().dot(image.coeffs());
  CHECK(std::abs(std::abs(c) - 1.0) < 1e-10);
  CHECK((image.coeffs() - c * kernel.coeffs()).norm() < 1e-10);

  try {
    conjugation_apply(z2, FourierSeries::monomial(16, 2));
    FAIL("z² is not in K_{z²}");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotInModelSpace);
  }
}

TEST_CASE("property: C_θ is an isometric involution on K_θ") {
  Gen gen(35);
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeSpec theta = gen.blaschke(1, 4, 0.6);
    const Subspace k = model_space(theta, 96);
    Eigen::VectorXcd mix(k.dim());
    for (auto& x : mix) x = gen.gaussian();
    const FourierSeries f = from_ambient(k.basis * mix, 96);
    const FourierSeries cf = conjugation_apply(theta, f);
    CHECK(std::abs(cf.norm() - f.norm()) < 1e-10 * f.norm());
    CHECK((conjugation_apply(theta, cf).coeffs() - f.coeffs()).norm() < 1e-9 * f.norm());
  }
}

TEST_CASE("pminus_model_space examples") {
  CHECK(gap(pminus_model_space(BlaschkeSpec{{0.0, 0.0}, 1.0}, 16), span(16, {unit(16, -1), unit(16, -2)})) < 1e-14);
  CHECK(pminus_model_space(BlaschkeSpec{{}, 1.0}, 16).dim() == 0);

  // P₋(conj b_0.5) = 0.75 conj z / (1 - 0.5 conj z): index -m carries 0.75 * 0.5^{m-1}.
  const FourierSeries expected = FourierSeries::from_function(64, [](int n) -> Complex {
    return n < 0 ? 0.75 * std::pow(0.5, -n - 1) : 0.0;
  });
  CHECK(gap(pminus_model_space(BlaschkeSpec{{0.5}, 1.0}, 64), span_of_series(expected)) < 1e-10);
}

TEST_CASE("property: P₋(conj θ H²) is the reflected model space") {
  Gen gen(36);
  for (int trial = 0; trial < 15; ++trial) {
    const BlaschkeSpec theta = gen.blaschke(1, 6, 0.7);
    const Subspace pm = pminus_model_space(theta, 128);
    CHECK(gap(pm, reflected_model_space(model_space(theta, 128))) < 1e-10);
  }
}

TEST_CASE("gap examples") {
  const Subspace e0 = span(8, {unit(8, 0)}), e1 = span(8, {unit(8, 1)});
  CHECK(gap(e0, e0) < 1e-15);
  CHECK(gap(e0, e1) == doctest::Approx(1.0).epsilon(1e-15));
  const Subspace diagonal = span(8, {unit(8, 0) + unit(8, 1)});
  CHECK(std::abs(gap(e0, diagonal) - std::sin(std::numbers::pi / 4)) < 1e-12);
  CHECK(gap(e0, zero_subspace(8)) == 1.0);
  CHECK(gap(zero_subspace(8), zero_subspace(8)) == 0.0);
  try {
    gap(e0, span(9, {unit(9, 0)}));
    FAIL("windows differ");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("property: gap is a metric and agrees with the projector difference") {
  Gen gen(37);
  auto random_subspace = [&](int dim) {
    Eigen::MatrixXcd m(ambient_dim(16), dim);
    for (auto& x : m.reshaped()) x = gen.gaussian();
    return orthonormalize(m, 16);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = gen.integer(1, 8);
    const Subspace a = random_subspace(dim), b = random_subspace(dim), c = random_subspace(dim);
    CHECK(gap(a, c) <= gap(a, b) + gap(b, c) + 1e-10);
    CHECK(gap(a, b) == doctest::Approx(gap(b, a)).epsilon(1e-12));
    CHECK(std::abs(gap(a, b) - testkit::projector_gap(a.basis, b.basis)) < 1e-10);
  }
}

TEST_CASE("invariance_residual examples") {
  const Subspace everything{Eigen::MatrixXcd::Identity(17, 17), 8};
  CHECK(invariance_residual(everything, kOp8) < 1e-15);
  CHECK(invariance_residual(span(8, {unit(8, 0)}), kOp8) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(invariance_residual(beurling_subspace(blaschke_series(BlaschkeSpec{{0.3}, 1.0}, 128)), AmbientOperator(128)) < 1e-9);
  CHECK_THROWS_AS(invariance_residual(everything, AmbientOperator(9)), DomainError);
}

TEST_CASE("splitting_test examples") {
  const int order = 32;
  const SplittingVerdict zh2 = splitting_test(beurling_subspace(FourierSeries::monomial(order, 1)));
  CHECK(zh2.splits);
  CHECK(zh2.x_part.dim() == order);
  CHECK(zh2.xprime_part.dim() == 0);

  const SplittingVerdict line = splitting_test(span(order, {unit(order, 0) + unit(order, -1)}));
  CHECK_FALSE(line.splits);
  CHECK(line.x_part.dim() == 1);
  CHECK(line.xprime_part.dim() == 1);

  const ExampleSubspace ex = example_subspace(0.0, 1.0 / std::sqrt(2.0), 64);
  CHECK_FALSE(splitting_test(ex.y_explicit).splits);
}

TEST_CASE("property: a splitting verdict reassembles the subspace") {
  Gen gen(38);
  for (int trial = 0; trial < 10; ++trial) {
    SplittingSpec spec;
    spec.x_choice = gen.blaschke(0, 3, 0.6);
    spec.xprime_choice = gen.blaschke(0, 3, 0.6);
    const Subspace y = construct_splitting(spec, 64);
    const SplittingVerdict v = splitting_test(y);
    REQUIRE(v.splits);
    CHECK(gap(y, direct_sum(v.x_part, v.xprime_part)) < 1e-9);
  }
}

TEST_CASE("reducing_test examples") {
  const AmbientOperator op(64);
  CHECK(reducing_test(h2_block(64), op).reducing);
  CHECK(reducing_test(h2minus_block(64), op).reducing);
  const ReducingVerdict b04 = reducing_test(beurling_subspace(blaschke_series(BlaschkeSpec{{0.4}, 1.0}, 64)), op);
  CHECK(b04.residual_y < 1e-9);
  CHECK(b04.residual_complement > 0.1);
  CHECK_FALSE(b04.reducing);
}

TEST_CASE("orthogonal_complement") {
  Gen gen(39);
  Eigen::MatrixXcd m(ambient_dim(8), 5);
  for (auto& x : m.reshaped()) x = gen.gaussian();
  const Subspace y = orthonormalize(m, 8);
  const Subspace c = orthogonal_complement(y);
  CHECK(c.dim() == 12);
  CHECK((y.basis.adjoint() * c.basis).norm() < 1e-14);
  CHECK(gap(direct_sum(y, c), Subspace{Eigen::MatrixXcd::Identity(17, 17), 8}) < 1e-14);
  CHECK(orthogonal_complement(zero_subspace(8)).dim() == 17);
}

TEST_CASE("defect_dimension examples") {
  const AmbientOperator op(128);
  CHECK(defect_dimension(zero_subspace(128), op).dimension == 0);

  const DefectReport beurling =
      defect_dimension(beurling_subspace(blaschke_series(BlaschkeSpec{{0.3, {0.1, -0.5}}, 1.0}, 128)), op);
  CHECK(beurling.dimension == 0);
  CHECK(beurling.spurious >= 1);  // the window edge: z^N is sent to 0

  SplittingSpec case21;
  case21.x_choice = BlaschkeSpec{{0.5}, 1.0};
  case21.xprime_choice = FullPart{};
  CHECK(defect_dimension(construct_splitting(case21, 128), op).dimension == 1);

  try {
    defect_dimension(span(128, {unit(128, 0)}), op);
    FAIL("non-invariant subspace accepted");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
  }
}

TEST_CASE("compress keeps the smaller window of a subspace") {
  const FourierSeries b = blaschke_series(BlaschkeSpec{{0.3}, 1.0}, 96);
  CHECK(gap(compress(beurling_subspace(b), 64), beurling_subspace(b.with_order(64))) < 1e-12);
  CHECK_THROWS_AS(compress(h2_block(32), 64), DomainError);
}
