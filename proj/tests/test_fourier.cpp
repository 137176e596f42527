#include <cmath>
#include <numbers>

#include "doctest.h"
#include "shiftlab/errors.hpp"
#include "shiftlab/fourier.hpp"
#include "support.hpp"

using namespace shiftlab;
using testkit::Gen;

namespace {

double max_dev(const FourierSeries& a, const FourierSeries& b) { return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff(); }

FourierSeries series(int order, std::initializer_list<std::pair<int, Complex>> terms) {
  FourierSeries f(order);
  for (const auto& [n, c] : terms) f += FourierSeries::monomial(order, n, c);
  return f;
}

}  // namespace

TEST_CASE("sampling a constant gives all ones") {
  const Grid grid(64);
  const Eigen::VectorXcd s = samples_from_fourier(FourierSeries::constant(8, 1.0), grid);
  CHECK((s.array() - Complex(1.0)).abs().maxCoeff() < 1e-15);
}

TEST_CASE("sampling z on eight points walks the eighth roots of unity") {
  // N = 1 keeps 2(2N+1) = 6 <= 8.
  const Grid grid(8);
  const Eigen::VectorXcd s = samples_from_fourier(FourierSeries::monomial(1, 1), grid);
  for (int j = 0; j < 8; ++j) CHECK(std::abs(s[j] - std::polar(1.0, 2.0 * std::numbers::pi * j / 8)) < 1e-15);
}

TEST_CASE("z^-1 + z at the point 1 is 2") {
  const FourierSeries f = series(4, {{-1, 1.0}, {1, 1.0}});
  const Eigen::VectorXcd s = samples_from_fourier(f, Grid(32));
  CHECK(std::abs(s[0] - 2.0) < 1e-15);
}

TEST_CASE("a grid that is too coarse is rejected") {
  CHECK_THROWS_AS(samples_from_fourier(FourierSeries(8), Grid(16)), DomainError);
}

TEST_CASE("fourier_from_samples inverts simple samples") {
  const Grid grid(128);
  Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(grid.size());
  CHECK(max_dev(fourier_from_samples(ones, grid, 16).series, FourierSeries::constant(16, 1.0)) < 1e-15);

  Eigen::VectorXcd z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) z2[j] = std::pow(grid.point(j), 2);
  CHECK(max_dev(fourier_from_samples(z2, grid, 16).series, FourierSeries::monomial(16, 2)) < 1e-15);
}

TEST_CASE("samples of b_0.5 recover its geometric expansion") {
  const int order = 32;
  const Grid grid(256);
  Eigen::VectorXcd s(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const Complex z = grid.point(j);
    s[j] = (z - 0.5) / (1.0 - 0.5 * z);
  }
  const BandLimited got = fourier_from_samples(s, grid, order);
  // -0.5 + 0.75 sum_{k>=1} 0.5^{k-1} z^k
  const FourierSeries expected = FourierSeries::from_function(order, [](int n) -> Complex {
    if (n < 0) return 0.0;
    if (n == 0) return -0.5;
    return 0.75 * std::pow(0.5, n - 1);
  });
  CHECK(max_dev(got.series, expected) < 1e-12);
}

TEST_CASE("P+ and P- split z^-1 + 1 + z") {
  const FourierSeries f = series(4, {{-1, 1.0}, {0, 1.0}, {1, 1.0}});
  CHECK(max_dev(project_plus(f), series(4, {{0, 1.0}, {1, 1.0}})) == 0.0);
  CHECK(max_dev(project_minus(f), series(4, {{-1, 1.0}})) == 0.0);
  CHECK(project_minus(project_plus(f)).norm() == 0.0);
}

TEST_CASE("shift_apply") {
  CHECK(max_dev(shift_apply(FourierSeries::constant(8, 1.0)).series, FourierSeries::monomial(8, 1)) == 0.0);
  CHECK(max_dev(shift_apply(series(8, {{0, 1.0}, {1, 1.0}})).series, series(8, {{1, 1.0}, {2, 1.0}})) == 0.0);
  try {
    shift_apply(FourierSeries::monomial(8, 8));
    FAIL("z^N must not shift inside the window");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::TruncationOverflow);
  }
  CHECK_THROWS_AS(shift_apply(FourierSeries::monomial(8, -1)), DomainError);
}

TEST_CASE("costar_apply") {
  CHECK(costar_apply(FourierSeries::monomial(8, -1)).norm() == 0.0);
  CHECK(max_dev(costar_apply(FourierSeries::monomial(8, -2)), FourierSeries::monomial(8, -1)) == 0.0);
  // z^-1 + z^-3: the first term is compressed out, the second moves up by one.
  CHECK(max_dev(costar_apply(series(8, {{-1, 1.0}, {-3, 1.0}})), FourierSeries::monomial(8, -2)) == 0.0);
  CHECK_THROWS_AS(costar_apply(FourierSeries::constant(8, 1.0)), DomainError);
}

TEST_CASE("j_map and its intertwining with the shifts") {
  CHECK(max_dev(j_map(FourierSeries::constant(8, 1.0)), FourierSeries::monomial(8, -1)) == 0.0);
  for (int k = 0; k < 8; ++k) CHECK(max_dev(j_map(FourierSeries::monomial(8, k)), FourierSeries::monomial(8, -(k + 1))) == 0.0);

  const FourierSeries f = series(8, {{0, 3.0}, {1, 2.0}, {5, 1.0}});
  // S*f = 2 + z^4, so J S* f = 2 z^-1 + z^-5; J f = 3 z^-1 + 2 z^-2 + z^-6 and S⋆ of it is 2 z^-1 + z^-5.
  const FourierSeries expected = series(8, {{-1, 2.0}, {-5, 1.0}});
  CHECK(max_dev(j_map(backward_shift(f)), expected) == 0.0);
  CHECK(max_dev(costar_apply(j_map(f)), expected) == 0.0);
}

TEST_CASE("tilde") {
  CHECK(max_dev(tilde(FourierSeries::monomial(4, 1, {0.0, 1.0})), FourierSeries::monomial(4, 1, {0.0, -1.0})) == 0.0);
  const FourierSeries real = series(4, {{-2, 0.5}, {0, -1.0}, {3, 2.0}});
  CHECK(max_dev(tilde(real), real) == 0.0);

  const Complex a{0.3, 0.4};
  const BlaschkeSpec b{{a}, 1.0};
  const BlaschkeSpec b_conj{{std::conj(a)}, 1.0};
  CHECK(max_dev(tilde(blaschke_series(b, 64)), blaschke_series(b_conj, 64)) < 1e-12);
}

TEST_CASE("boundary_product") {
  const BandLimited one = boundary_product(FourierSeries::monomial(8, 1), FourierSeries::monomial(8, -1));
  CHECK(max_dev(one.series, FourierSeries::constant(8, 1.0)) < 1e-15);
  CHECK(one.out_of_band < 1e-15);

  const FourierSeries high = FourierSeries::monomial(8, 5);
  CHECK(boundary_product(high, high).out_of_band > 0.5);

  const FourierSeries ba = blaschke_series(BlaschkeSpec{{Complex(0.4, -0.2)}, 1.0}, 64);
  const BandLimited unit = boundary_product(ba, boundary_conj(ba));
  CHECK(max_dev(unit.series, FourierSeries::constant(64, 1.0)) < 1e-12);
}

TEST_CASE("property: Parseval on the grid") {
  Gen gen(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = gen.integer(4, 64);
    const FourierSeries f = gen.any_vector(order);
    const Grid grid = Grid::for_order(order);
    CHECK(std::abs(quadrature_norm(f, grid) - f.norm()) / f.norm() < 1e-12);
  }
}

TEST_CASE("property: P+ and P- are complementary orthogonal projections") {
  Gen gen(12);
  for (int trial = 0; trial < 25; ++trial) {
    const FourierSeries f = gen.any_vector(16), g = gen.any_vector(16);
    CHECK(max_dev(project_plus(f) + project_minus(f), f) == 0.0);
    CHECK(max_dev(project_plus(project_plus(f)), project_plus(f)) == 0.0);
    CHECK(std::abs(project_plus(f).coeffs().dot(project_minus(g).coeffs())) == 0.0);
  }
}

TEST_CASE("property: J is an isometry and intertwines S* with S⋆") {
  Gen gen(13);
  for (int trial = 0; trial < 25; ++trial) {
    const FourierSeries f = gen.h2_vector(32, 31);
    CHECK(j_map(f).norm() == doctest::Approx(f.norm()).epsilon(1e-15));
    CHECK(max_dev(j_map(backward_shift(f)), costar_apply(j_map(f))) == 0.0);
  }
}

TEST_CASE("property: tilde is an isometric involution") {
  Gen gen(14);
  for (int trial = 0; trial < 25; ++trial) {
    const FourierSeries f = gen.any_vector(16);
    CHECK(max_dev(tilde(tilde(f)), f) == 0.0);
    CHECK(tilde(f).norm() == f.norm());
  }
}

TEST_CASE("property: multiplying by the constant 1 changes nothing") {
  Gen gen(15);
  for (int trial = 0; trial < 10; ++trial) {
    const FourierSeries f = gen.any_vector(24);
    CHECK(max_dev(boundary_product(f, FourierSeries::constant(24, 1.0)).series, f) < 1e-14);
  }
}
