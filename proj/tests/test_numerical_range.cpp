#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "numrange/model_operator.hpp"
#include "numrange/numerical_range.hpp"
#include "numrange/error.hpp"
#include "oracles.hpp"

using namespace numrange;

TEST_SUITE("numerical_range") {

TEST_CASE("support function examples") {
  for (double theta : {0.0, 0.7, 2.0, 4.5}) {
    CHECK(support_function(ComplexMatrix::identity(3), theta) == doctest::Approx(std::cos(theta)));
    CHECK(support_function(ComplexMatrix(2, 2), theta) == 0.0);
  }
  for (int n = 1; n <= 8; ++n) {
    CHECK(std::abs(support_function(jordan_shift(n), 0.0) - std::cos(std::numbers::pi / (n + 1))) < 1e-14);
  }
}

TEST_CASE("boundary of the 2x2 Jordan block is a circle") {
  const BoundarySample b = boundary(jordan_shift(2), 128);
  CHECK(b.points.size() == 128);
  for (const auto& p : b.points) CHECK(std::abs(std::hypot(p.x, p.y) - 0.5) < 1e-6);
  CHECK_THROWS_AS(boundary(jordan_shift(2), 7), Error);
}

TEST_CASE("boundary of a normal matrix") {
  const double d[] = {1.0, -1.0};
  const BoundarySample b = boundary(ComplexMatrix::diagonal(d), 64);
  for (std::size_t j = 0; j < b.thetas.size(); ++j) {
    CHECK(b.support[j] == doctest::Approx(std::abs(std::cos(b.thetas[j]))));
    CHECK(std::abs(b.points[j].y) <= 1.0);
  }
}

TEST_CASE("envelope identity") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 10; n += 2) {
    const ComplexMatrix t = single_zero_matrix(oracle::random_disc_point(rng, 0.8), n).matrix;
    const BoundarySample b = boundary(t, 2048);
    for (std::size_t j = 0; j < b.thetas.size(); ++j) {
      const double c = std::cos(b.thetas[j]);
      const double s = std::sin(b.thetas[j]);
      CHECK(std::abs(b.points[j].x * c + b.points[j].y * s - b.support[j]) < 1e-8);
      CHECK(std::hypot(b.points[j].x, b.points[j].y) <= 1.0 + 1e-9);
    }
  }
  const BoundarySample coarse = boundary(single_zero_matrix(0.5, 3).matrix, 2048);
  for (std::size_t j = 0; j < coarse.thetas.size(); ++j) {
    const double c = std::cos(coarse.thetas[j]);
    const double s = std::sin(coarse.thetas[j]);
    CHECK(std::abs(coarse.points[j].x * c + coarse.points[j].y * s - coarse.support[j]) < 1e-6);
  }
}

TEST_CASE("numerical radius examples") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(std::abs(numerical_radius(jordan_shift(n)) - std::cos(std::numbers::pi / (n + 1))) < 1e-10);
  }
  CHECK(numerical_radius(ComplexMatrix::identity(4)) == doctest::Approx(1.0));
  CHECK(std::abs(numerical_radius(single_zero_matrix(0.5, 2).matrix) - 0.875) < 1e-12);
  CHECK_THROWS_AS(numerical_radius(jordan_shift(3), 32), Error);
}

TEST_CASE("numerical radius against the dense-sampling oracle") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 6; ++n) {
    const ComplexMatrix t = oracle::random_matrix(n, n, rng);
    const double w = numerical_radius(t);
    CHECK(w == doctest::Approx(oracle::numerical_radius(t)).epsilon(1e-10));
    CHECK(std::abs(numerical_radius(t.adjoint()) - w) < 1e-10 * std::max(1.0, w));
    CHECK(std::abs(numerical_radius(std::polar(1.0, 0.9) * t) - w) < 1e-10 * std::max(1.0, w));
  }
}

TEST_CASE("both radius backends agree on model operators") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix t = compress_shift_adjoint(BlaschkeProduct(
        {{oracle::random_disc_point(rng, 0.8), 2}, {oracle::random_disc_point(rng, 0.8), 1}})).matrix;
    const double a = maximize_radius(t, 256, 1e-12, RadiusBackend::kHermitianNorm).value;
    const double b = maximize_radius(t, 256, 1e-12, RadiusBackend::kSupportFunction).value;
    CHECK(std::abs(a - b) < 1e-10);
    CHECK(a > std::cos(std::numbers::pi / 3));
    CHECK(a < 1.0);
  }
}

TEST_CASE("radius of the shifted single-zero matrix is the norm of its real part") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double h = 2.0 * std::numbers::pi / 256;
  for (int trial = 0; trial < 10; ++trial) {
    const double a = 0.9 * unit(rng);
    const int n = 2 + trial;
    const ComplexMatrix m = single_zero_matrix(-a, n).matrix;
    const RadiusMaximum best = maximize_radius(m, 256, 1e-12, RadiusBackend::kHermitianNorm);
    CHECK(std::abs(best.value - spectral_norm(hermitian_part(m))) < 1e-9);
    const double to_axis = std::min({best.theta, std::abs(best.theta - std::numbers::pi),
                                     2.0 * std::numbers::pi - best.theta});
    CHECK(to_axis <= h);
    for (int j = 0; j < 32; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / 32;
      CHECK(std::abs(support_function(m, theta) - support_function(m, 2.0 * std::numbers::pi - theta)) < 1e-10);
    }
  }
}

}  // TEST_SUITE
