#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "numrange/error.hpp"
#include "numrange/model_operator.hpp"
#include "numrange/numerical_range.hpp"
#include "numrange/radius_formula.hpp"
#include "numrange/subspace_estimates.hpp"
#include "oracles.hpp"

using namespace numrange;

TEST_SUITE("subspace_estimates") {

TEST_CASE("cross_gram examples") {
  const auto z3 = BlaschkeProduct::monomial(3);
  CHECK(max_abs_diff(cross_gram(z3, z3, 8), ComplexMatrix::identity(3)) < 1e-15);

  const Complex a(0.4, 0.3);
  const ComplexMatrix g = cross_gram(BlaschkeProduct::monomial(1), BlaschkeProduct::single_zero(a, 1));
  CHECK(std::abs(g(0, 0) - std::sqrt(1.0 - std::norm(a))) < 1e-14);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = BlaschkeProduct({{oracle::random_disc_point(rng, 0.8), 2}, {oracle::random_disc_point(rng, 0.8), 1}});
    const auto q = BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.8), 3);
    const ComplexMatrix gram = cross_gram(p, q);
    CHECK(max_abs(gram) <= 1.0 + 1e-10);
    CHECK(max_abs_diff(cross_gram(p, p), ComplexMatrix::identity(3)) < 1e-10);
  }
  CHECK_THROWS_AS(cross_gram(BlaschkeProduct::single_zero(0.9, 1), BlaschkeProduct::monomial(1), 5), Error);
}

TEST_CASE("kernel angle for one zero each") {
  // Normalized reproducing kernels: cos = sqrt((1-|a|^2)(1-|b|^2)) / |1 - conj(a) b|.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex a = oracle::random_disc_point(rng, 0.7);
    const Complex b = oracle::random_disc_point(rng, 0.7);
    const AngleReport r = subspace_cos_angle(BlaschkeProduct::single_zero(a, 1), BlaschkeProduct::single_zero(b, 1));
    const double expected = std::sqrt((1.0 - std::norm(a)) * (1.0 - std::norm(b))) / std::abs(1.0 - std::conj(a) * b);
    CHECK(std::abs(r.cos_angle - expected) < 1e-12);
    CHECK(std::abs(r.sin_angle * r.sin_angle + r.cos_angle * r.cos_angle - 1.0) < 1e-14);
    REQUIRE(r.f_lower_bound.has_value());
    CHECK(r.sin_angle >= *r.f_lower_bound - 1e-6);
  }
}

TEST_CASE("subspace_cos_angle examples") {
  const double a = 0.6;
  const AngleReport r = subspace_cos_angle(BlaschkeProduct::monomial(1), BlaschkeProduct::single_zero(a, 1));
  CHECK(r.cos_angle == doctest::Approx(std::sqrt(1.0 - a * a)));
  CHECK(*r.f_lower_bound == doctest::Approx(a * a));
  CHECK(r.sin_angle >= *r.f_lower_bound - 1e-6);

  const AngleReport s = subspace_cos_angle(BlaschkeProduct::single_zero(0.1, 1), BlaschkeProduct::single_zero(-0.1, 1));
  CHECK(*s.f_lower_bound == doctest::Approx(std::pow(0.2 / 1.01, 2)));
  CHECK(s.sin_angle >= *s.f_lower_bound - 1e-6);

  try {
    subspace_cos_angle(BlaschkeProduct::single_zero(0.3, 1), BlaschkeProduct::single_zero(0.3, 2));
    FAIL("expected CommonZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCommonZero);
  }
}

TEST_CASE("F_bound") {
  CHECK(F_bound(BlaschkeProduct::single_zero(0.3, 2), BlaschkeProduct::single_zero(0.3, 1)) == 0.0);
  CHECK(F_bound(BlaschkeProduct::monomial(1), BlaschkeProduct::single_zero(0.5, 1)) == doctest::Approx(0.25));
  CHECK(F_bound(BlaschkeProduct::monomial(2), BlaschkeProduct::single_zero(0.5, 1)) == doctest::Approx(0.0625));
  CHECK_THROWS_AS(F_bound(BlaschkeProduct({{0.1, 1}, {0.2, 1}}), BlaschkeProduct::monomial(1)), Error);
}

TEST_CASE("sin angle dominates F on random pairs") {
  std::mt19937_64 rng(66);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.7), mult(rng));
    const auto q = BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.7), mult(rng));
    const AngleReport r = subspace_cos_angle(p, q);
    CHECK(r.sin_angle >= *r.f_lower_bound - 1e-6);
    CHECK(r.cos_angle <= std::sqrt(1.0 - *r.f_lower_bound) + 1e-9);
  }
}

TEST_CASE("G_estimate") {
  const std::vector<BlaschkeProduct> far = {BlaschkeProduct::single_zero(0.05, 1), BlaschkeProduct::single_zero(-0.05, 1)};
  const GEstimate g = G_estimate(far);
  CHECK(g.delta == doctest::Approx(0.05));
  CHECK(g.threshold == doctest::Approx(0.475));
  CHECK(g.applicable == (g.rho < g.threshold));
  CHECK_FALSE(g.applicable);
  CHECK_FALSE(g.bound.has_value());

  const GEstimate proxy = G_estimate(far, RhoSource::kFProxy);
  CHECK(std::abs(proxy.rho - g.rho) < 1e-12);

  CHECK_THROWS_AS(G_estimate({BlaschkeProduct::single_zero(0.05, 1)}), Error);
  try {
    G_estimate({BlaschkeProduct::single_zero(0.2, 1), BlaschkeProduct::single_zero(0.2, 2)});
    FAIL("expected DuplicateZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDuplicateZero);
  }
}

TEST_CASE("two-zero bound equals G with the F proxy") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.9), 1 + trial % 3);
    const auto q = BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.9), 1 + trial % 2);
    const GEstimate g = G_estimate({p, q}, RhoSource::kFProxy);
    CHECK(std::abs(two_zero_bound(p, q) - G_value(g.rho, g.delta, 2)) < 1e-12);
  }
}

TEST_CASE("G bound holds whenever it applies") {
  std::mt19937_64 rng(90);
  int applicable = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BlaschkeProduct> parts;
    const int p = 2 + trial % 3;
    for (int j = 0; j < p; ++j) parts.push_back(BlaschkeProduct::single_zero(oracle::random_disc_point(rng, 0.95), 1));
    const GEstimate g = G_estimate(parts);
    if (!g.applicable) continue;
    ++applicable;
    const double w = numerical_radius(compress_shift_adjoint(product(parts)).matrix);
    CHECK(*g.bound < 1.0);
    CHECK(w <= *g.bound + 1e-8);
  }
  MESSAGE("instances meeting the hypothesis: " << applicable);
}

TEST_CASE("combinatorial identity and pairing matrix") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int p = 2; p <= 9; ++p) {
    std::vector<double> x(p);
    for (double& v : x) v = normal(rng);
    double pairs = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) pairs += x[i] + x[j];
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    CHECK(std::abs(pairs - (p - 1) * total) < 1e-12 * std::max(1.0, std::abs(pairs)));

    const auto ones = hermitian_eig(pairing_matrix(0.0, 1.0, p)).values;
    for (int k = 0; k + 1 < p; ++k) CHECK(std::abs(ones[k] + 1.0) < 1e-10);
    CHECK(std::abs(ones.back() - (p - 1)) < 1e-10);

    const double delta = 0.3;
    const double rho = 0.07;
    CHECK(std::abs(numerical_radius(pairing_matrix(delta, rho, p)) - (delta + rho * (p - 1))) < 1e-10);
  }
}

TEST_CASE("G approaches delta as the cross term vanishes") {
  const double delta = 0.4;
  double prev = G_value(0.2, delta, 3);
  for (double rho : {0.1, 0.05, 0.01, 1e-3, 1e-5}) {
    const double g = G_value(rho, delta, 3);
    CHECK(g < prev);
    CHECK(g > delta);
    prev = g;
  }
  CHECK(std::abs(prev - delta) < 1e-4);

  double prev_rho = 1.0;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const GEstimate g = G_estimate({BlaschkeProduct::single_zero(r, 1), BlaschkeProduct::single_zero(-r, 1)});
    CHECK(g.rho < prev_rho);
    prev_rho = g.rho;
  }
}

}  // TEST_SUITE
