#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "numrange/error.hpp"
#include "numrange/linalg.hpp"
#include "numrange/model_operator.hpp"
#include "oracles.hpp"

using namespace numrange;

namespace {

ComplexMatrix diag_times(const ComplexMatrix& v, const std::vector<double>& d) {
  ComplexMatrix out = v;
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) out(i, j) *= d[j];
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("matrix shape and arithmetic") {
  CHECK_THROWS_AS(ComplexMatrix(0, 2), Error);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  const ComplexMatrix a{{1.0, Complex(0, 1)}, {2.0, 3.0}};
  CHECK(a.rows() == 2);
  CHECK(a(0, 1) == Complex(0, 1));
  CHECK(a.adjoint()(1, 0) == Complex(0, -1));
  CHECK(a.transpose()(1, 0) == Complex(0, 1));
  const ComplexMatrix prod = a * ComplexMatrix::identity(2);
  CHECK(prod == a);
  CHECK(trace(a) == Complex(4.0, 0.0));
  CHECK(max_abs_diff(a + a, 2.0 * a) == 0.0);
  CHECK_THROWS_AS(a * ComplexMatrix(3, 3), Error);
}

TEST_CASE("hermitian_eig on small exact cases") {
  const auto eye = hermitian_eig(ComplexMatrix::identity(3));
  for (double v : eye.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

  const ComplexMatrix re_s2{{0.0, 0.5}, {0.5, 0.0}};
  const auto two = hermitian_eig(re_s2);
  CHECK(two.values[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(two.values[1] == doctest::Approx(0.5).epsilon(1e-15));

  const auto four = hermitian_eig(hermitian_part(jordan_shift(4).adjoint()));
  for (int k = 4; k >= 1; --k) {
    CHECK(std::abs(four.values[4 - k] - std::cos(k * std::numbers::pi / 5)) < 1e-14);
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  const ComplexMatrix skew{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(hermitian_eig(skew), Error);
  try {
    hermitian_eig(ComplexMatrix(2, 3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonSquare);
  }
}

TEST_CASE("hermitian_eig residuals, orthonormality and reconstruction") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 12; ++n) {
    const ComplexMatrix h = oracle::random_hermitian(n, rng);
    const auto eig = hermitian_eig(h);
    const double scale = norm_inf(h);
    for (std::size_t k = 0; k + 1 < n; ++k) CHECK(eig.values[k] <= eig.values[k + 1]);
    for (std::size_t k = 0; k < n; ++k) {
      const CVector v = eig.vectors.column(k);
      CVector r = h * std::span<const Complex>(v);
      for (std::size_t i = 0; i < n; ++i) r[i] -= eig.values[k] * v[i];
      CHECK(norm2(r) <= 1e-10 * scale);
    }
    const ComplexMatrix gram = eig.vectors.adjoint() * eig.vectors;
    CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) < 1e-10);
    const ComplexMatrix rebuilt = diag_times(eig.vectors, eig.values) * eig.vectors.adjoint();
    CHECK(max_abs_diff(rebuilt, h) <= 1e-9 * scale);

    double sum = 0.0;
    for (double v : eig.values) sum += v;
    CHECK(std::abs(sum - trace(h).real()) <= 1e-10 * std::max(1.0, std::abs(trace(h).real())) * n);

    const auto reference = oracle::hermitian_eigenvalues(h);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(reference[k] - eig.values[k]) < 1e-10 * scale);
  }
}

TEST_CASE("hermitian_eig is deterministic") {
  std::mt19937_64 rng(5);
  const ComplexMatrix h = oracle::random_hermitian(7, rng);
  const auto a = hermitian_eig(h);
  const auto b = hermitian_eig(h);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("solve") {
  std::mt19937_64 rng(3);
  const ComplexMatrix b = oracle::random_matrix(3, 2, rng);
  CHECK(max_abs_diff(solve(ComplexMatrix::identity(3), b), b) < 1e-15);
  const ComplexMatrix half = solve(2.0 * ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(max_abs_diff(half, 0.5 * ComplexMatrix::identity(2)) < 1e-16);

  const ComplexMatrix a = ComplexMatrix::identity(3) + 0.5 * jordan_shift(3).adjoint();
  const ComplexMatrix x = solve(a, ComplexMatrix::identity(3));
  CHECK(max_abs_diff(a * x, ComplexMatrix::identity(3)) < 1e-10);

  for (std::size_t n = 1; n <= 20; ++n) {
    const ComplexMatrix m = oracle::random_matrix(n, n, rng) + static_cast<double>(n) * ComplexMatrix::identity(n);
    const ComplexMatrix rhs = oracle::random_matrix(n, 3, rng);
    const ComplexMatrix sol = solve(m, rhs);
    CHECK(max_abs_diff(m * sol, rhs) <= 1e-10 * norm_inf(m) * norm_inf(sol));
  }

  const ComplexMatrix singular{{1.0, 2.0}, {2.0, 4.0}};
  CHECK_THROWS_AS(solve(singular, ComplexMatrix::identity(2)), Error);
  CHECK_THROWS_AS(inverse(singular), Error);
  CHECK(std::abs(determinant(singular)) < 1e-15);
}

TEST_CASE("determinant against the characteristic polynomial oracle") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    const ComplexMatrix m = oracle::random_matrix(n, n, rng);
    const auto c = oracle::characteristic_polynomial(m);
    const Complex det_from_poly = (n % 2 == 0 ? 1.0 : -1.0) * c[0];
    CHECK(std::abs(determinant(m) - det_from_poly) < 1e-10 * std::max(1.0, std::abs(det_from_poly)));
  }
}

TEST_CASE("singular_values") {
  const auto eye = singular_values(ComplexMatrix::identity(2));
  CHECK(eye.size() == 2);
  CHECK(eye[0] == doctest::Approx(1.0));
  CHECK(eye[1] == doctest::Approx(1.0));

  const auto zero = singular_values(ComplexMatrix(2, 3));
  CHECK(zero.size() == 2);
  CHECK(zero[0] == 0.0);
  CHECK(zero[1] == 0.0);

  std::mt19937_64 rng(21);
  ComplexMatrix u = oracle::random_matrix(4, 1, rng);
  ComplexMatrix v = oracle::random_matrix(3, 1, rng);
  u *= 1.0 / norm2(u.column(0));
  v *= 1.0 / norm2(v.column(0));
  const auto rank_one = singular_values(u * v.adjoint());
  CHECK(rank_one.size() == 3);
  CHECK(std::abs(rank_one[0] - 1.0) < 1e-14);
  CHECK(rank_one[1] < 1e-14);

  for (auto [r, c] : {std::pair{5, 3}, std::pair{3, 5}, std::pair{6, 6}}) {
    const ComplexMatrix a = oracle::random_matrix(r, c, rng);
    const auto s = singular_values(a);
    const auto ev = oracle::hermitian_eigenvalues(a.adjoint() * a);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) CHECK(s[k] >= s[k + 1]);
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(std::abs(s[k] * s[k] - ev[ev.size() - 1 - k]) < 1e-10 * ev.back());
    }
    CHECK(spectral_norm(a) == doctest::Approx(s[0]).epsilon(1e-14));
  }
}

}  // TEST_SUITE
