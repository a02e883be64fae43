#include "numrange/model_operator.hpp"

#include <cmath>
#include <string>

#include "numrange/error.hpp"

namespace numrange {

namespace {

void require_degree(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
}

void require_disc(Complex alpha) {
  if (!(std::abs(alpha) < 1.0)) throw Error(ErrorCode::kAlphaOutOfRange, "|alpha| must be < 1");
}

void require_real_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "expected 0 <= alpha < 1, got " + std::to_string(alpha));
  }
}

}  // namespace

ModelOperator compress_shift_adjoint(const BlaschkeProduct& phi) {
  const std::vector<Complex> zeros = phi.zeros();
  const std::size_t n = zeros.size();
  std::vector<double> sigma(n);
  for (std::size_t k = 0; k < n; ++k) sigma[k] = std::sqrt(1.0 - std::norm(zeros[k]));

  ComplexMatrix m(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    m(l, l) = std::conj(zeros[l]);
    Complex running = 1.0;  // ∏_{l<j<k} (−α_j)
    for (std::size_t k = l + 1; k < n; ++k) {
      m(l, k) = sigma[l] * sigma[k] * running;
      running *= -zeros[k];
    }
  }
  return {phi, std::move(m)};
}

ModelOperator single_zero_matrix(Complex alpha, int n) {
  require_disc(alpha);
  require_degree(n);
  const double sigma = 1.0 - std::norm(alpha);
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix m(size, size);
  Complex band = sigma;
  for (std::size_t offset = 0; offset < size; ++offset) {
    const Complex value = offset == 0 ? std::conj(alpha) : band;
    for (std::size_t i = 0; i + offset < size; ++i) m(i, i + offset) = value;
    if (offset > 0) band *= -alpha;
  }
  return {BlaschkeProduct::single_zero(alpha, n), std::move(m)};
}

ComplexMatrix jordan_shift(int n) {
  require_degree(n);
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix s(size, size);
  for (std::size_t i = 0; i + 1 < size; ++i) s(i + 1, i) = 1.0;
  return s;
}

ComplexMatrix mobius_of_shift(Complex alpha, int n) {
  require_disc(alpha);
  const ComplexMatrix shift_adj = jordan_shift(n).adjoint();
  const ComplexMatrix id = ComplexMatrix::identity(static_cast<std::size_t>(n));
  const ComplexMatrix numerator = shift_adj + std::conj(alpha) * id;
  const ComplexMatrix denominator = id + alpha * shift_adj;
  return solve(denominator, numerator);
}

ComplexMatrix apply_blaschke(const BlaschkeProduct& phi, const ComplexMatrix& t) {
  const ComplexMatrix id = ComplexMatrix::identity(t.rows());
  ComplexMatrix result = id;
  for (const Complex a : phi.zeros()) {
    const ComplexMatrix numerator = t - a * id;
    const ComplexMatrix denominator = id - std::conj(a) * t;
    result = result * solve(denominator, numerator);
  }
  return result;
}

std::vector<double> defect_spectrum(const ComplexMatrix& t) {
  const ComplexMatrix defect = ComplexMatrix::identity(t.cols()) - t.adjoint() * t;
  return hermitian_eig(defect).values;
}

double char_det_recurrence(double alpha, double lambda, double theta, int n) {
  require_real_alpha(alpha);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  if (n == 0) return 1.0;
  const double c = std::cos(theta);
  const double sigma = 1.0 - alpha * alpha;
  const double diag = -2.0 * alpha * c - lambda * (1.0 + alpha * alpha);
  const double coupling =
      std::norm(0.5 * sigma * std::polar(1.0, theta) + alpha * alpha * c + alpha * lambda);
  double prev = 1.0;
  double curr = -alpha * c - lambda;
  for (int k = 2; k <= n; ++k) {
    const double next = diag * curr - coupling * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double char_det_closed_form(double alpha, double lambda, double theta, int n) {
  require_real_alpha(alpha);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  if (std::abs(lambda) >= 1.0 - 1e-9) {
    throw Error(ErrorCode::kLambdaOnBoundary, "closed form needs |lambda| < 1");
  }
  const double s = std::sqrt(1.0 - lambda * lambda);
  const double b = -2.0 * alpha * std::cos(theta) - lambda * (1.0 + alpha * alpha);
  const Complex rho1{0.5 * b, -0.5 * (1.0 - alpha * alpha) * s};
  const Complex a_coeff = Complex{s, -lambda} / (2.0 * s);
  // ρ₂ = conj(ρ₁) and B = conj(A), so the sum is twice the real part.
  return 2.0 * (a_coeff * std::pow(rho1, n)).real();
}

double char_det(double alpha, double lambda, double theta, int n) {
  if (std::abs(lambda) >= 1.0 - 1e-9) return char_det_recurrence(alpha, lambda, theta, n);
  return char_det_closed_form(alpha, lambda, theta, n);
}

}  // namespace numrange
