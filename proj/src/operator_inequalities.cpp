#include "numrange/operator_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "numrange/error.hpp"
#include "numrange/model_operator.hpp"
#include "numrange/numerical_range.hpp"
#include "numrange/radius_formula.hpp"

namespace numrange {

namespace {

constexpr int kCircleSamples = 4096;
constexpr double kSelfMapSlack = 1e-9;

void check_alpha(Complex alpha) {
  if (!(std::abs(alpha) < 1.0)) throw Error(ErrorCode::kAlphaOutOfRange, "|alpha| must be < 1");
}

}  // namespace

AnalyticSelfMap::AnalyticSelfMap(CVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty polynomial");
  for (int j = 0; j < kCircleSamples; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / kCircleSamples);
    boundary_sup_ = std::max(boundary_sup_, std::abs((*this)(z)));
  }
  if (boundary_sup_ > 1.0 + kSelfMapSlack) {
    throw Error(ErrorCode::kSelfMapViolation,
                "sup |f| on the circle is " + std::to_string(boundary_sup_));
  }
}

Complex AnalyticSelfMap::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CVector AnalyticSelfMap::taylor_shift(Complex alpha) const {
  // Repeated synthetic division by (z − α).
  CVector work = coeffs_;
  const std::size_t n = work.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = n - 1; k > j; --k) work[k - 1] += alpha * work[k];
  }
  return work;
}

NilpotentContraction::NilpotentContraction(ComplexMatrix matrix, int order)
    : matrix_(std::move(matrix)), order_(order) {
  if (!matrix_.is_square()) throw Error(ErrorCode::kNonSquare, "nilpotent contraction must be square");
  if (order_ < 1) throw Error(ErrorCode::kInvalidArgument, "nilpotency order must be >= 1");
  const double norm = spectral_norm(matrix_);
  if (norm > 1.0 + 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "not a contraction: norm " + std::to_string(norm));
  }
  if (!(spectral_norm(power(matrix_, static_cast<unsigned>(order_))) < 1e-12)) {
    throw Error(ErrorCode::kNotNilpotent, "T^" + std::to_string(order_) + " is not zero");
  }
}

ComplexMatrix operator_mobius(const ComplexMatrix& t, Complex alpha) {
  if (!t.is_square()) throw Error(ErrorCode::kNonSquare, "Mobius transform of a non-square matrix");
  const ComplexMatrix id = ComplexMatrix::identity(t.rows());
  // X(I − ᾱT) = αI − T, and the two factors commute.
  const ComplexMatrix numerator = alpha * id - t;
  const ComplexMatrix denominator = id - std::conj(alpha) * t;
  return solve(denominator, numerator);
}

ComplexMatrix polynomial_apply(const ComplexMatrix& t, const AnalyticSelfMap& f) {
  if (!t.is_square()) throw Error(ErrorCode::kNonSquare, "functional calculus of a non-square matrix");
  const CVector& c = f.coeffs();
  const ComplexMatrix id = ComplexMatrix::identity(t.rows());
  ComplexMatrix acc = c.back() * id;
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * t + *it * id;
  return acc;
}

int vanishing_order(const AnalyticSelfMap& f, Complex alpha) {
  const CVector shifted = f.taylor_shift(alpha);
  for (std::size_t m = 1; m < shifted.size(); ++m) {
    if (std::abs(shifted[m]) > 1e-10) return static_cast<int>(m);
  }
  throw Error(ErrorCode::kConstantMap, "f is constant");
}

ComplexMatrix pseudo_hyperbolic_transform(const ComplexMatrix& t, const AnalyticSelfMap& f,
                                          Complex alpha) {
  return operator_mobius(polynomial_apply(t, f), f(alpha));
}

SchwarzPickReport schwarz_pick_check(const NilpotentContraction& t, const AnalyticSelfMap& f,
                                     Complex alpha) {
  check_alpha(alpha);
  const int m = vanishing_order(f, alpha);
  const double lhs = numerical_radius(pseudo_hyperbolic_transform(t.matrix(), f, alpha));
  const double rhs = std::pow(radius_single_zero(std::abs(alpha), t.order()), m);
  return {lhs, rhs, rhs - lhs, m};
}

SchwarzPickChain schwarz_pick_chain(const NilpotentContraction& t, const AnalyticSelfMap& f,
                                    Complex alpha) {
  check_alpha(alpha);
  const int n = t.order();
  const int m = vanishing_order(f, alpha);
  const ComplexMatrix model = jordan_shift(n).adjoint();
  SchwarzPickChain chain{};
  chain.m = m;
  chain.transformed_t = numerical_radius(pseudo_hyperbolic_transform(t.matrix(), f, alpha));
  chain.transformed_model = numerical_radius(pseudo_hyperbolic_transform(model, f, alpha));
  chain.mobius_power = std::pow(numerical_radius(operator_mobius(model, alpha)), m);
  chain.formula_power = std::pow(radius_single_zero(std::abs(alpha), n), m);
  return chain;
}

InequalityReport haagerup_harpe_check(const NilpotentContraction& t) {
  const double lhs = numerical_radius(t.matrix());
  const double rhs = spectral_norm(t.matrix()) * std::cos(std::numbers::pi / (t.order() + 1));
  return {lhs, rhs, rhs - lhs};
}

NilpotentContraction random_nilpotent_contraction(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "nilpotent contraction needs n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix t(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) t(i, j) = {normal(rng), normal(rng)};
  }
  t *= 1.0 / spectral_norm(t);
  return NilpotentContraction(std::move(t), n);
}

}  // namespace numrange
