#pragma once

#include <cstdint>

#include "numrange/linalg.hpp"

namespace numrange {

/// Polynomial f(z) = Σ c_k z^k certified as a self-map of the closed disc by
/// sampling |f| at 4096 points of the unit circle (slack 1e-9).
class AnalyticSelfMap {
 public:
  /// Throws kInvalidArgument for an empty coefficient list and
  /// kSelfMapViolation when the boundary sup exceeds 1 + 1e-9.
  explicit AnalyticSelfMap(CVector coeffs);

  const CVector& coeffs() const noexcept { return coeffs_; }
  double boundary_sup() const noexcept { return boundary_sup_; }
  Complex operator()(Complex z) const;

  /// Coefficients of w ↦ f(α + w).
  CVector taylor_shift(Complex alpha) const;

 private:
  CVector coeffs_;
  double boundary_sup_ = 0.0;
};

/// ‖T‖ <= 1 and T^order = 0.
class NilpotentContraction {
 public:
  /// Throws kNonSquare, kInvalidArgument (norm above 1 + 1e-12 or order < 1)
  /// or kNotNilpotent (‖T^order‖ >= 1e-12).
  NilpotentContraction(ComplexMatrix matrix, int order);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int order() const noexcept { return order_; }

 private:
  ComplexMatrix matrix_;
  int order_;
};

/// (αI − T)(I − ᾱT)^{-1}
ComplexMatrix operator_mobius(const ComplexMatrix& t, Complex alpha);

/// Σ c_k T^k by Horner's rule.
ComplexMatrix polynomial_apply(const ComplexMatrix& t, const AnalyticSelfMap& f);

/// Smallest m >= 1 with |f^{(m)}(α)|/m! > 1e-10. Throws kConstantMap.
int vanishing_order(const AnalyticSelfMap& f, Complex alpha);

/// (f(α)I − f(T))(I − conj(f(α)) f(T))^{-1}; for 1x1 T this is the scalar
/// pseudo-hyperbolic transform of f(t).
ComplexMatrix pseudo_hyperbolic_transform(const ComplexMatrix& t, const AnalyticSelfMap& f,
                                          Complex alpha);

struct InequalityReport {
  double lhs;
  double rhs;
  double margin;  // rhs − lhs
};

struct SchwarzPickReport {
  double lhs;     // w(pseudo_hyperbolic_transform(T, f, α))
  double rhs;     // radius_single_zero(|α|, n)^m
  double margin;  // rhs − lhs
  int m;          // vanishing_order(f, α)
};

/// Throws kAlphaOutOfRange for |α| >= 1.
SchwarzPickReport schwarz_pick_check(const NilpotentContraction& t, const AnalyticSelfMap& f,
                                     Complex alpha);

/// The three links of the estimate, with N = S_n* and g(X) the transform of
/// f(X) about f(α):
///   w(g(T)) <= w(g(N)) <= w((αI − N)(I − ᾱN)^{-1})^m = radius_single_zero(|α|, n)^m.
struct SchwarzPickChain {
  double transformed_t;       // w(g(T))
  double transformed_model;   // w(g(N))
  double mobius_power;        // w((αI − N)(I − ᾱN)^{-1})^m
  double formula_power;       // radius_single_zero(|α|, n)^m
  int m;
};

SchwarzPickChain schwarz_pick_chain(const NilpotentContraction& t, const AnalyticSelfMap& f,
                                    Complex alpha);

/// w(T) against ‖T‖ cos(π/(n+1)), n the nilpotency order.
InequalityReport haagerup_harpe_check(const NilpotentContraction& t);

/// Strictly upper triangular n×n matrix with Gaussian entries (real and
/// imaginary parts), scaled to unit spectral norm. Deterministic per seed.
NilpotentContraction random_nilpotent_contraction(int n, std::uint64_t seed);

}  // namespace numrange
