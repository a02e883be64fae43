#pragma once

#include "numrange/blaschke.hpp"
#include "numrange/linalg.hpp"

namespace numrange {

/// Matrix of S*(φ) in the Takenaka basis of the model space H(φ).
///
/// S*(φ) is upper triangular with diagonal ᾱ_l; S(φ) = S*(φ)† is exposed via
/// shift(). Both have the same numerical radius.
struct ModelOperator {
  BlaschkeProduct phi;
  ComplexMatrix matrix;

  int degree() const noexcept { return phi.degree(); }
  /// S(φ), the compressed shift itself.
  ComplexMatrix shift() const { return matrix.adjoint(); }
};

/// a_lk = ᾱ_l (l = k), σ_l σ_{l+1} (k = l+1), σ_l σ_k ∏_{l<j<k}(−α_j) (k > l+1),
/// with σ_k = (1 − |α_k|²)^{1/2} and zeros flattened in factor order.
ModelOperator compress_shift_adjoint(const BlaschkeProduct& phi);

/// Upper-triangular Toeplitz matrix of S*(φ_α), φ_α = ((z − α)/(1 − ᾱz))^n:
/// diagonal ᾱ, k-th superdiagonal σ(−α)^{k−1}, σ = 1 − |α|².
ModelOperator single_zero_matrix(Complex alpha, int n);

/// (S_n* + ᾱI)(I + αS_n*)^{-1}, computed with a linear solve.
ComplexMatrix mobius_of_shift(Complex alpha, int n);

/// S_n, ones on the subdiagonal (S_n e_k = e_{k+1}).
ComplexMatrix jordan_shift(int n);

/// φ(T) = ∏_j (T − α_j I)(I − ᾱ_j T)^{-1}, each factor applied through a solve.
ComplexMatrix apply_blaschke(const BlaschkeProduct& phi, const ComplexMatrix& t);

/// Eigenvalues (ascending) of the defect I − T†T. For T in Υ_n exactly one is
/// non-zero.
std::vector<double> defect_spectrum(const ComplexMatrix& t);

// D_n(λ, θ) = det(Re(e^{−iθ} S*(φ_{−α})) − λI_n) for 0 <= α < 1. Note the zero
// sits at −α, so the diagonal of S*(φ_{−α}) is −α.

/// Three-term recurrence with D_0 = 1, D_1 = −α cos θ − λ.
double char_det_recurrence(double alpha, double lambda, double theta, int n);

/// D_n = Aρ₁ⁿ + Bρ₂ⁿ. Throws kLambdaOnBoundary when |λ| >= 1 − 1e-9.
double char_det_closed_form(double alpha, double lambda, double theta, int n);

/// Closed form inside (−1, 1), recurrence at or beyond the boundary.
double char_det(double alpha, double lambda, double theta, int n);

}  // namespace numrange
