#pragma once

#include <cstddef>
#include <vector>

#include "numrange/linalg.hpp"

namespace numrange {

struct BlaschkeFactor {
  Complex zero;
  int multiplicity = 1;
};

/// Finite Blaschke product φ(z) = ∏ ((z − α_j)/(1 − ᾱ_j z))^{m_j}.
///
/// Factor order is preserved as given: the Takenaka basis (and therefore the
/// matrix of the compressed shift) depends on it, while the model space does
/// not.
class BlaschkeProduct {
 public:
  /// Throws kAlphaOutOfRange when some |α_j| >= 1, kInvalidArgument for an
  /// empty list or a non-positive multiplicity.
  explicit BlaschkeProduct(std::vector<BlaschkeFactor> factors);

  /// ((z − α)/(1 − ᾱz))^n
  static BlaschkeProduct single_zero(Complex alpha, int n);
  /// zⁿ
  static BlaschkeProduct monomial(int n);

  const std::vector<BlaschkeFactor>& factors() const noexcept { return factors_; }
  int degree() const noexcept { return degree_; }
  bool is_single_zero() const noexcept;
  /// Zeros expanded by multiplicity, in factor order.
  std::vector<Complex> zeros() const;
  /// max_j |α_j|
  double max_modulus() const noexcept;

 private:
  std::vector<BlaschkeFactor> factors_;
  int degree_ = 0;
};

/// Concatenation of the factor lists.
BlaschkeProduct product(const std::vector<BlaschkeProduct>& parts);

Complex evaluate(const BlaschkeProduct& phi, Complex z);

/// P_α(e^{it}) = (1 − α²)/|1 − αe^{it}|², 0 <= α < 1.
double poisson_kernel(double alpha, double t);

/// h(t) = ((1 + α²)cos t − 2α)/(1 − 2α cos t + α²), the symbol of
/// Re(S*(φ_{−α})).
double symbol_h(double alpha, double t);

struct TaylorSeries {
  CVector coeffs;                  // index = power of z
  double truncation_error_bound;   // bound on Σ_{m >= N} |c_m|²
};

/// Taylor coefficients of the k-th Takenaka basis function (1-based k),
///   e_k(z) = (1 − |α_k|²)^{1/2} / (1 − ᾱ_k z) · ∏_{j<k} (z − α_j)/(1 − ᾱ_j z),
/// truncated to powers 0..N−1.
///
/// The tail bound is a Cauchy estimate on the circle |z| = ρ^{-1/2}, ρ = max|α_j|,
/// which gives Σ_{m>=N}|c_m|² <= M² ρ^N / (1 − ρ).
TaylorSeries takenaka_taylor(const BlaschkeProduct& phi, int k, std::size_t n_terms);

/// Smallest N for which every basis function's tail bound is below `tolerance`
/// and ρ^N < 1e-14. Throws kTruncationInsufficient if ρ > 0.999 or N > 1e5.
std::size_t default_truncation(const BlaschkeProduct& phi, double tolerance = 1e-14);

}  // namespace numrange
