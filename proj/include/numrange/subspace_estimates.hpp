#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "numrange/blaschke.hpp"
#include "numrange/linalg.hpp"

namespace numrange {

/// (k, l) entry is ⟨e_k^{(1)}, e_l^{(2)}⟩ in H², from Taylor coefficients
/// truncated to N terms. Throws kTruncationInsufficient when either basis has
/// a tail bound of 1e-10 or more.
ComplexMatrix cross_gram(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2, std::size_t n_terms);

/// Same, with N sized from both products.
ComplexMatrix cross_gram(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2);

struct AngleReport {
  double cos_angle;                     // top singular value of the cross-Gram, in [0, 1]
  double sin_angle;                     // (1 − cos²)^{1/2}
  std::optional<double> f_lower_bound;  // set when both inputs have a single zero
  std::size_t truncation;
};

/// Smallest principal angle between H(φ₁) and H(φ₂).
/// Throws kCommonZero when the products share a zero (within 1e-12).
AngleReport subspace_cos_angle(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2);

/// |(α₁ − α₂)/(1 − ᾱ₁α₂)|^{2 n₁ n₂}. Throws kNotSingleZero.
double F_bound(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2);

/// (δ + ρ(p−1)) / (1 − ρ(p−1))
double G_value(double rho, double delta, int p);

enum class RhoSource {
  kNumeric,  // max pairwise cos of the computed principal angle
  kFProxy,   // max pairwise (1 − F)^{1/2}
};

struct GEstimate {
  double rho;
  double delta;      // max radius of the factors
  double threshold;  // (1 − δ)/(2(p − 1))
  bool applicable;   // rho < threshold
  std::optional<double> bound;
};

/// Estimate for w(S(∏ φ_i)) from single-zero factors φ_i, p >= 2.
/// Throws kInvalidArgument (p < 2), kNotSingleZero, kDuplicateZero.
GEstimate G_estimate(const std::vector<BlaschkeProduct>& factors,
                     RhoSource source = RhoSource::kNumeric);

/// Two-factor bound written out directly:
///   (δ + (1 − F)^{1/2}) / (1 − (1 − F)^{1/2}).
/// Returned regardless of whether the hypothesis (1 − F)^{1/2} < (1 − δ)/2 holds.
double two_zero_bound(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2);

/// p×p matrix with δ on the diagonal and ρ elsewhere.
ComplexMatrix pairing_matrix(double delta, double rho, int p);

}  // namespace numrange
