#include "numrange/subspace_estimates.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "numrange/error.hpp"
#include "numrange/parallel.hpp"
#include "numrange/radius_formula.hpp"

namespace numrange {

namespace {

constexpr double kGramTolerance = 1e-10;

std::vector<CVector> basis_coefficients(const BlaschkeProduct& phi, std::size_t n_terms) {
  std::vector<CVector> basis;
  for (int k = 1; k <= phi.degree(); ++k) {
    TaylorSeries series = takenaka_taylor(phi, k, n_terms);
    if (!(series.truncation_error_bound < kGramTolerance)) {
      throw Error(ErrorCode::kTruncationInsufficient,
                  "tail bound " + std::to_string(series.truncation_error_bound) + " with " +
                      std::to_string(n_terms) + " terms");
    }
    basis.push_back(std::move(series.coeffs));
  }
  return basis;
}

std::size_t auto_truncation(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2) {
  return std::max(default_truncation(phi1), default_truncation(phi2));
}

BlaschkeFactor single_factor(const BlaschkeProduct& phi) {
  if (!phi.is_single_zero()) {
    throw Error(ErrorCode::kNotSingleZero, "expected a product with one distinct zero");
  }
  return {phi.factors().front().zero, phi.degree()};
}

}  // namespace

ComplexMatrix cross_gram(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2, std::size_t n_terms) {
  const auto b1 = basis_coefficients(phi1, n_terms);
  const auto b2 = basis_coefficients(phi2, n_terms);
  ComplexMatrix gram(b1.size(), b2.size());
  for (std::size_t k = 0; k < b1.size(); ++k) {
    for (std::size_t l = 0; l < b2.size(); ++l) gram(k, l) = dot(b2[l], b1[k]);
  }
  return gram;
}

ComplexMatrix cross_gram(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2) {
  return cross_gram(phi1, phi2, auto_truncation(phi1, phi2));
}

AngleReport subspace_cos_angle(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2) {
  for (const Complex a : phi1.zeros()) {
    for (const Complex b : phi2.zeros()) {
      if (std::abs(a - b) <= 1e-12) throw Error(ErrorCode::kCommonZero, "products share a zero");
    }
  }
  AngleReport report{};
  report.truncation = auto_truncation(phi1, phi2);
  const double top = singular_values(cross_gram(phi1, phi2, report.truncation)).front();
  report.cos_angle = std::clamp(top, 0.0, 1.0);
  report.sin_angle = std::sqrt(1.0 - report.cos_angle * report.cos_angle);
  if (phi1.is_single_zero() && phi2.is_single_zero()) report.f_lower_bound = F_bound(phi1, phi2);
  return report;
}

double F_bound(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2) {
  const BlaschkeFactor f1 = single_factor(phi1);
  const BlaschkeFactor f2 = single_factor(phi2);
  const double distance = std::abs((f1.zero - f2.zero) / (1.0 - std::conj(f1.zero) * f2.zero));
  return std::pow(distance, 2.0 * f1.multiplicity * f2.multiplicity);
}

double G_value(double rho, double delta, int p) {
  const double spread = rho * (p - 1);
  return (delta + spread) / (1.0 - spread);
}

GEstimate G_estimate(const std::vector<BlaschkeProduct>& factors, RhoSource source) {
  const int p = static_cast<int>(factors.size());
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two factors");
  std::vector<Complex> zeros;
  for (const auto& phi : factors) zeros.push_back(single_factor(phi).zero);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::abs(zeros[i] - zeros[j]) <= 1e-12) {
        throw Error(ErrorCode::kDuplicateZero, "factors " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " share a zero");
      }
    }
  }

  GEstimate estimate{};
  for (const auto& phi : factors) {
    const BlaschkeFactor f = single_factor(phi);
    estimate.delta = std::max(estimate.delta, radius_single_zero(f.zero, f.multiplicity));
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> cosines(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto& a = factors[pairs[k].first];
    const auto& b = factors[pairs[k].second];
    cosines[k] = source == RhoSource::kNumeric ? subspace_cos_angle(a, b).cos_angle
                                               : std::sqrt(1.0 - F_bound(a, b));
  });
  estimate.rho = *std::max_element(cosines.begin(), cosines.end());
  estimate.threshold = (1.0 - estimate.delta) / (2.0 * (p - 1));
  estimate.applicable = estimate.rho < estimate.threshold;
  if (estimate.applicable) estimate.bound = G_value(estimate.rho, estimate.delta, p);
  return estimate;
}

double two_zero_bound(const BlaschkeProduct& phi1, const BlaschkeProduct& phi2) {
  const BlaschkeFactor f1 = single_factor(phi1);
  const BlaschkeFactor f2 = single_factor(phi2);
  const double delta = std::max(radius_single_zero(f1.zero, f1.multiplicity),
                                radius_single_zero(f2.zero, f2.multiplicity));
  const double proxy = std::sqrt(1.0 - F_bound(phi1, phi2));
  return (delta + proxy) / (1.0 - proxy);
}

ComplexMatrix pairing_matrix(double delta, double rho, int p) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "pairing matrix needs p >= 1");
  const auto size = static_cast<std::size_t>(p);
  ComplexMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) a(i, j) = i == j ? delta : rho;
  }
  return a;
}

}  // namespace numrange
