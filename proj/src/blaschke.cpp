#include "numrange/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrange/error.hpp"

namespace numrange {

namespace {

constexpr std::size_t kMaxTerms = 100000;

void require_real_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "expected 0 <= alpha < 1, got " + std::to_string(alpha));
  }
}

// Cauchy bound M = max_{|z|=r} |e_k(z)| with r = ρ^{-1/2}.
double cauchy_bound(const std::vector<Complex>& zeros, int k, double rho) {
  const double r = 1.0 / std::sqrt(rho);
  const double ak = std::abs(zeros[k - 1]);
  double m = std::sqrt(1.0 - ak * ak) / (1.0 - ak * r);
  for (int j = 0; j + 1 < k; ++j) {
    const double aj = std::abs(zeros[j]);
    m *= (r + aj) / (1.0 - aj * r);
  }
  return m;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<BlaschkeFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::kInvalidArgument, "Blaschke product needs a factor");
  for (const auto& f : factors_) {
    if (f.multiplicity < 1) throw Error(ErrorCode::kInvalidArgument, "multiplicity must be >= 1");
    if (!(std::abs(f.zero) < 1.0)) {
      throw Error(ErrorCode::kAlphaOutOfRange, "zero outside the open unit disc");
    }
    degree_ += f.multiplicity;
  }
}

BlaschkeProduct BlaschkeProduct::single_zero(Complex alpha, int n) {
  return BlaschkeProduct({{alpha, n}});
}

BlaschkeProduct BlaschkeProduct::monomial(int n) { return single_zero(0.0, n); }

bool BlaschkeProduct::is_single_zero() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const BlaschkeFactor& f) { return f.zero == factors_.front().zero; });
}

std::vector<Complex> BlaschkeProduct::zeros() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& f : factors_) out.insert(out.end(), static_cast<std::size_t>(f.multiplicity), f.zero);
  return out;
}

double BlaschkeProduct::max_modulus() const noexcept {
  double best = 0.0;
  for (const auto& f : factors_) best = std::max(best, std::abs(f.zero));
  return best;
}

BlaschkeProduct product(const std::vector<BlaschkeProduct>& parts) {
  std::vector<BlaschkeFactor> all;
  for (const auto& p : parts) all.insert(all.end(), p.factors().begin(), p.factors().end());
  return BlaschkeProduct(std::move(all));
}

Complex evaluate(const BlaschkeProduct& phi, Complex z) {
  Complex value = 1.0;
  for (const auto& f : phi.factors()) {
    const Complex factor = (z - f.zero) / (1.0 - std::conj(f.zero) * z);
    for (int i = 0; i < f.multiplicity; ++i) value *= factor;
  }
  return value;
}

double poisson_kernel(double alpha, double t) {
  require_real_alpha(alpha);
  return (1.0 - alpha * alpha) / std::norm(1.0 - alpha * std::polar(1.0, t));
}

double symbol_h(double alpha, double t) {
  require_real_alpha(alpha);
  const double c = std::cos(t);
  return ((1.0 + alpha * alpha) * c - 2.0 * alpha) / (1.0 - 2.0 * alpha * c + alpha * alpha);
}

TaylorSeries takenaka_taylor(const BlaschkeProduct& phi, int k, std::size_t n_terms) {
  if (k < 1 || k > phi.degree()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(k) + " outside 1.." + std::to_string(phi.degree()));
  }
  if (n_terms < 1) throw Error(ErrorCode::kInvalidArgument, "truncation order must be >= 1");
  const std::vector<Complex> zeros = phi.zeros();

  // Partial product ∏_{j<k} (z − α_j)/(1 − ᾱ_j z): g(1 − ᾱz) = (z − α)f gives
  // g_m = ᾱ g_{m−1} + f_{m−1} − α f_m.
  CVector series(n_terms);
  series[0] = 1.0;
  for (int j = 0; j + 1 < k; ++j) {
    const Complex a = zeros[j];
    const Complex a_conj = std::conj(a);
    Complex prev_g{};
    Complex prev_f{};
    for (std::size_t m = 0; m < n_terms; ++m) {
      const Complex f = series[m];
      const Complex g = a_conj * prev_g + prev_f - a * f;
      series[m] = g;
      prev_g = g;
      prev_f = f;
    }
  }
  const Complex ak = zeros[k - 1];
  const double sigma = std::sqrt(1.0 - std::norm(ak));
  Complex prev{};
  for (std::size_t m = 0; m < n_terms; ++m) {
    prev = std::conj(ak) * prev + series[m];
    series[m] = sigma * prev;
  }

  const double rho = phi.max_modulus();
  double bound;
  if (rho == 0.0) {
    bound = n_terms >= static_cast<std::size_t>(k) ? 0.0 : 1.0;
  } else {
    const double m = cauchy_bound(zeros, k, rho);
    bound = m * m * std::pow(rho, static_cast<double>(n_terms)) / (1.0 - rho);
  }
  return {std::move(series), bound};
}

std::size_t default_truncation(const BlaschkeProduct& phi, double tolerance) {
  const double rho = phi.max_modulus();
  const auto degree = static_cast<std::size_t>(phi.degree());
  if (rho == 0.0) return degree;
  if (rho > 0.999) {
    throw Error(ErrorCode::kTruncationInsufficient, "max |alpha| above 0.999");
  }
  const double log_rho = std::log(rho);
  double needed = std::log(1e-14) / log_rho;
  const std::vector<Complex> zeros = phi.zeros();
  for (int k = 1; k <= phi.degree(); ++k) {
    const double m = cauchy_bound(zeros, k, rho);
    needed = std::max(needed, std::log(tolerance * (1.0 - rho) / (m * m)) / log_rho);
  }
  if (!(needed < static_cast<double>(kMaxTerms))) {
    throw Error(ErrorCode::kTruncationInsufficient, "more than 1e5 Taylor terms required");
  }
  return std::max(degree, static_cast<std::size_t>(std::ceil(needed)) + 1);
}

}  // namespace numrange
