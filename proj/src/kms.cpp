#include "numrange/kms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "numrange/blaschke.hpp"
#include "numrange/error.hpp"

namespace numrange {

namespace {

void require_real_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "expected 0 <= alpha < 1, got " + std::to_string(alpha));
  }
}

void require_degree(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
}

void require_open_interval(double t) {
  if (!(t > 0.0 && t < std::numbers::pi)) {
    throw Error(ErrorCode::kTOutOfRange, "t must lie in (0, pi)");
  }
}

double grid_point(int k, int n) { return k * std::numbers::pi / (n + 1); }

}  // namespace

ComplexMatrix kms_matrix(double alpha, int n) {
  require_real_alpha(alpha);
  require_degree(n);
  const auto size = static_cast<std::size_t>(n);
  ComplexMatrix k(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t s = 0; s < size; ++s)
      k(r, s) = std::pow(alpha, static_cast<double>(r > s ? r - s : s - r));
  return k;
}

double p_n_eval(double alpha, int n, double t) {
  require_open_interval(t);
  return (std::sin((n + 1) * t) - 2.0 * alpha * std::sin(n * t) +
          alpha * alpha * std::sin((n - 1) * t)) /
         std::sin(t);
}

double p_n_factored(double alpha, int n, double t) {
  require_open_interval(t);
  const double half_hi = 0.5 * (n + 1) * t;
  const double half_lo = 0.5 * (n - 1) * t;
  return 2.0 / std::sin(t) * (std::sin(half_hi) - alpha * std::sin(half_lo)) *
         (std::cos(half_hi) - alpha * std::cos(half_lo));
}

double parity_equation(double alpha, int n, int k, double t) {
  const double half_hi = 0.5 * (n + 1) * t;
  const double half_lo = 0.5 * (n - 1) * t;
  if (k % 2 == 1) return std::cos(half_hi) - alpha * std::cos(half_lo);
  return std::sin(half_hi) - alpha * std::sin(half_lo);
}

double solve_root(double alpha, int n, int k) {
  require_real_alpha(alpha);
  require_degree(n);
  if (k < 1 || k > n) throw Error(ErrorCode::kIndexOutOfRange, "root index outside 1..n");
  if (alpha == 0.0) return grid_point(k, n);

  double lo = grid_point(k - 1, n);
  double hi = grid_point(k, n);
  const double f_lo = parity_equation(alpha, n, k, lo);
  const double f_hi = parity_equation(alpha, n, k, hi);
  if (f_hi == 0.0) return hi;
  if (f_lo == 0.0 || (f_lo > 0.0) == (f_hi > 0.0)) {
    throw Error(ErrorCode::kBracketFailure, "parity equation has no sign change on bracket k=" +
                                                std::to_string(k) + ", n=" + std::to_string(n));
  }
  const bool lo_positive = f_lo > 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = parity_equation(alpha, n, k, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

KmsRootSystem root_system(double alpha, int n) {
  require_real_alpha(alpha);
  require_degree(n);
  KmsRootSystem system{alpha, n, {}, {}};
  for (int k = 1; k <= n; ++k) {
    system.roots.push_back(solve_root(alpha, n, k));
    system.brackets.emplace_back(grid_point(k - 1, n), grid_point(k, n));
  }
  return system;
}

std::vector<double> kms_eigenvalues(double alpha, int n) {
  const KmsRootSystem system = root_system(alpha, n);
  std::vector<double> values;
  values.reserve(system.roots.size());
  for (double t : system.roots) values.push_back(poisson_kernel(alpha, t));
  return values;
}

std::vector<double> real_part_spectrum(double alpha, int n) {
  const KmsRootSystem system = root_system(alpha, n);
  std::vector<double> values;
  values.reserve(system.roots.size());
  for (double t : system.roots) values.push_back(symbol_h(alpha, t));
  return values;
}

}  // namespace numrange
