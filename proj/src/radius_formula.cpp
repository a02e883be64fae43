#include "numrange/radius_formula.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "numrange/blaschke.hpp"
#include "numrange/error.hpp"
#include "numrange/kms.hpp"

namespace numrange {

namespace {

double checked_modulus(Complex alpha, int n) {
  if (!(std::abs(alpha) < 1.0)) throw Error(ErrorCode::kAlphaOutOfRange, "|alpha| must be < 1");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  return std::abs(alpha);
}

}  // namespace

double radius_single_zero(Complex alpha, int n) {
  const double a = checked_modulus(alpha, n);
  if (a == 0.0) return std::cos(std::numbers::pi / (n + 1));
  const double c = std::cos(solve_root(a, n, n));
  return (-(1.0 + a * a) * c + 2.0 * a) / (1.0 - 2.0 * a * c + a * a);
}

double radius_single_zero_poisson(Complex alpha, int n) {
  const double a = checked_modulus(alpha, n);
  if (a == 0.0) return std::cos(std::numbers::pi / (n + 1));
  const double t = solve_root(a, n, n);
  const double ratio = (1.0 - a * a) / (2.0 * a);
  return ratio * (-poisson_kernel(a, t) + (1.0 + a * a) / (1.0 - a * a));
}

double radius_closed_form(Complex alpha, int n) {
  const double a = checked_modulus(alpha, n);
  const double a2 = a * a;
  const double a3 = a2 * a;
  switch (n) {
    case 2:
      return (1.0 + 2.0 * a - a2) / 2.0;
    case 3: {
      const double root = std::sqrt(a2 + 8.0);
      return (7.0 * a - a3 + (1.0 + a2) * root) / (4.0 + 2.0 * a2 + 2.0 * a * root);
    }
    case 4: {
      const double root = std::sqrt(a2 + 2.0 * a + 5.0);
      return (-a3 + a2 + 7.0 * a + 1.0 + (1.0 + a2) * root) /
             (2.0 * a2 + 2.0 * a + 4.0 + 2.0 * a * root);
    }
    default:
      throw Error(ErrorCode::kUnsupportedDegree,
                  "closed form only for n in {2,3,4}, got " + std::to_string(n));
  }
}

}  // namespace numrange
