#pragma once

#include <utility>
#include <vector>

#include "numrange/linalg.hpp"

namespace numrange {

/// K_n(α) = (α^{|r−s|})_{r,s=1..n}, 0 <= α < 1.
ComplexMatrix kms_matrix(double alpha, int n);

/// p_n(cos t) = (sin(n+1)t − 2α sin nt + α² sin(n−1)t)/sin t, 0 < t < π.
double p_n_eval(double alpha, int n, double t);

/// 2/sin t · (sin((n+1)t/2) − α sin((n−1)t/2)) · (cos((n+1)t/2) − α cos((n−1)t/2)).
double p_n_factored(double alpha, int n, double t);

/// The factor of p_n that vanishes at t_k: the cosine factor for odd k, the sine
/// factor for even k.
double parity_equation(double alpha, int n, int k, double t);

/// k-th root t_k of p_n(cos t) (1-based), located by bisection on the bracket
/// ((k−1)π/(n+1), kπ/(n+1)]. α = 0 returns the grid point kπ/(n+1) exactly.
/// Throws kBracketFailure if the parity equation does not change sign.
double solve_root(double alpha, int n, int k);

struct KmsRootSystem {
  double alpha;
  int n;
  std::vector<double> roots;                           // t_1 < … < t_n
  std::vector<std::pair<double, double>> brackets;     // (x_{k−1}, x_k)
};

KmsRootSystem root_system(double alpha, int n);

/// λ_k = P_α(e^{it_k}), strictly decreasing.
std::vector<double> kms_eigenvalues(double alpha, int n);

/// Spectrum of Re(S*(φ_{−α})), h(t_k) for k = 1..n, descending.
std::vector<double> real_part_spectrum(double alpha, int n);

}  // namespace numrange
