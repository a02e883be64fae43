#pragma once

// Reference computations for the tests. Nothing here calls the library's
// eigensolver or LU code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "numrange/linalg.hpp"

namespace oracle {

using numrange::Complex;
using numrange::ComplexMatrix;

// Classic two-sided Jacobi on a dense real symmetric matrix.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end());
  return values;
}

// Hermitian H = A + iB via the real embedding [[A, −B], [B, A]], whose
// spectrum is that of H with every value doubled.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<std::vector<double>> big(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      big[i][j] = z.real();
      big[i + n][j + n] = z.real();
      big[i][j + n] = -z.imag();
      big[i + n][j] = z.imag();
    }
  }
  const auto doubled = symmetric_eigenvalues(big);
  std::vector<double> values;
  for (std::size_t k = 0; k < n; ++k) values.push_back(0.5 * (doubled[2 * k] + doubled[2 * k + 1]));
  return values;
}

inline double rotated_norm(const ComplexMatrix& t, double theta) {
  const std::size_t n = t.rows();
  ComplexMatrix h(n, n);
  const Complex rot = std::polar(1.0, -theta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (rot * t(i, j) + std::conj(rot * t(j, i)));
  const auto v = hermitian_eigenvalues(h);
  return std::max(v.back(), -v.front());
}

// Dense θ sampling followed by ternary refinement around the best sample.
inline double numerical_radius(const ComplexMatrix& t, int samples = 720) {
  const double h = 2.0 * std::numbers::pi / samples;
  int best = 0;
  double best_value = -1.0;
  for (int j = 0; j < samples; ++j) {
    const double v = rotated_norm(t, h * j);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  double lo = h * (best - 1);
  double hi = h * (best + 1);
  for (int iter = 0; iter < 80; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (rotated_norm(t, m1) < rotated_norm(t, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return std::max(best_value, rotated_norm(t, 0.5 * (lo + hi)));
}

// Characteristic polynomial det(zI − A) by Faddeev–LeVerrier; coefficient k
// multiplies z^k.
inline std::vector<Complex> characteristic_polynomial(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const ComplexMatrix am = a * m;
    Complex tr{};
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

inline Complex polyval(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = {normal(rng), normal(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix m = random_matrix(n, n, rng);
  return 0.5 * (m + m.adjoint());
}

inline Complex random_disc_point(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::polar(max_modulus * unit(rng), 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace oracle
