#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace numrange {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense row-major complex matrix. Dimensions are always at least 1x1.
class ComplexMatrix {
 public:
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
CVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Max absolute row sum.
double norm_inf(const ComplexMatrix& m);
double norm_fro(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& m);

/// ½(M + M†).
ComplexMatrix hermitian_part(const ComplexMatrix& m);
/// Re(e^{-iθ}T) = ½(e^{-iθ}T + e^{iθ}T†).
ComplexMatrix rotated_real_part(const ComplexMatrix& t, double theta);
/// T^k for k >= 0.
ComplexMatrix power(const ComplexMatrix& t, unsigned k);

double norm2(std::span<const Complex> v);
Complex dot(std::span<const Complex> u, std::span<const Complex> v);  // u† v

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws kNonSquare, or kNonHermitian when ‖H − H†‖∞ > 1e-12·‖H‖∞.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Solves A·X = B by LU with partial pivoting. Throws kSingular when a pivot
/// falls below 1e-12·‖A‖∞.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);
Complex determinant(const ComplexMatrix& a);

/// Singular values in descending order, min(rows, cols) of them, by one-sided
/// (Hestenes) Jacobi orthogonalisation.
std::vector<double> singular_values(const ComplexMatrix& a);
/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

}  // namespace numrange
