#include "numrange/linalg.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "numrange/error.hpp"

namespace numrange {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kNonSquare, std::string(what) + ": " + std::to_string(m.rows()) +
                                           "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
  }
}

// Rotation angle for the real symmetric 2x2 problem [[a, b], [b, d]], b > 0.
// Returns (c, s) such that the Jacobi rotation annihilates the off-diagonal.
std::pair<double, double> jacobi_rotation(double a, double d, double b) {
  const double theta = (d - a) / (2.0 * b);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c};
}

struct LuFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors lu_decompose(const ComplexMatrix& a) {
  require_square(a, "LU");
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double threshold = 1e-12 * norm_inf(a);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(f.lu(i, k)) > best) {
        best = std::abs(f.lu(i, k));
        pivot = i;
      }
    }
    if (best <= threshold || best == 0.0) {
      f.singular = true;
      return f;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(pivot, j));
      std::swap(f.perm[k], f.perm[pivot]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
    }
  }
  return f;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be at least 1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be at least 1");
  }
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "entry count does not match rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be at least 1");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CVector ComplexMatrix::column(std::size_t c) const {
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_) throw Error(ErrorCode::kDimensionMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::kDimensionMismatch, "product shapes");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

CVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "matvec shapes");
  CVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double norm_inf(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

double norm_fro(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& x : m.entries()) acc += std::norm(x);
  return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const auto& x : m.entries()) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace");
  Complex acc{};
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  require_square(m, "hermitian_part");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    out(i, i) = out(i, i).real();
  }
  return out;
}

ComplexMatrix rotated_real_part(const ComplexMatrix& t, double theta) {
  return hermitian_part(std::polar(1.0, -theta) * t);
}

ComplexMatrix power(const ComplexMatrix& t, unsigned k) {
  require_square(t, "power");
  ComplexMatrix out = ComplexMatrix::identity(t.rows());
  for (unsigned i = 0; i < k; ++i) out = out * t;
  return out;
}

double norm2(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

Complex dot(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "dot lengths");
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  require_square(h, "hermitian_eig");
  const std::size_t n = h.rows();
  const double scale_inf = norm_inf(h);
  if (max_abs_diff(h, h.adjoint()) * static_cast<double>(n) > 1e-12 * scale_inf) {
    // ‖H − H†‖∞ is bounded by n·max|entry|; only pay for the exact norm when close.
    if (norm_inf(h - h.adjoint()) > 1e-12 * scale_inf) {
      throw Error(ErrorCode::kNonHermitian, "‖H − H†‖∞ exceeds 1e-12·‖H‖∞");
    }
  }

  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = norm_fro(a);

  if (scale > 0.0) {
    double previous_off = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < 100; ++sweep) {
      double off = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (p != q) off += std::norm(a(p, q));
      off = std::sqrt(off);
      if (off <= 1e-14 * scale || off >= previous_off) break;
      previous_off = off;

      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex apq = a(p, q);
          const double b = std::abs(apq);
          if (b <= 1e-300 || b < 1e-18 * scale) {
            a(p, q) = a(q, p) = 0.0;
            continue;
          }
          const auto [c, s] = jacobi_rotation(a(p, p).real(), a(q, q).real(), b);
          const Complex phase_conj = std::conj(apq / b);
          const Complex gpp = c;
          const Complex gpq = s;
          const Complex gqp = -s * phase_conj;
          const Complex gqq = c * phase_conj;

          for (std::size_t k = 0; k < n; ++k) {
            const Complex akp = a(k, p);
            const Complex akq = a(k, q);
            a(k, p) = akp * gpp + akq * gqp;
            a(k, q) = akp * gpq + akq * gqq;
          }
          for (std::size_t k = 0; k < n; ++k) {
            const Complex apk = a(p, k);
            const Complex aqk = a(q, k);
            a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
            a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
          }
          a(p, q) = a(q, p) = 0.0;
          a(p, p) = a(p, p).real();
          a(q, q) = a(q, q).real();
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * gpp + vkq * gqp;
            v(k, q) = vkp * gpq + vkq * gqq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEig out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "solve right-hand side");
  const LuFactors f = lu_decompose(a);
  if (f.singular) throw Error(ErrorCode::kSingular, "pivot below 1e-12·‖A‖∞");
  const std::size_t n = a.rows();
  ComplexMatrix x(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    CVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc = b(f.perm[i], col);
      for (std::size_t j = 0; j < i; ++j) acc -= f.lu(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      Complex acc = y[i];
      for (std::size_t j = i + 1; j < n; ++j) acc -= f.lu(i, j) * x(j, col);
      x(i, col) = acc / f.lu(i, i);
    }
  }
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  return solve(a, ComplexMatrix::identity(a.rows()));
}

Complex determinant(const ComplexMatrix& a) {
  const LuFactors f = lu_decompose(a);
  if (f.singular) {
    // Below the pivot threshold the product of pivots is still meaningful as a
    // residual; recompute without early exit.
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
      if (lu(pivot, k) == Complex{}) return 0.0;
      if (pivot != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
        det = -det;
      }
      det *= lu(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex l = lu(i, k) / lu(k, k);
        for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= l * lu(k, j);
      }
    }
    return det;
  }
  Complex det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  const ComplexMatrix w0 = a.rows() >= a.cols() ? a : a.adjoint();
  const std::size_t m = w0.rows();
  const std::size_t k = w0.cols();
  std::vector<CVector> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = w0.column(j);

  constexpr double kTol = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < m; ++r) {
          alpha += std::norm(cols[i][r]);
          beta += std::norm(cols[j][r]);
          gamma += std::conj(cols[i][r]) * cols[j][r];
        }
        const double b = std::abs(gamma);
        if (b == 0.0 || b <= kTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const auto [c, s] = jacobi_rotation(alpha, beta, b);
        const Complex phase_conj = std::conj(gamma / b);
        for (std::size_t r = 0; r < m; ++r) {
          const Complex ui = cols[i][r];
          const Complex uj = cols[j][r];
          cols[i][r] = c * ui - s * phase_conj * uj;
          cols[j][r] = s * ui + c * phase_conj * uj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = norm2(cols[j]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_norm(const ComplexMatrix& a) { return singular_values(a).front(); }

}  // namespace numrange
