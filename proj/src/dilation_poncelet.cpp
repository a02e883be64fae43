#include "numrange/dilation_poncelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrange/error.hpp"
#include "numrange/numerical_range.hpp"

namespace numrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CVector scaled_top_eigenvector(const ComplexMatrix& defect, const char* which) {
  const HermitianEig eig = hermitian_eig(defect);
  const std::size_t n = eig.values.size();
  const double top = eig.values.back();
  const double second = n >= 2 ? eig.values[n - 2] : 0.0;
  if (top <= 1e-8 || std::abs(second) >= 1e-8 || eig.values.front() < -1e-8) {
    throw Error(ErrorCode::kNotRankOne, std::string(which) + " is not a rank-one positive operator");
  }
  CVector v = eig.vectors.column(n - 1);
  const double length = norm2(v);
  Complex phase = 1.0;
  for (const Complex x : v) {
    if (std::abs(x) > 1e-12 * length) {
      phase = std::conj(x) / std::abs(x);
      break;
    }
  }
  const double scale = std::sqrt(top) / length;
  for (auto& x : v) x *= phase * scale;
  return v;
}

struct DilationData {
  DefectVectors defects;
  Complex c0;
};

DilationData dilation_data(const ComplexMatrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::kNonSquare, "dilation of a non-square matrix");
  DefectVectors dv = defect_vectors(t);
  const CVector t_adj_dstar = t.adjoint() * std::span<const Complex>(dv.d_star);
  const Complex c0 = -dot(dv.d, t_adj_dstar) / std::norm(norm2(dv.d));
  return {std::move(dv), c0};
}

ComplexMatrix assemble(const ComplexMatrix& t, const DilationData& data, double phase) {
  const std::size_t n = t.rows();
  const Complex rot = std::polar(1.0, phase);
  ComplexMatrix u(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) u(i, j) = t(i, j);
    u(i, n) = rot * data.defects.d_star[i];
    u(n, i) = std::conj(data.defects.d[i]);
  }
  u(n, n) = rot * data.c0;
  return u;
}

double det_residual(const ComplexMatrix& u, Complex lambda) {
  return std::abs(determinant(u - lambda * ComplexMatrix::identity(u.rows())));
}

double wrap_phase(double phase) {
  double out = std::fmod(phase, kTwoPi);
  if (out < 0.0) out += kTwoPi;
  return out;
}

double phase_by_schur_complement(const ComplexMatrix& t, const DilationData& data, Complex lambda) {
  const std::size_t n = t.rows();
  ComplexMatrix rhs(n, 1);
  rhs.set_column(0, data.defects.d_star);
  const ComplexMatrix x = solve(t - lambda * ComplexMatrix::identity(n), rhs);
  const Complex q = data.c0 - dot(data.defects.d, x.column(0));
  if (std::abs(q) == 0.0) throw Error(ErrorCode::kPhaseSearchFailure, "degenerate Schur complement");
  return wrap_phase(std::arg(lambda / q));
}

double phase_by_golden_section(const ComplexMatrix& t, const DilationData& data, Complex lambda) {
  constexpr int kSeeds = 64;
  const double h = kTwoPi / kSeeds;
  auto residual = [&](double phase) { return det_residual(assemble(t, data, phase), lambda); };
  int best = 0;
  double best_value = residual(0.0);
  for (int j = 1; j < kSeeds; ++j) {
    const double value = residual(h * j);
    if (value < best_value) {
      best_value = value;
      best = j;
    }
  }
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = h * (best - 1);
  double hi = h * (best + 1);
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = residual(x1);
  double f2 = residual(x2);
  for (int iter = 0; hi - lo > 1e-15 && iter < 200; ++iter) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = residual(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = residual(x1);
    }
  }
  return wrap_phase(0.5 * (lo + hi));
}

}  // namespace

DefectVectors defect_vectors(const ComplexMatrix& t) {
  if (!t.is_square()) throw Error(ErrorCode::kNonSquare, "defect of a non-square matrix");
  const ComplexMatrix id = ComplexMatrix::identity(t.rows());
  return {scaled_top_eigenvector(id - t.adjoint() * t, "I - T*T"),
          scaled_top_eigenvector(id - t * t.adjoint(), "I - TT*")};
}

ComplexMatrix unitary_dilation(const ComplexMatrix& t, double phase) {
  return assemble(t, dilation_data(t), phase);
}

std::vector<Complex> unitary_eigenvalues(const ComplexMatrix& u) {
  if (!u.is_square()) throw Error(ErrorCode::kNonSquare, "eigenvalues of a non-square matrix");
  const std::size_t m = u.rows();
  const ComplexMatrix id = ComplexMatrix::identity(m);
  if (max_abs(u.adjoint() * u - id) > 1e-8) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not unitary");
  }

  // The Cayley pole μ must keep away from σ(U); with 4m candidates one of them
  // is at angular distance >= π/(4m) from every eigenvalue.
  Complex mu = 1.0;
  double best_gap = -1.0;
  for (std::size_t j = 0; j < 4 * m; ++j) {
    const Complex candidate = std::polar(1.0, kTwoPi * (static_cast<double>(j) + 0.5) / (4.0 * m));
    const double gap = singular_values(candidate * id - u).back();
    if (gap > best_gap) {
      best_gap = gap;
      mu = candidate;
    }
  }

  const ComplexMatrix cayley =
      hermitian_part(Complex{0.0, 1.0} * solve(mu * id - u, mu * id + u));
  const HermitianEig eig = hermitian_eig(cayley);

  std::vector<Complex> values;
  values.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const CVector v = eig.vectors.column(k);
    const CVector uv = u * std::span<const Complex>(v);
    values.push_back(dot(v, uv) / std::norm(norm2(v)));
  }
  std::sort(values.begin(), values.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  return values;
}

PonceletPolygon poncelet_polygon(const ComplexMatrix& t, Complex vertex_lambda, PhaseMethod method) {
  if (std::abs(std::abs(vertex_lambda) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "polygon vertex must lie on the unit circle");
  }
  const DilationData data = dilation_data(t);
  const double phase = method == PhaseMethod::kSchurComplement
                           ? phase_by_schur_complement(t, data, vertex_lambda)
                           : phase_by_golden_section(t, data, vertex_lambda);
  const ComplexMatrix u = assemble(t, data, phase);
  const double residual = det_residual(u, vertex_lambda);
  if (!(residual < 1e-8)) {
    throw Error(ErrorCode::kPhaseSearchFailure,
                "no dilation phase places lambda in the spectrum (residual " +
                    std::to_string(residual) + ")");
  }
  return {unitary_eigenvalues(u), vertex_lambda, phase, residual};
}

CircumscriptionReport circumscription_check(const std::vector<Complex>& vertices,
                                            const ComplexMatrix& t, std::size_t grid_size) {
  if (vertices.size() < 3) throw Error(ErrorCode::kInvalidArgument, "polygon needs 3 vertices");
  struct Edge {
    Complex normal;
    double offset;
  };
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const Complex a = vertices[j];
    const Complex b = vertices[(j + 1) % vertices.size()];
    const Complex along = b - a;
    if (std::abs(along) == 0.0) throw Error(ErrorCode::kInvalidArgument, "repeated polygon vertex");
    // Outward normal of a counter-clockwise edge: rotate the direction by −90°.
    const Complex normal = Complex{0.0, -1.0} * along / std::abs(along);
    edges.push_back({normal, (std::conj(normal) * a).real()});
  }

  CircumscriptionReport report{-std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity(),
                               -std::numeric_limits<double>::infinity(), false};
  for (const auto& edge : edges) {
    const double gap = support_function(t, std::arg(edge.normal)) - edge.offset;
    report.max_violation = std::max(report.max_violation, gap);
    report.min_violation = std::min(report.min_violation, gap);
  }
  const BoundarySample sample = boundary(t, grid_size);
  for (const auto& p : sample.points) {
    for (const auto& edge : edges) {
      const double reach = p.x * edge.normal.real() + p.y * edge.normal.imag() - edge.offset;
      report.boundary_excess = std::max(report.boundary_excess, reach);
    }
  }
  constexpr double kTol = 1e-6;
  report.certified = std::abs(report.max_violation) <= kTol &&
                     std::abs(report.min_violation) <= kTol && report.boundary_excess <= kTol;
  return report;
}

CircumscriptionReport circumscription_check(const PonceletPolygon& polygon, const ComplexMatrix& t,
                                            std::size_t grid_size) {
  return circumscription_check(polygon.vertices, t, grid_size);
}

}  // namespace numrange
