#pragma once

#include <cstddef>
#include <vector>

#include "numrange/linalg.hpp"

namespace numrange {

/// λ(θ): largest eigenvalue of Re(e^{−iθ}T), the signed distance from the origin
/// to the supporting line of W(T) with outward normal e^{iθ}.
double support_function(const ComplexMatrix& t, double theta);

struct Point2 {
  double x;
  double y;
};

/// Envelope parametrisation of ∂W(T) on a uniform θ-grid:
///   x = λ cos θ − λ' sin θ,   y = λ sin θ + λ' cos θ,
/// with λ' from periodic central differences. Corners and segments of ∂W(T)
/// (normal matrices, for instance) are not regular arcs; points are still
/// emitted but only approximate the boundary there.
struct BoundarySample {
  std::vector<double> thetas;
  std::vector<double> support;
  std::vector<Point2> points;
  std::vector<double> lambda_prime;
};

BoundarySample boundary(const ComplexMatrix& t, std::size_t grid_size);

enum class RadiusBackend {
  kHermitianNorm,    // sup_θ ‖Re(e^{−iθ}T)‖, valid for every T
  kSupportFunction,  // sup_θ λ(θ), valid when ∂W(T) is a regular arc
};

struct RadiusMaximum {
  double value;
  double theta;
};

/// Coarse grid maximum followed by golden-section refinement on the grid cells
/// adjacent to the best node, to `refine_tol` in θ. The result is never below
/// the grid maximum.
RadiusMaximum maximize_radius(const ComplexMatrix& t, std::size_t grid_size, double refine_tol,
                              RadiusBackend backend);

/// ω₂(T) through the Hermitian-norm backend.
double numerical_radius(const ComplexMatrix& t, std::size_t grid_size = 256,
                        double refine_tol = 1e-12);

}  // namespace numrange
