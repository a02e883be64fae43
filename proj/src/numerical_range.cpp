#include "numrange/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "numrange/error.hpp"
#include "numrange/parallel.hpp"

namespace numrange {

namespace {

double objective(const ComplexMatrix& t, double theta, RadiusBackend backend) {
  const std::vector<double> values = hermitian_eig(rotated_real_part(t, theta)).values;
  if (backend == RadiusBackend::kSupportFunction) return values.back();
  return std::max(values.back(), -values.front());
}

constexpr std::size_t kRefinedPeaks = 4;

// Golden-section search over the two grid cells around a node.
RadiusMaximum refine(const ComplexMatrix& t, double center, double center_value, double h,
                     double refine_tol, RadiusBackend backend) {
  constexpr double kInvPhi = 0.6180339887498949;
  RadiusMaximum best{center_value, center};
  double lo = center - h;
  double hi = center + h;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = objective(t, x1, backend);
  double f2 = objective(t, x2, backend);
  for (int iter = 0; hi - lo > refine_tol && iter < 200; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = objective(t, x2, backend);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = objective(t, x1, backend);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double refined = objective(t, mid, backend);
  for (const auto& [theta, value] : {std::pair{x1, f1}, std::pair{x2, f2}, std::pair{mid, refined}}) {
    if (value > best.value) best = {value, theta};
  }
  return best;
}

}  // namespace

double support_function(const ComplexMatrix& t, double theta) {
  return hermitian_eig(rotated_real_part(t, theta)).values.back();
}

BoundarySample boundary(const ComplexMatrix& t, std::size_t grid_size) {
  if (grid_size < 8) throw Error(ErrorCode::kInvalidArgument, "boundary grid needs >= 8 points");
  const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_size);
  BoundarySample sample;
  sample.thetas.resize(grid_size);
  sample.support.resize(grid_size);
  parallel_for(grid_size, [&](std::size_t j) {
    sample.thetas[j] = h * static_cast<double>(j);
    sample.support[j] = support_function(t, sample.thetas[j]);
  });

  sample.lambda_prime.resize(grid_size);
  sample.points.resize(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double next = sample.support[(j + 1) % grid_size];
    const double prev = sample.support[(j + grid_size - 1) % grid_size];
    const double lambda = sample.support[j];
    const double slope = (next - prev) / (2.0 * h);
    const double c = std::cos(sample.thetas[j]);
    const double s = std::sin(sample.thetas[j]);
    sample.lambda_prime[j] = slope;
    sample.points[j] = {lambda * c - slope * s, lambda * s + slope * c};
  }
  return sample;
}

RadiusMaximum maximize_radius(const ComplexMatrix& t, std::size_t grid_size, double refine_tol,
                              RadiusBackend backend) {
  if (!t.is_square()) throw Error(ErrorCode::kNonSquare, "numerical radius of a non-square matrix");
  if (grid_size < 64) throw Error(ErrorCode::kInvalidArgument, "radius grid needs >= 64 points");
  const double h = 2.0 * std::numbers::pi / static_cast<double>(grid_size);

  std::vector<double> values(grid_size);
  parallel_for(grid_size, [&](std::size_t j) {
    values[j] = objective(t, h * static_cast<double>(j), backend);
  });
  RadiusMaximum result{-std::numeric_limits<double>::infinity(), 0.0};

  // Refine the few highest grid peaks; near-ties between separate peaks are
  // common for matrices with rotational symmetry.
  std::vector<std::size_t> peaks;
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double prev = values[(j + grid_size - 1) % grid_size];
    const double next = values[(j + 1) % grid_size];
    if (values[j] >= prev && values[j] >= next) peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(),
            [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  if (peaks.size() > kRefinedPeaks) peaks.resize(kRefinedPeaks);
  for (const std::size_t peak : peaks) {
    const RadiusMaximum local = refine(t, h * static_cast<double>(peak), values[peak], h, refine_tol,
                                       backend);
    if (local.value > result.value) result = local;
  }
  result.theta = std::remainder(result.theta, 2.0 * std::numbers::pi);
  if (result.theta < 0.0) result.theta += 2.0 * std::numbers::pi;
  return result;
}

double numerical_radius(const ComplexMatrix& t, std::size_t grid_size, double refine_tol) {
  return maximize_radius(t, grid_size, refine_tol, RadiusBackend::kHermitianNorm).value;
}

}  // namespace numrange
