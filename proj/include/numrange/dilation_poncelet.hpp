#pragma once

#include <cstddef>
#include <vector>

#include "numrange/linalg.hpp"

namespace numrange {

/// Rank-one defect factors: d d† = I − T†T and d* d*† = I − TT†.
struct DefectVectors {
  CVector d;
  CVector d_star;
};

/// Throws kNotRankOne unless both defects have a single eigenvalue above 1e-8.
/// Phases are fixed so the first non-negligible component is real positive.
DefectVectors defect_vectors(const ComplexMatrix& t);

/// One-parameter family of (n+1)x(n+1) unitary dilations
///   U(γ) = [[T, e^{iγ} d*], [d†, e^{iγ} c₀]],  c₀ = −d†T†d* / ‖d‖²,
/// whose top-left n×n block is T.
ComplexMatrix unitary_dilation(const ComplexMatrix& t, double phase);

/// Eigenvalues of a unitary matrix, sorted by argument in (−π, π]. Uses the
/// Cayley transform i(μ + U)(μ − U)^{-1}, which is Hermitian, with μ on the
/// unit circle chosen away from the spectrum; each eigenvalue is then refined as
/// the Rayleigh quotient of U.
std::vector<Complex> unitary_eigenvalues(const ComplexMatrix& u);

enum class PhaseMethod {
  kSchurComplement,  // e^{iγ} = λ / (c₀ − d†(T − λ)^{-1}d*)
  kGoldenSection,    // minimise |det(U(γ) − λI)| over γ, seeded by 64 samples
};

struct PonceletPolygon {
  std::vector<Complex> vertices;  // n+1 points, sorted by argument
  Complex source_vertex;          // the prescribed λ
  double phase;                   // dilation parameter γ in [0, 2π)
  double residual;                // |det(U(γ) − λI)|
};

/// The (n+1)-gon inscribed in the unit circle, circumscribed about ∂W(T) and
/// having λ as a vertex: the spectrum of the dilation U(γ) with λ ∈ σ(U(γ)).
/// Throws kPhaseSearchFailure when no phase drives the residual below 1e-8.
PonceletPolygon poncelet_polygon(const ComplexMatrix& t, Complex vertex_lambda,
                                 PhaseMethod method = PhaseMethod::kSchurComplement);

struct CircumscriptionReport {
  /// max over edges of λ(ψ_e) − offset_e, ψ_e the outward normal angle.
  double max_violation;
  /// min over the same quantity; near zero when every edge is tangent.
  double min_violation;
  /// max over boundary points p and edges of ⟨p, e^{iψ_e}⟩ − offset_e.
  double boundary_excess;
  /// All three within ±1e-6 (boundary_excess only from above).
  bool certified;
};

/// Edge-by-edge tangency of a polygon (vertices sorted by argument, traversed
/// counter-clockwise) against W(T), using the support function directly and a
/// boundary sample of `grid_size` points.
CircumscriptionReport circumscription_check(const std::vector<Complex>& vertices,
                                            const ComplexMatrix& t, std::size_t grid_size);
CircumscriptionReport circumscription_check(const PonceletPolygon& polygon, const ComplexMatrix& t,
                                            std::size_t grid_size);

}  // namespace numrange
