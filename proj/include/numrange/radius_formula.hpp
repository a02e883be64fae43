#pragma once

#include "numrange/linalg.hpp"

namespace numrange {

/// Numerical radius of S(φ) for φ = ((z − α)/(1 − ᾱz))^n:
///   (−(1 + |α|²) cos t_n + 2|α|) / (1 − 2|α| cos t_n + |α|²),
/// with t_n the largest root of the KMS system for |α|. Depends on |α| only.
double radius_single_zero(Complex alpha, int n);

/// Same value written through the Poisson kernel,
///   ((1 − a²)/(2a)) · (−P_a(e^{it_n}) + (1 + a²)/(1 − a²)),  a = |α| > 0.
/// α = 0 returns cos(π/(n+1)).
double radius_single_zero_poisson(Complex alpha, int n);

/// Explicit algebraic radius for n = 2, 3, 4; kUnsupportedDegree otherwise.
double radius_closed_form(Complex alpha, int n);

}  // namespace numrange
