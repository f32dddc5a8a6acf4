#pragma once

namespace zipfkit::stats {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified
/// Lentz) with the usual symmetry swap. Relative accuracy ~1e-13.
double regularized_incomplete_beta(double a, double b, double x);

/// P(F > f) for an F(d1, d2) variable.
double f_distribution_sf(double f, double d1, double d2);

/// P(Z > z) for a standard normal variable.
double normal_sf(double z);

}  // namespace zipfkit::stats
