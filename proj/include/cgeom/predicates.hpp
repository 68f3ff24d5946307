#pragma once

namespace cgeom::predicates {

/// Sign of (b - a) x (c - a): +1 when a, b, c turn counterclockwise.
/// Exact for all finite double inputs.
int orient2d(const double* a, const double* b, const double* c);

/// Sign of ((b - a) x (c - a)) . (d - a): +1 when d lies on the side the
/// right-handed normal of triangle abc points to. Exact for finite doubles.
int orient3d(const double* a, const double* b, const double* c, const double* d);

/// Floating-point value of the orient3d determinant (not exact; for ranking).
double orient3d_approx(const double* a, const double* b, const double* c, const double* d);

}  // namespace cgeom::predicates
