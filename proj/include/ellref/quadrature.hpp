#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ellref/cpoint.hpp"

namespace ellref {

/// Piecewise-linear integration path; at least two vertices, consecutive ones distinct.
struct Path {
  std::vector<Vec2> v;
  double length() const;
};

/// Coefficients (P, Q) of the 1-form P dx + Q dy at a real point.
using FormCoeffs = std::function<std::pair<cplx, cplx>(double x, double y)>;

struct QuadResult {
  cplx value{0.0};
  double error = 0.0;  // accumulated local error estimates
  long evals = 0;
  bool converged = true;  // false when the depth cap was hit somewhere
};

/// Adaptive Simpson integration of a 1-form along a path; each segment gets a
/// tolerance share proportional to its length.
QuadResult integrate_form(const FormCoeffs& form, const Path& path, double tol,
                          int max_depth = 32);

/// Adaptive Simpson integral of f along the straight complex segment [a, b].
QuadResult integrate_complex(const std::function<cplx(cplx)>& f, cplx a, cplx b, double tol,
                             int max_depth = 32);

/// Trapezoid rule around the circle |w - center| = rho; spectrally accurate for
/// integrands analytic in an annulus around the contour.
cplx closed_contour(const std::function<cplx(cplx)>& f, cplx center, double rho, int n = 64);
cplx closed_contour_form(const FormCoeffs& form, Vec2 center, double rho, int n = 64);

/// m-th derivative at z0 by the Cauchy integral over a small circle.
cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z0, int order = 1,
                       double radius = 1e-2, int n = 16);

}  // namespace ellref
