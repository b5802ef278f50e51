#pragma once

#include <functional>
#include <string>

#include "ellref/cpoint.hpp"
#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"

namespace ellref {

/// Closed-form solution of L u = 0 vanishing on a given curve, with exact
/// first derivatives and a validity predicate (Bessel families are singular
/// at the circle center, so a small disk around it is excluded).
struct SolutionField {
  std::string label;
  std::function<double(double, double)> u, ux, uy;
  std::function<bool(double, double)> valid;
};

/// Separated mode vanishing on the line: after the gauge substitution
/// u = exp(-(a x + b y)/2) v, v = f(Y) trig(nu X) in line-adapted coordinates
/// (Y the signed distance), where f is sin, linear or sinh depending on the
/// sign of mu^2 - nu^2. Constant coefficients only.
SolutionField line_mode(const EllipticOperator& op, const AnalyticCurve& line, double nu,
                        bool cos_parity = true);

/// Angular mode vanishing on the circle: cross-product Bessel radial factor for
/// mu^2 > 0, power-law radial factor for the harmonic/gauge case mu^2 = 0.
SolutionField circle_mode(const EllipticOperator& op, const AnalyticCurve& circle, int n,
                          bool cos_parity = true);

/// |L u| at p by second-order finite differences with step h.
double pde_residual(const EllipticOperator& op, const SolutionField& f, Vec2 p, double h = 1e-4);

}  // namespace ellref
