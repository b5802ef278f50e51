#pragma once

#include <functional>

#include "ellref/cpoint.hpp"

namespace ellref {

/// L u = Delta u + a u_x + b u_y + c u. Coefficients are either constant or
/// belong to the linear_c family: constant a, b with c(x, y) = c0 + gx x + gy y.
class EllipticOperator {
 public:
  static EllipticOperator constant(double a, double b, double c) {
    EllipticOperator op;
    op.a_ = a;
    op.b_ = b;
    op.c0_ = c;
    return op;
  }
  static EllipticOperator laplace() { return constant(0.0, 0.0, 0.0); }
  static EllipticOperator helmholtz(double lambda) { return constant(0.0, 0.0, lambda * lambda); }
  static EllipticOperator linear_c(double a, double b, double c0, double gx, double gy) {
    EllipticOperator op;
    op.a_ = a;
    op.b_ = b;
    op.c0_ = c0;
    op.gx_ = gx;
    op.gy_ = gy;
    return op;
  }

  bool is_constant() const { return gx_ == 0.0 && gy_ == 0.0; }
  bool is_laplace() const { return is_constant() && a_ == 0.0 && b_ == 0.0 && c0_ == 0.0; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const;                         // constant operators only
  double c_at(double x, double y) const { return c0_ + gx_ * x + gy_ * y; }

  // Characteristic-variable data for L*_C u = u_{z zeta} - (A u)_z - (B u)_zeta + C u.
  cplx A() const { return cplx(a_, b_) / 4.0; }
  cplx B() const { return cplx(a_, -b_) / 4.0; }
  cplx C(cplx z, cplx zeta) const {
    return (cplx(c0_) + 0.5 * gx_ * (z + zeta) + 0.5 * gy_ * (z - zeta) / kI) / 4.0;
  }
  /// kappa = A B - C; constant operators only. Equals -mu^2/4 of the gauge split.
  cplx kappa() const;

 private:
  EllipticOperator() = default;
  double a_ = 0, b_ = 0, c0_ = 0, gx_ = 0, gy_ = 0;
};

/// Coefficients of the formally adjoint characteristic operator, as fields on C^2.
/// F = A_z + B_zeta - C collapses to -C for both supported families.
struct CharCoeffs {
  std::function<cplx(cplx, cplx)> A, B, C, F;
  bool constant = true;
  cplx Ac{}, Bc{}, Cc{}, kappa{};
};

CharCoeffs char_coeffs(const EllipticOperator& op);

/// Substitution u = exp(-(a x + b y)/2) v turning L into Delta v + mu2 v (constants only).
struct GaugeSplit {
  double a = 0, b = 0, mu2 = 0;
};

GaugeSplit gauge_split(const EllipticOperator& op);

}  // namespace ellref
