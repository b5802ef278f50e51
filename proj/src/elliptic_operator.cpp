#include "ellref/elliptic_operator.hpp"

#include "ellref/errors.hpp"

namespace ellref {

double EllipticOperator::c() const {
  if (!is_constant()) throw config_error("c(): zero-order coefficient is not constant");
  return c0_;
}

cplx EllipticOperator::kappa() const {
  if (!is_constant()) throw config_error("kappa(): defined for constant coefficients only");
  return A() * B() - cplx(c0_) / 4.0;
}

CharCoeffs char_coeffs(const EllipticOperator& op) {
  CharCoeffs cc;
  cc.A = [op](cplx, cplx) { return op.A(); };
  cc.B = [op](cplx, cplx) { return op.B(); };
  cc.C = [op](cplx z, cplx zeta) { return op.C(z, zeta); };
  // A, B constant in both families, so F = A_z + B_zeta - C = -C.
  cc.F = [op](cplx z, cplx zeta) { return -op.C(z, zeta); };
  cc.constant = op.is_constant();
  cc.Ac = op.A();
  cc.Bc = op.B();
  if (cc.constant) {
    cc.Cc = op.C(0.0, 0.0);
    cc.kappa = op.kappa();
  }
  return cc;
}

GaugeSplit gauge_split(const EllipticOperator& op) {
  if (!op.is_constant()) throw config_error("gauge_split: constant coefficients required");
  GaugeSplit g;
  g.a = op.a();
  g.b = op.b();
  g.mu2 = op.c() - 0.25 * (op.a() * op.a() + op.b() * op.b());
  return g;
}

}  // namespace ellref
