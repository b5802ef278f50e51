#pragma once

#include <utility>
#include <vector>

#include "ellref/cpoint.hpp"
#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/series.hpp"

namespace ellref {

/// Evaluator of the reflected kernel pair V1, V2 and their difference V, the
/// single-valued coefficients multiplying the broken logarithms of the
/// continued fundamental solution. Constant coefficients only.
///
/// Series mode: the transport recursion is run in a truncated bivariate Taylor
/// algebra centered at a point of the curve (in characteristic coordinates),
/// where the recursion's lower integration limits vanish and truncated
/// composition is exact. The expansion center must therefore lie on the curve.
class VEvaluator {
 public:
  struct Result {
    cplx V1, V2, V;
    cplx dVdz, dVdzeta;
    double tail = 0.0;  // magnitude of the last transport order retained
  };

  VEvaluator(const EllipticOperator& op, const AnalyticCurve& curve, CPoint source,
             Vec2 center_on_curve, int order, int degree = 28);

  Result eval(CPoint p) const;
  int order() const { return order_; }

 private:
  cplx zc_, zetac_;
  int order_;
  Series2 v1_, v2_, v_, dvw_, dvv_;
  double tail_ = 0.0;
};

/// k-th transport coefficient at p for family 1 or 2, exponential prefactor
/// included; k = 0 is exp(A (zeta - zeta0) + B (z - z0)) itself.
cplx beta0(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p);
cplx beta_k(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p,
            int family, int k, int degree = 28);

/// Nested Gauss-Legendre Picard evaluation of V1, V2 from their Volterra
/// characterization; independent of the series machinery.
struct PicardEval {
  cplx V1, V2;
};
PicardEval v_picard(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p,
                    int iters = 3);
/// V at every Picard level 0..iters (shared cache), for convergence studies.
std::vector<PicardEval> v_picard_levels(const EllipticOperator& op, const AnalyticCurve& curve,
                                        CPoint p0, CPoint p, int iters);

/// Coefficient of the point term in the reflection formula,
/// exp(A (S(z0) - zeta0) + B (T(zeta0) - z0)); real for real source points.
double c0(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0);

/// Monodromy of the continued fundamental solution around the reflected source:
/// winding increments of both broken logarithms are measured on a sampled CCW
/// loop of radius rho (branch-tracked), weighted by V1, V2 at the base point.
struct MonodromyResult {
  cplx increment;   // measured: -(V1 dln1 + V2 dln2)/(4 pi)
  cplx predicted;   // leading order from the closed-form first coefficients
  double rho;
  double winding1, winding2;  // measured arg increments / 2 pi
};
MonodromyResult monodromy_increment(const EllipticOperator& op, const AnalyticCurve& curve,
                                    CPoint p0, double rho, int n_quad = 256,
                                    double phi0 = 0.5 * kPi, int order = 6);

}  // namespace ellref
