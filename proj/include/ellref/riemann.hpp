#pragma once

#include <utility>
#include <vector>

#include "ellref/cpoint.hpp"
#include "ellref/elliptic_operator.hpp"

namespace ellref {

/// Riemann function of the adjoint characteristic operator with source p0,
/// closed form for constant coefficients:
///   r(z, zeta) = E(z, zeta) sum_k (kappa psi1 psi2)^k / (k!)^2,
///   E = exp(A (zeta - zeta0) + B (z - z0)), psi1 = z - z0, psi2 = zeta - zeta0.
cplx riemann_const(const EllipticOperator& op, CPoint p0, CPoint p);

/// Collocation solution of the characteristic Goursat problem on the rectangle
/// [z0, z1] x [zeta0, zeta1], nodes Chebyshev-Lobatto in each direction.
struct GoursatField {
  int n = 0;
  CPoint p0;
  cplx z1, zeta1;
  std::vector<cplx> z_nodes, zeta_nodes;  // n+1 each
  std::vector<cplx> values;               // (n+1)^2, z index major
  int iterations = 0;
  double final_diff = 0.0;

  cplx at(int i, int j) const { return values[static_cast<size_t>(i) * (n + 1) + j]; }
  cplx corner() const { return at(n, n); }
};

GoursatField riemann_goursat(const EllipticOperator& op, CPoint p0, cplx z1, cplx zeta1,
                             int n = 24, double tol = 1e-12, int max_iters = 60);

/// Cauchy kernel family: f_k(xi) = xi^k / k! (ln xi + 2 pi i branch - H_k) for k >= 0
/// (H_k the harmonic numbers, H_0 = 0) and (-1)^{-k-1} (-k-1)! xi^k for k <= -1.
cplx f_k(int k, cplx xi, int branch = 0);

/// Transport coefficients along the two characteristic directions for constant
/// coefficients, exponential prefactor included:
///   family 1: E kappa^k (zeta - zeta0)^k / k!, family 2 mirrored in z.
struct AlphaCoeffs {
  int family = 1;  // 1 or 2
  CPoint p0;
  cplx A, B, kappa;
  cplx eval(int k, cplx z, cplx zeta) const;
};

std::pair<AlphaCoeffs, AlphaCoeffs> alpha_coeffs(const EllipticOperator& op, CPoint p0);

/// Fundamental solution -(G1 + G2)/(4 pi), G_j = sum_{k<=K} alpha_k^j f_k(psi_j),
/// with the log branches of psi1 and psi2 chosen by the caller.
struct FundamentalValue {
  cplx value;
  double truncation = 0.0;  // magnitude of the last retained term pair
  int terms = 0;
};

FundamentalValue fundamental_eval(const EllipticOperator& op, CPoint p0, CPoint p, int K,
                                  int branch1 = 0, int branch2 = 0);

}  // namespace ellref
