#include "ellref/riemann.hpp"

#include <cmath>

#include "ellref/chebyshev.hpp"
#include "ellref/errors.hpp"

namespace ellref {

cplx riemann_const(const EllipticOperator& op, CPoint p0, CPoint p) {
  if (!op.is_constant()) throw config_error("riemann_const: constant coefficients required");
  const cplx e = std::exp(op.A() * (p.zeta - p0.zeta) + op.B() * (p.z - p0.z));
  const cplx w = op.kappa() * (p.z - p0.z) * (p.zeta - p0.zeta);
  cplx sum(1.0), term(1.0);
  for (int k = 1; k <= 400; ++k) {
    term *= w / cplx(double(k) * k);
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return e * sum;
  }
  throw convergence_error("riemann_const: series did not settle", std::abs(term));
}

GoursatField riemann_goursat(const EllipticOperator& op, CPoint p0, cplx z1, cplx zeta1,
                             int n, double tol, int max_iters) {
  if (n < 8) throw config_error("riemann_goursat: need at least 8 collocation intervals");
  const ChebLobatto cheb(n);
  const int d = n + 1;

  GoursatField g;
  g.n = n;
  g.p0 = p0;
  g.z1 = z1;
  g.zeta1 = zeta1;
  g.z_nodes.resize(d);
  g.zeta_nodes.resize(d);
  const cplx dz = z1 - p0.z, dzeta = zeta1 - p0.zeta;
  for (int i = 0; i < d; ++i) {
    g.z_nodes[i] = p0.z + dz * cheb.nodes()[i];
    g.zeta_nodes[i] = p0.zeta + dzeta * cheb.nodes()[i];
  }

  const cplx a = op.A(), b = op.B();
  std::vector<cplx> cfield(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cfield[i * d + j] = op.C(g.z_nodes[i], g.zeta_nodes[j]);

  // Volterra fixed point equivalent to the Goursat data r(z0, .) and r(., zeta0):
  //   r = 1 + int_zeta A r + int_z B r - int_z int_zeta C r.
  std::vector<cplx> r(static_cast<size_t>(d) * d, cplx(1.0));
  std::vector<cplx> rn(r.size()), rowv(d), rowi(d), colv(d), coli(d);
  std::vector<cplx> t3(r.size());
  g.final_diff = 0.0;

  for (int it = 1; it <= max_iters; ++it) {
    // t3 = cumulative double integral of C r, z sweep after zeta sweep
    std::vector<cplx> u(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) rowv[j] = cfield[i * d + j] * r[i * d + j];
      cheb.apply(rowv, rowi);
      for (int j = 0; j < d; ++j) u[i * d + j] = dzeta * rowi[j];
    }
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) colv[i] = u[i * d + j];
      cheb.apply(colv, coli);
      for (int i = 0; i < d; ++i) t3[i * d + j] = dz * coli[i];
    }

    double diff = 0.0;
    // per z row: 1 + A int_zeta r; per zeta column: + B int_z r; minus the double term
    std::vector<cplx> t1(static_cast<size_t>(d) * d), t2(t1.size());
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) rowv[j] = r[i * d + j];
      cheb.apply(rowv, rowi);
      for (int j = 0; j < d; ++j) t1[i * d + j] = a * dzeta * rowi[j];
    }
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) colv[i] = r[i * d + j];
      cheb.apply(colv, coli);
      for (int i = 0; i < d; ++i) t2[i * d + j] = b * dz * coli[i];
    }
    for (size_t k = 0; k < r.size(); ++k) {
      rn[k] = cplx(1.0) + t1[k] + t2[k] - t3[k];
      diff = std::max(diff, std::abs(rn[k] - r[k]));
    }
    r.swap(rn);
    g.iterations = it;
    g.final_diff = diff;
    if (diff < tol) {
      g.values = std::move(r);
      return g;
    }
  }
  throw convergence_error("riemann_goursat: Picard iteration did not reach tolerance", g.final_diff);
}

cplx f_k(int k, cplx xi, int branch) {
  if (k >= 0) {
    if (xi == cplx(0.0)) throw singularity_error("f_k: log argument is zero");
    double hk = 0.0;
    cplx p(1.0);
    for (int j = 1; j <= k; ++j) {
      hk += 1.0 / j;
      p *= xi / double(j);
    }
    return p * (std::log(xi) + cplx(0.0, 2.0 * kPi * branch) - hk);
  }
  if (xi == cplx(0.0)) throw singularity_error("f_k: pole at zero");
  double fact = 1.0;
  for (int j = 1; j <= -k - 1; ++j) fact *= j;
  const double sign = ((-k - 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * fact * std::pow(xi, k);
}

cplx AlphaCoeffs::eval(int k, cplx z, cplx zeta) const {
  const cplx e = std::exp(A * (zeta - p0.zeta) + B * (z - p0.z));
  const cplx base = (family == 1) ? (zeta - p0.zeta) : (z - p0.z);
  cplx p(1.0);
  for (int j = 1; j <= k; ++j) p *= kappa * base / double(j);
  return e * p;
}

std::pair<AlphaCoeffs, AlphaCoeffs> alpha_coeffs(const EllipticOperator& op, CPoint p0) {
  if (!op.is_constant()) throw config_error("alpha_coeffs: constant coefficients required");
  AlphaCoeffs a1, a2;
  a1.family = 1;
  a2.family = 2;
  a1.p0 = a2.p0 = p0;
  a1.A = a2.A = op.A();
  a1.B = a2.B = op.B();
  a1.kappa = a2.kappa = op.kappa();
  return {a1, a2};
}

FundamentalValue fundamental_eval(const EllipticOperator& op, CPoint p0, CPoint p, int K,
                                  int branch1, int branch2) {
  if (!op.is_constant()) throw config_error("fundamental_eval: constant coefficients required");
  const cplx psi1 = p.z - p0.z, psi2 = p.zeta - p0.zeta;
  if (psi1 == cplx(0.0) || psi2 == cplx(0.0))
    throw singularity_error("fundamental_eval: evaluation at the source point");
  const cplx e = std::exp(op.A() * (p.zeta - p0.zeta) + op.B() * (p.z - p0.z));
  const cplx kap = op.kappa();

  // G1 = E sum_k (kappa psi2)^k / k! f_k(psi1); G2 mirrors psi1 <-> psi2.
  cplx g1(0.0), g2(0.0), c1(1.0), c2(1.0), last(0.0);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      c1 *= kap * psi2 / double(k);
      c2 *= kap * psi1 / double(k);
    }
    const cplx t1 = c1 * f_k(k, psi1, branch1);
    const cplx t2 = c2 * f_k(k, psi2, branch2);
    g1 += t1;
    g2 += t2;
    last = t1 + t2;
  }
  FundamentalValue fv;
  fv.value = -e * (g1 + g2) / (4.0 * kPi);
  fv.truncation = std::abs(e) * std::abs(last) / (4.0 * kPi);
  fv.terms = K + 1;
  return fv;
}

}  // namespace ellref
