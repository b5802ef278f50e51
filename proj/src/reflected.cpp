#include "ellref/reflected.hpp"

#include <cmath>
#include <unordered_map>

#include "ellref/errors.hpp"
#include "ellref/riemann.hpp"

namespace ellref {

namespace {

// ---- transport recursion in the truncated Taylor algebra ----------------

struct TransportBuild {
  int degree = 0, order = 0;
  cplx zc, zetac;      // expansion center, a point of the curve in C^2
  cplx dz, dzeta;      // zc - z0, zetac - zeta0
  Series1 sfun, stil;  // S(zc+w) - zetac in w, T(zetac+v) - zc in v; constant terms vanish
  Series1 inv_sd, inv_td;
  std::vector<Series2> p1, p2;  // gauge-reduced coefficients, beta = E * p
};

Series1 pow_linear(cplx c0, int k, int deg) {
  // (v + c0)^k as a truncated series in v
  Series1 r = Series1::constant(1.0, deg);
  const Series1 lin = Series1::linear(c0, 1.0, deg);
  for (int j = 0; j < k; ++j) r = r * lin;
  return r;
}

TransportBuild build_transport(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0,
                               cplx zc, int order, int degree) {
  if (!op.is_constant()) throw config_error("transport: constant coefficients required");
  TransportBuild tb;
  tb.degree = degree;
  tb.order = order;
  tb.zc = zc;
  tb.zetac = curve.schwarz(zc);
  tb.dz = zc - p0.z;
  tb.dzeta = tb.zetac - p0.zeta;

  tb.sfun = curve.schwarz_series(zc, degree);
  tb.sfun.c[0] -= tb.zetac;  // exact zero at the center by construction
  if (std::abs(tb.sfun.c[0]) > 1e-9 * std::max(1.0, curve.scale()))
    throw config_error("transport: expansion center is not on the curve");
  tb.sfun.c[0] = 0.0;
  tb.stil = curve.mirror_series(tb.zetac, degree);
  tb.stil.c[0] -= tb.zc;
  if (std::abs(tb.stil.c[0]) > 1e-9 * std::max(1.0, curve.scale()))
    throw config_error("transport: mirror series center mismatch");
  tb.stil.c[0] = 0.0;

  tb.inv_sd = tb.sfun.derivative().reciprocal();
  tb.inv_td = tb.stil.derivative().reciprocal();

  const cplx kap = op.kappa();
  tb.p1.assign(order + 1, Series2(degree));
  tb.p2.assign(order + 1, Series2(degree));
  tb.p1[0] = Series2::constant(1.0, degree);
  tb.p2[0] = Series2::constant(1.0, degree);

  cplx kap_fact(1.0);  // kappa^{k+1} / (k+1)!
  for (int k = 0; k < order; ++k) {
    kap_fact *= kap / double(k + 1);

    // family 1: transport along z from the curve, data kappa^{k+1} (zeta-zeta0)^{k+1}/(k+1)!
    {
      const Series2 integrand = tb.p1[k].d_w().d_v() - kap * tb.p1[k];
      const Series2 prim = integrand.integ_w();
      const Series1 at_curve = prim.subst_w(tb.stil);
      const Series2 delta = prim - Series2::from_v(at_curve, degree);
      const Series2 hom = Series2::from_v(kap_fact * pow_linear(tb.dzeta, k + 1, degree), degree);
      tb.p1[k + 1] = hom - Series2::from_v(tb.inv_td, degree) * delta;
    }
    // family 2: transport along zeta, mirrored
    {
      const Series2 integrand = tb.p2[k].d_w().d_v() - kap * tb.p2[k];
      const Series2 prim = integrand.integ_v();
      const Series1 at_curve = prim.subst_v(tb.sfun);
      const Series2 delta = prim - Series2::from_w(at_curve, degree);
      const Series2 hom = Series2::from_w(kap_fact * pow_linear(tb.dz, k + 1, degree), degree);
      tb.p2[k + 1] = hom - Series2::from_w(tb.inv_sd, degree) * delta;
    }
  }
  return tb;
}

Series2 exp_prefactor(const EllipticOperator& op, const TransportBuild& tb) {
  // E(z, zeta) = Ec exp(A v) exp(B w) around the center
  const cplx ec = std::exp(op.A() * tb.dzeta + op.B() * tb.dz);
  const Series1 ea = exp_of(Series1::linear(0.0, op.A(), tb.degree));
  const Series1 eb = exp_of(Series1::linear(0.0, op.B(), tb.degree));
  return ec * (Series2::from_v(ea, tb.degree) * Series2::from_w(eb, tb.degree));
}

}  // namespace

VEvaluator::VEvaluator(const EllipticOperator& op, const AnalyticCurve& curve, CPoint source,
                       Vec2 center_on_curve, int order, int degree)
    : order_(order) {
  if (order < 1 || order > 16) throw config_error("VEvaluator: order out of range");
  if (!curve.contains(center_on_curve, 1e-7))
    throw config_error("VEvaluator: expansion center must lie on the curve");
  const TransportBuild tb =
      build_transport(op, curve, source, to_cplx(center_on_curve), order, degree);
  zc_ = tb.zc;
  zetac_ = tb.zetac;

  // psi1 = T(zeta) - z0 as a series in v; psi2 = S(z) - zeta0 in w
  Series1 psi1 = tb.stil;
  psi1.c[0] += tb.dz;
  Series1 psi2 = tb.sfun;
  psi2.c[0] += tb.dzeta;

  const Series2 epre = exp_prefactor(op, tb);
  Series2 v1 = Series2::constant(0.0, degree), v2 = v1, last = v1;
  Series1 pow1 = Series1::constant(1.0, degree), pow2 = pow1;
  double inv_fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      pow1 = pow1 * psi1;
      pow2 = pow2 * psi2;
      inv_fact /= double(k);
    }
    const Series2 t1 = tb.p1[k] * Series2::from_v(pow1, degree) * cplx(inv_fact);
    const Series2 t2 = tb.p2[k] * Series2::from_w(pow2, degree) * cplx(inv_fact);
    v1 += t1;
    v2 += t2;
    if (k == order) last = t1 - t2;
  }
  v1_ = epre * v1;
  v2_ = epre * v2;
  v_ = v1_ - v2_;
  dvw_ = v_.d_w();
  dvv_ = v_.d_v();
  tail_ = (epre * last).max_abs();
}

VEvaluator::Result VEvaluator::eval(CPoint p) const {
  const cplx w = p.z - zc_, v = p.zeta - zetac_;
  Result r;
  r.V1 = v1_.eval(w, v);
  r.V2 = v2_.eval(w, v);
  r.V = v_.eval(w, v);
  r.dVdz = dvw_.eval(w, v);
  r.dVdzeta = dvv_.eval(w, v);
  r.tail = tail_;
  return r;
}

cplx beta0(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p) {
  (void)curve;  // beta_0 = E is curve-independent for constant coefficients
  if (!op.is_constant()) throw config_error("beta0: constant coefficients required");
  return std::exp(op.A() * (p.zeta - p0.zeta) + op.B() * (p.z - p0.z));
}

cplx beta_k(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p,
            int family, int k, int degree) {
  if (family != 1 && family != 2) throw config_error("beta_k: family must be 1 or 2");
  if (k < 0 || k > 16) throw config_error("beta_k: order out of range");
  if (k == 0) return beta0(op, curve, p0, p);
  // Expansion center: the characteristic projection of p onto the curve along
  // the transport direction, so the recursion integrates from the data exactly.
  const cplx zc = (family == 1) ? curve.schwarz_inverse(p.zeta) : p.z;
  const TransportBuild tb = build_transport(op, curve, p0, zc, k, degree);
  const cplx w = p.z - tb.zc, v = p.zeta - tb.zetac;
  const cplx e = std::exp(op.A() * (p.zeta - p0.zeta) + op.B() * (p.z - p0.z));
  return e * ((family == 1) ? tb.p1[k].eval(w, v) : tb.p2[k].eval(w, v));
}

// ---- Picard oracle -------------------------------------------------------

namespace {

// Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGl6X[6] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                             0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
constexpr double kGl6W[6] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                             0.4679139345726910, 0.3607615730481386, 0.1713244923791704};
constexpr double kGl5X[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                             0.5384693101056831, 0.9061798459386640};
constexpr double kGl5W[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                             0.4786286704993665, 0.2369268850561891};

struct MuKey {
  int level;
  long long zr, zi, tr, ti;
  bool operator==(const MuKey& o) const {
    return level == o.level && zr == o.zr && zi == o.zi && tr == o.tr && ti == o.ti;
  }
};

struct MuKeyHash {
  size_t operator()(const MuKey& k) const {
    size_t h = std::hash<int>()(k.level);
    const auto mix = [&h](long long v) {
      h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(k.zr);
    mix(k.zi);
    mix(k.tr);
    mix(k.ti);
    return h;
  }
};

long long quant(double x) { return llround(x * 1e14); }

MuKey make_key(int level, cplx z, cplx zeta) {
  return {level, quant(z.real()), quant(z.imag()), quant(zeta.real()), quant(zeta.imag())};
}

struct PicardCtx {
  const EllipticOperator* op = nullptr;
  const AnalyticCurve* curve = nullptr;
  CPoint p0;
  cplx A, B, C, kap, sz0, tz0;
  std::unordered_map<MuKey, cplx, MuKeyHash> mu_cache, nu_cache;

  PicardCtx(const EllipticOperator& o, const AnalyticCurve& cu, CPoint src)
      : op(&o), curve(&cu), p0(src) {
    if (!o.is_constant()) throw config_error("v_picard: constant coefficients required");
    A = o.A();
    B = o.B();
    C = cplx(o.c()) / 4.0;
    kap = o.kappa();
    sz0 = cu.schwarz(p0.z);
    tz0 = cu.schwarz_inverse(p0.zeta);
  }

  cplx phi2(cplx z, cplx zeta) const {
    const cplx sz = curve->schwarz(z);
    return riemann_const(*op, p0, CPoint(z, sz)) * std::exp(A * (zeta - sz));
  }
  cplx phi1(cplx z, cplx zeta) const {
    const cplx tz = curve->schwarz_inverse(zeta);
    return riemann_const(*op, p0, CPoint(tz, zeta)) * std::exp(B * (z - tz));
  }

  template <typename F>
  static cplx gl6(const F& f, cplx a, cplx b) {
    const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc(0.0);
    for (int i = 0; i < 6; ++i) acc += kGl6W[i] * f(mid + half * kGl6X[i]);
    return acc * half;
  }
  template <typename F>
  static cplx gl5(const F& f, cplx a, cplx b) {
    const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc(0.0);
    for (int i = 0; i < 5; ++i) acc += kGl5W[i] * f(mid + half * kGl5X[i]);
    return acc * half;
  }

  cplx mu(int m, cplx z, cplx zeta) {
    if (m == 0) return kap * phi2(z, zeta);
    const MuKey key = make_key(m, z, zeta);
    if (const auto it = mu_cache.find(key); it != mu_cache.end()) return it->second;
    const cplx sz = curve->schwarz(z);
    const cplx sdz = curve->schwarz_deriv(z);
    const cplx i1 = gl6([&](cplx t) { return mu(m - 1, z, t); }, sz, zeta);
    const cplx i2 = gl6([&](cplx t) { return mu(m - 1, t, sz); }, tz0, z);
    const cplx i3 = gl6([&](cplx t) { return mu(m - 1, t, zeta); }, tz0, z);
    const cplx i4 = gl5(
        [&](cplx tau) {
          return gl6([&](cplx t) { return mu(m - 1, t, tau); }, tz0, z);
        },
        sz, zeta);
    const cplx val = A * i1 - A * sdz * i2 + B * i3 - C * i4 + kap * phi2(z, zeta);
    mu_cache.emplace(key, val);
    return val;
  }

  cplx nu(int m, cplx z, cplx zeta) {
    if (m == 0) return kap * phi1(z, zeta);
    const MuKey key = make_key(m, z, zeta);
    if (const auto it = nu_cache.find(key); it != nu_cache.end()) return it->second;
    const cplx tz = curve->schwarz_inverse(zeta);
    const cplx tdz = 1.0 / curve->schwarz_deriv(tz);  // inverse-function rule
    const cplx i1 = gl6([&](cplx tau) { return nu(m - 1, z, tau); }, sz0, zeta);
    const cplx i2 = gl6([&](cplx tau) { return nu(m - 1, tz, tau); }, sz0, zeta);
    const cplx i3 = gl6([&](cplx t) { return nu(m - 1, t, zeta); }, tz, z);
    const cplx i4 = gl5(
        [&](cplx t) {
          return gl6([&](cplx tau) { return nu(m - 1, t, tau); }, sz0, zeta);
        },
        tz, z);
    const cplx val = A * i1 + B * i3 - B * tdz * i2 - C * i4 + kap * phi1(z, zeta);
    nu_cache.emplace(key, val);
    return val;
  }

  PicardEval eval_level(int m, CPoint p) {
    PicardEval pe;
    const cplx sz = curve->schwarz(p.z);
    const cplx tz = curve->schwarz_inverse(p.zeta);
    pe.V2 = gl5(
                [&](cplx tau) {
                  return gl6([&](cplx t) { return mu(m, t, tau); }, tz0, p.z);
                },
                sz, p.zeta) +
            phi2(p.z, p.zeta);
    pe.V1 = gl5(
                [&](cplx t) {
                  return gl6([&](cplx tau) { return nu(m, t, tau); }, sz0, p.zeta);
                },
                tz, p.z) +
            phi1(p.z, p.zeta);
    return pe;
  }
};

}  // namespace

PicardEval v_picard(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0, CPoint p,
                    int iters) {
  if (iters < 0 || iters > 6) throw config_error("v_picard: iteration count out of range");
  PicardCtx ctx(op, curve, p0);
  return ctx.eval_level(iters, p);
}

std::vector<PicardEval> v_picard_levels(const EllipticOperator& op, const AnalyticCurve& curve,
                                        CPoint p0, CPoint p, int iters) {
  if (iters < 0 || iters > 6) throw config_error("v_picard_levels: iteration count out of range");
  PicardCtx ctx(op, curve, p0);
  std::vector<PicardEval> out;
  out.reserve(iters + 1);
  for (int m = 0; m <= iters; ++m) out.push_back(ctx.eval_level(m, p));
  return out;
}

// ---- point-term coefficient and monodromy --------------------------------

double c0(const EllipticOperator& op, const AnalyticCurve& curve, CPoint p0) {
  if (!op.is_constant()) throw config_error("c0: constant coefficients required");
  const cplx e = std::exp(op.A() * (curve.schwarz(p0.z) - p0.zeta) +
                          op.B() * (curve.schwarz_inverse(p0.zeta) - p0.z));
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e)))
    throw config_error("c0: nonreal value; source point must lie on the real slice");
  return e.real();
}

MonodromyResult monodromy_increment(const EllipticOperator& op, const AnalyticCurve& curve,
                                    CPoint p0, double rho, int n_quad, double phi0, int order) {
  if (rho <= 0.0) throw config_error("monodromy_increment: radius must be positive");
  if (n_quad < 2) throw config_error("monodromy_increment: need at least 2 samples");
  if (!p0.on_real_slice(1e-10))
    throw config_error("monodromy_increment: source must lie on the real slice");

  const cplx zq = std::conj(curve.schwarz(p0.z));  // reflected source
  // Branch-tracked winding of both broken-log arguments along the CCW loop.
  double arg1 = 0.0, arg2 = 0.0, prev1 = 0.0, prev2 = 0.0;
  for (int i = 0; i <= n_quad; ++i) {
    const double phi = phi0 + 2.0 * kPi * i / n_quad;
    const cplx z = zq + rho * std::polar(1.0, phi);
    const cplx zeta = std::conj(z);
    const cplx psi1 = curve.schwarz_inverse(zeta) - p0.z;
    const cplx psi2 = curve.schwarz(z) - p0.zeta;
    if (psi1 == cplx(0.0) || psi2 == cplx(0.0))
      throw singularity_error("monodromy_increment: log argument vanished on the loop");
    const double a1 = std::arg(psi1), a2 = std::arg(psi2);
    if (i > 0) {
      double d1 = a1 - prev1, d2 = a2 - prev2;
      while (d1 > kPi) d1 -= 2.0 * kPi;
      while (d1 < -kPi) d1 += 2.0 * kPi;
      while (d2 > kPi) d2 -= 2.0 * kPi;
      while (d2 < -kPi) d2 += 2.0 * kPi;
      // a wrapped jump near pi is indistinguishable from one past pi, so the
      // usable range is half of it; jumps beyond that mean the loop is
      // undersampled and the winding count cannot be trusted
      if (std::abs(d1) >= 0.5 * kPi || std::abs(d2) >= 0.5 * kPi)
        throw quadrature_error("monodromy_increment: branch tracking lost (arg jump near pi)");
      arg1 += d1;
      arg2 += d2;
    }
    prev1 = a1;
    prev2 = a2;
  }

  const CPoint base = CPoint::from_real(to_vec(zq + rho * std::polar(1.0, phi0)));
  const VEvaluator ve(op, curve, p0, anchor_on_curve(curve, to_vec(zq)), order);
  const auto vr = ve.eval(base);

  MonodromyResult mr;
  mr.rho = rho;
  mr.winding1 = arg1 / (2.0 * kPi);
  mr.winding2 = arg2 / (2.0 * kPi);
  mr.increment = -(vr.V1 * cplx(0.0, arg1) + vr.V2 * cplx(0.0, arg2)) / (4.0 * kPi);

  // Leading order from the closed-form first transport coefficients.
  const cplx kap = op.kappa();
  const cplx e = std::exp(op.A() * (base.zeta - p0.zeta) + op.B() * (base.z - p0.z));
  const cplx tz = curve.schwarz_inverse(base.zeta);
  const cplx sz = curve.schwarz(base.z);
  const cplx td = 1.0 / curve.schwarz_deriv(tz);
  const cplx sd = curve.schwarz_deriv(base.z);
  const cplx b11 = kap * e * ((base.z - tz) / td + (base.zeta - p0.zeta));
  const cplx b21 = kap * e * ((base.zeta - sz) / sd + (base.z - p0.z));
  const cplx psi1 = tz - p0.z, psi2 = sz - p0.zeta;
  mr.predicted = 0.5 * kI * (b11 * psi1 - b21 * psi2);
  return mr;
}

}  // namespace ellref
