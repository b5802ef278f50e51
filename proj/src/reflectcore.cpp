#include "ellref/reflectcore.hpp"

#include <cmath>

#include "ellref/errors.hpp"

namespace ellref {

namespace {

double curve_distance(const AnalyticCurve& curve, Vec2 p) {
  switch (curve.kind()) {
    case AnalyticCurve::Kind::line: {
      double a, b, d;
      curve.line_coeffs(a, b, d);
      return std::abs(a * p.x + b * p.y + d) / std::hypot(a, b);
    }
    case AnalyticCurve::Kind::circle:
      return std::abs(dist(p, curve.circle_center()) - curve.circle_radius());
    case AnalyticCurve::Kind::custom: {
      // |S(z) - conj z| = 2 dist + O(dist^2) near the curve
      const cplx z = to_cplx(p);
      return 0.5 * std::abs(curve.schwarz(z) - std::conj(z));
    }
  }
  throw config_error("curve_distance: bad curve kind");
}

}  // namespace

ReflectionStrategy dispatch(const EllipticOperator& op, const AnalyticCurve& curve) {
  if (op.is_laplace())
    return {StrategyKind::schwarz_p2p,
            "harmonic functions continue point to point across any analytic curve"};
  if (curve.is_line())
    return {StrategyKind::line_p2p,
            "across a line every constant-coefficient operator admits the exponential point law"};
  if (op.is_constant()) {
    const double crit = op.a() * op.a() + op.b() * op.b() - 4.0 * op.c();
    if (std::abs(crit) <= 1e-12)
      return {StrategyKind::gauge_p2p,
              "a^2 + b^2 - 4c = 0: the gauge substitution reduces to the harmonic case"};
  }
  return {StrategyKind::nonlocal,
          "curved interface with a non-degenerate operator: reflection is point to arc"};
}

namespace {

double exp_point_law(const EllipticOperator& op, const AnalyticCurve& curve, Vec2 p,
                     double u_at_q) {
  const Vec2 q = reflect_point(curve, p);
  const double expo = 0.5 * (op.a() * (q.x - p.x) + op.b() * (q.y - p.y));
  return -std::exp(expo) * u_at_q;
}

}  // namespace

double reflect_line(const EllipticOperator& op, const AnalyticCurve& line, Vec2 p, double u_at_q) {
  if (!line.is_line()) throw config_error("reflect_line: curve must be a line");
  if (!op.is_constant()) throw config_error("reflect_line: constant coefficients required");
  return exp_point_law(op, line, p, u_at_q);
}

double reflect_gauge(const EllipticOperator& op, const AnalyticCurve& curve, Vec2 p,
                     double u_at_q) {
  const GaugeSplit g = gauge_split(op);
  if (std::abs(g.mu2) > 1e-12)
    throw config_error("reflect_gauge: requires a^2 + b^2 - 4c = 0");
  return exp_point_law(op, curve, p, u_at_q);
}

IntegralTerm integral_term(const EllipticOperator& op, const SolutionField& field,
                           const VEvaluator& kernel, const Path& path, double tol) {
  if (!op.is_constant()) throw config_error("integral_term: constant coefficients required");
  const double a = op.a(), b = op.b();

  double v_sup = 0.0;
  const FormCoeffs form = [&](double x, double y) -> std::pair<cplx, cplx> {
    const auto kr = kernel.eval(CPoint::from_real(x, y));
    v_sup = std::max(v_sup, std::abs(kr.V));
    const double u = field.u(x, y), ux = field.ux(x, y), uy = field.uy(x, y);
    const cplx vx = kr.dVdz + kr.dVdzeta;
    const cplx vy = kI * (kr.dVdz - kr.dVdzeta);
    const cplx wterm = u * vx - kr.V * ux - a * u * kr.V;   // multiplies dy
    const cplx mterm = u * vy - kr.V * uy - b * u * kr.V;   // multiplies dx
    return {-mterm, wterm};  // integrand W dy - M dx
  };
  const QuadResult qr = integrate_form(form, path, tol);

  IntegralTerm it;
  it.value = qr.value / (2.0 * kI);
  it.quad_error = qr.error;
  it.v_sup = v_sup;
  it.converged = qr.converged;
  return it;
}

ReflectionReport reflect(const EllipticOperator& op, const AnalyticCurve& curve,
                         const SolutionField& field, Vec2 p, const ReflectOptions& opt) {
  if (opt.order < 1 || opt.order > 8) throw config_error("reflect: order must be in [1, 8]");
  if (!op.is_constant()) throw config_error("reflect: constant coefficients required");
  const double d = curve_distance(curve, p);
  if (d > opt.validity_factor * curve.scale())
    throw config_error("reflect: point too far from the curve for trustworthy continuation");

  ReflectionReport rep;
  const Vec2 q = reflect_point(curve, p);
  rep.diag.q = q;
  rep.diag.order = opt.order;
  rep.strategy = opt.force_nonlocal
                     ? ReflectionStrategy{StrategyKind::nonlocal, "forced by options"}
                     : dispatch(op, curve);

  if (!field.valid(q.x, q.y))
    throw config_error("reflect: mirror point is outside the field's validity region");
  const double uq = field.u(q.x, q.y);

  switch (rep.strategy.kind) {
    case StrategyKind::schwarz_p2p:
      rep.q_term = -uq;
      rep.total = rep.q_term;
      rep.diag.c0 = 1.0;
      return rep;
    case StrategyKind::line_p2p:
      rep.q_term = reflect_line(op, curve, p, uq);
      rep.total = rep.q_term;
      rep.diag.c0 = c0(op, curve, CPoint::from_real(p));
      return rep;
    case StrategyKind::gauge_p2p:
      rep.q_term = reflect_gauge(op, curve, p, uq);
      rep.total = rep.q_term;
      rep.diag.c0 = c0(op, curve, CPoint::from_real(p));
      return rep;
    case StrategyKind::nonlocal:
      break;
  }

  const Vec2 anchor = opt.anchor ? *opt.anchor : anchor_on_curve(curve, q);
  if (!curve.contains(anchor, 1e-7))
    throw config_error("reflect: anchor override must lie on the curve");
  rep.diag.anchor = anchor;

  Path path;
  path.v.push_back(anchor);
  for (const Vec2& w : opt.waypoints) path.v.push_back(w);
  path.v.push_back(q);
  rep.path = path.v;

  const CPoint src = CPoint::from_real(p);
  const VEvaluator kernel(op, curve, src, anchor, opt.order, opt.degree);
  const IntegralTerm it = integral_term(op, field, kernel, path, opt.tol);

  const double pc = c0(op, curve, src);
  rep.diag.c0 = pc;
  rep.q_term = -pc * uq;
  rep.integral = it.value.real();
  rep.total = rep.q_term + rep.integral;
  rep.diag.quad_error = it.quad_error;
  rep.diag.v_sup = it.v_sup;
  rep.diag.imag_residue = std::abs(it.value.imag());
  rep.diag.series_tail = kernel.eval(CPoint::from_real(q)).tail;
  return rep;
}

}  // namespace ellref
