#include "ellref/manufactured.hpp"

#include <cmath>

#include "ellref/bessel.hpp"
#include "ellref/errors.hpp"

namespace ellref {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

SolutionField line_mode(const EllipticOperator& op, const AnalyticCurve& line, double nu,
                        bool cos_parity) {
  if (!line.is_line()) throw config_error("line_mode: curve must be a line");
  const GaugeSplit g = gauge_split(op);
  double al, be, de;
  line.line_coeffs(al, be, de);
  const double nrm = std::hypot(al, be);
  // Adapted frame: Y signed distance to the line, X the tangential coordinate.
  const double yx = al / nrm, yy = be / nrm;
  const double xx = -be / nrm, xy = al / nrm;
  const double x_off = de / nrm;

  const double k2 = g.mu2 - nu * nu;
  enum class Radial { trig, lin, hyper };
  const Radial kind = (std::abs(k2) <= 1e-12) ? Radial::lin
                      : (k2 > 0.0 ? Radial::trig : Radial::hyper);
  const double kap = std::sqrt(std::abs(k2));

  const double ga = -0.5 * g.a, gb = -0.5 * g.b;
  const double nu_ = nu;
  const bool cosp = cos_parity;

  const auto fval = [kind, kap](double y) {
    switch (kind) {
      case Radial::trig: return std::sin(kap * y);
      case Radial::lin: return y;
      case Radial::hyper: return std::sinh(kap * y);
    }
    return 0.0;
  };
  const auto fder = [kind, kap](double y) {
    switch (kind) {
      case Radial::trig: return kap * std::cos(kap * y);
      case Radial::lin: return 1.0;
      case Radial::hyper: return kap * std::cosh(kap * y);
    }
    return 0.0;
  };
  const auto gval = [nu_, cosp](double x) { return cosp ? std::cos(nu_ * x) : std::sin(nu_ * x); };
  const auto gder = [nu_, cosp](double x) {
    return cosp ? -nu_ * std::sin(nu_ * x) : nu_ * std::cos(nu_ * x);
  };

  SolutionField f;
  const char* branch = kind == Radial::trig ? "trig" : (kind == Radial::lin ? "linear" : "hyper");
  f.label = "line:" + std::string(branch) + ":nu=" + fmt(nu) +
            ":parity=" + (cos_parity ? "cos" : "sin");
  f.valid = [](double, double) { return true; };
  f.u = [=](double x, double y) {
    const double Y = yx * x + yy * y + x_off;  // de/nrm shifts Y, not X
    const double X = xx * x + xy * y;
    return std::exp(ga * x + gb * y) * fval(Y) * gval(X);
  };
  f.ux = [=](double x, double y) {
    const double Y = yx * x + yy * y + x_off;
    const double X = xx * x + xy * y;
    const double e = std::exp(ga * x + gb * y);
    return e * (ga * fval(Y) * gval(X) + fder(Y) * yx * gval(X) + fval(Y) * gder(X) * xx);
  };
  f.uy = [=](double x, double y) {
    const double Y = yx * x + yy * y + x_off;
    const double X = xx * x + xy * y;
    const double e = std::exp(ga * x + gb * y);
    return e * (gb * fval(Y) * gval(X) + fder(Y) * yy * gval(X) + fval(Y) * gder(X) * xy);
  };
  return f;
}

SolutionField circle_mode(const EllipticOperator& op, const AnalyticCurve& circle, int n,
                          bool cos_parity) {
  if (!circle.is_circle()) throw config_error("circle_mode: curve must be a circle");
  if (n < 1) throw config_error("circle_mode: mode index must be positive");
  const GaugeSplit g = gauge_split(op);
  const Vec2 c = circle.circle_center();
  const double rho = circle.circle_radius();
  const double ga = -0.5 * g.a, gb = -0.5 * g.b;
  const bool cosp = cos_parity;

  const bool helm = g.mu2 > 1e-12;
  if (!helm && std::abs(g.mu2) > 1e-12)
    throw config_error("circle_mode: modified-Helmholtz gauge (mu^2 < 0) is not supported");
  const double mu = helm ? std::sqrt(g.mu2) : 0.0;

  // Radial factor vanishing at r = rho: Bessel cross product for mu > 0,
  // (r/rho)^n - (r/rho)^{-n} otherwise.
  const double jrho = helm ? cylinder_j(n, mu * rho) : 0.0;
  const double yrho = helm ? cylinder_y(n, mu * rho) : 0.0;
  const auto wval = [=](double r) {
    if (helm) return cylinder_j(n, mu * r) * yrho - cylinder_y(n, mu * r) * jrho;
    return std::pow(r / rho, n) - std::pow(r / rho, -n);
  };
  const auto wder = [=](double r) {
    if (helm) return mu * (cylinder_j_prime(n, mu * r) * yrho - cylinder_y_prime(n, mu * r) * jrho);
    return (n / rho) * (std::pow(r / rho, n - 1) + std::pow(r / rho, -n - 1));
  };
  const auto tval = [=](double th) { return cosp ? std::cos(n * th) : std::sin(n * th); };
  const auto tder = [=](double th) {
    return cosp ? -double(n) * std::sin(n * th) : double(n) * std::cos(n * th);
  };

  SolutionField f;
  const char* family = helm ? "helmholtz" : (op.is_laplace() ? "laplace" : "gauge");
  f.label = "circle:" + std::string(family) + ":n=" + std::to_string(n) +
            ":parity=" + (cos_parity ? "cos" : "sin");
  f.valid = [=](double x, double y) {
    const double r = std::hypot(x - c.x, y - c.y);
    return r >= 0.15 * rho;  // radial factor blows up toward the center
  };
  const auto polar = [=](double x, double y, double& r, double& th) {
    r = std::hypot(x - c.x, y - c.y);
    th = std::atan2(y - c.y, x - c.x);
  };
  f.u = [=](double x, double y) {
    double r, th;
    polar(x, y, r, th);
    return std::exp(ga * x + gb * y) * wval(r) * tval(th);
  };
  f.ux = [=](double x, double y) {
    double r, th;
    polar(x, y, r, th);
    const double e = std::exp(ga * x + gb * y);
    const double wx = wder(r) * (x - c.x) / r;
    const double vx = wx * tval(th) + wval(r) * tder(th) * (-(y - c.y) / (r * r));
    return e * (ga * wval(r) * tval(th) + vx);
  };
  f.uy = [=](double x, double y) {
    double r, th;
    polar(x, y, r, th);
    const double e = std::exp(ga * x + gb * y);
    const double wy = wder(r) * (y - c.y) / r;
    const double vy = wy * tval(th) + wval(r) * tder(th) * ((x - c.x) / (r * r));
    return e * (gb * wval(r) * tval(th) + vy);
  };
  return f;
}

double pde_residual(const EllipticOperator& op, const SolutionField& f, Vec2 p, double h) {
  // fourth-order stencils: the second-order ones sit at ~1e-5 truncation near
  // the inner edge of the circle modes, where radial derivatives are large
  const auto d1 = [h](double m2, double m1, double p1, double p2) {
    return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
  };
  const auto d2 = [h](double m2, double m1, double c, double p1, double p2) {
    return (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
  };
  const double u0 = f.u(p.x, p.y);
  const double xm2 = f.u(p.x - 2 * h, p.y), xm1 = f.u(p.x - h, p.y);
  const double xp1 = f.u(p.x + h, p.y), xp2 = f.u(p.x + 2 * h, p.y);
  const double ym2 = f.u(p.x, p.y - 2 * h), ym1 = f.u(p.x, p.y - h);
  const double yp1 = f.u(p.x, p.y + h), yp2 = f.u(p.x, p.y + 2 * h);
  const double lap = d2(xm2, xm1, u0, xp1, xp2) + d2(ym2, ym1, u0, yp1, yp2);
  return std::abs(lap + op.a() * d1(xm2, xm1, xp1, xp2) + op.b() * d1(ym2, ym1, yp1, yp2) +
                  op.c_at(p.x, p.y) * u0);
}

}  // namespace ellref
