#include "ellref/curve.hpp"

#include <cmath>

#include "ellref/errors.hpp"

namespace ellref {

AnalyticCurve AnalyticCurve::line(double alpha, double beta, double delta) {
  const double n2 = alpha * alpha + beta * beta;
  if (n2 == 0.0) throw config_error("line: alpha and beta both zero");
  AnalyticCurve c;
  c.kind_ = Kind::line;
  c.alpha_ = alpha;
  c.beta_ = beta;
  c.delta_ = delta;
  // conj(z) restricted to alpha x + beta y + delta = 0 continues to m z + q.
  c.m_ = cplx(beta * beta - alpha * alpha, 2.0 * alpha * beta) / n2;
  c.q_ = cplx(-2.0 * alpha * delta, 2.0 * beta * delta) / n2;
  c.scale_ = 1.0;
  return c;
}

AnalyticCurve AnalyticCurve::circle(Vec2 center, double radius) {
  if (radius <= 0.0) throw config_error("circle: radius must be positive");
  AnalyticCurve c;
  c.kind_ = Kind::circle;
  c.center_ = to_cplx(center);
  c.radius_ = radius;
  c.scale_ = radius;
  return c;
}

AnalyticCurve AnalyticCurve::custom(Custom cu) {
  if (!cu.schwarz || !cu.mirror || !cu.schwarz_d)
    throw config_error("custom curve: schwarz, mirror and schwarz_d are all required");
  if (cu.scale <= 0.0 || cu.series_radius <= 0.0)
    throw config_error("custom curve: scale and series_radius must be positive");
  AnalyticCurve c;
  c.kind_ = Kind::custom;
  c.custom_ = std::move(cu);
  c.scale_ = c.custom_.scale;
  return c;
}

cplx AnalyticCurve::schwarz(cplx z) const {
  switch (kind_) {
    case Kind::line:
      return m_ * z + q_;
    case Kind::circle: {
      const cplx d = z - center_;
      if (std::abs(d) < 1e-14 * radius_) throw singularity_error("schwarz: circle center is a pole");
      return std::conj(center_) + radius_ * radius_ / d;
    }
    case Kind::custom:
      return custom_.schwarz(z);
  }
  throw config_error("schwarz: bad curve kind");
}

cplx AnalyticCurve::schwarz_inverse(cplx zeta) const {
  switch (kind_) {
    case Kind::line:
      return std::conj(m_) * zeta + std::conj(q_);
    case Kind::circle: {
      const cplx d = zeta - std::conj(center_);
      if (std::abs(d) < 1e-14 * radius_) throw singularity_error("mirror: conjugate center is a pole");
      return center_ + radius_ * radius_ / d;
    }
    case Kind::custom:
      return custom_.mirror(zeta);
  }
  throw config_error("schwarz_inverse: bad curve kind");
}

cplx AnalyticCurve::schwarz_deriv(cplx z) const {
  switch (kind_) {
    case Kind::line:
      return m_;
    case Kind::circle: {
      const cplx d = z - center_;
      if (std::abs(d) < 1e-14 * radius_) throw singularity_error("schwarz_deriv: circle center is a pole");
      return -radius_ * radius_ / (d * d);
    }
    case Kind::custom:
      return custom_.schwarz_d(z);
  }
  throw config_error("schwarz_deriv: bad curve kind");
}

bool AnalyticCurve::contains(Vec2 p, double tol) const {
  const cplx z = to_cplx(p);
  return std::abs(schwarz(z) - std::conj(z)) <= tol * std::max(1.0, scale_);
}

double AnalyticCurve::side(Vec2 p) const {
  switch (kind_) {
    case Kind::line:
      return alpha_ * p.x + beta_ * p.y + delta_;
    case Kind::circle: {
      const cplx d = to_cplx(p) - center_;
      return radius_ * radius_ - std::norm(d);
    }
    case Kind::custom:
      throw config_error("side: undefined for custom curves");
  }
  throw config_error("side: bad curve kind");
}

void AnalyticCurve::line_coeffs(double& alpha, double& beta, double& delta) const {
  if (kind_ != Kind::line) throw config_error("line_coeffs: not a line");
  alpha = alpha_;
  beta = beta_;
  delta = delta_;
}

Vec2 AnalyticCurve::circle_center() const {
  if (kind_ != Kind::circle) throw config_error("circle_center: not a circle");
  return to_vec(center_);
}

double AnalyticCurve::circle_radius() const {
  if (kind_ != Kind::circle) throw config_error("circle_radius: not a circle");
  return radius_;
}

namespace {

// Taylor coefficients of f around zc by trapezoid Cauchy integrals; spectrally
// accurate for f holomorphic on |w| <= r.
Series1 cauchy_taylor(const std::function<cplx(cplx)>& f, cplx zc, double r, int deg) {
  const int nsamp = std::max(4 * (deg + 1), 64);
  std::vector<cplx> fv(nsamp);
  for (int j = 0; j < nsamp; ++j) {
    const double th = 2.0 * kPi * j / nsamp;
    fv[j] = f(zc + r * std::polar(1.0, th));
  }
  Series1 s(deg);
  for (int k = 0; k <= deg; ++k) {
    cplx acc(0.0);
    for (int j = 0; j < nsamp; ++j) {
      const double th = 2.0 * kPi * j / nsamp;
      acc += fv[j] * std::polar(1.0, -k * th);
    }
    s.c[k] = acc / (double(nsamp) * std::pow(r, k));
  }
  return s;
}

// S(zc + w) for a circle: conj(c) + rho^2/(d + w) = conj(c) + (rho^2/d) sum (-w/d)^k.
Series1 pole_series(cplx affine, double rho2, cplx d, int deg) {
  if (std::abs(d) == 0.0) throw singularity_error("curve series: expansion center at pole");
  Series1 s(deg);
  s.c[0] = affine + rho2 / d;
  cplx t = rho2 / d;
  for (int k = 1; k <= deg; ++k) {
    t *= -1.0 / d;
    s.c[k] = t;
  }
  return s;
}

}  // namespace

Series1 AnalyticCurve::schwarz_series(cplx zc, int deg) const {
  switch (kind_) {
    case Kind::line:
      return Series1::linear(m_ * zc + q_, m_, deg);
    case Kind::circle:
      return pole_series(std::conj(center_), radius_ * radius_, zc - center_, deg);
    case Kind::custom:
      return cauchy_taylor(custom_.schwarz, zc, custom_.series_radius, deg);
  }
  throw config_error("schwarz_series: bad curve kind");
}

Series1 AnalyticCurve::mirror_series(cplx zetac, int deg) const {
  switch (kind_) {
    case Kind::line:
      return Series1::linear(std::conj(m_) * zetac + std::conj(q_), std::conj(m_), deg);
    case Kind::circle:
      return pole_series(center_, radius_ * radius_, zetac - std::conj(center_), deg);
    case Kind::custom:
      return cauchy_taylor(custom_.mirror, zetac, custom_.series_radius, deg);
  }
  throw config_error("mirror_series: bad curve kind");
}

Vec2 reflect_point(const AnalyticCurve& curve, Vec2 p) {
  return to_vec(std::conj(curve.schwarz(to_cplx(p))));
}

Vec2 anchor_on_curve(const AnalyticCurve& curve, Vec2 p) {
  switch (curve.kind()) {
    case AnalyticCurve::Kind::line: {
      double a, b, d;
      curve.line_coeffs(a, b, d);
      const double f = (a * p.x + b * p.y + d) / (a * a + b * b);
      return {p.x - f * a, p.y - f * b};
    }
    case AnalyticCurve::Kind::circle: {
      const Vec2 c = curve.circle_center();
      const double r = dist(p, c);
      if (r < 1e-14 * curve.circle_radius())
        throw singularity_error("anchor_on_curve: projection undefined at circle center");
      const double s = curve.circle_radius() / r;
      return {c.x + s * (p.x - c.x), c.y + s * (p.y - c.y)};
    }
    case AnalyticCurve::Kind::custom: {
      cplx z = to_cplx(p);
      for (int it = 0; it < 200; ++it) {
        const cplx rz = std::conj(curve.schwarz(z));
        if (std::abs(rz - z) <= 1e-13 * curve.scale()) return to_vec(z);
        z = 0.5 * (z + rz);
      }
      throw convergence_error("anchor_on_curve: contraction did not settle",
                              std::abs(std::conj(curve.schwarz(z)) - z));
    }
  }
  throw config_error("anchor_on_curve: bad curve kind");
}

}  // namespace ellref
