#include "ellref/quadrature.hpp"

#include <cmath>

#include "ellref/errors.hpp"

namespace ellref {

double Path::length() const {
  double len = 0.0;
  for (size_t i = 1; i < v.size(); ++i) len += dist(v[i - 1], v[i]);
  return len;
}

namespace {

struct SimpsonState {
  const std::function<cplx(double)>* f = nullptr;
  double error = 0.0;
  long evals = 0;
  bool converged = true;
  int max_depth = 32;
};

cplx simpson_rec(SimpsonState& st, double a, double b, cplx fa, cplx fm, cplx fb, cplx s,
                 double tol, int depth) {
  const double m = 0.5 * (a + b);
  const cplx fl = (*st.f)(0.5 * (a + m));
  const cplx fr = (*st.f)(0.5 * (m + b));
  st.evals += 2;
  const cplx sl = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
  const cplx sr = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
  const cplx s2 = sl + sr;
  const double err = std::abs(s2 - s) / 15.0;
  if (err <= tol || depth >= st.max_depth) {
    if (err > tol) st.converged = false;
    st.error += err;
    return s2 + (s2 - s) / 15.0;
  }
  return simpson_rec(st, a, m, fa, fl, fm, sl, 0.5 * tol, depth + 1) +
         simpson_rec(st, m, b, fm, fr, fb, sr, 0.5 * tol, depth + 1);
}

cplx simpson(SimpsonState& st, const std::function<cplx(double)>& f, double tol) {
  st.f = &f;
  const cplx fa = f(0.0), fm = f(0.5), fb = f(1.0);
  st.evals += 3;
  const cplx s = 1.0 / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(st, 0.0, 1.0, fa, fm, fb, s, tol, 0);
}

}  // namespace

QuadResult integrate_form(const FormCoeffs& form, const Path& path, double tol, int max_depth) {
  if (path.v.size() < 2) throw config_error("integrate_form: path needs at least two vertices");
  for (size_t i = 1; i < path.v.size(); ++i)
    if (dist(path.v[i - 1], path.v[i]) == 0.0)
      throw config_error("integrate_form: repeated consecutive path vertex");
  const double total_len = path.length();

  QuadResult res;
  for (size_t i = 1; i < path.v.size(); ++i) {
    const Vec2 a = path.v[i - 1], b = path.v[i];
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double seg_tol = tol * (dist(a, b) / total_len);
    SimpsonState st;
    st.max_depth = max_depth;
    const auto g = [&](double t) {
      const double x = a.x + t * dx, y = a.y + t * dy;
      const auto [p, q] = form(x, y);
      return p * dx + q * dy;
    };
    res.value += simpson(st, g, seg_tol);
    res.error += st.error;
    res.evals += st.evals;
    res.converged = res.converged && st.converged;
  }
  return res;
}

QuadResult integrate_complex(const std::function<cplx(cplx)>& f, cplx a, cplx b, double tol,
                             int max_depth) {
  if (a == b) throw config_error("integrate_complex: degenerate segment");
  QuadResult res;
  SimpsonState st;
  st.max_depth = max_depth;
  const cplx d = b - a;
  const auto g = [&](double t) { return f(a + t * d) * d; };
  res.value = simpson(st, g, tol);
  res.error = st.error;
  res.evals = st.evals;
  res.converged = st.converged;
  return res;
}

cplx closed_contour(const std::function<cplx(cplx)>& f, cplx center, double rho, int n) {
  if (n < 8) throw config_error("closed_contour: need at least 8 nodes");
  if (rho <= 0.0) throw config_error("closed_contour: radius must be positive");
  cplx acc(0.0);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    const cplx w = rho * std::polar(1.0, th);
    acc += f(center + w) * (kI * w);  // dz = i w dtheta
  }
  return acc * (2.0 * kPi / n);
}

cplx closed_contour_form(const FormCoeffs& form, Vec2 center, double rho, int n) {
  if (n < 8) throw config_error("closed_contour_form: need at least 8 nodes");
  if (rho <= 0.0) throw config_error("closed_contour_form: radius must be positive");
  cplx acc(0.0);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    const double x = center.x + rho * std::cos(th), y = center.y + rho * std::sin(th);
    const auto [p, q] = form(x, y);
    acc += p * (-rho * std::sin(th)) + q * (rho * std::cos(th));
  }
  return acc * (2.0 * kPi / n);
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z0, int order, double radius,
                       int n) {
  if (order < 1) throw config_error("cauchy_derivative: order must be positive");
  if (n < 2 * order + 2) throw config_error("cauchy_derivative: too few contour nodes");
  cplx acc(0.0);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * kPi * j / n;
    acc += f(z0 + radius * std::polar(1.0, th)) * std::polar(1.0, -order * th);
  }
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) fact *= j;
  return acc * fact / (double(n) * std::pow(radius, order));
}

}  // namespace ellref
