#include <cmath>

#include "doctest.h"
#include "ellref/errors.hpp"
#include "ellref/series.hpp"

using namespace ellref;

TEST_CASE("series product reproduces the Cauchy rule") {
  // (1 - v)^-1 * (1 - v) = 1 in the truncated algebra
  const int n = 12;
  Series1 geo(n);
  for (int k = 0; k <= n; ++k) geo.c[k] = 1.0;
  const Series1 one_minus = Series1::linear(1.0, -1.0, n);
  const Series1 prod = geo * one_minus;
  CHECK(std::abs(prod.c[0] - 1.0) == 0.0);
  for (int k = 1; k <= n; ++k) CHECK(std::abs(prod.c[k]) == 0.0);
}

TEST_CASE("reciprocal inverts and rejects zero constant term") {
  const int n = 10;
  Series1 s = Series1::linear(2.0, cplx(0.3, -0.4), n);
  s.c[3] = cplx(-0.1, 0.2);
  const Series1 r = s.reciprocal();
  const Series1 prod = s * r;
  CHECK(std::abs(prod.c[0] - 1.0) < 1e-15);
  for (int k = 1; k <= n; ++k) CHECK(std::abs(prod.c[k]) < 1e-15);

  // geometric check: 1/(1 - v) has unit coefficients
  const Series1 g = Series1::linear(1.0, -1.0, n).reciprocal();
  for (int k = 0; k <= n; ++k) CHECK(std::abs(g.c[k] - 1.0) < 1e-15);

  CHECK_THROWS_AS(Series1::linear(0.0, 1.0, n).reciprocal(), singularity_error);
}

TEST_CASE("derivative and antiderivative invert each other below the top degree") {
  const int n = 9;
  Series1 s(n);
  for (int k = 0; k <= n; ++k) s.c[k] = cplx(std::sin(k + 1.0), std::cos(2.0 * k));
  const Series1 round = s.antiderivative().derivative();
  for (int k = 0; k < n; ++k) CHECK(std::abs(round.c[k] - s.c[k]) < 1e-15);
  CHECK(std::abs(round.c[n]) == 0.0);  // dropped by the truncation
  CHECK(std::abs(s.antiderivative().c[0]) == 0.0);
}

TEST_CASE("exp_of matches the exponential coefficients") {
  const int n = 14;
  const cplx a(0.7, -0.3);
  const Series1 e = exp_of(Series1::linear(0.0, a, n));
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    CHECK(std::abs(e.c[k] - std::pow(a, k) / fact) < 1e-15 * std::abs(e.c[k]) + 1e-18);
  }
  const cplx v(0.2, 0.1);
  CHECK(std::abs(e.eval(v) - std::exp(a * v)) < 1e-14);
}

TEST_CASE("bivariate evaluation matches direct expansion") {
  const int n = 6;
  Series2 s(n);
  s.at(0, 0) = 1.5;
  s.at(2, 1) = cplx(0.0, -2.0);
  s.at(1, 3) = 0.25;
  s.at(4, 4) = cplx(1.0, 1.0);
  const cplx w(0.3, -0.2), v(-0.1, 0.4);
  const cplx direct = cplx(1.5) + cplx(0.0, -2.0) * w * w * v + 0.25 * w * v * v * v +
                      cplx(1.0, 1.0) * std::pow(w, 4) * std::pow(v, 4);
  CHECK(std::abs(s.eval(w, v) - direct) < 1e-15);

  // partials agree with finite differences of eval
  const double h = 1e-6;
  const cplx dw_fd = (s.eval(w + h, v) - s.eval(w - h, v)) / (2.0 * h);
  const cplx dv_fd = (s.eval(w, v + h) - s.eval(w, v - h)) / (2.0 * h);
  CHECK(std::abs(s.d_w().eval(w, v) - dw_fd) < 1e-8);
  CHECK(std::abs(s.d_v().eval(w, v) - dv_fd) < 1e-8);
}

TEST_CASE("bivariate integrals invert the partials and vanish on the axes") {
  const int n = 7;
  Series2 s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) s.at(i, j) = cplx(1.0 / (1 + i + j), double(i - j));
  const Series2 rw = s.integ_w().d_w();
  const Series2 rv = s.integ_v().d_v();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < n) CHECK(std::abs(rw.at(i, j) - s.at(i, j)) < 1e-15);
      if (j < n) CHECK(std::abs(rv.at(i, j) - s.at(i, j)) < 1e-15);
    }
  for (int j = 0; j <= n; ++j) CHECK(std::abs(s.integ_w().at(0, j)) == 0.0);
  for (int i = 0; i <= n; ++i) CHECK(std::abs(s.integ_v().at(i, 0)) == 0.0);
}

TEST_CASE("substitution with zero constant term is exact under truncation") {
  // p(w, v) = (w + v)^3 at degree 8, then w = s(v) = v - v^2: the composition
  // p(s(v), v) is a polynomial of degree 6, fully representable, so subst_w
  // must reproduce it exactly.
  const int n = 8;
  const Series2 wv = Series2::from_w(Series1::linear(0.0, 1.0, n), n) +
                     Series2::from_v(Series1::linear(0.0, 1.0, n), n);
  const Series2 p = wv * wv * wv;

  Series1 s(n);
  s.c[1] = 1.0;
  s.c[2] = -1.0;
  const Series1 composed = p.subst_w(s);

  // reference: ((s(v) + v))^3 expanded in the univariate algebra
  const Series1 inner = s + Series1::linear(0.0, 1.0, n);
  const Series1 ref = inner * inner * inner;
  for (int k = 0; k <= n; ++k) CHECK(std::abs(composed.c[k] - ref.c[k]) < 1e-14);

  // pointwise spot check
  const cplx v(0.21, -0.13);
  CHECK(std::abs(composed.eval(v) - p.eval(s.eval(v), v)) < 1e-14);

  // mirrored substitution
  const Series1 composed_v = p.subst_v(s);
  CHECK(std::abs(composed_v.eval(v) - p.eval(v, s.eval(v))) < 1e-14);
}

TEST_CASE("from_w and from_v lift onto the axes") {
  const int n = 5;
  Series1 s(n);
  for (int k = 0; k <= n; ++k) s.c[k] = cplx(k, -k);
  const Series2 w = Series2::from_w(s, n), v = Series2::from_v(s, n);
  for (int k = 0; k <= n; ++k) {
    CHECK(w.at(k, 0) == s.c[k]);
    CHECK(v.at(0, k) == s.c[k]);
  }
  CHECK(w.max_abs() == doctest::Approx(std::abs(cplx(n, -n))));
}
