#include <cmath>

#include "doctest.h"
#include "ellref/errors.hpp"
#include "ellref/quadrature.hpp"

using namespace ellref;

TEST_CASE("1-form along a polyline") {
  // x dy - y dx along (0,0) -> (1,0) -> (1,1): only the vertical leg contributes
  const FormCoeffs rot = [](double x, double y) { return std::pair<cplx, cplx>{-y, x}; };
  Path path{{{0, 0}, {1, 0}, {1, 1}}};
  const QuadResult r = integrate_form(rot, path, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value - cplx(1.0)) < 1e-12);
  CHECK(path.length() == doctest::Approx(2.0));

  const FormCoeffs expx = [](double x, double) { return std::pair<cplx, cplx>{std::exp(x), 0.0}; };
  const QuadResult e = integrate_form(expx, Path{{{0, 0}, {1, 0}}}, 1e-12);
  CHECK(std::abs(e.value - cplx(std::exp(1.0) - 1.0)) < 1e-12);
  CHECK(e.error < 1e-10);
  CHECK(e.evals > 0);
}

TEST_CASE("degenerate paths are rejected") {
  const FormCoeffs one = [](double, double) { return std::pair<cplx, cplx>{1.0, 0.0}; };
  CHECK_THROWS_AS(integrate_form(one, Path{{{0, 0}}}, 1e-8), config_error);
  CHECK_THROWS_AS(integrate_form(one, Path{{}}, 1e-8), config_error);
  CHECK_THROWS_AS(integrate_form(one, Path{{{0, 0}, {0, 0}, {1, 0}}}, 1e-8), config_error);
}

TEST_CASE("depth cap reports non-convergence without losing the estimate") {
  // an irrational-frequency oscillation cannot alias to a smooth function on
  // the dyadic refinement grid, so two levels are genuinely not enough
  const FormCoeffs wiggle = [](double x, double) {
    return std::pair<cplx, cplx>{std::cos(127.0 * x), 0.0};
  };
  const QuadResult r = integrate_form(wiggle, Path{{{0, 0}, {1, 0}}}, 1e-14, 2);
  CHECK(!r.converged);
  CHECK(std::isfinite(r.value.real()));

  const QuadResult full = integrate_form(wiggle, Path{{{0, 0}, {1, 0}}}, 1e-12);
  CHECK(full.converged);
  CHECK(std::abs(full.value - std::sin(127.0) / 127.0) < 1e-10);
}

TEST_CASE("complex segment integral") {
  const QuadResult r = integrate_complex([](cplx z) { return z * z; }, cplx(0.0), cplx(1.0, 1.0),
                                         1e-13);
  const cplx ref = std::pow(cplx(1.0, 1.0), 3) / 3.0;
  CHECK(std::abs(r.value - ref) < 1e-12);
}

TEST_CASE("closed contour picks up residues") {
  const cplx c(0.3, -0.2);
  const cplx r1 = closed_contour([&](cplx z) { return 1.0 / (z - c); }, c, 0.7);
  CHECK(std::abs(r1 - 2.0 * kPi * kI) < 1e-12);

  const cplx r2 = closed_contour([&](cplx z) { return std::exp(z) / (z - c); }, c, 0.5, 96);
  CHECK(std::abs(r2 - 2.0 * kPi * kI * std::exp(c)) < 1e-12);

  CHECK_THROWS_AS(closed_contour([](cplx) { return cplx(0.0); }, cplx(0.0), 0.0), config_error);
  CHECK_THROWS_AS(closed_contour([](cplx) { return cplx(0.0); }, cplx(0.0), 1.0, 4), config_error);
}

TEST_CASE("closed contour of the area form") {
  const FormCoeffs rot = [](double x, double y) { return std::pair<cplx, cplx>{-y, x}; };
  const cplx a = closed_contour_form(rot, {0.4, 0.1}, 1.3);
  CHECK(std::abs(a - cplx(2.0 * kPi * 1.3 * 1.3)) < 1e-11);
}

TEST_CASE("Cauchy derivatives of the exponential") {
  const cplx z0(0.2, 0.4);
  for (int m : {1, 2}) {
    const cplx d = cauchy_derivative([](cplx z) { return std::exp(z); }, z0, m, 0.05, 32);
    CHECK(std::abs(d - std::exp(z0)) < 1e-10);
  }
  CHECK_THROWS_AS(cauchy_derivative([](cplx z) { return z; }, cplx(0.0), 0), config_error);
}
