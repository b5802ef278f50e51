#include <cmath>

#include "doctest.h"
#include "ellref/elliptic_operator.hpp"
#include "ellref/errors.hpp"
#include "ellref/riemann.hpp"

using namespace ellref;

TEST_CASE("characteristic coefficients encode the real ones") {
  const auto op = EllipticOperator::constant(1.3, -0.8, 2.1);
  CHECK(std::abs(op.A() + op.B() - cplx(0.65)) < 1e-15);
  CHECK(std::abs(op.A() - op.B() - cplx(0, -0.4)) < 1e-15);
  CHECK(std::abs(4.0 * op.C(cplx(0.7, 0.2), cplx(0.1, -0.9)) - cplx(2.1)) < 1e-15);
  CHECK(std::abs(op.kappa() - (op.A() * op.B() - cplx(2.1 / 4.0))) < 1e-16);

  const auto cc = char_coeffs(op);
  CHECK(cc.constant);
  CHECK(std::abs(cc.F(cplx(1, 2), cplx(3, 4)) + cc.C(cplx(1, 2), cplx(3, 4))) == 0.0);
  CHECK(std::abs(cc.kappa - op.kappa()) == 0.0);

  const auto g = gauge_split(op);
  CHECK(g.mu2 == doctest::Approx(2.1 - 0.25 * (1.3 * 1.3 + 0.8 * 0.8)));
  // kappa = -mu2/4 ties the two descriptions together
  CHECK(std::abs(op.kappa() - cplx(-g.mu2 / 4.0)) < 1e-16);
}

TEST_CASE("variable zero-order coefficient restricts to the real slice correctly") {
  const auto op = EllipticOperator::linear_c(0.4, -0.2, 1.0, 0.3, -0.7);
  CHECK(!op.is_constant());
  for (auto [x, y] : {std::pair{0.3, -1.2}, {2.0, 0.5}}) {
    const CPoint p = CPoint::from_real(x, y);
    const cplx cz = op.C(p.z, p.zeta);
    CHECK(std::abs(cz.imag()) < 1e-15);
    CHECK(cz.real() == doctest::Approx(op.c_at(x, y) / 4.0));
  }
  CHECK_THROWS_AS(op.c(), config_error);
  CHECK_THROWS_AS(op.kappa(), config_error);
  CHECK_THROWS_AS(gauge_split(op), config_error);
}

TEST_CASE("Riemann function closed form: normalization and boundary data") {
  const auto op = EllipticOperator::constant(0.9, -0.4, 1.7);
  const CPoint p0 = CPoint::from_real(0.2, -0.3);

  CHECK(riemann_const(op, p0, p0) == cplx(1.0));
  CHECK(riemann_const(EllipticOperator::laplace(), p0,
                      CPoint(p0.z + cplx(0.4, 0.1), p0.zeta + cplx(-0.2, 0.3))) == cplx(1.0));

  // on the characteristic lines through p0 the sum collapses to the exponential
  const cplx dz(0.37, 0.18), dzeta(-0.25, 0.4);
  const cplx on_z = riemann_const(op, p0, CPoint(p0.z + dz, p0.zeta));
  CHECK(std::abs(on_z - std::exp(op.B() * dz)) < 1e-14);
  const cplx on_zeta = riemann_const(op, p0, CPoint(p0.z, p0.zeta + dzeta));
  CHECK(std::abs(on_zeta - std::exp(op.A() * dzeta)) < 1e-14);
}

TEST_CASE("Goursat collocation reproduces the constant-coefficient closed form") {
  const auto op = EllipticOperator::constant(1.0, 0.5, 0.8);
  const CPoint p0 = CPoint::from_real(0.2, 0.1);
  const cplx z1 = p0.z + cplx(0.5, 0.3), zeta1 = p0.zeta + cplx(0.4, -0.2);
  const GoursatField g = riemann_goursat(op, p0, z1, zeta1, 20);
  CHECK(g.iterations > 0);
  CHECK(g.final_diff < 1e-12);

  double worst = 0.0;
  for (int i = 0; i <= g.n; i += 5)
    for (int j = 0; j <= g.n; j += 5) {
      const cplx ref = riemann_const(op, p0, CPoint(g.z_nodes[i], g.zeta_nodes[j]));
      worst = std::max(worst, std::abs(g.at(i, j) - ref));
    }
  CHECK(worst < 1e-10);

  // boundary rows carry the characteristic exponentials exactly
  for (int i = 0; i <= g.n; i += 4) {
    CHECK(std::abs(g.at(i, 0) - std::exp(op.B() * (g.z_nodes[i] - p0.z))) < 1e-11);
    CHECK(std::abs(g.at(0, i) - std::exp(op.A() * (g.zeta_nodes[i] - p0.zeta))) < 1e-11);
  }

  CHECK_THROWS_AS(riemann_goursat(op, p0, z1, zeta1, 20, 1e-12, 2), convergence_error);
}

TEST_CASE("Goursat collocation handles the variable zero-order family") {
  const auto op = EllipticOperator::linear_c(0.6, -0.3, 0.9, 0.5, -0.4);
  const CPoint p0 = CPoint::from_real(-0.1, 0.2);
  const cplx z1 = p0.z + cplx(0.4, 0.2), zeta1 = p0.zeta + cplx(0.3, -0.3);
  const GoursatField g = riemann_goursat(op, p0, z1, zeta1, 24);
  CHECK(g.final_diff < 1e-12);
  CHECK(g.at(0, 0) == cplx(1.0));

  // A and B are still constant, so the characteristic boundary data is unchanged
  CHECK(std::abs(g.at(g.n, 0) - std::exp(op.B() * (z1 - p0.z))) < 1e-11);
  CHECK(std::abs(g.at(0, g.n) - std::exp(op.A() * (zeta1 - p0.zeta))) < 1e-11);

  // doubling the order must not move the interior values
  const GoursatField g2 = riemann_goursat(op, p0, z1, zeta1, 32);
  CHECK(std::abs(g.corner() - g2.corner()) < 1e-11);
}

TEST_CASE("Cauchy kernel family f_k: closed forms, derivative chain, branches") {
  const cplx xi(0.6, 0.45);
  CHECK(std::abs(f_k(0, xi) - std::log(xi)) < 1e-15);
  CHECK(std::abs(f_k(1, xi) - xi * (std::log(xi) - 1.0)) < 1e-15);
  CHECK(std::abs(f_k(-1, xi) - 1.0 / xi) < 1e-15);
  CHECK(std::abs(f_k(-2, xi) + 1.0 / (xi * xi)) < 1e-15);

  // d f_k / d xi = f_{k-1}
  const double h = 1e-6;
  for (int k : {-1, 0, 1, 2, 3}) {
    const cplx fd = (f_k(k, xi + h) - f_k(k, xi - h)) / (2.0 * h);
    CHECK(std::abs(fd - f_k(k - 1, xi)) < 1e-8);
  }

  // branch index shifts by the period of the logarithm
  for (int k : {0, 1, 3}) {
    cplx pow = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= k; ++j) pow *= xi, fact *= j;
    CHECK(std::abs(f_k(k, xi, 1) - f_k(k, xi) - pow / fact * 2.0 * kPi * kI) < 1e-15);
    CHECK(std::abs(f_k(-2, xi, 1) - f_k(-2, xi)) == 0.0);  // no branch below k = 0
  }

  CHECK_THROWS_AS(f_k(0, cplx(0.0)), singularity_error);
  CHECK_THROWS_AS(f_k(-1, cplx(0.0)), singularity_error);
}

TEST_CASE("transport coefficients: base case and ratio recursion") {
  const auto op = EllipticOperator::constant(0.7, -0.5, 1.2);
  const CPoint p0 = CPoint::from_real(0.1, 0.3);
  const auto [a1, a2] = alpha_coeffs(op, p0);
  CHECK(a1.family == 1);
  CHECK(a2.family == 2);

  const cplx z(0.8, 0.25), zeta(0.4, -0.6);
  const cplx E = std::exp(op.A() * (zeta - p0.zeta) + op.B() * (z - p0.z));
  CHECK(std::abs(a1.eval(0, z, zeta) - E) < 1e-14);
  CHECK(std::abs(a2.eval(0, z, zeta) - E) < 1e-14);

  const cplx psi1 = z - p0.z, psi2 = zeta - p0.zeta;
  for (int k = 0; k < 6; ++k) {
    const cplx r1 = a1.eval(k + 1, z, zeta) / a1.eval(k, z, zeta);
    const cplx r2 = a2.eval(k + 1, z, zeta) / a2.eval(k, z, zeta);
    CHECK(std::abs(r1 - op.kappa() * psi2 / double(k + 1)) < 1e-13);
    CHECK(std::abs(r2 - op.kappa() * psi1 / double(k + 1)) < 1e-13);
  }
}
