#include <cmath>

#include "doctest.h"
#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/errors.hpp"
#include "ellref/manufactured.hpp"
#include "ellref/reflectcore.hpp"

using namespace ellref;

TEST_CASE("strategy dispatch table") {
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const auto line = AnalyticCurve::line(0, 1, 0);

  CHECK(dispatch(EllipticOperator::laplace(), circle).kind == StrategyKind::schwarz_p2p);
  CHECK(dispatch(EllipticOperator::laplace(), line).kind == StrategyKind::schwarz_p2p);
  CHECK(dispatch(EllipticOperator::helmholtz(1.0), line).kind == StrategyKind::line_p2p);
  CHECK(dispatch(EllipticOperator::constant(1.0, 0.5, 0.3125), circle).kind ==
        StrategyKind::gauge_p2p);
  CHECK(dispatch(EllipticOperator::helmholtz(1.0), circle).kind == StrategyKind::nonlocal);
  CHECK(dispatch(EllipticOperator::constant(1.0, 1.0, 2.0), circle).kind ==
        StrategyKind::nonlocal);
  CHECK(!dispatch(EllipticOperator::helmholtz(1.0), circle).reason.empty());
}

TEST_CASE("point laws: closed-form values and preconditions") {
  const auto line = AnalyticCurve::line(0, 1, 0);
  const auto op = EllipticOperator::constant(0.0, 1.0, 0.3);
  // u(P) = -exp(b (y_Q - y_P)/2) u(Q) = -exp(-b y_P) u(Q) across y = 0
  CHECK(reflect_line(op, line, {0.3, 0.4}, 1.0) == doctest::Approx(-std::exp(-0.4)));

  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  CHECK_THROWS_AS(reflect_line(op, circle, {0.3, 0.4}, 1.0), config_error);
  CHECK_THROWS_AS(reflect_gauge(EllipticOperator::helmholtz(1.0), circle, {1.1, 0.0}, 1.0),
                  config_error);

  const auto gauge = EllipticOperator::constant(1.0, 0.5, 0.3125);
  const Vec2 p{1.1, 0.2};
  const Vec2 q = reflect_point(circle, p);
  const double expect = -std::exp(0.5 * (1.0 * (q.x - p.x) + 0.5 * (q.y - p.y)));
  CHECK(reflect_gauge(gauge, circle, p, 1.0) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("reflect guards: order, coefficients, validity, anchor") {
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const auto op = EllipticOperator::helmholtz(1.0);
  const SolutionField f = circle_mode(op, circle, 1);

  ReflectOptions bad_order;
  bad_order.order = 9;
  CHECK_THROWS_AS(reflect(op, circle, f, {1.1, 0.0}, bad_order), config_error);
  bad_order.order = 0;
  CHECK_THROWS_AS(reflect(op, circle, f, {1.1, 0.0}, bad_order), config_error);

  CHECK_THROWS_AS(reflect(EllipticOperator::linear_c(0, 0, 1, 0.2, 0), circle, f, {1.1, 0.0}),
                  config_error);

  CHECK_THROWS_WITH_AS(reflect(op, circle, f, {1.3, 0.0}),
                       "reflect: point too far from the curve for trustworthy continuation",
                       config_error);

  ReflectOptions off_anchor;
  off_anchor.anchor = Vec2{1.05, 0.1};
  CHECK_THROWS_WITH_AS(reflect(op, circle, f, {1.1, 0.0}, off_anchor),
                       "reflect: anchor override must lie on the curve", config_error);
}

TEST_CASE("reflect refuses a mirror point outside the field's validity region") {
  const auto line = AnalyticCurve::line(0, 1, 0);
  const auto lap = EllipticOperator::laplace();
  const SolutionField f = circle_mode(lap, AnalyticCurve::circle({0, 0.4}, 2.0), 1);
  CHECK_THROWS_WITH_AS(reflect(lap, line, f, {0.05, -0.2}),
                       "reflect: mirror point is outside the field's validity region",
                       config_error);
}

TEST_CASE("non-local continuation reproduces a Helmholtz mode") {
  const auto op = EllipticOperator::helmholtz(1.0);
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const SolutionField f = circle_mode(op, circle, 1);
  const Vec2 p{1.1 * std::cos(0.4), 1.1 * std::sin(0.4)};

  ReflectOptions opt;
  opt.order = 5;
  opt.tol = 1e-9;
  const ReflectionReport rep = reflect(op, circle, f, p, opt);
  CHECK(rep.strategy.kind == StrategyKind::nonlocal);
  REQUIRE(rep.path.size() == 2);
  CHECK(circle.contains(rep.path.front()));

  const double truth = f.u(p.x, p.y);
  CHECK(std::abs(rep.total - truth) < 1e-3 * std::abs(truth));
  CHECK(rep.diag.imag_residue < 1e-6);
  CHECK(rep.diag.v_sup > 0.0);
  CHECK(rep.diag.c0 == 1.0);  // Helmholtz has a = b = 0
}

TEST_CASE("the continued value does not depend on the anchor or the path") {
  const auto op = EllipticOperator::helmholtz(1.0);
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const SolutionField f = circle_mode(op, circle, 1);
  const Vec2 p{1.09 * std::cos(0.7), 1.09 * std::sin(0.7)};

  ReflectOptions a;
  a.order = 6;
  a.tol = 1e-10;
  const ReflectionReport ra = reflect(op, circle, f, p, a);

  ReflectOptions b = a;
  const double th = std::atan2(ra.diag.q.y, ra.diag.q.x) - 0.05;
  b.anchor = Vec2{std::cos(th), std::sin(th)};
  b.waypoints = {Vec2{0.96 * std::cos(th + 0.02), 0.96 * std::sin(th + 0.02)}};
  const ReflectionReport rb = reflect(op, circle, f, p, b);

  CHECK(std::abs(ra.total - rb.total) < 1e-6);
}

TEST_CASE("forcing the integral formula on a line leaves the point law value") {
  const auto op = EllipticOperator::constant(1.0, 0.0, 1.25);
  const auto line = AnalyticCurve::line(1.0, 0.0, -0.2);  // x = 0.2
  const SolutionField f = line_mode(op, line, 0.9, false);
  const Vec2 p{0.07, 0.5};

  const ReflectionReport direct = reflect(op, line, f, p);
  CHECK(direct.strategy.kind == StrategyKind::line_p2p);
  CHECK(direct.integral == 0.0);

  ReflectOptions nl;
  nl.force_nonlocal = true;
  nl.tol = 1e-10;
  const ReflectionReport forced = reflect(op, line, f, p, nl);
  CHECK(forced.strategy.kind == StrategyKind::nonlocal);
  CHECK(std::abs(forced.integral) < 1e-8);
  CHECK(std::abs(forced.total - direct.total) < 1e-8);
  CHECK(std::abs(forced.total - f.u(p.x, p.y)) < 1e-8);
}
