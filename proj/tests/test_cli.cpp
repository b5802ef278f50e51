#include <cstdio>
#include <string>

#include "doctest.h"
#include "ellref/config.hpp"
#include "ellref/errors.hpp"
#include "ellref/gridfield.hpp"

using namespace ellref;

namespace {

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("full configuration parses into the right objects") {
  const RunConfig rc = RunConfig::from_json_text(R"({
    "operator": {"a": 0.5, "b": -0.25, "c": 1.5},
    "curve": {"kind": "circle", "center": [0.1, -0.2], "radius": 1.4},
    "field": {"family": "circle", "n": 2, "parity": "sin"},
    "order": 6, "degree": 20, "tol": 1e-9,
    "grid": {"x0": 1.0, "x1": 2.0, "y0": -0.5, "y1": 0.5, "nx": 4, "ny": 3},
    "output": "out.csv", "parallel": true
  })");
  CHECK(rc.op.a() == 0.5);
  CHECK(rc.op.b() == -0.25);
  CHECK(rc.op.c() == 1.5);
  CHECK(rc.curve.is_circle());
  CHECK(rc.curve.circle_radius() == 1.4);
  REQUIRE(rc.field.has_value());
  CHECK(rc.field->label == "circle:helmholtz:n=2:parity=sin");
  CHECK(rc.reflect_opt.order == 6);
  CHECK(rc.reflect_opt.degree == 20);
  CHECK(rc.reflect_opt.tol == 1e-9);
  CHECK(rc.grid.nx == 4);
  CHECK(rc.grid.ny == 3);
  CHECK(rc.output == "out.csv");
  CHECK(rc.parallel);
}

TEST_CASE("defaults: empty configuration is a Laplace unit circle with no field") {
  const RunConfig rc = RunConfig::from_json_text("{}");
  CHECK(rc.op.is_laplace());
  CHECK(rc.curve.is_circle());
  CHECK(!rc.field.has_value());
  CHECK(rc.reflect_opt.order == 5);
  CHECK(!rc.parallel);
}

TEST_CASE("line curve and line field") {
  const RunConfig rc = RunConfig::from_json_text(R"({
    "operator": {"a": 0, "b": 1, "c": 1.25},
    "curve": {"kind": "line", "alpha": 0, "beta": 1, "delta": 0},
    "field": {"family": "line", "nu": 0.7}
  })");
  CHECK(rc.curve.is_line());
  REQUIRE(rc.field.has_value());
  CHECK(rc.field->label == "line:trig:nu=0.7:parity=cos");
}

TEST_CASE("malformed configurations are rejected") {
  CHECK_THROWS_AS(RunConfig::from_json_text("{ not json"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text("[1, 2]"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"shape": 1})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"operator": {"a": 1, "q": 2}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"operator": {"a": "one"}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"curve": {"radius": 1}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"curve": {"kind": "parabola"}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"curve": {"kind": "circle", "center": [1]}})"),
                  config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"curve": {"kind": "circle", "radius": -1}})"),
                  config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"order": 9})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"order": 0})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"degree": 3})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"tol": 0})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"field": {"family": "torus"}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"field": {"family": "circle", "n": 1.5}})"),
                  config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"field": {"family": "circle", "n": -2}})"),
                  config_error);
  CHECK_THROWS_AS(
      RunConfig::from_json_text(R"({"field": {"family": "circle", "parity": "tan"}})"),
      config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"grid": {"nx": -1}})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"parallel": 1})"), config_error);
  CHECK_THROWS_AS(RunConfig::from_file("/nonexistent/path.json"), config_error);
}

TEST_CASE("grid emission: header, shape, and skipping") {
  const auto op = EllipticOperator::laplace();
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const SolutionField f = circle_mode(op, circle, 1);

  GridSpec empty;
  CHECK(emit_grid(op, circle, f, empty) == "x,y,u_true,u_reflected,abs_err\n");

  // a strip crossing the validity band keeps only points near the circle
  GridSpec strip{0.5, 1.5, 0.0, 0.0, 11, 1};
  const std::string csv = emit_grid(op, circle, f, strip);
  CHECK(count_lines(csv) == 1 + 5);  // the band 0.75 <= r <= 1.25 contains 5 grid points
  CHECK(csv.rfind("x,y,u_true,u_reflected,abs_err\n", 0) == 0);

  // first kept row is x = 0.8: exact continuation, so the error column is tiny
  double x, y, ut, ur, err;
  const size_t data = csv.find('\n') + 1;
  REQUIRE(std::sscanf(csv.c_str() + data, "%lf,%lf,%lf,%lf,%lf", &x, &y, &ut, &ur, &err) == 5);
  CHECK(x == 0.8);
  CHECK(y == 0.0);
  CHECK(std::abs(ut - ur) == err);
  CHECK(err < 1e-12);
}

TEST_CASE("serial and parallel grid emission are byte-identical") {
  const auto op = EllipticOperator::laplace();
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const SolutionField f = circle_mode(op, circle, 1);
  GridSpec grid{0.8, 1.2, -0.2, 0.2, 6, 6};

  const std::string serial = emit_grid(op, circle, f, grid, {}, false);
  const std::string parallel = emit_grid(op, circle, f, grid, {}, true);
  CHECK(serial == parallel);
  CHECK(count_lines(serial) == 1 + 36);
}
