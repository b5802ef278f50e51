#include "ellref/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ellref/errors.hpp"

namespace ellref {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw config_error("config: unknown key '" + key + "' in " + where);
}

double num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw config_error(std::string("config: '") + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace

SolutionField make_field(const EllipticOperator& op, const AnalyticCurve& curve,
                         const std::string& family, double mode, bool cos_parity) {
  if (family == "circle") {
    const int n = static_cast<int>(std::lround(mode));
    if (n < 1 || std::abs(mode - n) > 0) throw config_error("config: circle mode n must be a positive integer");
    return circle_mode(op, curve, n, cos_parity);
  }
  if (family == "line") return line_mode(op, curve, mode, cos_parity);
  throw config_error("config: field family must be 'circle' or 'line'");
}

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config: top level must be an object");
  reject_unknown(j, {"operator", "curve", "field", "order", "degree", "tol", "grid", "output",
                     "parallel"},
                 "top level");

  RunConfig rc;

  if (j.contains("operator")) {
    const json& jo = j["operator"];
    reject_unknown(jo, {"a", "b", "c", "gx", "gy"}, "operator");
    const double a = num(jo, "a", 0), b = num(jo, "b", 0), c = num(jo, "c", 0);
    const double gx = num(jo, "gx", 0), gy = num(jo, "gy", 0);
    rc.op = (gx == 0 && gy == 0) ? EllipticOperator::constant(a, b, c)
                                 : EllipticOperator::linear_c(a, b, c, gx, gy);
  }

  if (j.contains("curve")) {
    const json& jc = j["curve"];
    if (!jc.contains("kind")) throw config_error("config: curve.kind is required");
    const std::string kind = jc["kind"].get<std::string>();
    if (kind == "circle") {
      reject_unknown(jc, {"kind", "center", "radius"}, "curve");
      Vec2 center{0, 0};
      if (jc.contains("center")) {
        if (!jc["center"].is_array() || jc["center"].size() != 2)
          throw config_error("config: curve.center must be [x, y]");
        center = {jc["center"][0].get<double>(), jc["center"][1].get<double>()};
      }
      rc.curve = AnalyticCurve::circle(center, num(jc, "radius", 1.0));
    } else if (kind == "line") {
      reject_unknown(jc, {"kind", "alpha", "beta", "delta"}, "curve");
      rc.curve = AnalyticCurve::line(num(jc, "alpha", 0), num(jc, "beta", 1), num(jc, "delta", 0));
    } else {
      throw config_error("config: curve.kind must be 'circle' or 'line'");
    }
  }

  const int order = static_cast<int>(num(j, "order", 5));
  if (order < 1 || order > 8) throw config_error("config: order must be in [1, 8]");
  rc.reflect_opt.order = order;
  const int degree = static_cast<int>(num(j, "degree", 28));
  if (degree < 4 || degree > 64) throw config_error("config: degree must be in [4, 64]");
  rc.reflect_opt.degree = degree;
  const double tol = num(j, "tol", 1e-8);
  if (!(tol > 0)) throw config_error("config: tol must be positive");
  rc.reflect_opt.tol = tol;

  if (j.contains("field")) {
    const json& jf = j["field"];
    reject_unknown(jf, {"family", "n", "nu", "parity"}, "field");
    if (!jf.contains("family")) throw config_error("config: field.family is required");
    const std::string family = jf["family"].get<std::string>();
    const bool cosp = !jf.contains("parity") || jf["parity"].get<std::string>() == "cos";
    if (jf.contains("parity")) {
      const std::string par = jf["parity"].get<std::string>();
      if (par != "cos" && par != "sin") throw config_error("config: field.parity must be cos|sin");
    }
    const double mode = family == "circle" ? num(jf, "n", 1) : num(jf, "nu", 1);
    rc.field = make_field(rc.op, rc.curve, family, mode, cosp);
  }

  if (j.contains("grid")) {
    const json& jg = j["grid"];
    reject_unknown(jg, {"x0", "x1", "y0", "y1", "nx", "ny"}, "grid");
    rc.grid.x0 = num(jg, "x0", 0);
    rc.grid.x1 = num(jg, "x1", 0);
    rc.grid.y0 = num(jg, "y0", 0);
    rc.grid.y1 = num(jg, "y1", 0);
    rc.grid.nx = static_cast<int>(num(jg, "nx", 0));
    rc.grid.ny = static_cast<int>(num(jg, "ny", 0));
    if (rc.grid.nx < 0 || rc.grid.ny < 0) throw config_error("config: grid sizes must be >= 0");
  }

  if (j.contains("output")) rc.output = j["output"].get<std::string>();
  if (j.contains("parallel")) {
    if (!j["parallel"].is_boolean()) throw config_error("config: parallel must be a boolean");
    rc.parallel = j["parallel"].get<bool>();
  }
  return rc;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

}  // namespace ellref
