#pragma once

#include <optional>
#include <string>

#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/gridfield.hpp"
#include "ellref/manufactured.hpp"
#include "ellref/reflectcore.hpp"

namespace ellref {

/// Run configuration parsed from JSON. Schema:
/// {
///   "operator": {"a": 0, "b": 0, "c": 1, "gx": 0, "gy": 0},
///   "curve": {"kind": "circle", "center": [0, 0], "radius": 1}
///          | {"kind": "line", "alpha": 0, "beta": 1, "delta": 0},
///   "field": {"family": "circle", "n": 1, "parity": "cos"}
///          | {"family": "line", "nu": 0.7, "parity": "cos"},
///   "order": 5, "degree": 28, "tol": 1e-8,
///   "grid": {"x0": ..., "x1": ..., "y0": ..., "y1": ..., "nx": ..., "ny": ...},
///   "output": "grid.csv", "parallel": false
/// }
/// order must lie in [1, 8]. Unknown keys are rejected.
struct RunConfig {
  EllipticOperator op = EllipticOperator::laplace();
  AnalyticCurve curve = AnalyticCurve::circle({0, 0}, 1.0);
  std::optional<SolutionField> field;
  ReflectOptions reflect_opt;
  GridSpec grid;
  std::string output;
  bool parallel = false;

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::string& path);
};

/// Manufactured field from its config block (called by RunConfig parsing).
SolutionField make_field(const EllipticOperator& op, const AnalyticCurve& curve,
                         const std::string& family, double mode, bool cos_parity);

}  // namespace ellref
