#pragma once

#include <string>

#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/manufactured.hpp"
#include "ellref/reflectcore.hpp"

namespace ellref {

struct GridSpec {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int nx = 0, ny = 0;  // zero in either direction emits the header only
};

/// CSV table "x,y,u_true,u_reflected,abs_err", row-major with x fastest.
/// Grid points where the field is invalid or the continuation is refused are
/// skipped. Output is byte-identical between the serial and parallel kernels:
/// every row is formatted independently and concatenated in index order.
std::string emit_grid(const EllipticOperator& op, const AnalyticCurve& curve,
                      const SolutionField& field, const GridSpec& grid,
                      const ReflectOptions& opt = {}, bool parallel = false);

}  // namespace ellref
