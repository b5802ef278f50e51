#include "ellref/gridfield.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ellref {

namespace {

std::string format_row(double x, double y, double ut, double ur) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y, ut, ur,
                std::abs(ut - ur));
  return buf;
}

// One grid point; empty result means the point is skipped.
std::string grid_cell(const EllipticOperator& op, const AnalyticCurve& curve,
                      const SolutionField& field, const ReflectOptions& opt, double x, double y) {
  if (!field.valid(x, y)) return {};
  try {
    const ReflectionReport rep = reflect(op, curve, field, {x, y}, opt);
    return format_row(x, y, field.u(x, y), rep.total);
  } catch (const std::exception&) {
    return {};  // refused continuation (validity guard, pole, ...) is not an error here
  }
}

}  // namespace

std::string emit_grid(const EllipticOperator& op, const AnalyticCurve& curve,
                      const SolutionField& field, const GridSpec& grid,
                      const ReflectOptions& opt, bool parallel) {
  std::string out = "x,y,u_true,u_reflected,abs_err\n";
  if (grid.nx <= 0 || grid.ny <= 0) return out;

  const auto coord = [](double lo, double hi, int n, int i) {
    return (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
  };

  std::vector<std::string> rows(static_cast<size_t>(grid.nx) * grid.ny);
  const auto kernel = [&](int idx) {
    const int j = idx / grid.nx, i = idx % grid.nx;
    rows[idx] =
        grid_cell(op, curve, field, opt, coord(grid.x0, grid.x1, grid.nx, i),
                  coord(grid.y0, grid.y1, grid.ny, j));
  };
  const int total = grid.nx * grid.ny;

#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int idx = 0; idx < total; ++idx) kernel(idx);
  } else {
    for (int idx = 0; idx < total; ++idx) kernel(idx);
  }
#else
  (void)parallel;
  for (int idx = 0; idx < total; ++idx) kernel(idx);
#endif

  for (const std::string& r : rows) out += r;
  return out;
}

}  // namespace ellref
