// Times the grid-emission kernel serial vs OpenMP and checks byte identity.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/gridfield.hpp"
#include "ellref/manufactured.hpp"

using namespace ellref;

namespace {

double run(const EllipticOperator& op, const AnalyticCurve& curve, const SolutionField& f,
           const GridSpec& grid, const ReflectOptions& opt, bool parallel, std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = emit_grid(op, curve, f, grid, opt, parallel);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const auto op = EllipticOperator::helmholtz(1.0);
  const auto circle = AnalyticCurve::circle({0, 0}, 1.0);
  const SolutionField f = circle_mode(op, circle, 1);

  GridSpec grid;
  grid.x0 = 0.9;
  grid.x1 = 1.2;
  grid.y0 = -0.15;
  grid.y1 = 0.15;
  grid.nx = 16;
  grid.ny = 16;

  ReflectOptions opt;
  opt.order = 3;
  opt.degree = 16;
  opt.tol = 1e-7;

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available, parallel path falls back to serial\n");
#endif

  std::string serial_csv, parallel_csv;
  const double warm = run(op, circle, f, grid, opt, false, serial_csv);
  const double ts = run(op, circle, f, grid, opt, false, serial_csv);
  const double tp = run(op, circle, f, grid, opt, true, parallel_csv);
  (void)warm;

  const size_t rows = static_cast<size_t>(grid.nx) * grid.ny;
  std::printf("grid %dx%d (%zu points)\n", grid.nx, grid.ny, rows);
  std::printf("serial   %8.3f s  (%.2f ms/point)\n", ts, 1e3 * ts / rows);
  std::printf("parallel %8.3f s  (%.2f ms/point)  speedup %.2fx\n", tp, 1e3 * tp / rows, ts / tp);
  if (serial_csv == parallel_csv) {
    std::printf("outputs byte-identical (%zu bytes)\n", serial_csv.size());
    return 0;
  }
  std::printf("OUTPUT MISMATCH: serial %zu bytes, parallel %zu bytes\n", serial_csv.size(),
              parallel_csv.size());
  return 1;
}
