#pragma once

#include <cmath>
#include <complex>

namespace ellref {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cplx kI{0.0, 1.0};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline cplx to_cplx(Vec2 p) { return {p.x, p.y}; }
inline Vec2 to_vec(cplx z) { return {z.real(), z.imag()}; }
inline double dist(Vec2 p, Vec2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

/// Point of C^2 in characteristic coordinates. On the real slice zeta == conj(z),
/// where z = x + iy and zeta = x - iy for a real point (x, y).
struct CPoint {
  cplx z;
  cplx zeta;

  CPoint() = default;
  CPoint(cplx z_, cplx zeta_) : z(z_), zeta(zeta_) {}

  static CPoint from_real(double x, double y) { return {cplx(x, y), cplx(x, -y)}; }
  static CPoint from_real(Vec2 p) { return from_real(p.x, p.y); }

  double x() const { return 0.5 * (z + zeta).real(); }
  double y() const { return 0.5 * ((z - zeta) / kI).real(); }

  bool on_real_slice(double tol = 1e-12) const { return std::abs(zeta - std::conj(z)) <= tol; }
};

}  // namespace ellref
