#pragma once

#include <functional>

#include "ellref/cpoint.hpp"
#include "ellref/series.hpp"

namespace ellref {

/// Non-singular real-analytic curve given through its Schwarz function S:
/// the curve is the set where conj(z) = S(z), and S is holomorphic nearby.
/// The mirror map T satisfies T(S(z)) = z (T plays the role of S with the two
/// characteristic variables exchanged).
class AnalyticCurve {
 public:
  enum class Kind { line, circle, custom };

  struct Custom {
    std::function<cplx(cplx)> schwarz;       // S(z)
    std::function<cplx(cplx)> mirror;        // T(zeta), inverse of S
    std::function<cplx(cplx)> schwarz_d;     // S'(z)
    double scale = 1.0;                      // characteristic length of the arc
    double series_radius = 0.5;              // contour radius for Taylor extraction
  };

  /// Line alpha*x + beta*y + delta = 0 with (alpha, beta) != 0.
  static AnalyticCurve line(double alpha, double beta, double delta);
  static AnalyticCurve circle(Vec2 center, double radius);
  static AnalyticCurve custom(Custom c);

  Kind kind() const { return kind_; }
  bool is_line() const { return kind_ == Kind::line; }
  bool is_circle() const { return kind_ == Kind::circle; }

  cplx schwarz(cplx z) const;
  cplx schwarz_inverse(cplx zeta) const;
  cplx schwarz_deriv(cplx z) const;

  /// Characteristic length: circle radius, 1 for lines, user-provided for custom.
  double scale() const { return scale_; }

  /// Membership test through the defining residual |S(z) - conj(z)|,
  /// which vanishes exactly on the curve and grows linearly off it.
  bool contains(Vec2 p, double tol = 1e-9) const;

  /// Signed defining function, zero on the curve (line and circle only;
  /// circle convention: positive inside).
  double side(Vec2 p) const;

  // Line/circle parameters for the closed-form reflection laws.
  void line_coeffs(double& alpha, double& beta, double& delta) const;
  Vec2 circle_center() const;
  double circle_radius() const;
  cplx line_slope() const { return m_; }   // S(z) = m z + q on lines

  /// Taylor coefficients of S(zc + w) in w, truncated at deg.
  Series1 schwarz_series(cplx zc, int deg) const;
  /// Taylor coefficients of T(zetac + v) in v, truncated at deg.
  Series1 mirror_series(cplx zetac, int deg) const;

 private:
  AnalyticCurve() = default;
  Kind kind_ = Kind::line;
  double scale_ = 1.0;
  // line data: alpha x + beta y + delta = 0, S(z) = m z + q with |m| = 1
  double alpha_ = 0, beta_ = 1, delta_ = 0;
  cplx m_{1.0}, q_{0.0};
  // circle data
  cplx center_{0.0};
  double radius_ = 1.0;
  Custom custom_;
};

/// Image of p under the curve's reflection R(z) = conj(S(z)); involutive, fixes the curve.
Vec2 reflect_point(const AnalyticCurve& curve, Vec2 p);

/// Point of the curve used to anchor integration paths: metric projection for
/// lines (orthogonal) and circles (radial); for custom curves the contraction
/// z -> (z + conj(S(z)))/2, which halves the normal offset per step.
Vec2 anchor_on_curve(const AnalyticCurve& curve, Vec2 p);

}  // namespace ellref
