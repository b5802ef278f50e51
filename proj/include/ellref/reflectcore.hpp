#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellref/cpoint.hpp"
#include "ellref/curve.hpp"
#include "ellref/elliptic_operator.hpp"
#include "ellref/manufactured.hpp"
#include "ellref/quadrature.hpp"
#include "ellref/reflected.hpp"

namespace ellref {

enum class StrategyKind { schwarz_p2p, line_p2p, gauge_p2p, nonlocal };

struct ReflectionStrategy {
  StrategyKind kind;
  std::string reason;
};

/// Strategy selection: harmonic functions reflect point to point across any
/// analytic curve; lines admit the exponential point law for every operator;
/// a^2 + b^2 - 4c = 0 reduces to the harmonic case by the gauge substitution;
/// everything else needs the non-local formula.
ReflectionStrategy dispatch(const EllipticOperator& op, const AnalyticCurve& curve);

/// Point laws mapping the value at the mirror point Q to the value at p.
double reflect_line(const EllipticOperator& op, const AnalyticCurve& line, Vec2 p, double u_at_q);
double reflect_gauge(const EllipticOperator& op, const AnalyticCurve& curve, Vec2 p,
                     double u_at_q);

struct ReflectOptions {
  int order = 5;              // transport truncation K
  int degree = 28;            // Taylor algebra degree
  double tol = 1e-8;          // path quadrature tolerance
  double validity_factor = 0.25;  // max dist(p, curve) / curve scale
  bool force_nonlocal = false;
  std::optional<Vec2> anchor;         // override for the curve endpoint of the path
  std::vector<Vec2> waypoints;        // inserted between the anchor and Q
};

struct ReflectionReport {
  double total = 0.0;      // predicted u(p)
  double q_term = 0.0;     // -c0 u(Q)
  double integral = 0.0;   // path integral contribution (0 exactly for point laws)
  ReflectionStrategy strategy{StrategyKind::nonlocal, ""};
  std::vector<Vec2> path;  // empty for point laws
  struct Diag {
    Vec2 q{}, anchor{};
    double c0 = 0.0;
    int order = 0;
    double quad_error = 0.0;
    double v_sup = 0.0;         // sup of |V| sampled along the path
    double imag_residue = 0.0;  // size of the discarded imaginary part
    double series_tail = 0.0;
  } diag;
};

/// Integral term of the non-local formula along the given path, with the
/// kernel supplied by a prebuilt evaluator. Returns the complex value whose
/// real part enters the reflection; the imaginary part is a consistency residue.
struct IntegralTerm {
  cplx value;
  double quad_error = 0.0;
  double v_sup = 0.0;
  bool converged = true;
};
IntegralTerm integral_term(const EllipticOperator& op, const SolutionField& field,
                           const VEvaluator& kernel, const Path& path, double tol);

/// Continue the field's solution across the curve to p. The solution must
/// vanish on the curve; p must be within validity_factor * scale of the curve.
ReflectionReport reflect(const EllipticOperator& op, const AnalyticCurve& curve,
                         const SolutionField& field, Vec2 p, const ReflectOptions& opt = {});

}  // namespace ellref
