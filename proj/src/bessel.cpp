#include "ellref/bessel.hpp"

#include <cmath>
#include <cstdlib>

#include "ellref/errors.hpp"

namespace ellref {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kGammaL = 0.57721566490153286060651209008240243L;  // Euler's constant

// Ascending series is used below this point, Hankel asymptotics above it.
// At the seam both sides carry roughly 1e-13 relative error.
constexpr double kSeriesCut = 17.0;

// J_n by the ascending series; long double absorbs the alternating-sum
// cancellation, which peaks near k = x/2 and stays below ~3e5 for x <= 17.
long double j_series(int n, long double x) {
  const long double h = 0.5L * x;
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= h / k;  // (x/2)^n / n!
  long double sum = term;
  const long double h2 = -h * h;
  for (int m = 1; m <= 400; ++m) {
    term *= h2 / (static_cast<long double>(m) * (m + n));
    sum += term;
    if (std::abs(term) <= 1e-24L * (std::abs(sum) + 1e-30L)) break;
  }
  return sum;
}

// Hankel expansion: J, Y = sqrt(2/(pi x)) (P cos w -+ Q sin w variants),
// w = x - n pi/2 - pi/4. Valid for x well above n; terms t_k are generated by
// t_k = t_{k-1} (4n^2 - (2k-1)^2) / (8 k x) and summed until they stop shrinking.
void hankel_pq(int n, long double x, long double& p, long double& q) {
  const long double mu = 4.0L * n * n;
  long double t = 1.0L;
  p = t;
  q = 0.0L;
  long double prev = 1e30L;
  for (int k = 1; k <= 60; ++k) {
    t *= (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
    if (std::abs(t) >= prev) break;  // asymptotic tail turned around
    prev = std::abs(t);
    const int r = k % 4;
    if (r == 1) q += t;
    else if (r == 2) p -= t;
    else if (r == 3) q -= t;
    else p += t;
    if (std::abs(t) < 1e-24L) break;
  }
}

long double j_asymptotic(int n, long double x) {
  long double p, q;
  hankel_pq(n, x, p, q);
  const long double w = x - (0.5L * n + 0.25L) * kPiL;
  return std::sqrt(2.0L / (kPiL * x)) * (p * std::cos(w) - q * std::sin(w));
}

long double y_asymptotic(int n, long double x) {
  long double p, q;
  hankel_pq(n, x, p, q);
  const long double w = x - (0.5L * n + 0.25L) * kPiL;
  return std::sqrt(2.0L / (kPiL * x)) * (p * std::sin(w) + q * std::cos(w));
}

long double y0_series(long double x) {
  const long double j0 = j_series(0, x);
  const long double q = 0.25L * x * x;
  long double term = 1.0L;  // q^k / (k!)^2
  long double hk = 0.0L;
  long double sum = 0.0L;
  for (int k = 1; k <= 400; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    hk += 1.0L / k;
    const long double add = (k % 2 ? term : -term) * hk;
    sum += add;
    if (std::abs(add) <= 1e-24L * (std::abs(sum) + 1e-30L)) break;
  }
  return (2.0L / kPiL) * ((std::log(0.5L * x) + kGammaL) * j0 + sum);
}

long double y1_series(long double x) {
  const long double j1 = j_series(1, x);
  const long double q = -0.25L * x * x;
  long double term = 1.0L;  // (-x^2/4)^k / (k! (k+1)!)
  long double hk = 0.0L, hk1 = 1.0L;
  long double sum = (-2.0L * kGammaL + hk + hk1) * term;
  for (int k = 1; k <= 400; ++k) {
    term *= q / (static_cast<long double>(k) * (k + 1));
    hk += 1.0L / k;
    hk1 += 1.0L / (k + 1);
    const long double add = (-2.0L * kGammaL + hk + hk1) * term;
    sum += add;
    if (std::abs(add) <= 1e-24L * (std::abs(sum) + 1e-30L)) break;
  }
  return (2.0L / kPiL) * std::log(0.5L * x) * j1 - 2.0L / (kPiL * x) - (0.5L * x / kPiL) * sum;
}

// Downward recurrence, normalized against J_0; needed only when n is not
// small compared with x so that upward recurrence would amplify noise.
long double j_miller(int n, long double x, long double j0_ref) {
  const int start = n + 32 + static_cast<int>(x);
  long double jp1 = 0.0L, j = 1e-30L, target = 0.0L, at0 = 0.0L;
  for (int k = start; k >= 0; --k) {
    const long double jm1 = (2.0L * (k + 1)) / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (k == n) target = jp1;
    if (std::abs(j) > 1e280L) {  // rescale to dodge overflow
      j *= 1e-280L;
      jp1 *= 1e-280L;
      target *= 1e-280L;
    }
  }
  at0 = j;
  if (at0 == 0.0L) throw convergence_error("cylinder_j: downward recurrence degenerated", 0.0);
  return target * (j0_ref / at0);
}

long double j_impl(int n, long double x) {
  if (x <= kSeriesCut) return j_series(n, x);
  if (n <= 1) return j_asymptotic(n, x);
  if (static_cast<long double>(n) < 0.8L * x) {
    long double jm = j_asymptotic(0, x), j = j_asymptotic(1, x);
    for (int k = 1; k < n; ++k) {
      const long double jn = (2.0L * k) / x * j - jm;
      jm = j;
      j = jn;
    }
    return j;
  }
  return j_miller(n, x, j_asymptotic(0, x));
}

long double y_impl(int n, long double x) {
  long double ym, y;
  if (x <= kSeriesCut) {
    ym = y0_series(x);
    y = y1_series(x);
  } else {
    ym = y_asymptotic(0, x);
    y = y_asymptotic(1, x);
  }
  if (n == 0) return ym;
  for (int k = 1; k < n; ++k) {  // upward recurrence is stable for Y
    const long double yn = (2.0L * k) / x * y - ym;
    ym = y;
    y = yn;
  }
  return y;
}

}  // namespace

double cylinder_j(int n, double x) {
  if (x < 0.0) throw config_error("cylinder_j: negative argument");
  const int m = std::abs(n);
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  double v = static_cast<double>(j_impl(m, x));
  if (n < 0 && (m & 1)) v = -v;  // J_{-n} = (-1)^n J_n
  return v;
}

double cylinder_y(int n, double x) {
  if (x <= 0.0) throw singularity_error("cylinder_y: argument must be positive");
  const int m = std::abs(n);
  double v = static_cast<double>(y_impl(m, x));
  if (n < 0 && (m & 1)) v = -v;
  return v;
}

double cylinder_j_prime(int n, double x) {
  if (n == 0) return -cylinder_j(1, x);
  return 0.5 * (cylinder_j(n - 1, x) - cylinder_j(n + 1, x));
}

double cylinder_y_prime(int n, double x) {
  if (n == 0) return -cylinder_y(1, x);
  return 0.5 * (cylinder_y(n - 1, x) - cylinder_y(n + 1, x));
}

double cylinder(char kind, int n, double x) {
  if (kind == 'J' || kind == 'j') return cylinder_j(n, x);
  if (kind == 'Y' || kind == 'y') return cylinder_y(n, x);
  throw config_error("cylinder: kind must be 'J' or 'Y'");
}

}  // namespace ellref
