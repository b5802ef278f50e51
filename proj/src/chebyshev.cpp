#include "ellref/chebyshev.hpp"

#include <cmath>

#include "ellref/errors.hpp"

namespace ellref {

namespace {

// Solve M x = b by Gaussian elimination with partial pivoting. M is the small
// well-conditioned Chebyshev evaluation matrix, so this is built once per order.
std::vector<double> solve_columns(std::vector<double> m, std::vector<double> rhs, int dim, int ncols) {
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::abs(m[r * dim + col]) > std::abs(m[piv * dim + col])) piv = r;
    if (m[piv * dim + col] == 0.0) throw config_error("chebyshev: singular basis matrix");
    if (piv != col) {
      for (int k = 0; k < dim; ++k) std::swap(m[col * dim + k], m[piv * dim + k]);
      for (int k = 0; k < ncols; ++k) std::swap(rhs[col * ncols + k], rhs[piv * ncols + k]);
    }
    for (int r = col + 1; r < dim; ++r) {
      const double f = m[r * dim + col] / m[col * dim + col];
      if (f == 0.0) continue;
      for (int k = col; k < dim; ++k) m[r * dim + k] -= f * m[col * dim + k];
      for (int k = 0; k < ncols; ++k) rhs[r * ncols + k] -= f * rhs[col * ncols + k];
    }
  }
  for (int col = dim - 1; col >= 0; --col) {
    for (int k = 0; k < ncols; ++k) {
      double acc = rhs[col * ncols + k];
      for (int j = col + 1; j < dim; ++j) acc -= m[col * dim + j] * rhs[j * ncols + k];
      rhs[col * ncols + k] = acc / m[col * dim + col];
    }
  }
  return rhs;
}

}  // namespace

ChebLobatto::ChebLobatto(int n) : n_(n) {
  if (n < 2) throw config_error("chebyshev: order must be at least 2");
  const int d = n + 1;
  s_.resize(d);
  for (int j = 0; j <= n; ++j) s_[j] = 0.5 * (1.0 - std::cos(kPi * j / n));

  // V[j][m] = T_m(x_j) at x_j = 2 s_j - 1; values -> coefficients is V^{-1}.
  std::vector<double> v(static_cast<size_t>(d) * d);
  for (int j = 0; j <= n; ++j) {
    const double x = 2.0 * s_[j] - 1.0;
    double tm1 = 1.0, t = x;
    v[j * d + 0] = 1.0;
    if (n >= 1) v[j * d + 1] = x;
    for (int m = 2; m <= n; ++m) {
      const double tn = 2.0 * x * t - tm1;
      tm1 = t;
      t = tn;
      v[j * d + m] = t;
    }
  }
  std::vector<double> ident(static_cast<size_t>(d) * d, 0.0);
  for (int j = 0; j <= n; ++j) ident[j * d + j] = 1.0;
  const std::vector<double> vinv = solve_columns(v, ident, d, d);

  // Coefficient-space antiderivative: b_m = (a_{m-1} - a_{m+1}) / (2m), truncated
  // at degree n; b_0 fixes G(-1) = 0. The s-scale contributes the factor 1/2.
  std::vector<double> anti(static_cast<size_t>(d) * d, 0.0);
  for (int m = 1; m <= n; ++m) {
    // b_1 = a_0 - a_2 / 2: the T_0 antiderivative is T_1 outright.
    anti[m * d + (m - 1)] += m == 1 ? 1.0 : 1.0 / (2.0 * m);
    if (m + 1 <= n) anti[m * d + (m + 1)] -= 1.0 / (2.0 * m);
  }
  for (int m = 1; m <= n; ++m) {
    const double sign = (m % 2) ? -1.0 : 1.0;
    for (int k = 0; k <= n; ++k) anti[0 * d + k] -= sign * anti[m * d + k];
  }

  cumint_.assign(static_cast<size_t>(d) * d, 0.0);
  for (int j = 0; j <= n; ++j)
    for (int l = 0; l <= n; ++l) {
      double acc = 0.0;
      for (int m = 0; m <= n; ++m)
        for (int r = 0; r <= n; ++r) acc += v[j * d + m] * anti[m * d + r] * vinv[r * d + l];
      cumint_[j * d + l] = 0.5 * acc;
    }
  // The integral from s_0 to s_0 vanishes identically; make that exact.
  for (int l = 0; l <= n; ++l) cumint_[l] = 0.0;
}

void ChebLobatto::apply(const std::vector<cplx>& f, std::vector<cplx>& out) const {
  const int d = n_ + 1;
  out.assign(d, cplx(0.0));
  for (int j = 0; j < d; ++j) {
    cplx acc(0.0);
    for (int l = 0; l < d; ++l) acc += cumint_[j * d + l] * f[l];
    out[j] = acc;
  }
}

}  // namespace ellref
