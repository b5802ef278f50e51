#pragma once

#include <cassert>
#include <complex>
#include <vector>

#include "ellref/cpoint.hpp"
#include "ellref/errors.hpp"

namespace ellref {

/// Taylor polynomial in one variable, coefficients c[k] for v^k, truncated at fixed degree.
/// All binary operations require matching degrees; products drop terms above the degree.
struct Series1 {
  std::vector<cplx> c;

  explicit Series1(int deg = 0) : c(static_cast<size_t>(deg) + 1, cplx(0.0)) {}
  int deg() const { return static_cast<int>(c.size()) - 1; }

  static Series1 constant(cplx a, int deg) {
    Series1 s(deg);
    s.c[0] = a;
    return s;
  }
  /// a + b*v.
  static Series1 linear(cplx a, cplx b, int deg) {
    Series1 s(deg);
    s.c[0] = a;
    if (deg >= 1) s.c[1] = b;
    return s;
  }

  Series1& operator+=(const Series1& o) {
    assert(deg() == o.deg());
    for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  Series1& operator-=(const Series1& o) {
    assert(deg() == o.deg());
    for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    return *this;
  }
  Series1& operator*=(cplx a) {
    for (auto& x : c) x *= a;
    return *this;
  }
  friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
  friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
  friend Series1 operator*(Series1 a, cplx s) { return a *= s; }
  friend Series1 operator*(cplx s, Series1 a) { return a *= s; }

  friend Series1 operator*(const Series1& a, const Series1& b) {
    assert(a.deg() == b.deg());
    const int n = a.deg();
    Series1 r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c[i] == cplx(0.0)) continue;
      for (int j = 0; i + j <= n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }

  Series1 derivative() const {
    Series1 r(deg());
    for (int k = 1; k <= deg(); ++k) r.c[k - 1] = c[k] * double(k);
    return r;
  }

  /// Antiderivative vanishing at v = 0. The top coefficient has no destination and is dropped.
  Series1 antiderivative() const {
    Series1 r(deg());
    for (int k = 0; k < deg(); ++k) r.c[k + 1] = c[k] / double(k + 1);
    return r;
  }

  /// 1 / this, truncated. Requires a nonzero constant term.
  Series1 reciprocal() const {
    if (std::abs(c[0]) == 0.0) throw singularity_error("series reciprocal: zero constant term");
    Series1 r(deg());
    r.c[0] = 1.0 / c[0];
    for (int k = 1; k <= deg(); ++k) {
      cplx acc(0.0);
      for (int j = 1; j <= k; ++j) acc += c[j] * r.c[k - j];
      r.c[k] = -acc / c[0];
    }
    return r;
  }

  cplx eval(cplx v) const {
    cplx acc(0.0);
    for (int k = deg(); k >= 0; --k) acc = acc * v + c[k];
    return acc;
  }
};

/// exp(s(v)) truncated, requiring s(0) = 0 so the result is a finite composition.
inline Series1 exp_of(const Series1& s) {
  assert(std::abs(s.c[0]) < 1e-300);
  const int n = s.deg();
  Series1 r = Series1::constant(1.0, n);
  Series1 term = Series1::constant(1.0, n);
  for (int k = 1; k <= n; ++k) {
    term = term * s;
    term *= 1.0 / double(k);
    r += term;
  }
  return r;
}

/// Taylor polynomial in two variables (w, v), coefficients c[i][j] for w^i v^j,
/// rectangular truncation i, j <= deg. Row-major storage, i is the w index.
struct Series2 {
  int n = 0;
  std::vector<cplx> c;

  explicit Series2(int deg = 0) : n(deg), c(static_cast<size_t>(deg + 1) * (deg + 1), cplx(0.0)) {}

  cplx& at(int i, int j) { return c[static_cast<size_t>(i) * (n + 1) + j]; }
  cplx at(int i, int j) const { return c[static_cast<size_t>(i) * (n + 1) + j]; }

  static Series2 constant(cplx a, int deg) {
    Series2 s(deg);
    s.at(0, 0) = a;
    return s;
  }
  /// Lift a series in w (j = 0 column) or in v (i = 0 row).
  static Series2 from_w(const Series1& s, int deg) {
    assert(s.deg() == deg);
    Series2 r(deg);
    for (int i = 0; i <= deg; ++i) r.at(i, 0) = s.c[i];
    return r;
  }
  static Series2 from_v(const Series1& s, int deg) {
    assert(s.deg() == deg);
    Series2 r(deg);
    for (int j = 0; j <= deg; ++j) r.at(0, j) = s.c[j];
    return r;
  }

  Series2& operator+=(const Series2& o) {
    assert(n == o.n);
    for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  Series2& operator-=(const Series2& o) {
    assert(n == o.n);
    for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    return *this;
  }
  Series2& operator*=(cplx a) {
    for (auto& x : c) x *= a;
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(Series2 a, cplx s) { return a *= s; }
  friend Series2 operator*(cplx s, Series2 a) { return a *= s; }

  friend Series2 operator*(const Series2& a, const Series2& b) {
    assert(a.n == b.n);
    const int n = a.n;
    Series2 r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const cplx aij = a.at(i, j);
        if (aij == cplx(0.0)) continue;
        for (int p = 0; i + p <= n; ++p)
          for (int q = 0; j + q <= n; ++q) r.at(i + p, j + q) += aij * b.at(p, q);
      }
    return r;
  }

  Series2 d_w() const {
    Series2 r(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j <= n; ++j) r.at(i - 1, j) = at(i, j) * double(i);
    return r;
  }
  Series2 d_v() const {
    Series2 r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n; ++j) r.at(i, j - 1) = at(i, j) * double(j);
    return r;
  }

  /// Antiderivative in w vanishing at w = 0; the top w-row is dropped.
  Series2 integ_w() const {
    Series2 r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n; ++j) r.at(i + 1, j) = at(i, j) / double(i + 1);
    return r;
  }
  Series2 integ_v() const {
    Series2 r(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j + 1) = at(i, j) / double(j + 1);
    return r;
  }

  cplx eval(cplx w, cplx v) const {
    cplx acc(0.0);
    for (int i = n; i >= 0; --i) {
      cplx row(0.0);
      for (int j = n; j >= 0; --j) row = row * v + at(i, j);
      acc = acc * w + row;
    }
    return acc;
  }

  /// Substitute w = s(v). Exact up to truncation only when s(0) = 0, which keeps
  /// every discarded term of genuine combined degree > n.
  Series1 subst_w(const Series1& s) const {
    assert(s.deg() == n);
    Series1 acc(n);
    for (int i = n; i >= 0; --i) {
      acc = acc * s;
      Series1 row(n);
      for (int j = 0; j <= n; ++j) row.c[j] = at(i, j);
      acc += row;
    }
    return acc;
  }

  /// Substitute v = s(w); mirror of subst_w.
  Series1 subst_v(const Series1& s) const {
    assert(s.deg() == n);
    Series1 acc(n);
    for (int j = n; j >= 0; --j) {
      acc = acc * s;
      Series1 col(n);
      for (int i = 0; i <= n; ++i) col.c[i] = at(i, j);
      acc += col;
    }
    return acc;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return m;
  }
};

}  // namespace ellref
