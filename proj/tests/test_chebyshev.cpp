#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "ellref/chebyshev.hpp"
#include "ellref/errors.hpp"

using namespace ellref;

namespace {

std::vector<cplx> sample(const ChebLobatto& cheb, cplx (*f)(double)) {
  std::vector<cplx> v(cheb.nodes().size());
  for (size_t j = 0; j < v.size(); ++j) v[j] = f(cheb.nodes()[j]);
  return v;
}

}  // namespace

TEST_CASE("cumulative integration is exact on polynomials below the order") {
  const ChebLobatto cheb(12);
  std::vector<cplx> out;

  // constant: integral from 0 to s is s itself
  cheb.apply(std::vector<cplx>(13, cplx(1.0)), out);
  for (size_t j = 0; j < out.size(); ++j) {
    CHECK(std::abs(out[j] - cheb.nodes()[j]) < 1e-14);
    CHECK(out[j].imag() == 0.0);
  }
  CHECK(out[0] == cplx(0.0));

  // s^5 integrates to s^6 / 6, degree 6 <= 12 so only roundoff remains
  cheb.apply(sample(cheb, [](double s) { return cplx(std::pow(s, 5)); }), out);
  for (size_t j = 0; j < out.size(); ++j)
    CHECK(std::abs(out[j] - std::pow(cheb.nodes()[j], 6) / 6.0) < 1e-14);
}

TEST_CASE("cumulative integration converges spectrally on analytic integrands") {
  // exp(s) and a complex oscillation, checked against closed forms
  const ChebLobatto cheb(20);
  std::vector<cplx> out;

  cheb.apply(sample(cheb, [](double s) { return cplx(std::exp(s)); }), out);
  for (size_t j = 0; j < out.size(); ++j)
    CHECK(std::abs(out[j] - (std::exp(cheb.nodes()[j]) - 1.0)) < 1e-14);

  const cplx w(1.3, -2.1);
  std::vector<cplx> f(cheb.nodes().size());
  for (size_t j = 0; j < f.size(); ++j) f[j] = std::exp(w * cheb.nodes()[j]);
  cheb.apply(f, out);
  for (size_t j = 0; j < out.size(); ++j) {
    const cplx ref = (std::exp(w * cheb.nodes()[j]) - 1.0) / w;
    CHECK(std::abs(out[j] - ref) < 1e-13);
  }
}

TEST_CASE("node layout and guards") {
  const ChebLobatto cheb(8);
  CHECK(cheb.nodes().front() == 0.0);
  CHECK(cheb.nodes()[8] == doctest::Approx(1.0).epsilon(1e-15));
  for (int j = 1; j <= 8; ++j) CHECK(cheb.nodes()[j] > cheb.nodes()[j - 1]);
  CHECK_THROWS_AS(ChebLobatto(1), config_error);
}
