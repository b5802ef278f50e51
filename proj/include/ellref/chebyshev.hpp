#pragma once

#include <vector>

#include "ellref/cpoint.hpp"

namespace ellref {

/// Chebyshev-Lobatto collocation on [0, 1] with the cumulative integration map:
/// given values f(s_j) at the nodes, (apply f)[j] approximates the running
/// integral from 0 to s_j, spectrally accurate for analytic integrands.
class ChebLobatto {
 public:
  explicit ChebLobatto(int n);

  int n() const { return n_; }
  const std::vector<double>& nodes() const { return s_; }

  void apply(const std::vector<cplx>& f, std::vector<cplx>& out) const;

 private:
  int n_;
  std::vector<double> s_;       // n+1 nodes, s_0 = 0, s_n = 1, increasing
  std::vector<double> cumint_;  // (n+1)^2 row-major integration matrix
};

}  // namespace ellref
