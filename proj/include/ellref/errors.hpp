#pragma once

#include <stdexcept>
#include <string>

namespace ellref {

/// Evaluation requested at or across a singular point (curve pole, log branch point).
struct singularity_error : std::runtime_error {
  explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative scheme failed to meet its tolerance; carries the last residual.
struct convergence_error : std::runtime_error {
  double residual;
  convergence_error(const std::string& what, double r)
      : std::runtime_error(what + " (last residual " + std::to_string(r) + ")"), residual(r) {}
};

/// Quadrature or branch-tracking failure along a path.
struct quadrature_error : std::runtime_error {
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration or operation preconditions.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ellref
