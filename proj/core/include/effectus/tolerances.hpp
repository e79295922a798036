#pragma once

#include <map>
#include <string>

namespace effectus {

/// Numerical knobs for the quantum instance. Exact spectral membership is
/// meaningless in floating point, so every cutoff is an explicit parameter.
struct Tolerances {
  double herm = 1e-9;          // max-norm Hermiticity slack
  double spec = 1e-8;          // eigenvalue range slack for effects
  double eig = 1e-9;           // eigendecomposition residual
  double proj = 1e-8;          // projection test slack
  double ceilCutoff = 1e-8;    // eigenvalue > cutoff counts toward the support
  double floorCutoff = 1e-6;   // eigenvalue >= 1-cutoff counts as fixed
  double scalar = 1e-9;        // scalar comparisons (validity, Bayes, Galois)
  double morph = 1e-8;         // extensional morphism comparisons

  /// Applies overrides by name; unknown keys raise.
  void apply(const std::map<std::string, double>& overrides);
};

/// Process-wide tolerances used by the quantum instance. Set them before
/// running suites; they are treated as read-only while checks execute.
Tolerances& tolerances();

}  // namespace effectus
