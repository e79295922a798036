#pragma once

#include <vector>

#include "effectus/cmatrix.hpp"
#include "effectus/tolerances.hpp"

namespace effectus {

/// Hermitian eigensystem, eigenvalues descending, eigenvectors as the
/// columns of a unitary matrix in matching order.
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;
};

/// Cyclic Jacobi with complex rotations: each sweep phases the pivot entry
/// real and then applies a plane rotation. Capped at 100 sweeps.
EigenSystem hermEig(const CMatrix& m, const Tolerances& tol = tolerances());

/// Unique PSD square root. Eigenvalues in [-spec, 0) are clamped to zero;
/// anything below -spec is an error, not a clamp.
CMatrix psdSqrt(const CMatrix& e, const Tolerances& tol = tolerances());

/// Projection onto the span of eigenvectors with eigenvalue > ceilCutoff:
/// the least sharp element above e.
CMatrix supportProj(const CMatrix& e, const Tolerances& tol = tolerances());

/// Projection onto the eigenspace with eigenvalue >= 1 - floorCutoff:
/// the greatest sharp element below e.
CMatrix fixedProj(const CMatrix& e, const Tolerances& tol = tolerances());

/// For a projection p of rank r, an isometry V (dim x r) with V* V = I and
/// V V* = p. Columns span the range of p.
CMatrix rangeIsometry(const CMatrix& p, const Tolerances& tol = tolerances());

/// Pseudo-inverse of a PSD matrix restricted to its support; eigenvalues
/// below the cutoff are treated as zero.
CMatrix psdPseudoInverse(const CMatrix& e, double cutoff, const Tolerances& tol = tolerances());

/// Smallest eigenvalue of a Hermitian matrix.
double minEigenvalue(const CMatrix& m, const Tolerances& tol = tolerances());

/// 0 <= e <= 1 up to the spectral slack.
bool isEffectMatrix(const CMatrix& e, const Tolerances& tol = tolerances());

/// p = p* = p^2 up to the projection slack.
bool isProjectionMatrix(const CMatrix& p, const Tolerances& tol = tolerances());

bool isUnitaryMatrix(const CMatrix& u, const Tolerances& tol = tolerances());

}  // namespace effectus
