#include "effectus/herm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace effectus {

namespace {

double offDiagNorm(const CMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a.at(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermEig(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw NotHermitian("matrix is not square");
  if (m.hermDefect() > tol.herm) throw NotHermitian("symmetry defect exceeds tolerance");
  int n = m.rows();

  CMatrix a = m;
  // Symmetrize so rotations see an exactly Hermitian matrix.
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      cplx v = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
      a.at(r, c) = v;
      a.at(c, r) = std::conj(v);
    }
    a.at(r, r) = cplx(a.at(r, r).real(), 0.0);
  }
  CMatrix v = CMatrix::identity(n);

  const int maxSweeps = 100;
  const double target = 1e-14 * std::max(1.0, a.maxAbs()) * n;
  int sweep = 0;
  while (offDiagNorm(a) > target) {
    if (++sweep > maxSweeps) throw NoConvergence("jacobi sweep cap reached");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx apq = a.at(p, q);
        double mag = std::abs(apq);
        if (mag < 1e-300) continue;

        // Phase step: rotate column/row q so the pivot becomes real.
        cplx w = std::conj(apq) / mag;
        for (int i = 0; i < n; ++i) a.at(i, q) *= w;
        for (int i = 0; i < n; ++i) a.at(q, i) *= std::conj(w);
        for (int i = 0; i < n; ++i) v.at(i, q) *= w;

        // Real rotation zeroing the (p,q) entry.
        double app = a.at(p, p).real();
        double aqq = a.at(q, q).real();
        double theta = (aqq - app) / (2.0 * mag);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int i = 0; i < n; ++i) {
          cplx aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          cplx api = a.at(p, i), aqi = a.at(q, i);
          a.at(p, i) = c * api - s * aqi;
          a.at(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          cplx vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = c * vip - s * viq;
          v.at(i, q) = s * vip + c * viq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.at(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
  }
  return out;
}

namespace {

/// Rebuilds V f(diag) V* from an eigensystem.
CMatrix spectralMap(const EigenSystem& es, const std::vector<double>& f) {
  int n = es.vectors.rows();
  CMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    if (f[k] == 0.0) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out.at(r, c) += f[k] * es.vectors.at(r, k) * std::conj(es.vectors.at(c, k));
  }
  return out;
}

}  // namespace

CMatrix psdSqrt(const CMatrix& e, const Tolerances& tol) {
  EigenSystem es = hermEig(e, tol);
  std::vector<double> f(es.values.size());
  for (size_t k = 0; k < es.values.size(); ++k) {
    double lam = es.values[k];
    if (lam < -tol.spec) throw Error("psdSqrt: eigenvalue below -specTol");
    f[k] = lam > 0 ? std::sqrt(lam) : 0.0;
  }
  return spectralMap(es, f);
}

CMatrix supportProj(const CMatrix& e, const Tolerances& tol) {
  EigenSystem es = hermEig(e, tol);
  std::vector<double> f(es.values.size());
  for (size_t k = 0; k < es.values.size(); ++k) f[k] = es.values[k] > tol.ceilCutoff ? 1.0 : 0.0;
  return spectralMap(es, f);
}

CMatrix fixedProj(const CMatrix& e, const Tolerances& tol) {
  EigenSystem es = hermEig(e, tol);
  std::vector<double> f(es.values.size());
  for (size_t k = 0; k < es.values.size(); ++k)
    f[k] = es.values[k] >= 1.0 - tol.floorCutoff ? 1.0 : 0.0;
  return spectralMap(es, f);
}

CMatrix rangeIsometry(const CMatrix& p, const Tolerances& tol) {
  if (!isProjectionMatrix(p, tol)) throw NotProjection("rangeIsometry");
  EigenSystem es = hermEig(p, tol);
  int rank = 0;
  for (double lam : es.values)
    if (lam > 0.5) ++rank;
  CMatrix v(p.rows(), rank);
  for (int k = 0; k < rank; ++k)
    for (int i = 0; i < p.rows(); ++i) v.at(i, k) = es.vectors.at(i, k);
  return v;
}

CMatrix psdPseudoInverse(const CMatrix& e, double cutoff, const Tolerances& tol) {
  EigenSystem es = hermEig(e, tol);
  std::vector<double> f(es.values.size());
  for (size_t k = 0; k < es.values.size(); ++k)
    f[k] = es.values[k] > cutoff ? 1.0 / es.values[k] : 0.0;
  return spectralMap(es, f);
}

double minEigenvalue(const CMatrix& m, const Tolerances& tol) {
  EigenSystem es = hermEig(m, tol);
  return es.values.back();
}

bool isEffectMatrix(const CMatrix& e, const Tolerances& tol) {
  if (e.rows() != e.cols() || e.hermDefect() > tol.herm) return false;
  if (e.rows() == 0) return true;
  EigenSystem es = hermEig(e, tol);
  return es.values.back() >= -tol.spec && es.values.front() <= 1.0 + tol.spec;
}

bool isProjectionMatrix(const CMatrix& p, const Tolerances& tol) {
  if (p.rows() != p.cols() || p.hermDefect() > tol.herm) return false;
  return maxAbsDiff(p * p, p) <= tol.proj;
}

bool isUnitaryMatrix(const CMatrix& u, const Tolerances& tol) {
  if (u.rows() != u.cols()) return false;
  return maxAbsDiff(u.adjoint() * u, CMatrix::identity(u.rows())) <= tol.proj;
}

}  // namespace effectus
