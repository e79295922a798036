#pragma once

#include <complex>
#include <vector>

#include "effectus/errors.hpp"

namespace effectus {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Dimensions stay small (<= 16) by design,
/// so everything is written for clarity rather than cache behaviour.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static CMatrix identity(int n);
  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }
  static CMatrix diag(const std::vector<double>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  CMatrix adjoint() const;
  CMatrix transpose() const;

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  CMatrix operator*(double s) const { return *this * cplx(s, 0); }

  cplx trace() const;
  double maxAbs() const;  // entrywise max modulus

  /// max-norm distance from Hermitian symmetry.
  double hermDefect() const;

  bool sameShape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  static CMatrix kron(const CMatrix& a, const CMatrix& b);

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

 private:
  int rows_, cols_;
  std::vector<cplx> a_;
};

inline double maxAbsDiff(const CMatrix& a, const CMatrix& b) {
  if (!a.sameShape(b)) throw ShapeMismatch("maxAbsDiff");
  return (a - b).maxAbs();
}

}  // namespace effectus
