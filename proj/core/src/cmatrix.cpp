#include "effectus/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace effectus {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diag(const std::vector<double>& d) {
  CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at((int)i, (int)i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  if (!sameShape(o)) throw ShapeMismatch("matrix add");
  CMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (!sameShape(o)) throw ShapeMismatch("matrix sub");
  CMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix mul");
  CMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      cplx v = at(r, k);
      if (v == cplx(0.0, 0.0)) continue;
      for (int c = 0; c < o.cols_; ++c) m.at(r, c) += v * o.at(k, c);
    }
  return m;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  int n = std::min(rows_, cols_);
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

double CMatrix::maxAbs() const {
  double m = 0.0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::hermDefect() const {
  if (rows_ != cols_) return 1.0;
  double d = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c) d = std::max(d, std::abs(at(r, c) - std::conj(at(c, r))));
  return d;
}

CMatrix CMatrix::kron(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      cplx v = a.at(ar, ac);
      if (v == cplx(0.0, 0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          m.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
    }
  return m;
}

}  // namespace effectus
