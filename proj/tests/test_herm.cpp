#include <cmath>

#include "doctest.h"

#include "effectus/generators.hpp"
#include "effectus/herm.hpp"
#include "effectus/rng.hpp"

using namespace effectus;

namespace {

CMatrix randomHermitian(Rng& rng, int n) {
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.at(r, c) = cplx(rng.gaussian(), rng.gaussian());
  return (g + g.adjoint()) * 0.5;
}

CMatrix reconstruct(const EigenSystem& es) {
  CMatrix d = CMatrix::diag(es.values);
  return es.vectors * d * es.vectors.adjoint();
}

}  // namespace

TEST_CASE("diagonal matrices are their own eigensystem") {
  EigenSystem es = hermEig(CMatrix::diag({1.0, 0.25}));
  CHECK(es.values[0] == doctest::Approx(1.0));
  CHECK(es.values[1] == doctest::Approx(0.25));
  CHECK(maxAbsDiff(reconstruct(es), CMatrix::diag({1.0, 0.25})) < 1e-12);
}

TEST_CASE("pauli-x eigensystem") {
  CMatrix x(2, 2);
  x.at(0, 1) = 1.0;
  x.at(1, 0) = 1.0;
  EigenSystem es = hermEig(x);
  CHECK(es.values[0] == doctest::Approx(1.0));
  CHECK(es.values[1] == doctest::Approx(-1.0));
  // Eigenvectors are (1, +-1)/sqrt(2) up to phase: components have equal
  // modulus 1/sqrt(2).
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(es.vectors.at(0, k)) == doctest::Approx(std::sqrt(0.5)));
    CHECK(std::abs(es.vectors.at(1, k)) == doctest::Approx(std::sqrt(0.5)));
  }
  CHECK(maxAbsDiff(reconstruct(es), x) < 1e-12);
}

TEST_CASE("reconstruction oracle on random hermitians") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.intIn(1, 8);
    CMatrix h = randomHermitian(rng, n);
    EigenSystem es = hermEig(h);
    CHECK(maxAbsDiff(reconstruct(es), h) < 1e-10);
    CHECK(maxAbsDiff(es.vectors.adjoint() * es.vectors, CMatrix::identity(n)) < 1e-10);
    for (size_t k = 1; k < es.values.size(); ++k) CHECK(es.values[k - 1] >= es.values[k]);
  }
}

TEST_CASE("hermEig rejects non-hermitian input") {
  CMatrix m(2, 2);
  m.at(0, 1) = 1.0;  // strictly upper triangular
  CHECK_THROWS_AS(hermEig(m), NotHermitian);
}

TEST_CASE("psd square root") {
  CHECK(maxAbsDiff(psdSqrt(CMatrix::diag({0.25, 1.0})), CMatrix::diag({0.5, 1.0})) < 1e-12);
  CHECK(psdSqrt(CMatrix::zero(3, 3)).maxAbs() < 1e-15);

  // Squaring oracle, including the rank-one projector scaled by 1/2.
  CMatrix half(2, 2);
  half.at(0, 0) = half.at(0, 1) = half.at(1, 0) = half.at(1, 1) = 0.5;
  CMatrix root = psdSqrt(half);
  CHECK(maxAbsDiff(root * root, half) < 1e-9);

  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.intIn(1, 6);
    CMatrix e = gen::randomEffectMatrix(rng, n);
    CMatrix r = psdSqrt(e);
    CHECK(maxAbsDiff(r * r, e) < 1e-9);
    CHECK(maxAbsDiff(r * e, e * r) < 1e-9);  // commutes with its square
  }
}

TEST_CASE("support projection") {
  CHECK(maxAbsDiff(supportProj(CMatrix::diag({0.3, 0.0, 1.0})), CMatrix::diag({1.0, 0.0, 1.0})) <
        1e-12);

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.intIn(2, 6);
    CMatrix p = gen::randomProjectionMatrix(rng, n);
    CHECK(maxAbsDiff(supportProj(p), p) < 1e-9);  // idempotent on projections

    CMatrix e = gen::randomEffectMatrix(rng, n);
    CMatrix s = supportProj(e);
    CHECK(isProjectionMatrix(s));
    CHECK(maxAbsDiff(s * e * s, e) < 1e-9);  // d = ceil(d) d ceil(d)
  }
}

TEST_CASE("fixed projection and the floor/ceil duality") {
  CHECK(maxAbsDiff(fixedProj(CMatrix::diag({1.0, 0.999})), CMatrix::diag({1.0, 0.0})) < 1e-12);
  CHECK(maxAbsDiff(fixedProj(CMatrix::identity(3)), CMatrix::identity(3)) < 1e-12);

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.intIn(2, 6);
    CMatrix e = gen::randomEffectMatrixMixed(rng, n);
    CMatrix viaCeil = CMatrix::identity(n) - supportProj(CMatrix::identity(n) - e);
    CHECK(maxAbsDiff(fixedProj(e), viaCeil) < 1e-9);
    CHECK(isProjectionMatrix(fixedProj(e)));
  }
}

TEST_CASE("range isometry") {
  CMatrix v = rangeIsometry(CMatrix::diag({1.0, 0.0}));
  CHECK(v.rows() == 2);
  CHECK(v.cols() == 1);
  CHECK(std::abs(v.at(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(v.at(1, 0)) < 1e-12);

  CMatrix vi = rangeIsometry(CMatrix::identity(3));
  CHECK(maxAbsDiff(vi * vi.adjoint(), CMatrix::identity(3)) < 1e-9);

  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix u = gen::haarUnitary(rng, 4);
    CMatrix p = u * CMatrix::diag({1.0, 1.0, 0.0, 0.0}) * u.adjoint();
    CMatrix w = rangeIsometry(p);
    CHECK(w.cols() == 2);
    CHECK(maxAbsDiff(w.adjoint() * w, CMatrix::identity(2)) < 1e-9);
    CHECK(maxAbsDiff(w * w.adjoint(), p) < 1e-9);
  }

  CHECK_THROWS_AS(rangeIsometry(CMatrix::diag({0.5, 0.5})), NotProjection);
}

TEST_CASE("effects below a projection commute with it") {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.intIn(2, 6);
    CMatrix p = gen::randomProjectionMatrix(rng, n);
    CMatrix e = gen::randomEffectMatrix(rng, n);
    CMatrix a = p * e * p;  // an effect below p
    CHECK(maxAbsDiff(a * p, a) < 1e-9);
    CHECK(maxAbsDiff(p * a, a) < 1e-9);
    CHECK(maxAbsDiff(p * a * p, a) < 1e-9);
  }
}

TEST_CASE("pseudo-inverse inverts on the support") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix p = gen::randomProjectionMatrix(rng, 4);
    CMatrix e = p * gen::randomEffectMatrix(rng, 4) * p + p * 0.05;  // support = ran p
    CMatrix inv = psdPseudoInverse(e, 1e-9);
    CHECK(maxAbsDiff(inv * e, supportProj(e)) < 1e-8);
  }
}
