#include "effectus/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace effectus::gen {

Rational01 rational(Rng& rng) {
  int den = rng.intIn(1, 16);
  int num = rng.intIn(0, den);
  return Rational01(num, den);
}

FinSet finSet(Rng& rng, int maxCarrier) { return FinSet{rng.intIn(1, maxCarrier), {}}; }

SubsetPred subset(Rng& rng, const FinSet& x) {
  SubsetPred p{x.size, std::vector<std::uint8_t>(x.size, 0)};
  for (int i = 0; i < x.size; ++i) p.bits[i] = rng.coin() ? 1 : 0;
  return p;
}

PartialFn partialFn(Rng& rng, const FinSet& x, const FinSet& y) {
  PartialFn f{x.size, y.size, {}};
  f.table.resize(x.size);
  for (int i = 0; i < x.size; ++i) {
    int v = rng.intIn(0, y.size);  // y.size means undefined
    if (v < y.size) f.table[i] = v;
  }
  return f;
}

PartialFn totalFn(Rng& rng, const FinSet& x, const FinSet& y) {
  PartialFn f{x.size, y.size, {}};
  f.table.resize(x.size);
  for (int i = 0; i < x.size; ++i) f.table[i] = rng.intIn(0, y.size - 1);
  return f;
}

PartialFn boolState(Rng& rng, const FinSet& x) { return totalFn(rng, FinSet{1, {}}, x); }

FuzzyPred fuzzy(Rng& rng, const FinSet& x) {
  FuzzyPred p;
  p.v.reserve(x.size);
  for (int i = 0; i < x.size; ++i) p.v.push_back(rational(rng));
  return p;
}

SubDist dist(Rng& rng, int cod) {
  // Integer weights normalised exactly.
  std::vector<int> w(cod, 0);
  int sum = 0;
  for (int i = 0; i < cod; ++i) {
    w[i] = rng.intIn(0, 8);
    sum += w[i];
  }
  if (sum == 0) {
    w[rng.intIn(0, cod - 1)] = 1;
    sum = 1;
  }
  SubDist d;
  for (int i = 0; i < cod; ++i)
    if (w[i] > 0) d.set(i, Rational01(w[i], sum));
  return d;
}

SubDist subDist(Rng& rng, int cod) {
  SubDist d = dist(rng, cod);
  Rational01 scale = rational(rng);
  SubDist out;
  for (const auto& [i, r] : d.w) out.set(i, Rational01::mul(scale, r));
  return out;
}

KernelMap kernel(Rng& rng, const FinSet& x, const FinSet& y) {
  KernelMap f{x.size, y.size, {}};
  f.rows.reserve(x.size);
  for (int i = 0; i < x.size; ++i) f.rows.push_back(subDist(rng, y.size));
  return f;
}

KernelMap totalKernel(Rng& rng, const FinSet& x, const FinSet& y) {
  KernelMap f{x.size, y.size, {}};
  f.rows.reserve(x.size);
  for (int i = 0; i < x.size; ++i) f.rows.push_back(dist(rng, y.size));
  return f;
}

KernelMap probState(Rng& rng, const FinSet& x) { return totalKernel(rng, FinSet{1, {}}, x); }

VnAlg randomAlg(Rng& rng) {
  static const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 1}, {2, 2}};
  return VnAlg{shapes[rng.below(shapes.size())]};
}

CMatrix haarUnitary(Rng& rng, int n) {
  // QR of a complex Gaussian matrix via modified Gram-Schmidt, with the
  // phase convention fixed so the draw is deterministic per stream.
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.at(r, c) = cplx(rng.gaussian(), rng.gaussian());
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cplx ip = 0.0;
      for (int r = 0; r < n; ++r) ip += std::conj(g.at(r, prev)) * g.at(r, c);
      for (int r = 0; r < n; ++r) g.at(r, c) -= ip * g.at(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(g.at(r, c));
    norm = std::sqrt(norm);
    if (norm < 1e-12) {
      g.at(c, c) = 1.0;
      norm = 1.0;
    }
    for (int r = 0; r < n; ++r) g.at(r, c) = g.at(r, c) * (1.0 / norm);
  }
  return g;
}

CMatrix randomEffectMatrix(Rng& rng, int n) {
  CMatrix u = haarUnitary(rng, n);
  std::vector<double> lam(n);
  // Uniform spectrum, nudged off the (ceilCutoff, floorCutoff] bands at
  // both ends where support and fixed-space membership disagree by
  // construction. Statistically indistinguishable from uniform [0,1].
  for (int i = 0; i < n; ++i) lam[i] = 2e-6 + (1.0 - 4e-6) * rng.real();
  return u * CMatrix::diag(lam) * u.adjoint();
}

CMatrix randomProjectionMatrix(Rng& rng, int n) {
  CMatrix u = haarUnitary(rng, n);
  std::vector<double> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = rng.coin() ? 1.0 : 0.0;
  return u * CMatrix::diag(lam) * u.adjoint();
}

CMatrix randomEffectMatrixMixed(Rng& rng, int n) {
  CMatrix u = haarUnitary(rng, n);
  std::vector<double> lam(n);
  for (int i = 0; i < n; ++i) {
    int kind = rng.intIn(0, 2);
    // Generic eigenvalues keep clear of the floor/ceil cutoff bands so
    // spectral membership is unambiguous for the checks that use them.
    lam[i] = kind == 0 ? 0.0 : (kind == 1 ? 1.0 : 1e-4 + (1.0 - 2e-4) * rng.real());
  }
  return u * CMatrix::diag(lam) * u.adjoint();
}

CMatrix randomDensityMatrix(Rng& rng, int n) {
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.at(r, c) = cplx(rng.gaussian(), rng.gaussian());
  CMatrix rho = g * g.adjoint();
  double t = rho.trace().real();
  return rho * (1.0 / t);
}

std::vector<cplx> randomUnitVector(Rng& rng, int n) {
  std::vector<cplx> v(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = cplx(rng.gaussian(), rng.gaussian());
    norm += std::norm(v[i]);
  }
  norm = std::sqrt(norm);
  for (auto& a : v) a *= 1.0 / norm;
  return v;
}

BlockEffect blockEffect(Rng& rng, const VnAlg& x) {
  BlockEffect p{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) p.blocks.push_back(randomEffectMatrix(rng, x.dim(i)));
  return p;
}

BlockEffect blockProjection(Rng& rng, const VnAlg& x) {
  BlockEffect p{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    p.blocks.push_back(randomProjectionMatrix(rng, x.dim(i)));
  return p;
}

BlockEffect blockEffectMixed(Rng& rng, const VnAlg& x) {
  BlockEffect p{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    p.blocks.push_back(randomEffectMatrixMixed(rng, x.dim(i)));
  return p;
}

KrausMap krausTotal(Rng& rng, const VnAlg& x, const VnAlg& y) {
  // Per domain block: a random isometry into a stack of codomain blocks,
  // sliced back into per-block Kraus terms. The Heisenberg image of 1 is
  // then exactly 1.
  KrausMap f{x, y, {}};
  for (int i = 0; i < x.numBlocks(); ++i) {
    int n = x.dim(i);
    std::vector<int> dsts;
    int stacked = 0;
    while (stacked < n || (dsts.empty() || rng.coin())) {
      int j = static_cast<int>(rng.below(y.numBlocks()));
      dsts.push_back(j);
      stacked += y.dim(j);
      if (static_cast<int>(dsts.size()) >= 4 && stacked >= n) break;
    }

    CMatrix tall(stacked, n);
    for (int r = 0; r < stacked; ++r)
      for (int c = 0; c < n; ++c) tall.at(r, c) = cplx(rng.gaussian(), rng.gaussian());
    // Modified Gram-Schmidt on the columns; stacked >= n keeps them
    // independent almost surely.
    for (int c = 0; c < n; ++c) {
      for (int rep = 0; rep < 2; ++rep)
        for (int prev = 0; prev < c; ++prev) {
          cplx ip = 0.0;
          for (int r = 0; r < stacked; ++r) ip += std::conj(tall.at(r, prev)) * tall.at(r, c);
          for (int r = 0; r < stacked; ++r) tall.at(r, c) -= ip * tall.at(r, prev);
        }
      double norm = 0.0;
      for (int r = 0; r < stacked; ++r) norm += std::norm(tall.at(r, c));
      norm = std::sqrt(norm);
      for (int r = 0; r < stacked; ++r) tall.at(r, c) = tall.at(r, c) * (1.0 / norm);
    }

    int row = 0;
    for (int j : dsts) {
      CMatrix k(y.dim(j), n);
      for (int r = 0; r < y.dim(j); ++r)
        for (int c = 0; c < n; ++c) k.at(r, c) = tall.at(row + r, c);
      row += y.dim(j);
      f.terms.push_back(KrausTerm{i, j, std::move(k)});
    }
  }
  return f;
}

KrausMap krausSub(Rng& rng, const VnAlg& x, const VnAlg& y) {
  KrausMap f = krausTotal(rng, x, y);
  BlockEffect damp = blockEffect(rng, x);
  return QuantumEff::compose(f, QuantumEff::assertMap(x, damp));
}

KrausMap quantumState(Rng& rng, const VnAlg& x) {
  // Random block densities with exactly unit total trace.
  std::vector<double> w(x.numBlocks());
  double sum = 0.0;
  for (auto& v : w) {
    v = rng.real() + 1e-3;
    sum += v;
  }
  BlockState rho{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    rho.densities.push_back(randomDensityMatrix(rng, x.dim(i)) * (w[i] / sum));
  return QuantumEff::stateFromDensity(rho);
}

KrausMap centralMultiplier(Rng& rng, const VnAlg& x) {
  KrausMap f{x, x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) {
    double c = rng.real();
    f.terms.push_back(KrausTerm{i, i, CMatrix::identity(x.dim(i)) * std::sqrt(c)});
  }
  return f;
}

KrausMap sharpPreserving(Rng& rng, const VnAlg& x) {
  std::vector<CMatrix> u;
  u.reserve(x.numBlocks());
  for (int i = 0; i < x.numBlocks(); ++i) u.push_back(haarUnitary(rng, x.dim(i)));
  KrausMap conj = QuantumEff::unitaryConj(x, u);

  // Occasionally compose with a permutation of equal-dimension blocks.
  std::vector<int> perm(x.numBlocks());
  std::iota(perm.begin(), perm.end(), 0);
  if (x.numBlocks() > 1 && rng.coin()) {
    for (int i = x.numBlocks() - 1; i > 0; --i) {
      int j = rng.intIn(0, i);
      if (x.dim(perm[i]) == x.dim(perm[j])) std::swap(perm[i], perm[j]);
    }
  }
  return QuantumEff::compose(conj, QuantumEff::blockPermutation(x, perm));
}

}  // namespace effectus::gen
