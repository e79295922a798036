#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "effectus/cmatrix.hpp"
#include "effectus/herm.hpp"
#include "effectus/rational.hpp"
#include "effectus/tolerances.hpp"

namespace effectus {

/// Finite-dimensional von Neumann algebra: a direct sum of matrix blocks.
/// The zero algebra is the empty list.
struct VnAlg {
  std::vector<int> blockDims;

  int numBlocks() const { return static_cast<int>(blockDims.size()); }
  int dim(int i) const { return blockDims[static_cast<size_t>(i)]; }
  bool operator==(const VnAlg& o) const { return blockDims == o.blockDims; }
  bool operator!=(const VnAlg& o) const { return !(*this == o); }
};

/// Block Hermitian effect: 0 <= e <= 1 per block, up to the spectral slack.
struct BlockEffect {
  VnAlg alg;
  std::vector<CMatrix> blocks;
};

/// One Kraus term. k maps the domain Hilbert block into the codomain block
/// (rows = codomain dim, cols = domain dim); the Heisenberg action on an
/// algebra element y is sum_terms k* y k.
struct KrausTerm {
  int src = 0;  // block of the domain algebra
  int dst = 0;  // block of the codomain algebra
  CMatrix k;
};

/// Morphism of the quantum instance: a completely positive subunital map in
/// Kraus form. Representations are not unique, so equality is extensional.
struct KrausMap {
  VnAlg dom, cod;
  std::vector<KrausTerm> terms;
};

/// Block densities with total trace <= 1 (substate) or = 1 (state).
struct BlockState {
  VnAlg alg;
  std::vector<CMatrix> densities;

  double totalTrace() const;
};

struct QCompr {
  VnAlg obj;
  KrausMap map;
};
struct QQuot {
  VnAlg obj;
  KrausMap map;
};

/// The effectus of finite-dimensional von Neumann algebras with Kraus maps.
struct QuantumEff {
  using Obj = VnAlg;
  using Morph = KrausMap;
  using Pred = BlockEffect;
  using Scalar = double;

  static constexpr const char* name() { return "quantum"; }

  static Obj scalarObj() { return VnAlg{{1}}; }
  static Obj coprod(const Obj& x, const Obj& y);
  static Obj domOf(const Morph& f) { return f.dom; }
  static Obj codOf(const Morph& f) { return f.cod; }

  static Morph id(const Obj& x);
  static Morph zero(const Obj& x, const Obj& y) { return KrausMap{x, y, {}}; }
  static Morph compose(const Morph& g, const Morph& f);
  static Morph inj(const Obj& x, const Obj& y, int which);
  static Morph pproj(const Obj& x, const Obj& y, int which);
  static Morph cotuple(const Morph& f, const Morph& g);
  static bool meq(const Morph& f, const Morph& g);
  static std::optional<Morph> ovee(const Morph& f, const Morph& g);
  static bool isZeroM(const Morph& f);
  static bool isTotal(const Morph& f);

  static Pred truth(const Obj& x);
  static Pred falsity(const Obj& x);
  static std::optional<Pred> povee(const Pred& p, const Pred& q);
  static Pred portho(const Pred& p);
  static bool pleq(const Pred& p, const Pred& q);
  static bool peq(const Pred& p, const Pred& q);
  static Pred scalarMulPred(const Rational01& s, const Pred& p);
  static Pred predCotuple(const Pred& p, const Pred& q);
  static Morph predToMorph(const Obj& x, const Pred& p);
  static Pred morphToPred(const Morph& f);

  static Scalar scalarValue(const Morph& s);
  static bool scalarEq(Scalar a, Scalar b) { return std::abs(a - b) <= tolerances().scalar; }
  static bool scalarIsZero(Scalar a) { return std::abs(a) <= tolerances().scalar; }
  static Scalar scalarMulS(Scalar a, Scalar b) { return a * b; }
  static Scalar scalarAdd(Scalar a, Scalar b) { return a + b; }

  static Pred kerSupp(const Morph& f);
  static Pred image(const Morph& f);
  static Morph assertMap(const Obj& x, const Pred& p);
  static bool isSharp(const Pred& p);
  static Pred floorPred(const Obj& x, const Pred& p);

  static QCompr comprehend(const Obj& x, const Pred& p);
  static QQuot quotient(const Obj& x, const Pred& p);
  static Morph factorQuotient(const QQuot& q, const Morph& f);
  static Morph factorComprehension(const QCompr& c, const Morph& f);

  static std::optional<std::pair<Morph, Scalar>> normalizeSub(const Morph& omega);
  static bool isPureSubstate(const Morph& omega);

  // Heisenberg / Schroedinger actions.
  static Pred applyHeisenberg(const Morph& f, const Pred& y);
  static std::vector<CMatrix> applyHeisenbergRaw(const Morph& f, int codBlock, const CMatrix& y);
  static BlockState schrodinger(const Morph& f, const BlockState& rho);

  static BlockState densityOf(const Morph& omega);     // substate morphism -> densities
  static Morph stateFromDensity(const BlockState& r);  // densities -> substate morphism
  static Morph vectorState(const Obj& x, int block, const std::vector<cplx>& v);

  // Tensor, single-block algebras paired blockwise otherwise. Kronecker
  // order is fixed as (left x right), row-major.
  static Obj tensorObj(const Obj& x, const Obj& y);
  static Pred tensorPred(const Pred& p, const Pred& q);
  static Morph tensor(const Morph& f, const Morph& g);

  /// Unitary conjugation y -> u* y u, blockwise: a unital *-automorphism.
  static Morph unitaryConj(const Obj& x, const std::vector<CMatrix>& u);
  /// Block permutation X -> X' with X'[i] = X[perm[i]].
  static Morph blockPermutation(const Obj& x, const std::vector<int>& perm);

  /// The Lueders family perturbed by a unitary: x -> sqrt(p) u* x u sqrt(p).
  static Morph perturbedAssert(const Obj& x, const Pred& p, const std::vector<CMatrix>& u);

  /// Checks im(asrt(p) . pi) = ceil(p & im(pi)) for the vector state pi of v,
  /// including the degenerate branch where sqrt(p) v = 0.
  static bool dualityCheck(const Obj& x, const Pred& p, int block, const std::vector<cplx>& v,
                           const Morph& assertLike);

  static void validateEffect(const Pred& p);
};

}  // namespace effectus
