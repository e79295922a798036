#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "effectus/boolean.hpp"
#include "effectus/rational.hpp"

namespace effectus {

/// Finite-support rational subdistribution. Zero weights are never stored,
/// so equality is structural; total mass is kept <= 1 exactly.
struct SubDist {
  std::map<int, Rational01> w;

  Rational01 at(int i) const {
    auto it = w.find(i);
    return it == w.end() ? Rational01::zero() : it->second;
  }
  void set(int i, const Rational01& r) {
    if (r.isZero())
      w.erase(i);
    else
      w[i] = r;
  }
  Rational01 mass() const;
  bool isZero() const { return w.empty(); }

  static SubDist dirac(int i) {
    SubDist d;
    d.w[i] = Rational01::one();
    return d;
  }
};

/// Kleisli map of the subdistribution monad: one row per domain element.
struct KernelMap {
  int dom = 0;
  int cod = 0;
  std::vector<SubDist> rows;
};

struct FuzzyPred {
  std::vector<Rational01> v;
  int size() const { return static_cast<int>(v.size()); }
};

struct ProbCompr {
  FinSet obj;
  KernelMap map;
};
struct ProbQuot {
  FinSet obj;
  KernelMap map;
};

/// The commutative effectus of finite sets and rational subdistribution
/// kernels. All arithmetic is exact.
struct ProbEff {
  using Obj = FinSet;
  using Morph = KernelMap;
  using Pred = FuzzyPred;
  using Scalar = Rational01;

  static constexpr const char* name() { return "prob"; }

  static Obj scalarObj() { return FinSet{1, {}}; }
  static Obj coprod(const Obj& x, const Obj& y) { return FinSet{x.size + y.size, {}}; }
  static Obj domOf(const Morph& f) { return FinSet{f.dom, {}}; }
  static Obj codOf(const Morph& f) { return FinSet{f.cod, {}}; }

  static Morph id(const Obj& x);
  static Morph zero(const Obj& x, const Obj& y);
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
  static bool peq(const Pred& p, const Pred& q) { return p.v == q.v; }
  static Pred scalarMulPred(const Rational01& s, const Pred& p);
  static Pred predCotuple(const Pred& p, const Pred& q);
  static Morph predToMorph(const Obj& x, const Pred& p);
  static Pred morphToPred(const Morph& f);

  static Scalar scalarValue(const Morph& s);
  static bool scalarEq(const Scalar& a, const Scalar& b) { return a == b; }
  static bool scalarIsZero(const Scalar& a) { return a.isZero(); }
  static Scalar scalarMulS(const Scalar& a, const Scalar& b) { return Rational01::mul(a, b); }
  static Scalar scalarAdd(const Scalar& a, const Scalar& b);

  static Pred kerSupp(const Morph& f);
  static Pred image(const Morph& f);
  static Morph assertMap(const Obj& x, const Pred& p);
  static bool isSharp(const Pred& p);
  static Pred floorPred(const Obj& x, const Pred& p);

  static ProbCompr comprehend(const Obj& x, const Pred& p);
  static ProbQuot quotient(const Obj& x, const Pred& p);
  static Morph factorQuotient(const ProbQuot& q, const Morph& f);
  static Morph factorComprehension(const ProbCompr& c, const Morph& f);

  static std::optional<std::pair<Morph, Scalar>> normalizeSub(const Morph& omega);
  static bool isPureSubstate(const Morph& omega);

  /// Substitution along a total kernel; an effect-module homomorphism.
  static Pred predPullback(const Morph& f, const Pred& q);

  // Monoidal fragment: product distributions on pair indices (row-major,
  // pair (a,b) over X x Y sits at a*|Y|+b), marginals, and the copier.
  static Obj tensorObj(const Obj& x, const Obj& y) { return FinSet{x.size * y.size, {}}; }
  static Morph tensor(const Morph& f, const Morph& g);
  static Morph marginal(const Obj& x, const Obj& y, int which);
  static Morph copier(const Obj& x);

  /// Canonical map X/floor(ker f) -> [Y|im f]; reports whether it is an
  /// isomorphism of kernels (total, deterministic and bijective).
  static bool firstIsoProbe(const Morph& f);

  static bool kernelIsIso(const Morph& f);
};

}  // namespace effectus
