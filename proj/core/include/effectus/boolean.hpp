#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effectus/errors.hpp"
#include "effectus/rational.hpp"

namespace effectus {

/// Elements are dense integer indices; labels are presentation-only.
struct FinSet {
  int size = 0;
  std::vector<std::string> labels;  // optional, size 0 or `size`

  std::string labelOf(int i) const {
    return labels.empty() ? std::to_string(i) : labels[static_cast<size_t>(i)];
  }
};

/// Partial function between finite sets; absence is an explicit optional.
struct PartialFn {
  int dom = 0;
  int cod = 0;
  std::vector<std::optional<int>> table;

  bool definedAt(int x) const { return table[static_cast<size_t>(x)].has_value(); }
  int valueAt(int x) const { return *table[static_cast<size_t>(x)]; }
};

struct SubsetPred {
  int size = 0;
  std::vector<std::uint8_t> bits;

  bool contains(int i) const { return bits[static_cast<size_t>(i)] != 0; }
};

SubsetPred subsetMeet(const SubsetPred& p, const SubsetPred& q);
SubsetPred subsetJoin(const SubsetPred& p, const SubsetPred& q);
SubsetPred subsetComplement(const SubsetPred& p);

struct BoolCompr {
  FinSet obj;
  PartialFn map;  // total injection into the ambient set
};
struct BoolQuot {
  FinSet obj;
  PartialFn map;  // partial identity out of the ambient set
};

/// Preimage split of a total map into a binary coproduct: Y = Y1 + Y2 with
/// the two restriction squares commuting and [incl1, incl2] a bijection.
struct ExtensiveSplit {
  FinSet y1, y2;
  PartialFn incl1, incl2;  // Yi -> Y, total
  PartialFn f1, f2;        // Yi -> Xi, total restrictions
};

/// The effectus of finite sets and partial functions. All operations are
/// exact; morphism equality is structural.
struct BooleanEff {
  using Obj = FinSet;
  using Morph = PartialFn;
  using Pred = SubsetPred;
  using Scalar = bool;

  static constexpr const char* name() { return "boolean"; }

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
  static bool peq(const Pred& p, const Pred& q);
  static Pred scalarMulPred(const Rational01& s, const Pred& p);
  static Pred predCotuple(const Pred& p, const Pred& q);
  static Morph predToMorph(const Obj& x, const Pred& p);
  static Pred morphToPred(const Morph& f);

  static Scalar scalarValue(const Morph& s);  // morphism 1 -> 1
  static bool scalarEq(Scalar a, Scalar b) { return a == b; }
  static bool scalarIsZero(Scalar a) { return !a; }
  static Scalar scalarMulS(Scalar a, Scalar b) { return a && b; }
  static Scalar scalarAdd(Scalar a, Scalar b);

  static Pred kerSupp(const Morph& f);
  static Pred image(const Morph& f);
  static Morph assertMap(const Obj& x, const Pred& p);
  static bool isSharp(const Pred&) { return true; }
  static Pred floorPred(const Obj&, const Pred& p) { return p; }

  static BoolCompr comprehend(const Obj& x, const Pred& p);
  static BoolQuot quotient(const Obj& x, const Pred& p);
  static Morph factorQuotient(const BoolQuot& q, const Morph& f);
  static Morph factorComprehension(const BoolCompr& c, const Morph& f);

  static std::optional<std::pair<Morph, Scalar>> normalizeSub(const Morph& omega);
  static bool isPureSubstate(const Morph& omega);

  static ExtensiveSplit extensivePullback(const Obj& x1, const Obj& x2, const Morph& f);
};

}  // namespace effectus
