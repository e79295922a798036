#include "effectus/boolean.hpp"

namespace effectus {

SubsetPred subsetMeet(const SubsetPred& p, const SubsetPred& q) {
  if (p.size != q.size) throw ShapeMismatch("subset meet");
  SubsetPred r{p.size, p.bits};
  for (int i = 0; i < p.size; ++i) r.bits[i] = p.bits[i] && q.bits[i];
  return r;
}

SubsetPred subsetJoin(const SubsetPred& p, const SubsetPred& q) {
  if (p.size != q.size) throw ShapeMismatch("subset join");
  SubsetPred r{p.size, p.bits};
  for (int i = 0; i < p.size; ++i) r.bits[i] = p.bits[i] || q.bits[i];
  return r;
}

SubsetPred subsetComplement(const SubsetPred& p) {
  SubsetPred r{p.size, p.bits};
  for (int i = 0; i < p.size; ++i) r.bits[i] = !p.bits[i];
  return r;
}

PartialFn BooleanEff::id(const Obj& x) {
  PartialFn f{x.size, x.size, {}};
  f.table.resize(x.size);
  for (int i = 0; i < x.size; ++i) f.table[i] = i;
  return f;
}

PartialFn BooleanEff::zero(const Obj& x, const Obj& y) {
  PartialFn f{x.size, y.size, {}};
  f.table.assign(x.size, std::nullopt);
  return f;
}

PartialFn BooleanEff::compose(const Morph& g, const Morph& f) {
  if (f.cod != g.dom) throw ShapeMismatch("partial function composition");
  PartialFn h{f.dom, g.cod, {}};
  h.table.resize(f.dom);
  for (int x = 0; x < f.dom; ++x)
    if (f.definedAt(x) && g.definedAt(f.valueAt(x))) h.table[x] = g.valueAt(f.valueAt(x));
  return h;
}

PartialFn BooleanEff::inj(const Obj& x, const Obj& y, int which) {
  int off = which == 0 ? 0 : x.size;
  int dom = which == 0 ? x.size : y.size;
  PartialFn f{dom, x.size + y.size, {}};
  f.table.resize(dom);
  for (int i = 0; i < dom; ++i) f.table[i] = off + i;
  return f;
}

PartialFn BooleanEff::pproj(const Obj& x, const Obj& y, int which) {
  PartialFn f{x.size + y.size, which == 0 ? x.size : y.size, {}};
  f.table.assign(f.dom, std::nullopt);
  if (which == 0) {
    for (int i = 0; i < x.size; ++i) f.table[i] = i;
  } else {
    for (int i = 0; i < y.size; ++i) f.table[x.size + i] = i;
  }
  return f;
}

PartialFn BooleanEff::cotuple(const Morph& f, const Morph& g) {
  if (f.cod != g.cod) throw ShapeMismatch("cotuple codomains differ");
  PartialFn h{f.dom + g.dom, f.cod, {}};
  h.table = f.table;
  h.table.insert(h.table.end(), g.table.begin(), g.table.end());
  return h;
}

bool BooleanEff::meq(const Morph& f, const Morph& g) {
  return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
}

std::optional<PartialFn> BooleanEff::ovee(const Morph& f, const Morph& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw ShapeMismatch("parallel sum");
  PartialFn h{f.dom, f.cod, {}};
  h.table.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) {
    if (f.definedAt(x) && g.definedAt(x)) return std::nullopt;  // domains must be disjoint
    h.table[x] = f.definedAt(x) ? f.table[x] : g.table[x];
  }
  return h;
}

bool BooleanEff::isZeroM(const Morph& f) {
  for (const auto& v : f.table)
    if (v.has_value()) return false;
  return true;
}

bool BooleanEff::isTotal(const Morph& f) {
  for (const auto& v : f.table)
    if (!v.has_value()) return false;
  return true;
}

SubsetPred BooleanEff::truth(const Obj& x) {
  return SubsetPred{x.size, std::vector<std::uint8_t>(x.size, 1)};
}

SubsetPred BooleanEff::falsity(const Obj& x) {
  return SubsetPred{x.size, std::vector<std::uint8_t>(x.size, 0)};
}

std::optional<SubsetPred> BooleanEff::povee(const Pred& p, const Pred& q) {
  if (p.size != q.size) throw ShapeMismatch("predicate sum");
  for (int i = 0; i < p.size; ++i)
    if (p.bits[i] && q.bits[i]) return std::nullopt;
  return subsetJoin(p, q);
}

SubsetPred BooleanEff::portho(const Pred& p) { return subsetComplement(p); }

bool BooleanEff::pleq(const Pred& p, const Pred& q) {
  for (int i = 0; i < p.size; ++i)
    if (p.bits[i] && !q.bits[i]) return false;
  return true;
}

bool BooleanEff::peq(const Pred& p, const Pred& q) {
  return p.size == q.size && p.bits == q.bits;
}

SubsetPred BooleanEff::scalarMulPred(const Rational01& s, const Pred& p) {
  if (s.isOne()) return p;
  if (s.isZero()) return falsity(FinSet{p.size, {}});
  throw UnsupportedCarrier("subsets admit only Boolean scalars");
}

SubsetPred BooleanEff::predCotuple(const Pred& p, const Pred& q) {
  SubsetPred r{p.size + q.size, p.bits};
  r.bits.insert(r.bits.end(), q.bits.begin(), q.bits.end());
  return r;
}

PartialFn BooleanEff::predToMorph(const Obj& x, const Pred& p) {
  PartialFn f{x.size, 1, {}};
  f.table.resize(x.size);
  for (int i = 0; i < x.size; ++i)
    f.table[i] = p.contains(i) ? std::optional<int>(0) : std::nullopt;
  return f;
}

SubsetPred BooleanEff::morphToPred(const Morph& f) {
  if (f.cod != 1) throw ShapeMismatch("predicate morphism must land in the scalar object");
  SubsetPred p{f.dom, std::vector<std::uint8_t>(f.dom, 0)};
  for (int i = 0; i < f.dom; ++i) p.bits[i] = f.definedAt(i) ? 1 : 0;
  return p;
}

bool BooleanEff::scalarValue(const Morph& s) {
  if (s.dom != 1 || s.cod != 1) throw ShapeMismatch("scalar morphism");
  return s.definedAt(0);
}

bool BooleanEff::scalarAdd(Scalar a, Scalar b) {
  if (a && b) throw Error("boolean scalar sum undefined for 1+1");
  return a || b;
}

SubsetPred BooleanEff::kerSupp(const Morph& f) {
  SubsetPred p{f.dom, std::vector<std::uint8_t>(f.dom, 0)};
  for (int i = 0; i < f.dom; ++i) p.bits[i] = f.definedAt(i) ? 1 : 0;
  return p;
}

SubsetPred BooleanEff::image(const Morph& f) {
  SubsetPred p{f.cod, std::vector<std::uint8_t>(f.cod, 0)};
  for (int i = 0; i < f.dom; ++i)
    if (f.definedAt(i)) p.bits[f.valueAt(i)] = 1;
  return p;
}

PartialFn BooleanEff::assertMap(const Obj& x, const Pred& p) {
  PartialFn f{x.size, x.size, {}};
  f.table.resize(x.size);
  for (int i = 0; i < x.size; ++i)
    f.table[i] = p.contains(i) ? std::optional<int>(i) : std::nullopt;
  return f;
}

BoolCompr BooleanEff::comprehend(const Obj& x, const Pred& p) {
  BoolCompr c;
  PartialFn pi{0, x.size, {}};
  for (int i = 0; i < x.size; ++i)
    if (p.contains(i)) {
      pi.table.push_back(i);
      ++pi.dom;
    }
  c.obj = FinSet{pi.dom, {}};
  c.map = pi;
  return c;
}

BoolQuot BooleanEff::quotient(const Obj& x, const Pred& p) {
  // X/P is comprehension of the complement; xi is the partial identity
  // defined exactly off P, so ker(xi) = P.
  BoolQuot q;
  PartialFn xi{x.size, 0, {}};
  xi.table.assign(x.size, std::nullopt);
  for (int i = 0; i < x.size; ++i)
    if (!p.contains(i)) xi.table[i] = xi.cod++;
  q.obj = FinSet{xi.cod, {}};
  q.map = xi;
  return q;
}

PartialFn BooleanEff::factorQuotient(const BoolQuot& q, const Morph& f) {
  if (f.dom != q.map.dom) throw ShapeMismatch("factorQuotient");
  for (int i = 0; i < f.dom; ++i)
    if (!q.map.definedAt(i) && f.definedAt(i))
      throw PreconditionFailed("map does not vanish on the collapsed part");
  PartialFn bar{q.obj.size, f.cod, {}};
  bar.table.assign(q.obj.size, std::nullopt);
  for (int i = 0; i < f.dom; ++i)
    if (q.map.definedAt(i)) bar.table[q.map.valueAt(i)] = f.table[i];
  return bar;
}

PartialFn BooleanEff::factorComprehension(const BoolCompr& c, const Morph& f) {
  if (f.cod != c.map.cod) throw ShapeMismatch("factorComprehension");
  std::vector<int> indexIn(c.map.cod, -1);
  for (int k = 0; k < c.map.dom; ++k) indexIn[c.map.valueAt(k)] = k;
  PartialFn g{f.dom, c.obj.size, {}};
  g.table.assign(f.dom, std::nullopt);
  for (int i = 0; i < f.dom; ++i) {
    if (!f.definedAt(i)) continue;
    int k = indexIn[f.valueAt(i)];
    if (k < 0) throw PreconditionFailed("map does not land inside the comprehension");
    g.table[i] = k;
  }
  return g;
}

std::optional<std::pair<PartialFn, bool>> BooleanEff::normalizeSub(const Morph& omega) {
  if (omega.dom != 1) throw ShapeMismatch("substate has domain 1");
  if (!omega.definedAt(0)) return std::nullopt;
  return std::make_pair(omega, true);
}

bool BooleanEff::isPureSubstate(const Morph& omega) {
  if (omega.dom != 1) throw ShapeMismatch("substate has domain 1");
  return omega.definedAt(0);
}

ExtensiveSplit BooleanEff::extensivePullback(const Obj& x1, const Obj& x2, const Morph& f) {
  if (!isTotal(f)) throw NotTotal("extensive pullback needs a total map");
  if (f.cod != x1.size + x2.size) throw ShapeMismatch("extensivePullback");
  ExtensiveSplit s;
  PartialFn i1{0, f.dom, {}}, i2{0, f.dom, {}};
  PartialFn f1{0, x1.size, {}}, f2{0, x2.size, {}};
  for (int y = 0; y < f.dom; ++y) {
    int v = f.valueAt(y);
    if (v < x1.size) {
      i1.table.push_back(y);
      f1.table.push_back(v);
      ++i1.dom;
      ++f1.dom;
    } else {
      i2.table.push_back(y);
      f2.table.push_back(v - x1.size);
      ++i2.dom;
      ++f2.dom;
    }
  }
  s.y1 = FinSet{i1.dom, {}};
  s.y2 = FinSet{i2.dom, {}};
  s.incl1 = i1;
  s.incl2 = i2;
  s.f1 = f1;
  s.f2 = f2;
  return s;
}

}  // namespace effectus
