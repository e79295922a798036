#include "effectus/prob.hpp"

namespace effectus {

Rational01 SubDist::mass() const {
  RatAcc acc;
  for (const auto& [i, r] : w) acc.add(r);
  return acc.toRational01();
}

KernelMap ProbEff::id(const Obj& x) {
  KernelMap f{x.size, x.size, {}};
  f.rows.resize(x.size);
  for (int i = 0; i < x.size; ++i) f.rows[i] = SubDist::dirac(i);
  return f;
}

KernelMap ProbEff::zero(const Obj& x, const Obj& y) {
  KernelMap f{x.size, y.size, {}};
  f.rows.resize(x.size);
  return f;
}

KernelMap ProbEff::compose(const Morph& g, const Morph& f) {
  if (f.cod != g.dom) throw ShapeMismatch("kernel composition");
  KernelMap h{f.dom, g.cod, {}};
  h.rows.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) {
    std::map<int, RatAcc> acc;
    for (const auto& [y, fy] : f.rows[x].w)
      for (const auto& [z, gz] : g.rows[y].w) acc[z].add(Rational01::mul(fy, gz));
    for (const auto& [z, a] : acc) h.rows[x].set(z, a.toRational01());
  }
  return h;
}

KernelMap ProbEff::inj(const Obj& x, const Obj& y, int which) {
  int off = which == 0 ? 0 : x.size;
  int dom = which == 0 ? x.size : y.size;
  KernelMap f{dom, x.size + y.size, {}};
  f.rows.resize(dom);
  for (int i = 0; i < dom; ++i) f.rows[i] = SubDist::dirac(off + i);
  return f;
}

KernelMap ProbEff::pproj(const Obj& x, const Obj& y, int which) {
  KernelMap f{x.size + y.size, which == 0 ? x.size : y.size, {}};
  f.rows.resize(f.dom);
  if (which == 0) {
    for (int i = 0; i < x.size; ++i) f.rows[i] = SubDist::dirac(i);
  } else {
    for (int i = 0; i < y.size; ++i) f.rows[x.size + i] = SubDist::dirac(i);
  }
  return f;
}

KernelMap ProbEff::cotuple(const Morph& f, const Morph& g) {
  if (f.cod != g.cod) throw ShapeMismatch("cotuple codomains differ");
  KernelMap h{f.dom + g.dom, f.cod, {}};
  h.rows = f.rows;
  h.rows.insert(h.rows.end(), g.rows.begin(), g.rows.end());
  return h;
}

bool ProbEff::meq(const Morph& f, const Morph& g) {
  if (f.dom != g.dom || f.cod != g.cod) return false;
  for (int i = 0; i < f.dom; ++i)
    if (f.rows[i].w != g.rows[i].w) return false;
  return true;
}

std::optional<KernelMap> ProbEff::ovee(const Morph& f, const Morph& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw ShapeMismatch("parallel sum");
  KernelMap h{f.dom, f.cod, {}};
  h.rows.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) {
    RatAcc mass;
    std::map<int, RatAcc> acc;
    for (const auto& [y, r] : f.rows[x].w) {
      acc[y].add(r);
      mass.add(r);
    }
    for (const auto& [y, r] : g.rows[x].w) {
      acc[y].add(r);
      mass.add(r);
    }
    if (!mass.leqOne()) return std::nullopt;
    for (const auto& [y, a] : acc) h.rows[x].set(y, a.toRational01());
  }
  return h;
}

bool ProbEff::isZeroM(const Morph& f) {
  for (const auto& row : f.rows)
    if (!row.isZero()) return false;
  return true;
}

bool ProbEff::isTotal(const Morph& f) {
  for (const auto& row : f.rows)
    if (!row.mass().isOne()) return false;
  return true;
}

FuzzyPred ProbEff::truth(const Obj& x) {
  return FuzzyPred{std::vector<Rational01>(x.size, Rational01::one())};
}

FuzzyPred ProbEff::falsity(const Obj& x) {
  return FuzzyPred{std::vector<Rational01>(x.size, Rational01::zero())};
}

std::optional<FuzzyPred> ProbEff::povee(const Pred& p, const Pred& q) {
  if (p.size() != q.size()) throw ShapeMismatch("predicate sum");
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (size_t i = 0; i < p.v.size(); ++i) {
    auto s = Rational01::add(p.v[i], q.v[i]);
    if (!s) return std::nullopt;
    r.v.push_back(*s);
  }
  return r;
}

FuzzyPred ProbEff::portho(const Pred& p) {
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (const auto& x : p.v) r.v.push_back(x.complement());
  return r;
}

bool ProbEff::pleq(const Pred& p, const Pred& q) {
  for (size_t i = 0; i < p.v.size(); ++i)
    if (!Rational01::leq(p.v[i], q.v[i])) return false;
  return true;
}

FuzzyPred ProbEff::scalarMulPred(const Rational01& s, const Pred& p) {
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (const auto& x : p.v) r.v.push_back(Rational01::mul(s, x));
  return r;
}

FuzzyPred ProbEff::predCotuple(const Pred& p, const Pred& q) {
  FuzzyPred r{p.v};
  r.v.insert(r.v.end(), q.v.begin(), q.v.end());
  return r;
}

KernelMap ProbEff::predToMorph(const Obj& x, const Pred& p) {
  KernelMap f{x.size, 1, {}};
  f.rows.resize(x.size);
  for (int i = 0; i < x.size; ++i) f.rows[i].set(0, p.v[i]);
  return f;
}

FuzzyPred ProbEff::morphToPred(const Morph& f) {
  if (f.cod != 1) throw ShapeMismatch("predicate morphism must land in the scalar object");
  FuzzyPred p;
  p.v.reserve(f.rows.size());
  for (const auto& row : f.rows) p.v.push_back(row.at(0));
  return p;
}

Rational01 ProbEff::scalarValue(const Morph& s) {
  if (s.dom != 1 || s.cod != 1) throw ShapeMismatch("scalar morphism");
  return s.rows[0].at(0);
}

Rational01 ProbEff::scalarAdd(const Scalar& a, const Scalar& b) {
  auto s = Rational01::add(a, b);
  if (!s) throw Error("scalar sum exceeds 1");
  return *s;
}

FuzzyPred ProbEff::kerSupp(const Morph& f) {
  FuzzyPred p;
  p.v.reserve(f.rows.size());
  for (const auto& row : f.rows) p.v.push_back(row.mass());
  return p;
}

FuzzyPred ProbEff::image(const Morph& f) {
  // Indicator of the reachable support: the least sharp q with box_f(q) = 1.
  std::vector<Rational01> v(f.cod, Rational01::zero());
  for (const auto& row : f.rows)
    for (const auto& [y, r] : row.w) v[y] = Rational01::one();
  return FuzzyPred{v};
}

KernelMap ProbEff::assertMap(const Obj& x, const Pred& p) {
  KernelMap f{x.size, x.size, {}};
  f.rows.resize(x.size);
  for (int i = 0; i < x.size; ++i) f.rows[i].set(i, p.v[i]);
  return f;
}

bool ProbEff::isSharp(const Pred& p) {
  for (const auto& x : p.v)
    if (!x.isZero() && !x.isOne()) return false;
  return true;
}

FuzzyPred ProbEff::floorPred(const Obj&, const Pred& p) {
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (const auto& val : p.v)
    r.v.push_back(val.isOne() ? Rational01::one() : Rational01::zero());
  return r;
}

ProbCompr ProbEff::comprehend(const Obj& x, const Pred& p) {
  // Carrier {x | p(x) = 1}, embedded by Dirac rows.
  ProbCompr c;
  KernelMap pi{0, x.size, {}};
  for (int i = 0; i < x.size; ++i)
    if (p.v[i].isOne()) {
      pi.rows.push_back(SubDist::dirac(i));
      ++pi.dom;
    }
  c.obj = FinSet{pi.dom, {}};
  c.map = pi;
  return c;
}

ProbQuot ProbEff::quotient(const Obj& x, const Pred& p) {
  // Carrier {x | p(x) < 1}; the unit scales by the complement, so its
  // kernel is exactly p.
  ProbQuot q;
  KernelMap xi{x.size, 0, {}};
  xi.rows.resize(x.size);
  std::vector<int> target(x.size, -1);
  for (int i = 0; i < x.size; ++i)
    if (!p.v[i].isOne()) target[i] = xi.cod++;
  for (int i = 0; i < x.size; ++i)
    if (target[i] >= 0) xi.rows[i].set(target[i], p.v[i].complement());
  q.obj = FinSet{xi.cod, {}};
  q.map = xi;
  return q;
}

KernelMap ProbEff::factorQuotient(const ProbQuot& q, const Morph& f) {
  if (f.dom != q.map.dom) throw ShapeMismatch("factorQuotient");
  // xi rows are scaled Diracs; dividing by the scale gives the unique
  // mediating kernel.
  KernelMap bar{q.obj.size, f.cod, {}};
  bar.rows.resize(q.obj.size);
  for (int x = 0; x < f.dom; ++x) {
    if (q.map.rows[x].isZero()) {
      if (!f.rows[x].isZero())
        throw PreconditionFailed("map does not vanish on the collapsed part");
      continue;
    }
    const auto& [c, scale] = *q.map.rows[x].w.begin();
    for (const auto& [y, r] : f.rows[x].w) {
      auto d = Rational01::div(r, scale);
      if (!d) throw PreconditionFailed("row mass exceeds the quotient scale");
      bar.rows[c].set(y, *d);
    }
  }
  return bar;
}

KernelMap ProbEff::factorComprehension(const ProbCompr& c, const Morph& f) {
  if (f.cod != c.map.cod) throw ShapeMismatch("factorComprehension");
  std::vector<int> indexIn(c.map.cod, -1);
  for (int k = 0; k < c.map.dom; ++k) indexIn[c.map.rows[k].w.begin()->first] = k;
  KernelMap g{f.dom, c.obj.size, {}};
  g.rows.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) {
    for (const auto& [y, r] : f.rows[x].w) {
      int k = indexIn[y];
      if (k < 0) throw PreconditionFailed("support leaks outside the comprehension");
      g.rows[x].set(k, r);
    }
  }
  return g;
}

std::optional<std::pair<KernelMap, Rational01>> ProbEff::normalizeSub(const Morph& omega) {
  if (omega.dom != 1) throw ShapeMismatch("substate has domain 1");
  Rational01 s = omega.rows[0].mass();
  if (s.isZero()) return std::nullopt;
  KernelMap rho{1, omega.cod, {}};
  rho.rows.resize(1);
  for (const auto& [y, r] : omega.rows[0].w) rho.rows[0].set(y, *Rational01::div(r, s));
  return std::make_pair(rho, s);
}

bool ProbEff::isPureSubstate(const Morph& omega) {
  if (omega.dom != 1) throw ShapeMismatch("substate has domain 1");
  return omega.rows[0].w.size() == 1;
}

FuzzyPred ProbEff::predPullback(const Morph& f, const Pred& q) {
  if (!isTotal(f)) throw NotTotal("predPullback needs a total kernel");
  if (f.cod != q.size()) throw ShapeMismatch("predPullback");
  FuzzyPred p;
  p.v.reserve(f.rows.size());
  for (const auto& row : f.rows) {
    RatAcc acc;
    for (const auto& [y, r] : row.w) acc.add(Rational01::mul(r, q.v[y]));
    p.v.push_back(acc.toRational01());
  }
  return p;
}

KernelMap ProbEff::tensor(const Morph& f, const Morph& g) {
  KernelMap h{f.dom * g.dom, f.cod * g.cod, {}};
  h.rows.resize(h.dom);
  for (int a = 0; a < f.dom; ++a)
    for (int b = 0; b < g.dom; ++b) {
      SubDist& row = h.rows[a * g.dom + b];
      for (const auto& [y, r] : f.rows[a].w)
        for (const auto& [z, s] : g.rows[b].w)
          row.set(y * g.cod + z, Rational01::mul(r, s));
    }
  return h;
}

KernelMap ProbEff::marginal(const Obj& x, const Obj& y, int which) {
  KernelMap f{x.size * y.size, which == 0 ? x.size : y.size, {}};
  f.rows.resize(f.dom);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < y.size; ++b)
      f.rows[a * y.size + b] = SubDist::dirac(which == 0 ? a : b);
  return f;
}

KernelMap ProbEff::copier(const Obj& x) {
  KernelMap d{x.size, x.size * x.size, {}};
  d.rows.resize(x.size);
  for (int a = 0; a < x.size; ++a) d.rows[a] = SubDist::dirac(a * x.size + a);
  return d;
}

bool ProbEff::kernelIsIso(const Morph& f) {
  // Nonnegative matrices with nonnegative inverses are monomial, and
  // substochasticity forces the scale to 1: isomorphisms of kernels are
  // exactly total deterministic bijections.
  if (f.dom != f.cod) return false;
  std::vector<char> hit(f.cod, 0);
  for (const auto& row : f.rows) {
    if (row.w.size() != 1) return false;
    const auto& [y, r] = *row.w.begin();
    if (!r.isOne() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool ProbEff::firstIsoProbe(const Morph& f) {
  Obj x = domOf(f), y = codOf(f);
  FuzzyPred flo = floorPred(x, portho(kerSupp(f)));  // floor(ker f)
  ProbQuot q = quotient(x, flo);
  ProbCompr c = comprehend(y, image(f));
  Morph mid = factorComprehension(c, factorQuotient(q, f));
  return kernelIsIso(mid);
}

}  // namespace effectus
