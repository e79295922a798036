#include "effectus/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace effectus {

namespace {

const double kPrune = 1e-15;

CMatrix columnVector(const std::vector<cplx>& v) {
  CMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

}  // namespace

double BlockState::totalTrace() const {
  double t = 0.0;
  for (const auto& d : densities) t += d.trace().real();
  return t;
}

void QuantumEff::validateEffect(const Pred& p) {
  if (p.alg.numBlocks() != static_cast<int>(p.blocks.size()))
    throw ShapeMismatch("effect block count");
  for (int i = 0; i < p.alg.numBlocks(); ++i) {
    if (p.blocks[i].rows() != p.alg.dim(i) || p.blocks[i].cols() != p.alg.dim(i))
      throw ShapeMismatch("effect block dimension");
    if (!isEffectMatrix(p.blocks[i])) throw Error("matrix is not an effect");
  }
}

VnAlg QuantumEff::coprod(const Obj& x, const Obj& y) {
  VnAlg z = x;
  z.blockDims.insert(z.blockDims.end(), y.blockDims.begin(), y.blockDims.end());
  return z;
}

KrausMap QuantumEff::id(const Obj& x) {
  KrausMap f{x, x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    f.terms.push_back(KrausTerm{i, i, CMatrix::identity(x.dim(i))});
  return f;
}

KrausMap QuantumEff::compose(const Morph& g, const Morph& f) {
  if (f.cod != g.dom) throw ShapeMismatch("kraus composition");
  KrausMap h{f.dom, g.cod, {}};
  for (const auto& tf : f.terms)
    for (const auto& tg : g.terms) {
      if (tf.dst != tg.src) continue;
      CMatrix k = tg.k * tf.k;
      if (k.maxAbs() < kPrune) continue;
      h.terms.push_back(KrausTerm{tf.src, tg.dst, std::move(k)});
    }
  return h;
}

KrausMap QuantumEff::inj(const Obj& x, const Obj& y, int which) {
  const Obj& part = which == 0 ? x : y;
  int off = which == 0 ? 0 : x.numBlocks();
  KrausMap f{part, coprod(x, y), {}};
  for (int i = 0; i < part.numBlocks(); ++i)
    f.terms.push_back(KrausTerm{i, off + i, CMatrix::identity(part.dim(i))});
  return f;
}

KrausMap QuantumEff::pproj(const Obj& x, const Obj& y, int which) {
  const Obj& part = which == 0 ? x : y;
  int off = which == 0 ? 0 : x.numBlocks();
  KrausMap f{coprod(x, y), part, {}};
  for (int i = 0; i < part.numBlocks(); ++i)
    f.terms.push_back(KrausTerm{off + i, i, CMatrix::identity(part.dim(i))});
  return f;
}

KrausMap QuantumEff::cotuple(const Morph& f, const Morph& g) {
  if (f.cod != g.cod) throw ShapeMismatch("cotuple codomains differ");
  KrausMap h{coprod(f.dom, g.dom), f.cod, f.terms};
  int off = f.dom.numBlocks();
  for (const auto& t : g.terms) h.terms.push_back(KrausTerm{t.src + off, t.dst, t.k});
  return h;
}

std::vector<CMatrix> QuantumEff::applyHeisenbergRaw(const Morph& f, int codBlock,
                                                    const CMatrix& y) {
  std::vector<CMatrix> out;
  out.reserve(f.dom.numBlocks());
  for (int i = 0; i < f.dom.numBlocks(); ++i) out.push_back(CMatrix::zero(f.dom.dim(i), f.dom.dim(i)));
  for (const auto& t : f.terms) {
    if (t.dst != codBlock) continue;
    out[t.src] = out[t.src] + t.k.adjoint() * y * t.k;
  }
  return out;
}

BlockEffect QuantumEff::applyHeisenberg(const Morph& f, const Pred& y) {
  if (y.alg != f.cod) throw ShapeMismatch("heisenberg action");
  BlockEffect out{f.dom, {}};
  for (int i = 0; i < f.dom.numBlocks(); ++i)
    out.blocks.push_back(CMatrix::zero(f.dom.dim(i), f.dom.dim(i)));
  for (const auto& t : f.terms)
    out.blocks[t.src] = out.blocks[t.src] + t.k.adjoint() * y.blocks[t.dst] * t.k;
  return out;
}

BlockState QuantumEff::schrodinger(const Morph& f, const BlockState& rho) {
  if (rho.alg != f.dom) throw ShapeMismatch("schrodinger action");
  BlockState out{f.cod, {}};
  for (int j = 0; j < f.cod.numBlocks(); ++j)
    out.densities.push_back(CMatrix::zero(f.cod.dim(j), f.cod.dim(j)));
  for (const auto& t : f.terms)
    out.densities[t.dst] = out.densities[t.dst] + t.k * rho.densities[t.src] * t.k.adjoint();
  return out;
}

bool QuantumEff::meq(const Morph& f, const Morph& g) {
  if (f.dom != g.dom || f.cod != g.cod) return false;
  const double tol = tolerances().morph;
  // Compare on a spanning set: all matrix units of every codomain block.
  for (int j = 0; j < f.cod.numBlocks(); ++j) {
    int m = f.cod.dim(j);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        CMatrix unit(m, m);
        unit.at(a, b) = 1.0;
        auto lhs = applyHeisenbergRaw(f, j, unit);
        auto rhs = applyHeisenbergRaw(g, j, unit);
        for (size_t i = 0; i < lhs.size(); ++i)
          if (maxAbsDiff(lhs[i], rhs[i]) > tol) return false;
      }
  }
  return true;
}

std::optional<KrausMap> QuantumEff::ovee(const Morph& f, const Morph& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw ShapeMismatch("parallel sum");
  // Defined iff f(1) + g(1) <= 1.
  Pred sum = kerSupp(f);
  Pred gs = kerSupp(g);
  for (int i = 0; i < f.dom.numBlocks(); ++i) {
    CMatrix slack = CMatrix::identity(f.dom.dim(i)) - sum.blocks[i] - gs.blocks[i];
    if (minEigenvalue(slack) < -tolerances().spec) return std::nullopt;
  }
  KrausMap h{f.dom, f.cod, f.terms};
  h.terms.insert(h.terms.end(), g.terms.begin(), g.terms.end());
  return h;
}

bool QuantumEff::isZeroM(const Morph& f) {
  // Extensional, like every other morphism comparison: a map vanishes iff
  // its kernel-supplement does. Kraus entries of a numerical zero can be as
  // large as the square root of the spectral noise, so inspecting terms
  // directly would be stricter than the instance's equality.
  Pred k = kerSupp(f);
  for (const auto& b : k.blocks)
    if (b.maxAbs() > tolerances().morph) return false;
  return true;
}

bool QuantumEff::isTotal(const Morph& f) {
  Pred k = kerSupp(f);
  for (int i = 0; i < f.dom.numBlocks(); ++i)
    if (maxAbsDiff(k.blocks[i], CMatrix::identity(f.dom.dim(i))) > tolerances().spec)
      return false;
  return true;
}

BlockEffect QuantumEff::truth(const Obj& x) {
  BlockEffect p{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) p.blocks.push_back(CMatrix::identity(x.dim(i)));
  return p;
}

BlockEffect QuantumEff::falsity(const Obj& x) {
  BlockEffect p{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) p.blocks.push_back(CMatrix::zero(x.dim(i), x.dim(i)));
  return p;
}

std::optional<BlockEffect> QuantumEff::povee(const Pred& p, const Pred& q) {
  if (p.alg != q.alg) throw ShapeMismatch("predicate sum");
  BlockEffect r{p.alg, {}};
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    CMatrix s = p.blocks[i] + q.blocks[i];
    if (minEigenvalue(CMatrix::identity(s.rows()) - s) < -tolerances().spec)
      return std::nullopt;
    r.blocks.push_back(std::move(s));
  }
  return r;
}

BlockEffect QuantumEff::portho(const Pred& p) {
  BlockEffect r{p.alg, {}};
  for (const auto& b : p.blocks) r.blocks.push_back(CMatrix::identity(b.rows()) - b);
  return r;
}

bool QuantumEff::pleq(const Pred& p, const Pred& q) {
  if (p.alg != q.alg) throw ShapeMismatch("predicate order");
  for (size_t i = 0; i < p.blocks.size(); ++i)
    if (minEigenvalue(q.blocks[i] - p.blocks[i]) < -tolerances().spec) return false;
  return true;
}

bool QuantumEff::peq(const Pred& p, const Pred& q) {
  if (p.alg != q.alg) return false;
  for (size_t i = 0; i < p.blocks.size(); ++i)
    if (maxAbsDiff(p.blocks[i], q.blocks[i]) > tolerances().morph) return false;
  return true;
}

BlockEffect QuantumEff::scalarMulPred(const Rational01& s, const Pred& p) {
  BlockEffect r{p.alg, {}};
  for (const auto& b : p.blocks) r.blocks.push_back(b * s.toDouble());
  return r;
}

BlockEffect QuantumEff::predCotuple(const Pred& p, const Pred& q) {
  BlockEffect r{coprod(p.alg, q.alg), p.blocks};
  r.blocks.insert(r.blocks.end(), q.blocks.begin(), q.blocks.end());
  return r;
}

KrausMap QuantumEff::predToMorph(const Obj& x, const Pred& p) {
  // Rows of sqrt(p) give Kraus vectors into the scalar algebra; the
  // Heisenberg action on a scalar y is then y * p blockwise.
  KrausMap f{x, scalarObj(), {}};
  for (int i = 0; i < x.numBlocks(); ++i) {
    CMatrix root = psdSqrt(p.blocks[i]);
    for (int r = 0; r < root.rows(); ++r) {
      CMatrix row(1, root.cols());
      for (int c = 0; c < root.cols(); ++c) row.at(0, c) = root.at(r, c);
      if (row.maxAbs() < kPrune) continue;
      f.terms.push_back(KrausTerm{i, 0, std::move(row)});
    }
  }
  return f;
}

BlockEffect QuantumEff::morphToPred(const Morph& f) {
  if (f.cod != scalarObj()) throw ShapeMismatch("predicate morphism must land in the scalars");
  return kerSupp(f);
}

double QuantumEff::scalarValue(const Morph& s) {
  if (s.dom != scalarObj() || s.cod != scalarObj()) throw ShapeMismatch("scalar morphism");
  double v = 0.0;
  for (const auto& t : s.terms) v += std::norm(t.k.at(0, 0));
  return v;
}

BlockEffect QuantumEff::kerSupp(const Morph& f) {
  BlockEffect out{f.dom, {}};
  for (int i = 0; i < f.dom.numBlocks(); ++i)
    out.blocks.push_back(CMatrix::zero(f.dom.dim(i), f.dom.dim(i)));
  for (const auto& t : f.terms) out.blocks[t.src] = out.blocks[t.src] + t.k.adjoint() * t.k;
  return out;
}

BlockEffect QuantumEff::image(const Morph& f) {
  BlockEffect out{f.cod, {}};
  for (int j = 0; j < f.cod.numBlocks(); ++j) {
    CMatrix acc = CMatrix::zero(f.cod.dim(j), f.cod.dim(j));
    for (const auto& t : f.terms)
      if (t.dst == j) acc = acc + t.k * t.k.adjoint();
    out.blocks.push_back(supportProj(acc));
  }
  return out;
}

KrausMap QuantumEff::assertMap(const Obj& x, const Pred& p) {
  KrausMap f{x, x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    f.terms.push_back(KrausTerm{i, i, psdSqrt(p.blocks[i])});
  return f;
}

bool QuantumEff::isSharp(const Pred& p) {
  for (const auto& b : p.blocks)
    if (maxAbsDiff(b * b, b) > tolerances().proj) return false;
  return true;
}

BlockEffect QuantumEff::floorPred(const Obj& x, const Pred& p) {
  BlockEffect out{x, {}};
  for (const auto& b : p.blocks) out.blocks.push_back(fixedProj(b));
  return out;
}

QCompr QuantumEff::comprehend(const Obj& x, const Pred& p) {
  // Compression onto floor(p): blocks of rank(floor) survive, embedded by
  // the range isometries.
  QCompr c;
  c.map.cod = x;
  for (int j = 0; j < x.numBlocks(); ++j) {
    CMatrix fl = fixedProj(p.blocks[j]);
    CMatrix v = rangeIsometry(fl);
    if (v.cols() == 0) continue;
    int idx = c.obj.numBlocks();
    c.obj.blockDims.push_back(v.cols());
    c.map.terms.push_back(KrausTerm{idx, j, std::move(v)});
  }
  c.map.dom = c.obj;
  return c;
}

QQuot QuantumEff::quotient(const Obj& x, const Pred& p) {
  // Compression onto ceil(p-orth); the unit carries the Lueders factor
  // sqrt(p-orth), so ker(xi) = p.
  QQuot q;
  q.map.dom = x;
  for (int j = 0; j < x.numBlocks(); ++j) {
    CMatrix orth = CMatrix::identity(x.dim(j)) - p.blocks[j];
    CMatrix supp = supportProj(orth);
    CMatrix v = rangeIsometry(supp);
    if (v.cols() == 0) continue;
    int idx = q.obj.numBlocks();
    q.obj.blockDims.push_back(v.cols());
    q.map.terms.push_back(KrausTerm{j, idx, v.adjoint() * psdSqrt(orth)});
  }
  q.map.cod = q.obj;
  return q;
}

KrausMap QuantumEff::factorQuotient(const QQuot& q, const Morph& f) {
  if (f.dom != q.map.dom) throw ShapeMismatch("factorQuotient");
  // ker(xi) <= ker(f) must hold, i.e. f(1) <= kerSupp(xi).
  if (!pleq(kerSupp(f), kerSupp(q.map)))
    throw PreconditionFailed("predicate is not below ker f");
  // Each xi term has full row rank; its pseudo-inverse provides the section.
  std::vector<CMatrix> pinv(q.map.dom.numBlocks());
  std::vector<char> present(q.map.dom.numBlocks(), 0);
  std::vector<int> blockOf(q.map.dom.numBlocks(), -1);
  for (const auto& t : q.map.terms) {
    CMatrix gram = t.k * t.k.adjoint();
    pinv[t.src] = t.k.adjoint() * psdPseudoInverse(gram, tolerances().ceilCutoff * 0.5);
    present[t.src] = 1;
    blockOf[t.src] = t.dst;
  }
  KrausMap bar{q.obj, f.cod, {}};
  for (const auto& t : f.terms) {
    if (!present[t.src]) {
      if (t.k.maxAbs() > tolerances().morph)
        throw PreconditionFailed("map does not vanish on the collapsed part");
      continue;
    }
    CMatrix k = t.k * pinv[t.src];
    if (k.maxAbs() < kPrune) continue;
    bar.terms.push_back(KrausTerm{blockOf[t.src], t.dst, std::move(k)});
  }
  return bar;
}

KrausMap QuantumEff::factorComprehension(const QCompr& c, const Morph& f) {
  if (f.cod != c.map.cod) throw ShapeMismatch("factorComprehension");
  std::vector<CMatrix> isometry(c.map.cod.numBlocks());
  std::vector<char> present(c.map.cod.numBlocks(), 0);
  std::vector<int> blockOf(c.map.cod.numBlocks(), -1);
  for (const auto& t : c.map.terms) {
    isometry[t.dst] = t.k;
    present[t.dst] = 1;
    blockOf[t.dst] = t.src;
  }
  KrausMap g{f.dom, c.obj, {}};
  for (const auto& t : f.terms) {
    // Every Kraus vector must land inside the compressed range, or the
    // factorisation does not exist.
    if (!present[t.dst]) {
      if (t.k.maxAbs() > 1e-6)
        throw PreconditionFailed("map does not land inside the comprehension");
      continue;
    }
    CMatrix k = isometry[t.dst].adjoint() * t.k;
    if ((t.k - isometry[t.dst] * k).maxAbs() > 1e-6)
      throw PreconditionFailed("map does not land inside the comprehension");
    if (k.maxAbs() < kPrune) continue;
    g.terms.push_back(KrausTerm{t.src, blockOf[t.dst], std::move(k)});
  }
  return g;
}

BlockState QuantumEff::densityOf(const Morph& omega) {
  if (omega.dom != scalarObj()) throw ShapeMismatch("substate has domain C");
  BlockState triv{scalarObj(), {CMatrix::identity(1)}};
  return schrodinger(omega, triv);
}

KrausMap QuantumEff::stateFromDensity(const BlockState& r) {
  KrausMap f{scalarObj(), r.alg, {}};
  for (int j = 0; j < r.alg.numBlocks(); ++j) {
    EigenSystem es = hermEig(r.densities[j]);
    for (size_t k = 0; k < es.values.size(); ++k) {
      if (es.values[k] <= 0) continue;
      double w = std::sqrt(es.values[k]);
      CMatrix col(r.alg.dim(j), 1);
      for (int i = 0; i < r.alg.dim(j); ++i) col.at(i, 0) = w * es.vectors.at(i, (int)k);
      f.terms.push_back(KrausTerm{0, j, std::move(col)});
    }
  }
  return f;
}

std::optional<std::pair<KrausMap, double>> QuantumEff::normalizeSub(const Morph& omega) {
  BlockState rho = densityOf(omega);
  double t = rho.totalTrace();
  if (t <= tolerances().scalar) return std::nullopt;
  BlockState scaled{rho.alg, {}};
  for (const auto& d : rho.densities) scaled.densities.push_back(d * (1.0 / t));
  return std::make_pair(stateFromDensity(scaled), t);
}

bool QuantumEff::isPureSubstate(const Morph& omega) {
  BlockState rho = densityOf(omega);
  int rank = 0;
  for (const auto& d : rho.densities) {
    EigenSystem es = hermEig(d);
    for (double lam : es.values)
      if (lam > tolerances().spec) ++rank;
  }
  return rank == 1;
}

KrausMap QuantumEff::vectorState(const Obj& x, int block, const std::vector<cplx>& v) {
  double n2 = 0.0;
  for (const cplx& a : v) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > tolerances().proj) throw Error("vector state needs a unit vector");
  KrausMap f{scalarObj(), x, {}};
  f.terms.push_back(KrausTerm{0, block, columnVector(v)});
  return f;
}

VnAlg QuantumEff::tensorObj(const Obj& x, const Obj& y) {
  VnAlg z;
  for (int i = 0; i < x.numBlocks(); ++i)
    for (int j = 0; j < y.numBlocks(); ++j) z.blockDims.push_back(x.dim(i) * y.dim(j));
  return z;
}

BlockEffect QuantumEff::tensorPred(const Pred& p, const Pred& q) {
  BlockEffect r{tensorObj(p.alg, q.alg), {}};
  for (int i = 0; i < p.alg.numBlocks(); ++i)
    for (int j = 0; j < q.alg.numBlocks(); ++j)
      r.blocks.push_back(CMatrix::kron(p.blocks[i], q.blocks[j]));
  return r;
}

KrausMap QuantumEff::tensor(const Morph& f, const Morph& g) {
  KrausMap h{tensorObj(f.dom, g.dom), tensorObj(f.cod, g.cod), {}};
  int domG = g.dom.numBlocks(), codG = g.cod.numBlocks();
  for (const auto& tf : f.terms)
    for (const auto& tg : g.terms)
      h.terms.push_back(KrausTerm{tf.src * domG + tg.src, tf.dst * codG + tg.dst,
                                  CMatrix::kron(tf.k, tg.k)});
  return h;
}

KrausMap QuantumEff::unitaryConj(const Obj& x, const std::vector<CMatrix>& u) {
  KrausMap f{x, x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) {
    if (!isUnitaryMatrix(u[i])) throw NotUnitary("unitaryConj");
    f.terms.push_back(KrausTerm{i, i, u[i]});
  }
  return f;
}

KrausMap QuantumEff::blockPermutation(const Obj& x, const std::vector<int>& perm) {
  VnAlg y;
  for (int i = 0; i < x.numBlocks(); ++i) y.blockDims.push_back(x.dim(perm[i]));
  KrausMap f{y, x, {}};
  // Heisenberg: pick block perm[i] of the input for output block i.
  for (int i = 0; i < x.numBlocks(); ++i)
    f.terms.push_back(KrausTerm{i, perm[i], CMatrix::identity(x.dim(perm[i]))});
  return f;
}

KrausMap QuantumEff::perturbedAssert(const Obj& x, const Pred& p, const std::vector<CMatrix>& u) {
  KrausMap f{x, x, {}};
  for (int i = 0; i < x.numBlocks(); ++i) {
    if (!isUnitaryMatrix(u[i])) throw NotUnitary("perturbedAssert");
    f.terms.push_back(KrausTerm{i, i, u[i] * psdSqrt(p.blocks[i])});
  }
  return f;
}

bool QuantumEff::dualityCheck(const Obj& x, const Pred& p, int block, const std::vector<cplx>& v,
                              const Morph& assertLike) {
  Morph pi = vectorState(x, block, v);
  BlockState post = densityOf(compose(assertLike, pi));

  // Left side: the support of the conditioned substate.
  BlockEffect lhs{x, {}};
  for (int j = 0; j < x.numBlocks(); ++j) lhs.blocks.push_back(supportProj(post.densities[j]));

  // Right side: ceil of p-andthen-im(pi); im(pi) is the rank-one projection
  // onto v in the chosen block.
  BlockEffect imPi = falsity(x);
  CMatrix vv = columnVector(v);
  imPi.blocks[block] = vv * vv.adjoint();
  BlockEffect rhs{x, {}};
  for (int j = 0; j < x.numBlocks(); ++j) {
    CMatrix root = psdSqrt(p.blocks[j]);
    rhs.blocks.push_back(supportProj(root * imPi.blocks[j] * root));
  }

  for (int j = 0; j < x.numBlocks(); ++j)
    if (maxAbsDiff(lhs.blocks[j], rhs.blocks[j]) > tolerances().proj) return false;
  return true;
}

}  // namespace effectus
