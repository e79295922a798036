#include "suites_detail.hpp"

namespace effectus::law {

namespace {

template <class E>
typename E::Pred sharpSample(Rng& rng, const typename E::Obj& x);

template <>
SubsetPred sharpSample<BooleanEff>(Rng& rng, const FinSet& x) { return gen::subset(rng, x); }

template <>
FuzzyPred sharpSample<ProbEff>(Rng& rng, const FinSet& x) {
  FuzzyPred p;
  p.v.reserve(x.size);
  for (int i = 0; i < x.size; ++i)
    p.v.push_back(rng.coin() ? Rational01::one() : Rational01::zero());
  return p;
}

template <>
BlockEffect sharpSample<QuantumEff>(Rng& rng, const VnAlg& x) {
  return gen::blockProjection(rng, x);
}

template <class E>
typename E::Pred sharpMeet(const typename E::Obj& x, const typename E::Pred& p,
                           const typename E::Pred& q);

template <>
SubsetPred sharpMeet<BooleanEff>(const FinSet&, const SubsetPred& p, const SubsetPred& q) {
  return subsetMeet(p, q);
}

template <>
FuzzyPred sharpMeet<ProbEff>(const FinSet&, const FuzzyPred& p, const FuzzyPred& q) {
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (size_t i = 0; i < p.v.size(); ++i)
    r.v.push_back((p.v[i].isOne() && q.v[i].isOne()) ? Rational01::one() : Rational01::zero());
  return r;
}

template <>
BlockEffect sharpMeet<QuantumEff>(const VnAlg& x, const BlockEffect& p, const BlockEffect& q) {
  // Range intersection: the fixed space of P Q P carries eigenvalue one
  // exactly on ran P intersect ran Q.
  BlockEffect r{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    r.blocks.push_back(fixedProj(p.blocks[i] * q.blocks[i] * p.blocks[i]));
  return r;
}

template <class E>
typename E::Pred sharpJoin2(const typename E::Obj& x, const typename E::Pred& p,
                            const typename E::Pred& q) {
  return E::portho(sharpMeet<E>(x, E::portho(p), E::portho(q)));
}

// --- comprehension ------------------------------------------------------------

template <class E>
bool objectEmpty(const typename E::Obj& o) {
  if constexpr (std::is_same_v<E, QuantumEff>)
    return o.numBlocks() == 0;
  else
    return o.size == 0;
}

template <class E>
struct ComprehensionBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto p = Inst<E>::predMixed(rng, x);
    json ctx{{"object", Inst<E>::jobj(x)}, {"p", Inst<E>::jpred(p)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto c = E::comprehend(x, p);
    if (!E::isTotal(c.map)) return fail("comprehension map is total");
    if (!E::peq(api::diaSubst<E>(c.map, p), E::truth(E::domOf(c.map))))
      return fail("p holds with certainty on the comprehension");

    // Universal property: maps satisfying box_f(p) = 1 factor uniquely.
    auto z = Inst<E>::obj(rng, cfg);
    auto g0 = objectEmpty<E>(E::domOf(c.map)) ? E::zero(z, E::domOf(c.map))
                                              : Inst<E>::morph(rng, z, E::domOf(c.map));
    auto f = E::compose(c.map, g0);
    if (!E::peq(api::boxSubst<E>(f, p), E::truth(z))) return fail("factored map satisfies box");
    auto g = E::factorComprehension(c, f);
    if (!E::meq(E::compose(c.map, g), f)) return fail("factorisation recomposes");
    if (!E::meq(g, g0)) return fail("factorisation is unique (recovers the original)");

    if constexpr (std::is_same_v<E, BooleanEff>) {
      // Brute force: on small carriers the mediating map is the only
      // candidate satisfying pi g' = f.
      if (z.size <= 3 && c.obj.size <= 3) {
        long long candidates = 1;
        for (int i = 0; i < z.size; ++i) candidates *= (c.obj.size + 1);
        int hits = 0;
        for (long long rank = 0; rank < candidates; ++rank) {
          PartialFn cand = partialFnFromRank(z.size, c.obj.size, rank);
          if (E::meq(E::compose(c.map, cand), f)) ++hits;
        }
        if (hits != 1) return fail("brute-force uniqueness over all candidates");
      }
    }

    // Comprehension of truth is the whole object.
    auto full = E::comprehend(x, E::truth(x));
    if (!E::isTotal(full.map) || !E::peq(api::kerSupp<E>(full.map), E::truth(E::domOf(full.map))))
      return fail("comprehension of truth is total");
    if (!E::peq(E::image(full.map), E::truth(x))) return fail("comprehension of truth covers");
    return std::nullopt;
  }
};

// --- quotient -------------------------------------------------------------------

template <class E>
struct QuotientBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto p = Inst<E>::pred(rng, x);
    json ctx{{"object", Inst<E>::jobj(x)}, {"p", Inst<E>::jpred(p)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto q = E::quotient(x, p);
    if (!E::peq(api::kernel<E>(q.map), p)) return fail("ker(xi_p) = p");
    if (!E::peq(E::image(q.map), E::truth(E::codOf(q.map))))
      return fail("xi_p covers the quotient carrier");

    // Universal property: f = g0 . xi factors back to g0; ker f = p makes
    // the mediating map total.
    auto y = Inst<E>::obj(rng, cfg);
    auto g0 = objectEmpty<E>(E::codOf(q.map)) ? E::zero(E::codOf(q.map), y)
                                              : Inst<E>::total(rng, E::codOf(q.map), y);
    auto f = E::compose(g0, q.map);
    auto bar = E::factorQuotient(q, f);
    if (!E::meq(E::compose(bar, q.map), f)) return fail("factorisation recomposes");
    if (!E::meq(bar, g0)) return fail("factorisation is unique (xi is epic)");
    if (!objectEmpty<E>(E::codOf(q.map)) && !E::isTotal(bar))
      return fail("mediating map total when p = ker f");

    if constexpr (std::is_same_v<E, BooleanEff>) {
      if (q.obj.size <= 3 && y.size <= 3) {
        long long candidates = 1;
        for (int i = 0; i < q.obj.size; ++i) candidates *= (y.size + 1);
        int hits = 0;
        for (long long rank = 0; rank < candidates; ++rank) {
          PartialFn cand = partialFnFromRank(q.obj.size, y.size, rank);
          if (E::meq(E::compose(cand, q.map), f)) ++hits;
        }
        if (hits != 1) return fail("brute-force uniqueness over all candidates");
      }
    }

    // Quotient by falsity is the identity up to iso; by truth it is zero.
    auto qz = E::quotient(x, E::falsity(x));
    if (!E::isTotal(qz.map) || !E::peq(E::image(qz.map), E::truth(E::codOf(qz.map))))
      return fail("quotient by falsity is an iso");
    auto qt = E::quotient(x, E::truth(x));
    if (!E::isZeroM(qt.map)) return fail("quotient by truth collapses everything");
    return std::nullopt;
  }
};

// --- decompose ------------------------------------------------------------------

long long decomposeExhaustive(const SuiteConfig& cfg) {
  if (cfg.instance != "boolean") return 0;
  return 64;  // all total maps 3 -> 2+2
}

template <class E>
struct DecomposeBody {
  static std::optional<json> check(const typename E::Obj& x1, const typename E::Obj& x2,
                                   const typename E::Morph& f) {
    auto d = api::decompose<E>(x1, x2, f);
    if (!E::isTotal(d.left) || !E::isTotal(d.right))
      return failNote("decomposition components are total");
    if (!E::isTotal(d.dc)) return failNote("decomposition map is total");
    if (!E::meq(api::recompose<E>(x1, x2, d), f)) return failNote("recomposition");
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    if constexpr (std::is_same_v<E, BooleanEff>) {
      if (trial < decomposeExhaustive(cfg))
        return check(FinSet{2, {}}, FinSet{2, {}}, totalFnFromRank(3, 4, trial));
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x1 = Inst<E>::obj(rng, cfg);
    auto x2 = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::total(rng, y, E::coprod(x1, x2));
    auto bad = check(x1, x2, f);
    if (bad) (*bad)["f"] = Inst<E>::jmorph(f);
    return bad;
  }
};

// --- theta-sharp ----------------------------------------------------------------

template <class E>
struct ThetaBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // theta is total for every predicate.
    auto p = Inst<E>::predMixed(rng, x);
    if (!E::isTotal(api::theta<E>(x, p))) return fail("theta is total");

    // For sharp p it is an isomorphism with the constructed inverse.
    auto s = sharpSample<E>(rng, x);
    auto th = api::theta<E>(x, s);
    auto inv = api::thetaInverse<E>(x, s);
    auto c = E::comprehend(x, s);
    auto q = E::quotient(x, E::portho(s));
    if (!E::meq(E::compose(inv, th), E::id(E::domOf(c.map))))
      return fail("theta inverse on the comprehension side");
    if (!E::meq(E::compose(th, inv), E::id(E::codOf(q.map))))
      return fail("theta inverse on the quotient side");

    // For sharp p, asrt_p decomposes through comprehension and quotient.
    auto viaTheta = E::compose(c.map, E::compose(inv, q.map));
    if (!E::meq(viaTheta, E::assertMap(x, s))) return fail("sharp assert via theta");
    return std::nullopt;
  }
};

// --- floor-ceil -----------------------------------------------------------------

template <class E>
struct FloorCeilBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto p = Inst<E>::predMixed(rng, x);
    json ctx{{"object", Inst<E>::jobj(x)}, {"p", Inst<E>::jpred(p)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto fl = api::floorOf<E>(x, p);
    auto ce = api::ceilOf<E>(x, p);
    if (!E::isSharp(fl) || !E::isSharp(ce)) return fail("floor and ceil are sharp");
    if (!E::pleq(fl, p) || !E::pleq(p, ce)) return fail("floor <= p <= ceil");
    if (!E::peq(ce, E::portho(api::floorOf<E>(x, E::portho(p))))) return fail("ceil duality");
    if (!E::peq(api::floorOf<E>(x, fl), fl)) return fail("floor idempotent");

    // floor(p) = im(pi_p).
    if (!E::peq(E::image(E::comprehend(x, p).map), fl))
      return fail("floor is the image of the comprehension map");

    // Monotonicity on a constructed ordered pair p <= q. The step stays in
    // the commutant of p so near-unit eigenspaces are not rotated by noise.
    auto extra = [&] {
      if constexpr (std::is_same_v<E, BooleanEff>)
        return Inst<E>::predBelow(rng, x, E::portho(p));
      else
        return E::scalarMulPred(gen::rational(rng), E::portho(p));
    }();
    auto q = E::povee(p, extra);
    if (q && !E::pleq(fl, api::floorOf<E>(x, *q))) return fail("floor monotone");

    // Sharp predicates are their own floor and ceil.
    auto s = sharpSample<E>(rng, x);
    if (!E::peq(api::floorOf<E>(x, s), s) || !E::peq(api::ceilOf<E>(x, s), s))
      return fail("sharp fixed points");
    return std::nullopt;
  }
};

// --- sharp-omlattice ------------------------------------------------------------

template <class E>
struct OmLatticeBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto p = sharpSample<E>(rng, x);
    auto r = sharpSample<E>(rng, x);
    json ctx{{"object", Inst<E>::jobj(x)},
             {"p", Inst<E>::jpred(p)},
             {"r", Inst<E>::jpred(r)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    // Meet and join basics on sharp elements.
    auto meet = sharpMeet<E>(x, p, r);
    if (!E::isSharp(meet)) return fail("meet of sharp is sharp");
    if (!E::pleq(meet, p) || !E::pleq(meet, r)) return fail("meet is a lower bound");
    if (!E::peq(sharpMeet<E>(x, p, E::portho(p)), E::falsity(x)))
      return fail("p meet p-orth = 0");

    // Orthomodularity on the constructed pair p <= q := p v r.
    auto q = sharpJoin2<E>(x, p, r);
    if (!E::pleq(p, q)) return fail("p below the join");
    auto om = sharpJoin2<E>(x, p, sharpMeet<E>(x, E::portho(p), q));
    if (!E::peq(om, q)) return fail("orthomodular law");
    return std::nullopt;
  }
};

// --- first-iso ------------------------------------------------------------------

struct FirstIsoBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    using E = ProbEff;
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    FinSet x = gen::finSet(rng, std::min(cfg.maxCarrier, 5));
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // Total deterministic bijections pass the probe.
    std::vector<int> perm(x.size);
    for (int i = 0; i < x.size; ++i) perm[i] = i;
    for (int i = x.size - 1; i > 0; --i) std::swap(perm[i], perm[rng.intIn(0, i)]);
    KernelMap bij{x.size, x.size, {}};
    for (int i = 0; i < x.size; ++i) bij.rows.push_back(SubDist::dirac(perm[i]));
    if (!ProbEff::firstIsoProbe(bij)) return fail("bijections satisfy the probe");

    // The scaled-point family is the canonical counterexample.
    int den = rng.intIn(2, 16);
    int num = rng.intIn(1, den - 1);
    KernelMap half{1, 1, {SubDist{}}};
    half.rows[0].set(0, Rational01(num, den));
    if (ProbEff::firstIsoProbe(half)) return fail("scaled point passes the probe");

    // xi_p for a properly fuzzy p is never an isomorphism of kernels.
    FuzzyPred p = gen::fuzzy(rng, x);
    bool fuzzy = false;
    for (auto& v : p.v) fuzzy = fuzzy || (!v.isZero() && !v.isOne());
    if (!fuzzy) p.v[rng.intIn(0, x.size - 1)] = Rational01(1, 2);
    if (ProbEff::firstIsoProbe(E::quotient(x, p).map))
      return fail("quotient unit of a fuzzy predicate passes the probe");
    return std::nullopt;
  }
};

}  // namespace

std::vector<Suite> suitesStructure() {
  auto all = std::vector<std::string>{"boolean", "prob", "quantum"};
  std::vector<Suite> out;
  out.push_back(Suite{"comprehension",
                      "Def. 7.4 and Example 7.2 (comprehension universality)",
                      all,
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<ComprehensionBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"quotient",
                      "Example 9.2 and Lemma 9.3(5) (quotient universality)",
                      all,
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<QuotientBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"decompose",
                      "Lemma 9.3(8) (decomposition over binary coproducts)",
                      all,
                      decomposeExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<DecomposeBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"theta-sharp",
                      "Lemma 12.1 (theta total; iso exactly on sharp predicates)",
                      all,
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return dispatch<ThetaBody>(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"floor-ceil",
                      "Prop. 12.4(1) (greatest sharp below, least sharp above)",
                      all,
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<FloorCeilBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"sharp-omlattice",
                      "Prop. 12.4(6) (sharp predicates form orthomodular lattices)",
                      all,
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<OmLatticeBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"first-iso",
                      "Remark 12.3 (failure of the first isomorphism theorem)",
                      {"prob"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return FirstIsoBody::run(c, t); },
                      false,
                      nullptr});
  return out;
}

}  // namespace effectus::law
