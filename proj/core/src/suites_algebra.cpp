#include "suites_detail.hpp"

namespace effectus::law {

namespace {

// Enumerated boolean cases run over all predicate triples on carriers of
// size 1..3; a random tail then samples larger carriers.
long long boolTripleCount(const SuiteConfig& cfg) {
  if (cfg.instance != "boolean") return 0;
  long long total = 0;
  for (int n = 1; n <= 3; ++n) total += 1LL << (3 * n);
  return total;
}

struct BoolTriple {
  FinSet x;
  SubsetPred a, b, c;
};

BoolTriple decodeBoolTriple(long long trial) {
  for (int n = 1; n <= 3; ++n) {
    long long block = 1LL << (3 * n);
    if (trial < block) {
      FinSet x{n, {}};
      return BoolTriple{x, subsetFromMask(n, trial & ((1 << n) - 1)),
                        subsetFromMask(n, (trial >> n) & ((1 << n) - 1)),
                        subsetFromMask(n, (trial >> (2 * n)) & ((1 << n) - 1))};
    }
    trial -= block;
  }
  throw Error("triple rank out of range");
}

// --- pcm-laws -------------------------------------------------------------

template <class E>
struct PcmBody {
  static std::optional<json> check(const typename E::Obj& x, const typename E::Pred& a,
                                   const typename E::Pred& b, const typename E::Pred& c) {
    // Unit law.
    auto z = E::falsity(x);
    auto au = E::povee(a, z);
    if (!au || !E::peq(*au, a)) return failNote("unit: a + 0 = a");

    // Commutativity, including definedness.
    auto ab = E::povee(a, b);
    auto ba = E::povee(b, a);
    if (ab.has_value() != ba.has_value()) return failNote("commutativity: definedness");
    if (ab && !E::peq(*ab, *ba)) return failNote("commutativity: value");

    // Associativity: if (a+b)+c is defined then b+c and a+(b+c) are, equal.
    if (ab) {
      auto abc = E::povee(*ab, c);
      if (abc) {
        auto bc = E::povee(b, c);
        if (!bc) return failNote("associativity: b + c undefined");
        auto abc2 = E::povee(a, *bc);
        if (!abc2) return failNote("associativity: a + (b+c) undefined");
        if (!E::peq(*abc, *abc2)) return failNote("associativity: value");
      }
    }
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    if constexpr (std::is_same_v<E, BooleanEff>) {
      if (trial < boolTripleCount(cfg)) {
        BoolTriple t = decodeBoolTriple(trial);
        auto bad = check(t.x, t.a, t.b, t.c);
        if (bad) {
          (*bad)["carrier"] = t.x.size;
          (*bad)["a"] = Inst<E>::jpred(t.a);
          (*bad)["b"] = Inst<E>::jpred(t.b);
          (*bad)["c"] = Inst<E>::jpred(t.c);
        }
        return bad;
      }
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto a = Inst<E>::pred(rng, x);
    auto b = Inst<E>::pred(rng, x);
    auto c = Inst<E>::pred(rng, x);
    auto bad = check(x, a, b, c);
    if (bad) {
      (*bad)["object"] = Inst<E>::jobj(x);
      (*bad)["a"] = Inst<E>::jpred(a);
      (*bad)["b"] = Inst<E>::jpred(b);
      (*bad)["c"] = Inst<E>::jpred(c);
    }
    return bad;
  }
};

// --- effect-algebra --------------------------------------------------------

template <class E>
struct EffectAlgebraBody {
  static std::optional<json> check(const typename E::Obj& x, const typename E::Pred& a,
                                   const typename E::Pred& b) {
    auto one = E::truth(x);
    auto zero = E::falsity(x);

    // Orthosupplement: involution and a + a-orth = 1.
    if (!E::peq(E::portho(E::portho(a)), a)) return failNote("ortho involution");
    auto top = E::povee(a, E::portho(a));
    if (!top || !E::peq(*top, one)) return failNote("a + a-orth = 1");

    // x orth 1 implies x = 0.
    auto withTop = E::povee(a, one);
    if (withTop.has_value() != E::peq(a, zero)) return failNote("a orth 1 iff a = 0");

    // Order: bottom, top, antitone orthosupplement, orthogonality via order.
    if (!E::pleq(zero, a) || !E::pleq(a, one)) return failNote("bounds of the order");
    if (E::pleq(a, b) && !E::pleq(E::portho(b), E::portho(a)))
      return failNote("ortho is antitone");
    bool sumDefined = E::povee(a, b).has_value();
    if (sumDefined != E::pleq(a, E::portho(b))) return failNote("a orth b iff a <= b-orth");

    auto ab = E::povee(a, b);
    if (ab) {
      // Positivity and the derived subtraction c = (a + s-orth)-orth = b.
      if (E::peq(*ab, zero) && !(E::peq(a, zero) && E::peq(b, zero)))
        return failNote("positivity");
      auto lift = E::povee(a, E::portho(*ab));
      if (!lift) return failNote("subtraction lift undefined");
      if (!E::peq(E::portho(*lift), b)) return failNote("cancellation via subtraction");
      if (!E::pleq(a, *ab)) return failNote("summands below the sum");
    }

    // Downset carrier over y: a', b' <= y with a'+b' <= y; the relative
    // orthosupplement is (y-orth + a')-orth.
    return std::nullopt;
  }

  static std::optional<json> downset(const typename E::Obj&, const typename E::Pred& y,
                                     const typename E::Pred& below) {
    auto relOrtho = [&](const typename E::Pred& v) {
      auto lifted = E::povee(E::portho(y), v);
      if (!lifted) return std::optional<typename E::Pred>();
      return std::optional<typename E::Pred>(E::portho(*lifted));
    };
    auto bo = relOrtho(below);
    if (!bo) return failNote("downset: relative ortho undefined");
    auto sum = E::povee(below, *bo);
    if (!sum || !E::peq(*sum, y)) return failNote("downset: a + a-orth_y = y");
    auto back = relOrtho(*bo);
    if (!back || !E::peq(*back, below)) return failNote("downset: relative involution");
    if (!E::pleq(*bo, y)) return failNote("downset: ortho stays below the top");
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    if constexpr (std::is_same_v<E, BooleanEff>) {
      if (trial < boolTripleCount(cfg)) {
        BoolTriple t = decodeBoolTriple(trial);
        auto bad = check(t.x, t.a, t.b);
        if (!bad) bad = downset(t.x, t.c, subsetMeet(t.a, t.c));
        if (bad) {
          (*bad)["carrier"] = t.x.size;
          (*bad)["a"] = Inst<E>::jpred(t.a);
          (*bad)["b"] = Inst<E>::jpred(t.b);
          (*bad)["y"] = Inst<E>::jpred(t.c);
        }
        return bad;
      }
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto a = Inst<E>::pred(rng, x);
    auto b = Inst<E>::pred(rng, x);
    auto y = Inst<E>::pred(rng, x);
    auto bad = check(x, a, b);
    if (!bad) bad = downset(x, y, Inst<E>::predBelow(rng, x, y));
    if (bad) {
      (*bad)["object"] = Inst<E>::jobj(x);
      (*bad)["a"] = Inst<E>::jpred(a);
      (*bad)["b"] = Inst<E>::jpred(b);
      (*bad)["y"] = Inst<E>::jpred(y);
    }
    return bad;
  }
};

// --- effect-module ---------------------------------------------------------

template <class E>
struct EffectModuleBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto a = Inst<E>::pred(rng, x);
    auto b = Inst<E>::pred(rng, x);
    Rational01 s = gen::rational(rng);
    Rational01 t = gen::rational(rng);

    json ctx{{"object", Inst<E>::jobj(x)},
             {"a", Inst<E>::jpred(a)},
             {"s", s.str()},
             {"t", t.str()}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    if (!E::peq(E::scalarMulPred(Rational01::one(), a), a)) return fail("1 . a = a");
    if (!E::peq(E::scalarMulPred(s, E::scalarMulPred(t, a)),
                E::scalarMulPred(Rational01::mul(s, t), a)))
      return fail("s . (t . a) = (s t) . a");

    // Additivity in the scalar.
    auto st = Rational01::add(s, t);
    if (st) {
      auto lhs = E::scalarMulPred(*st, a);
      auto rhs = E::povee(E::scalarMulPred(s, a), E::scalarMulPred(t, a));
      if (!rhs || !E::peq(lhs, *rhs)) return fail("(s+t) . a = s.a + t.a");
    }

    // Additivity in the effect.
    auto ab = E::povee(a, b);
    if (ab) {
      auto lhs = E::scalarMulPred(s, *ab);
      auto rhs = E::povee(E::scalarMulPred(s, a), E::scalarMulPred(s, b));
      if (!rhs || !E::peq(lhs, *rhs)) return fail("s . (a+b) = s.a + s.b");
    }

    // The scalar carrier is an effect monoid: multiplication is
    // associative, unital, and distributes over the partial sum.
    Rational01 u = gen::rational(rng);
    if (Rational01::mul(Rational01::mul(s, t), u) != Rational01::mul(s, Rational01::mul(t, u)))
      return fail("scalar multiplication associativity");
    if (Rational01::mul(s, Rational01::one()) != s) return fail("scalar unit");
    if (st) {
      auto lhs = Rational01::mul(u, *st);
      auto rhs = Rational01::add(Rational01::mul(u, s), Rational01::mul(u, t));
      if (!rhs || lhs != *rhs) return fail("scalar distributivity");
    }
    return std::nullopt;
  }
};

// --- pred-functor ----------------------------------------------------------

template <class E>
struct PredFunctorBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto p = Inst<E>::pred(rng, x);
    auto q = Inst<E>::pred(rng, y);
    json ctx{{"x", Inst<E>::jobj(x)}, {"y", Inst<E>::jobj(y)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    // Pred(X+Y) = Pred(X) x Pred(Y): cotupled predicates restrict along the
    // coprojections to the components.
    auto pq = E::predCotuple(p, q);
    if (!E::peq(api::boxSubst<E>(E::inj(x, y, 0), pq), p))
      return fail("restriction along kappa1");
    if (!E::peq(api::boxSubst<E>(E::inj(x, y, 1), pq), q))
      return fail("restriction along kappa2");

    // Total substitution is a map of effect modules.
    auto z = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::total(rng, z, x);
    auto a = Inst<E>::pred(rng, x);
    auto b = Inst<E>::pred(rng, x);
    if (!E::peq(api::boxSubst<E>(f, E::truth(x)), E::truth(z)))
      return fail("substitution preserves truth");
    if (!E::peq(api::boxSubst<E>(f, E::portho(a)), E::portho(api::boxSubst<E>(f, a))))
      return fail("substitution preserves ortho");
    auto ab = E::povee(a, b);
    if (ab) {
      auto sub = E::povee(api::boxSubst<E>(f, a), api::boxSubst<E>(f, b));
      if (!sub || !E::peq(api::boxSubst<E>(f, *ab), *sub))
        return fail("substitution preserves the partial sum");
    }
    if constexpr (!std::is_same_v<E, BooleanEff>) {
      Rational01 s = gen::rational(rng);
      if (!E::peq(api::boxSubst<E>(f, E::scalarMulPred(s, a)),
                  E::scalarMulPred(s, api::boxSubst<E>(f, a))))
        return fail("substitution preserves scalars");
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<Suite> suitesAlgebra() {
  std::vector<Suite> out;
  out.push_back(Suite{"pcm-laws",
                      "Def. 4.1 (partial commutative monoid laws)",
                      {"boolean", "prob", "quantum"},
                      boolTripleCount,
                      [](const SuiteConfig& cfg, long long t) { return dispatch<PcmBody>(cfg, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"effect-algebra",
                      "Def. 4.4 with Exercise 4.3 (effect algebra laws)",
                      {"boolean", "prob", "quantum"},
                      boolTripleCount,
                      [](const SuiteConfig& cfg, long long t) {
                        return dispatch<EffectAlgebraBody>(cfg, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"effect-module",
                      "Def. 4.8 (effect module over the scalars)",
                      {"prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& cfg, long long t) {
                        return dispatch<EffectModuleBody>(cfg, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"pred-functor",
                      "Thm. 4.11 (predicate functor preserves coproducts)",
                      {"boolean", "prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& cfg, long long t) {
                        return dispatch<PredFunctorBody>(cfg, t);
                      },
                      false,
                      nullptr});
  return out;
}

}  // namespace effectus::law
