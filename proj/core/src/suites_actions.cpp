#include "suites_detail.hpp"

namespace effectus::law {

namespace {

/// Samples a side-effect-free map below the identity, per instance.
template <class E>
typename E::Morph sideEffectFree(Rng& rng, const typename E::Obj& x) {
  if constexpr (std::is_same_v<E, QuantumEff>) {
    return gen::centralMultiplier(rng, x);
  } else {
    return E::assertMap(x, Inst<E>::pred(rng, x));
  }
}

// --- assert-iso --------------------------------------------------------------

template <class E>
struct AssertIsoBody {
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

    // ker-supp(asrt_p) = p; asrt_p + asrt_{p-orth} is always a total map,
    // and in the commutative instances it is the identity.
    auto ap = E::assertMap(x, p);
    if (!E::peq(api::kerSupp<E>(ap), p)) return fail("ker-supp of the assert map");
    auto sum = E::ovee(ap, E::assertMap(x, E::portho(p)));
    if (!sum || !E::isTotal(*sum)) return fail("asrt_p + asrt_p-orth is total");
    if constexpr (!std::is_same_v<E, QuantumEff>) {
      if (!E::meq(*sum, E::id(x))) return fail("asrt_p + asrt_p-orth = id");
    }

    // Side-effect-free maps are asserts of their kernel-supplement.
    auto f = sideEffectFree<E>(rng, x);
    if (!E::meq(f, E::assertMap(x, api::kerSupp<E>(f))))
      return fail("f <= id implies f = asrt of its kernel-supplement");

    // The image of an assert map is the least sharp predicate above p.
    if (!E::peq(E::image(ap), api::ceilOf<E>(x, p))) return fail("im(asrt_p) = ceil p");

    // asrt_1 = id, asrt_0 = 0.
    if (!E::meq(E::assertMap(x, E::truth(x)), E::id(x))) return fail("asrt_1 = id");
    if (!E::isZeroM(E::assertMap(x, E::falsity(x)))) return fail("asrt_0 = 0");

    if constexpr (!std::is_same_v<E, QuantumEff>) {
      // Commutativity and the induced andthen in commutative instances.
      auto q = Inst<E>::pred(rng, x);
      auto aq = E::assertMap(x, q);
      if (!E::meq(E::compose(ap, aq), E::compose(aq, ap)))
        return fail("assert maps commute");
      if (!E::peq(api::kerSupp<E>(E::compose(aq, ap)), api::andThen<E>(x, p, q)))
        return fail("p & q is the kernel-supplement of the composite");
    }
    return std::nullopt;
  }
};

// --- instrument-sef -----------------------------------------------------------

template <class E>
struct InstrumentBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto p = Inst<E>::pred(rng, x);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    auto instr = api::instrument<E>(x, p);
    if (!E::isTotal(instr)) return fail("instruments are total");
    if (!E::meq(E::compose(E::pproj(x, x, 0), instr), E::assertMap(x, p)))
      return fail("left branch is asrt_p");
    if (!E::meq(E::compose(E::pproj(x, x, 1), instr), E::assertMap(x, E::portho(p))))
      return fail("right branch is asrt_p-orth");

    // Branch validities split the Born rule.
    auto omega = Inst<E>::state(rng, x);
    auto vp = api::validity<E>(omega, p);
    auto vq = api::validity<E>(omega, E::portho(p));
    if (!E::scalarEq(E::scalarAdd(vp, vq), api::validity<E>(omega, E::truth(x))))
      return fail("branch validities sum to 1");

    auto nabla = E::cotuple(E::id(x), E::id(x));
    if constexpr (std::is_same_v<E, QuantumEff>) {
      // Side effects vanish exactly for central predicates.
      auto c = gen::centralMultiplier(rng, x);
      auto central = api::kerSupp<E>(c);
      if (!E::meq(E::compose(nabla, api::instrument<E>(x, central)), E::id(x)))
        return fail("central instruments are side-effect free");
    } else {
      if (!E::meq(E::compose(nabla, instr), E::id(x)))
        return fail("commutative instruments are side-effect free");
    }
    return std::nullopt;
  }
};

// --- boolean-laws -------------------------------------------------------------

long long booleanLawsExhaustive(const SuiteConfig& cfg) {
  if (cfg.instance != "boolean") return 0;
  long long total = 0;
  for (int n = 1; n <= 3; ++n) total += 1LL << (3 * n);
  return total;
}

struct BooleanLawsBody {
  static std::optional<json> check(const FinSet& x, const SubsetPred& p, const SubsetPred& q,
                                   const SubsetPred& r) {
    using E = BooleanEff;
    auto fail = [&](const char* what) {
      json j = failNote(what);
      j["carrier"] = x.size;
      j["p"] = detail::jSubset(p);
      j["q"] = detail::jSubset(q);
      j["r"] = detail::jSubset(r);
      return std::optional<json>(j);
    };

    // The Boolean axiom and sharpness of every predicate.
    if (!E::isZeroM(E::compose(E::assertMap(x, p), E::assertMap(x, E::portho(p)))))
      return fail("asrt_p after asrt_not-p = 0");
    if (!E::isSharp(p)) return fail("all predicates sharp");

    // andthen is meet; orthogonal sums are joins.
    if (!E::peq(api::andThen<E>(x, p, q), subsetMeet(p, q))) return fail("p & q = meet");
    auto sum = E::povee(p, q);
    if (sum && !E::peq(*sum, subsetJoin(p, q))) return fail("orthogonal sum is join");

    // Distributivity and De Morgan.
    if (!E::peq(subsetMeet(p, subsetJoin(q, r)),
                subsetJoin(subsetMeet(p, q), subsetMeet(p, r))))
      return fail("meet distributes over join");
    if (!E::peq(subsetComplement(subsetJoin(p, q)),
                subsetMeet(subsetComplement(p), subsetComplement(q))))
      return fail("De Morgan");
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    long long rank = trial;
    if (rank < booleanLawsExhaustive(cfg)) {
      for (int n = 1; n <= 3; ++n) {
        long long block = 1LL << (3 * n);
        if (rank < block) {
          FinSet x{n, {}};
          return check(x, subsetFromMask(n, rank & ((1 << n) - 1)),
                       subsetFromMask(n, (rank >> n) & ((1 << n) - 1)),
                       subsetFromMask(n, (rank >> (2 * n)) & ((1 << n) - 1)));
        }
        rank -= block;
      }
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    FinSet x = gen::finSet(rng, std::min(cfg.maxCarrier, 6));
    return check(x, gen::subset(rng, x), gen::subset(rng, x), gen::subset(rng, x));
  }
};

// --- copier -------------------------------------------------------------------

struct CopierBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    using E = ProbEff;
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    FinSet x = gen::finSet(rng, std::min(cfg.maxCarrier, 5));
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    auto delta = ProbEff::copier(x);
    if (!E::meq(E::compose(ProbEff::marginal(x, x, 0), delta), E::id(x)))
      return fail("first marginal of the copier");
    if (!E::meq(E::compose(ProbEff::marginal(x, x, 1), delta), E::id(x)))
      return fail("second marginal of the copier");

    // Tensors of states are states on the pair.
    auto s1 = gen::probState(rng, x);
    auto s2 = gen::probState(rng, x);
    auto pair = ProbEff::tensor(s1, s2);
    if (!E::isTotal(pair)) return fail("tensor of states is a state");

    // Copier law for side-effect-free maps: (f (x) id) delta = delta f.
    FuzzyPred p = gen::fuzzy(rng, x);
    auto f = E::assertMap(x, p);
    auto lhs = E::compose(ProbEff::tensor(f, E::id(x)), delta);
    auto rhs = E::compose(delta, f);
    if (!E::meq(lhs, rhs)) return fail("copier commutes with side-effect-free maps");

    // The induced asserts commute (the effectus is commutative).
    FuzzyPred q = gen::fuzzy(rng, x);
    auto aq = E::assertMap(x, q);
    if (!E::meq(E::compose(f, aq), E::compose(aq, f))) return fail("asserts commute");
    return std::nullopt;
  }
};

}  // namespace

std::vector<Suite> suitesActions() {
  std::vector<Suite> out;
  out.push_back(Suite{"assert-iso",
                      "Def. 8.1 (asserts invert the kernel-supplement)",
                      {"boolean", "prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<AssertIsoBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"instrument-sef",
                      "Lemma 8.3(6) (instruments and side-effect freeness)",
                      {"boolean", "prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<InstrumentBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"boolean-laws",
                      "Lemma 8.4 and Prop. 8.6 (Boolean algebra of predicates)",
                      {"boolean"},
                      booleanLawsExhaustive,
                      [](const SuiteConfig& c, long long t) { return BooleanLawsBody::run(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"copier",
                      "Thm. 8.7 (copiers force commutativity)",
                      {"prob"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return CopierBody::run(c, t); },
                      false,
                      nullptr});
  return out;
}

}  // namespace effectus::law
