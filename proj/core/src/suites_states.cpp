#include "suites_detail.hpp"

namespace effectus::law {

namespace {

// --- galois ----------------------------------------------------------------

long long galoisExhaustive(const SuiteConfig& cfg) {
  if (cfg.instance != "boolean") return 0;
  long long total = 0;
  for (int n = 1; n <= 3; ++n) {
    long long fns = 1;
    for (int i = 0; i < n; ++i) fns *= n;
    total += fns * n * (1LL << n);
  }
  return total;
}

template <class E>
struct GaloisBody {
  static std::optional<json> check(const typename E::Morph& f, const typename E::Morph& omega,
                                   const typename E::Pred& q) {
    if (!api::galoisCheck<E>(f, omega, q))
      return json{{"check", "validity(f omega, q) = validity(omega, box_f q)"},
                  {"f", Inst<E>::jmorph(f)},
                  {"state", Inst<E>::jmorph(omega)},
                  {"q", Inst<E>::jpred(q)}};
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    if constexpr (std::is_same_v<E, BooleanEff>) {
      long long rank = trial;
      if (rank < galoisExhaustive(cfg)) {
        for (int n = 1; n <= 3; ++n) {
          long long fns = 1;
          for (int i = 0; i < n; ++i) fns *= n;
          long long block = fns * n * (1LL << n);
          if (rank < block) {
            FinSet x{n, {}};
            long long fRank = rank % fns;
            long long rest = rank / fns;
            int elem = static_cast<int>(rest % n);
            long long mask = rest / n;
            PartialFn f = totalFnFromRank(n, n, fRank);
            PartialFn omega{1, n, {elem}};
            return check(f, omega, subsetFromMask(n, mask));
          }
          rank -= block;
        }
      }
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::total(rng, x, y);
    auto omega = Inst<E>::state(rng, x);
    auto q = Inst<E>::pred(rng, y);
    return check(f, omega, q);
  }
};

// --- normalize ---------------------------------------------------------------

template <class E>
struct NormalizeBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // The zero substate has no normalisation.
    if (E::normalizeSub(E::zero(E::scalarObj(), x))) return fail("zero substate normalises");

    // A substate with scalar damping s recovers (state, s).
    auto omega0 = Inst<E>::state(rng, x);
    auto s = Inst<E>::pred(rng, E::scalarObj());
    auto damp = E::assertMap(E::scalarObj(), s);
    auto omega = E::compose(omega0, damp);
    auto n = E::normalizeSub(omega);
    bool zero = E::isZeroM(omega);
    if (zero != !n.has_value()) return fail("normalisation defined iff nonzero");
    if (!n) return std::nullopt;
    if (!E::isTotal(n->first)) return fail("normalised state is total");
    // rho . s recomposes omega, where the scalar acts by pre-composition.
    auto sAsMorph = E::predToMorph(E::scalarObj(), E::morphToPred(
        E::compose(E::predToMorph(x, E::truth(x)), omega)));
    auto recomposed = E::compose(n->first, sAsMorph);
    if (!E::meq(recomposed, omega)) return fail("rho . s = omega");
    return std::nullopt;
  }
};

// --- bayes -------------------------------------------------------------------

long long bayesExhaustive(const SuiteConfig& cfg) {
  if (cfg.instance != "boolean") return 0;
  long long total = 0;
  for (int n = 1; n <= 3; ++n) total += n * (1LL << (2 * n));
  return total;
}

template <class E>
struct BayesBody {
  static std::optional<json> check(const typename E::Obj& x, const typename E::Morph& omega,
                                   const typename E::Pred& p, const typename E::Pred& q) {
    auto vp = api::validity<E>(omega, p);
    if (E::scalarIsZero(vp)) return std::nullopt;  // conditioning undefined; nothing to check
    auto cond = api::condition<E>(omega, p);
    if (!cond) return json{{"check", "conditioning undefined despite nonzero validity"}};
    auto lhs = E::scalarMulS(api::validity<E>(*cond, q), vp);
    auto rhs = api::validity<E>(omega, api::andThen<E>(x, p, q));
    if (!E::scalarEq(lhs, rhs))
      return json{{"check", "(omega|p |= q)(omega |= p) = omega |= p & q"},
                  {"state", Inst<E>::jmorph(omega)},
                  {"p", Inst<E>::jpred(p)},
                  {"q", Inst<E>::jpred(q)},
                  {"lhs", Inst<E>::jscalar(lhs)},
                  {"rhs", Inst<E>::jscalar(rhs)}};
    return std::nullopt;
  }

  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    if constexpr (std::is_same_v<E, BooleanEff>) {
      long long rank = trial;
      if (rank < bayesExhaustive(cfg)) {
        for (int n = 1; n <= 3; ++n) {
          long long block = n * (1LL << (2 * n));
          if (rank < block) {
            FinSet x{n, {}};
            int elem = static_cast<int>(rank % n);
            long long rest = rank / n;
            return check(x, PartialFn{1, n, {elem}},
                         subsetFromMask(n, rest & ((1 << n) - 1)),
                         subsetFromMask(n, rest >> n));
          }
          rank -= block;
        }
      }
    }
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto omega = Inst<E>::state(rng, x);
    auto p = Inst<E>::pred(rng, x);
    auto q = Inst<E>::pred(rng, x);
    return check(x, omega, p, q);
  }
};

// --- total-prob ----------------------------------------------------------------

/// Test members for belief propagation. The law needs assert maps that sum
/// to the identity along the test, i.e. side-effect-free members: any
/// predicates in the commutative instances, central ones in the quantum
/// instance.
template <class E>
std::vector<typename E::Pred> sefTest(Rng& rng, const typename E::Obj& x) {
  auto p1 = Inst<E>::predBelow(rng, x, E::truth(x));
  auto p2 = Inst<E>::predBelow(rng, x, E::portho(p1));
  auto rest = E::portho(*E::povee(p1, p2));
  return {p1, p2, rest};
}

template <>
std::vector<BlockEffect> sefTest<QuantumEff>(Rng& rng, const VnAlg& x) {
  // Blockwise scalar partitions of 1: the side-effect-free predicates.
  std::vector<BlockEffect> test;
  const int k = 3;
  for (int i = 0; i < k; ++i) test.push_back(QuantumEff::falsity(x));
  for (int b = 0; b < x.numBlocks(); ++b) {
    double remaining = 1.0;
    for (int i = 0; i < k; ++i) {
      double c = (i == k - 1) ? remaining : remaining * rng.real();
      remaining -= c;
      test[i].blocks[b] = CMatrix::identity(x.dim(b)) * c;
    }
  }
  return test;
}

template <class E>
struct TotalProbBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto omega = Inst<E>::state(rng, x);
    auto q = Inst<E>::pred(rng, x);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // The singleton test {1}.
    if (!api::totalProbability<E>(omega, {E::truth(x)}, q)) return fail("singleton test");

    // A three-element side-effect-free test.
    auto test = sefTest<E>(rng, x);
    if (!api::totalProbability<E>(omega, test, q))
      return fail("belief propagation over a three-element test");

    if constexpr (!std::is_same_v<E, QuantumEff>) {
      // In the commutative instances every {p, p-orth} works.
      auto p = Inst<E>::pred(rng, x);
      if (!api::totalProbability<E>(omega, {p, E::portho(p)}, q))
        return fail("belief propagation over {p, p-orth}");
    } else {
      // Sharp central tests: block indicators.
      if (x.numBlocks() > 1) {
        auto ind = E::falsity(x);
        ind.blocks[0] = CMatrix::identity(x.dim(0));
        if (!api::totalProbability<E>(omega, {ind, E::portho(ind)}, q))
          return fail("belief propagation over a block-indicator test");
      }
    }

    // A broken test must be rejected.
    bool rejected = false;
    try {
      api::totalProbability<E>(omega, {E::truth(x), E::truth(x)}, q);
    } catch (const NotATest&) {
      rejected = true;
    }
    if (!rejected) return fail("non-test accepted");
    return std::nullopt;
  }
};

}  // namespace

std::vector<Suite> suitesStates() {
  std::vector<Suite> out;
  out.push_back(Suite{"galois",
                      "Thm. 5.4 (validity Galois correspondence)",
                      {"boolean", "prob", "quantum"},
                      galoisExhaustive,
                      [](const SuiteConfig& c, long long t) { return dispatch<GaloisBody>(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"normalize",
                      "Lemma 6.10 (normalisation of nonzero substates)",
                      {"boolean", "prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<NormalizeBody>(c, t);
                      },
                      false,
                      nullptr});
  out.push_back(Suite{"bayes",
                      "Example 8.5 (Bayes rule for conditioned states)",
                      {"boolean", "prob", "quantum"},
                      bayesExhaustive,
                      [](const SuiteConfig& c, long long t) { return dispatch<BayesBody>(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"total-prob",
                      "Example 8.5 (law of total probability)",
                      {"boolean", "prob", "quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) {
                        return dispatch<TotalProbBody>(c, t);
                      },
                      false,
                      nullptr});
  return out;
}

}  // namespace effectus::law
