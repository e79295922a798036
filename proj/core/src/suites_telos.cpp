#include "suites_detail.hpp"

namespace effectus::law {

namespace {

using E = QuantumEff;

std::vector<CMatrix> unitaryFamily(const VnAlg& x, const std::string& kind) {
  std::vector<CMatrix> u;
  for (int i = 0; i < x.numBlocks(); ++i) {
    CMatrix m = CMatrix::identity(x.dim(i));
    if (kind == "phase") {
      m = m * cplx(std::cos(1.0), std::sin(1.0));
    } else if (kind == "hadamard") {
      if (x.dim(i) == 2) {
        double s = 1.0 / std::sqrt(2.0);
        m = CMatrix(2, 2);
        m.at(0, 0) = s;
        m.at(0, 1) = s;
        m.at(1, 0) = s;
        m.at(1, 1) = -s;
      }
    } else if (kind != "identity") {
      throw Error("unknown unitary '" + kind + "' (expected identity|phase|hadamard)");
    }
    u.push_back(std::move(m));
  }
  return u;
}

bool unitaryIsCentral(const VnAlg& x, const std::vector<CMatrix>& u) {
  for (int i = 0; i < x.numBlocks(); ++i) {
    cplx lead = u[i].at(0, 0);
    if (maxAbsDiff(u[i], CMatrix::identity(x.dim(i)) * lead) > tolerances().proj) return false;
  }
  return true;
}

// --- telos-postulates ---------------------------------------------------------

struct TelosBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    VnAlg x = gen::randomAlg(rng);
    BlockEffect p = gen::blockEffect(rng, x);
    json ctx{{"blockDims", x.blockDims}, {"p", detail::jBlockEffect(p)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto ap = E::assertMap(x, p);

    // (1) The kernel-supplement of the assert map is its predicate.
    if (!E::peq(api::kerSupp<E>(ap), p)) return fail("ker-supp(asrt_p) = p");

    // (2) Its image is the least sharp predicate above p.
    if (!E::peq(E::image(ap), api::ceilOf<E>(x, p))) return fail("im(asrt_p) = ceil p");

    // (3) Side-effect-free maps are asserts of their kernel-supplement.
    auto f = gen::centralMultiplier(rng, x);
    if (!E::meq(f, E::assertMap(x, api::kerSupp<E>(f))))
      return fail("f <= id implies f = asrt_{ker-supp f}");

    // (4) Sum law over a binary coproduct.
    VnAlg y = gen::randomAlg(rng);
    BlockEffect q = gen::blockEffect(rng, y);
    auto sumAssert = E::assertMap(E::coprod(x, y), E::predCotuple(p, q));
    auto pieces = E::cotuple(E::compose(E::inj(x, y, 0), E::assertMap(x, p)),
                             E::compose(E::inj(x, y, 1), E::assertMap(y, q)));
    if (!E::meq(sumAssert, pieces)) return fail("asrt_[p,q] = asrt_p + asrt_q");

    // (5) Tensor law on single-block algebras.
    VnAlg xa{{rng.intIn(2, 3)}};
    VnAlg xb{{2}};
    BlockEffect pa = gen::blockEffect(rng, xa);
    BlockEffect pb = gen::blockEffect(rng, xb);
    auto tensored = E::assertMap(E::tensorObj(xa, xb), E::tensorPred(pa, pb));
    auto factored = E::tensor(E::assertMap(xa, pa), E::assertMap(xb, pb));
    if (!E::meq(tensored, factored)) return fail("asrt_{p (x) q} = asrt_p (x) asrt_q");

    // (6) Composition squares to the sequential square.
    auto pp = api::andThen<E>(x, p, p);
    if (!E::meq(E::compose(ap, ap), E::assertMap(x, pp)))
      return fail("asrt_p . asrt_p = asrt_{p & p}");

    // (7) Sharp-preserving maps commute with asserts through substitution.
    auto h = gen::sharpPreserving(rng, x);
    auto lhs = E::compose(ap, h);
    auto rhs = E::compose(h, E::assertMap(E::domOf(h), api::boxSubst<E>(h, p)));
    if (!E::meq(lhs, rhs)) return fail("asrt_p . h = h . asrt_{box_h p}");
    return std::nullopt;
  }
};

// --- duality --------------------------------------------------------------------

struct DualityBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    VnAlg x = gen::randomAlg(rng);
    BlockEffect p = gen::blockEffect(rng, x);
    int block = static_cast<int>(rng.below(x.numBlocks()));
    auto v = gen::randomUnitVector(rng, x.dim(block));
    if (!E::dualityCheck(x, p, block, v, E::assertMap(x, p))) {
      json j = failNote("im(asrt_p . pi) = ceil(p & im pi)");
      j["blockDims"] = x.blockDims;
      j["p"] = detail::jBlockEffect(p);
      j["block"] = block;
      json vec = json::array();
      for (const auto& a : v) vec.push_back(json::array({a.real(), a.imag()}));
      j["v"] = vec;
      return j;
    }
    return std::nullopt;
  }
};

// --- duality-perturbed ------------------------------------------------------------

struct PerturbedBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    // The fixed probe family: M2 with p = diag(1, 1/4), perturbed by the
    // configured unitary.
    VnAlg x{{2}};
    BlockEffect p{x, {CMatrix::diag({1.0, 0.25})}};
    auto u = unitaryFamily(x, cfg.unitary);
    auto perturbed = E::perturbedAssert(x, p, u);

    // The perturbed family still satisfies the kernel postulate.
    if (!E::peq(api::kerSupp<E>(perturbed), p)) {
      json j = failNote("perturbed assert keeps ker-supp = p");
      j["unitary"] = cfg.unitary;
      return j;
    }

    auto v = gen::randomUnitVector(rng, 2);
    if (!E::dualityCheck(x, p, 0, v, perturbed)) {
      json j = failNote("duality violated by the perturbed assert");
      j["unitary"] = cfg.unitary;
      json vec = json::array();
      for (const auto& a : v) vec.push_back(json::array({a.real(), a.imag()}));
      j["v"] = vec;
      return j;
    }
    return std::nullopt;
  }

  static SuiteStatus cleanStatus(const SuiteConfig& cfg) {
    VnAlg x{{2}};
    // No witness: conclusive only when the perturbation is central.
    return unitaryIsCentral(x, unitaryFamily(x, cfg.unitary)) ? SuiteStatus::pass
                                                              : SuiteStatus::inconclusive;
  }
};

}  // namespace

std::vector<Suite> suitesTelos() {
  std::vector<Suite> out;
  out.push_back(Suite{"telos-postulates",
                      "Postulate 10.2 items 1-7 (assert map laws)",
                      {"quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return TelosBody::run(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"duality",
                      "Postulate 10.5 (assert duality on comprehension states)",
                      {"quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return DualityBody::run(c, t); },
                      false,
                      nullptr});
  out.push_back(Suite{"duality-perturbed",
                      "Thm. 10.9 (uniqueness probe via a perturbed Lueders family)",
                      {"quantum"},
                      noExhaustive,
                      [](const SuiteConfig& c, long long t) { return PerturbedBody::run(c, t); },
                      true,
                      [](const SuiteConfig& c) { return PerturbedBody::cleanStatus(c); }});
  return out;
}

}  // namespace effectus::law
