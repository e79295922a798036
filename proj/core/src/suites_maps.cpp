#include "suites_detail.hpp"

namespace effectus::law {

namespace {

template <class E>
typename E::Pred sharpJoin(const typename E::Obj& x, const typename E::Pred& p,
                           const typename E::Pred& q);

template <>
SubsetPred sharpJoin<BooleanEff>(const FinSet&, const SubsetPred& p, const SubsetPred& q) {
  return subsetJoin(p, q);
}

template <>
FuzzyPred sharpJoin<ProbEff>(const FinSet&, const FuzzyPred& p, const FuzzyPred& q) {
  FuzzyPred r;
  r.v.reserve(p.v.size());
  for (size_t i = 0; i < p.v.size(); ++i)
    r.v.push_back((!p.v[i].isZero() || !q.v[i].isZero()) ? Rational01::one()
                                                         : Rational01::zero());
  return r;
}

template <>
BlockEffect sharpJoin<QuantumEff>(const VnAlg& x, const BlockEffect& p, const BlockEffect& q) {
  BlockEffect r{x, {}};
  for (int i = 0; i < x.numBlocks(); ++i)
    r.blocks.push_back(supportProj(p.blocks[i] * 0.5 + q.blocks[i] * 0.5));
  return r;
}

// --- kerbot-reflect ---------------------------------------------------------

template <class E>
struct KerbotBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::morph(rng, x, y);
    auto g = Inst<E>::morph(rng, x, y);
    json ctx{{"f", Inst<E>::jmorph(f)}, {"g", Inst<E>::jmorph(g)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto kf = api::kerSupp<E>(f);
    auto kg = api::kerSupp<E>(g);

    // The instance-level kernel agrees with the derived one.
    if (!E::peq(kf, E::kerSupp(f))) return fail("derived vs direct kernel-supplement");

    // Preserves 0 and the partial sum; reflects 0 and orthogonality.
    if (!E::peq(api::kerSupp<E>(E::zero(x, y)), E::falsity(x)))
      return fail("kernel-supplement of 0");
    bool predsOrth = E::povee(kf, kg).has_value();
    auto sum = E::ovee(f, g);
    if (predsOrth != sum.has_value()) return fail("reflects and preserves orthogonality");
    if (sum) {
      auto lhs = api::kerSupp<E>(*sum);
      auto rhs = E::povee(kf, kg);
      if (!rhs || !E::peq(lhs, *rhs)) return fail("kernel-supplement is additive");
    }
    if (E::peq(kf, E::falsity(x)) != E::isZeroM(f)) return fail("reflects zero");

    // Kernel of a composite: ker(h f) = box_f(ker h) and ker(h f) >= ker f.
    auto z = Inst<E>::obj(rng, cfg);
    auto h = Inst<E>::morph(rng, y, z);
    auto kerComp = api::kernel<E>(E::compose(h, f));
    if (!E::peq(kerComp, api::boxSubst<E>(f, api::kernel<E>(h))))
      return fail("ker(h f) = box_f(ker h)");
    if (!E::pleq(api::kernel<E>(f), kerComp)) return fail("ker(h f) >= ker f");
    return std::nullopt;
  }
};

// --- zero-total -------------------------------------------------------------

template <class E>
struct ZeroTotalBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::morph(rng, x, y);
    auto t = Inst<E>::total(rng, x, y);
    json ctx{{"f", Inst<E>::jmorph(f)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    if (E::peq(api::kerSupp<E>(f), E::truth(x)) != E::isTotal(f))
      return fail("ker-supp = 1 iff total");
    if (E::peq(api::kerSupp<E>(f), E::falsity(x)) != E::isZeroM(f))
      return fail("ker-supp = 0 iff zero");
    if (!E::isTotal(t) || !E::peq(api::kerSupp<E>(t), E::truth(x)))
      return fail("generated total map is total");
    if (!E::isZeroM(E::zero(x, y))) return fail("zero map is zero");
    return std::nullopt;
  }
};

// --- joint-monic ------------------------------------------------------------

template <class E>
struct JointMonicBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // Butterfly: the partial projections split the coprojections.
    auto p1 = E::pproj(x, y, 0);
    auto p2 = E::pproj(x, y, 1);
    if (!E::meq(E::compose(p1, E::inj(x, y, 0)), E::id(x))) return fail("proj1 kappa1 = id");
    if (!E::meq(E::compose(p2, E::inj(x, y, 1)), E::id(y))) return fail("proj2 kappa2 = id");
    if (!E::isZeroM(E::compose(p1, E::inj(x, y, 1)))) return fail("proj1 kappa2 = 0");
    if (!E::isZeroM(E::compose(p2, E::inj(x, y, 0)))) return fail("proj2 kappa1 = 0");

    // Reconstruction: k = (kappa1 proj1 k) + (kappa2 proj2 k); with the
    // projections jointly monic this pins k down from its components.
    auto z = Inst<E>::obj(rng, cfg);
    auto k = Inst<E>::morph(rng, z, E::coprod(x, y));
    auto rec = E::ovee(E::compose(E::inj(x, y, 0), E::compose(p1, k)),
                       E::compose(E::inj(x, y, 1), E::compose(p2, k)));
    if (!rec || !E::meq(*rec, k)) return fail("component reconstruction");

    // Sampled parallel pairs that differ must differ under some projection.
    auto k2 = Inst<E>::morph(rng, z, E::coprod(x, y));
    bool equal = E::meq(k, k2);
    bool sameComponents =
        E::meq(E::compose(p1, k), E::compose(p1, k2)) && E::meq(E::compose(p2, k), E::compose(p2, k2));
    if (equal != sameComponents) return fail("joint monicity on a sampled pair");
    return std::nullopt;
  }
};

// --- pairing ----------------------------------------------------------------

template <class E>
struct PairingBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto z = Inst<E>::obj(rng, cfg);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // Complementary kernels: f paired with t . asrt_{ker f} is total.
    auto f = Inst<E>::morph(rng, z, x);
    auto t = Inst<E>::total(rng, z, y);
    auto g = E::compose(t, E::assertMap(z, E::portho(api::kerSupp<E>(f))));
    auto h = api::pairing<E>(f, g);
    if (!E::meq(E::compose(E::pproj(x, y, 0), h), f)) return fail("proj1 of the pairing");
    if (!E::meq(E::compose(E::pproj(x, y, 1), h), g)) return fail("proj2 of the pairing");
    if (!E::isTotal(h)) return fail("complementary kernels give a total pairing");

    // Orthogonal but non-complementary kernels still pair, just not totally.
    auto damp = E::assertMap(z, Inst<E>::predBelow(rng, z, E::portho(api::kerSupp<E>(f))));
    auto g2 = E::compose(t, damp);
    auto ks = E::povee(api::kerSupp<E>(f), api::kerSupp<E>(g2));
    if (!ks) return fail("constructed kernels should be orthogonal");
    auto h2 = api::pairing<E>(f, g2);
    if (!E::meq(E::compose(E::pproj(x, y, 0), h2), f)) return fail("partial pairing proj1");
    if (!E::meq(E::compose(E::pproj(x, y, 1), h2), g2)) return fail("partial pairing proj2");
    bool total = E::isTotal(h2);
    bool complement = E::peq(*ks, E::truth(z));
    if (total != complement) return fail("pairing total iff kernels sum to truth");
    return std::nullopt;
  }
};

// --- homset-order -----------------------------------------------------------

template <class E>
struct HomsetOrderBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto fail = [&](const char* what) { return std::optional<json>(failNote(what)); };

    // Build a defined sum: f' = f . asrt_k, h' = h . asrt_{k-orth} are
    // always summable.
    auto f0 = Inst<E>::morph(rng, x, y);
    auto h0 = Inst<E>::morph(rng, x, y);
    auto k = Inst<E>::pred(rng, x);
    auto f = E::compose(f0, E::assertMap(x, k));
    auto h = E::compose(h0, E::assertMap(x, E::portho(k)));
    auto sum = E::ovee(f, h);
    if (!sum) return fail("constructed sum should be defined");
    auto g = *sum;

    if (E::meq(g, f) != E::isZeroM(h)) return fail("cancellation: f + h = f iff h = 0");
    if (E::isZeroM(g) && !(E::isZeroM(f) && E::isZeroM(h))) return fail("positivity");

    // Pre- and post-composition preserve the sum, hence the order.
    auto z = Inst<E>::obj(rng, cfg);
    auto post = Inst<E>::morph(rng, y, z);
    auto lhs = E::ovee(E::compose(post, f), E::compose(post, h));
    if (!lhs || !E::meq(*lhs, E::compose(post, g))) return fail("post-composition additive");
    auto pre = Inst<E>::morph(rng, z, x);
    auto lhs2 = E::ovee(E::compose(f, pre), E::compose(h, pre));
    if (!lhs2 || !E::meq(*lhs2, E::compose(g, pre))) return fail("pre-composition additive");
    return std::nullopt;
  }
};

// --- image-laws -------------------------------------------------------------

template <class E>
struct ImageLawsBody {
  static std::optional<json> run(const SuiteConfig& cfg, long long trial) {
    Rng rng = Rng::forTrial(cfg.seed, static_cast<std::uint64_t>(trial));
    auto x = Inst<E>::obj(rng, cfg);
    auto y = Inst<E>::obj(rng, cfg);
    auto z = Inst<E>::obj(rng, cfg);
    auto f = Inst<E>::morph(rng, x, y);
    auto g = Inst<E>::morph(rng, y, z);
    json ctx{{"f", Inst<E>::jmorph(f)}, {"g", Inst<E>::jmorph(g)}};
    auto fail = [&](const char* what) {
      json j = ctx;
      j["check"] = what;
      return std::optional<json>(j);
    };

    auto imf = E::image(f);
    if (!E::isSharp(imf)) return fail("images are sharp");
    if (!E::peq(api::boxSubst<E>(f, imf), E::truth(x))) return fail("box_f(im f) = 1");

    // im(g f) <= im(g).
    if (!E::pleq(E::image(E::compose(g, f)), E::image(g))) return fail("im(gf) <= im(g)");

    // g f = 0 iff im(f) <= ker(g), on a random pair and on a constructed
    // annihilating pair.
    bool zeroComp = E::isZeroM(E::compose(g, f));
    bool contained = E::pleq(imf, api::kernel<E>(g));
    if (zeroComp != contained) return fail("gf = 0 iff im f <= ker g");
    auto killer = E::compose(g, E::assertMap(y, E::portho(imf)));
    if (!E::isZeroM(E::compose(killer, f))) return fail("asrt off the image annihilates");
    if (!E::pleq(imf, api::kernel<E>(killer))) return fail("image below the killer kernel");

    // im([f,g']) is the join of the images.
    auto g2 = Inst<E>::morph(rng, z, y);
    auto cot = E::cotuple(f, g2);
    auto lhs = E::image(cot);
    auto rhs = sharpJoin<E>(y, imf, E::image(g2));
    if (!E::peq(lhs, rhs)) return fail("im[f,g] = im f v im g");

    if (E::peq(imf, E::falsity(y)) != E::isZeroM(f)) return fail("im f = 0 iff f = 0");
    return std::nullopt;
  }
};

}  // namespace

std::vector<Suite> suitesMaps() {
  auto simple = [](const char* id, const char* anchor, CaseFn fn) {
    return Suite{id, anchor, {"boolean", "prob", "quantum"}, noExhaustive, std::move(fn),
                 false, nullptr};
  };
  std::vector<Suite> out;
  out.push_back(simple("kerbot-reflect", "Lemma 6.6 (kernel-supplement preserves and reflects)",
                       [](const SuiteConfig& c, long long t) { return dispatch<KerbotBody>(c, t); }));
  out.push_back(simple("zero-total", "Lemma 3.5 (zero and totality through the kernel)",
                       [](const SuiteConfig& c, long long t) {
                         return dispatch<ZeroTotalBody>(c, t);
                       }));
  out.push_back(simple("joint-monic", "Lemma 3.3 (partial projections are jointly monic)",
                       [](const SuiteConfig& c, long long t) {
                         return dispatch<JointMonicBody>(c, t);
                       }));
  out.push_back(simple("pairing", "Lemma 3.4 with the sum-pairing correspondence",
                       [](const SuiteConfig& c, long long t) {
                         return dispatch<PairingBody>(c, t);
                       }));
  out.push_back(simple("homset-order", "Prop. 6.8 (positive cancellative homset order)",
                       [](const SuiteConfig& c, long long t) {
                         return dispatch<HomsetOrderBody>(c, t);
                       }));
  out.push_back(simple("image-laws", "Lemma 6.13 (image calculus)",
                       [](const SuiteConfig& c, long long t) {
                         return dispatch<ImageLawsBody>(c, t);
                       }));
  return out;
}

}  // namespace effectus::law
