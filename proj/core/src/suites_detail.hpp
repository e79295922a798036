#pragma once

// Internal suite machinery. Each suite is a list of (possibly exhaustive)
// cases; a case either passes or yields a JSON detail object describing the
// counterexample. The registry wraps details into replayable case files.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "effectus/api.hpp"
#include "effectus/generators.hpp"
#include "effectus/report.hpp"
#include "effectus/rng.hpp"
#include "json_detail.hpp"

namespace effectus::law {

using detail::json;

using CaseFn = std::function<std::optional<json>(const SuiteConfig&, long long trial)>;

struct Suite {
  std::string id;
  std::string anchor;
  std::vector<std::string> instances;
  /// Number of enumerated cases for this config; 0 means purely random.
  std::function<long long(const SuiteConfig&)> exhaustiveCount;
  CaseFn runCase;
  bool probe = false;  // falsification probe: witnesses are the point
  /// Probe status when no witness was found.
  std::function<SuiteStatus(const SuiteConfig&)> cleanStatus;
};

std::vector<Suite> suitesAlgebra();
std::vector<Suite> suitesMaps();
std::vector<Suite> suitesStates();
std::vector<Suite> suitesActions();
std::vector<Suite> suitesStructure();
std::vector<Suite> suitesTelos();

// ---------------------------------------------------------------------------
// Shared helpers.

inline long long noExhaustive(const SuiteConfig&) { return 0; }

inline json failNote(const std::string& check) { return json{{"check", check}}; }

/// Mixed-radix decode of `index` over `digits` positions with radix `base`.
inline std::vector<int> unrank(long long index, int positions, long long base) {
  std::vector<int> out(positions);
  for (int i = 0; i < positions; ++i) {
    out[i] = static_cast<int>(index % base);
    index /= base;
  }
  return out;
}

inline SubsetPred subsetFromMask(int n, long long mask) {
  SubsetPred p{n, std::vector<std::uint8_t>(n, 0)};
  for (int i = 0; i < n; ++i) p.bits[i] = (mask >> i) & 1;
  return p;
}

inline PartialFn partialFnFromRank(int dom, int cod, long long rank) {
  PartialFn f{dom, cod, {}};
  f.table.resize(dom);
  for (int i = 0; i < dom; ++i) {
    int d = static_cast<int>(rank % (cod + 1));
    rank /= (cod + 1);
    if (d < cod) f.table[i] = d;
  }
  return f;
}

inline PartialFn totalFnFromRank(int dom, int cod, long long rank) {
  PartialFn f{dom, cod, {}};
  f.table.resize(dom);
  for (int i = 0; i < dom; ++i) {
    f.table[i] = static_cast<int>(rank % cod);
    rank /= cod;
  }
  return f;
}

/// Per-instance sampling and serialization used by the generic suite bodies.
template <class E>
struct Inst;

template <>
struct Inst<BooleanEff> {
  using E = BooleanEff;
  static FinSet obj(Rng& r, const SuiteConfig& cfg) {
    return gen::finSet(r, std::min(cfg.maxCarrier, 6));
  }
  static SubsetPred pred(Rng& r, const FinSet& x) { return gen::subset(r, x); }
  static PartialFn morph(Rng& r, const FinSet& x, const FinSet& y) {
    return gen::partialFn(r, x, y);
  }
  static PartialFn total(Rng& r, const FinSet& x, const FinSet& y) {
    return gen::totalFn(r, x, y);
  }
  static PartialFn state(Rng& r, const FinSet& x) { return gen::boolState(r, x); }
  static SubsetPred predBelow(Rng& r, const FinSet& x, const SubsetPred& y) {
    SubsetPred a = gen::subset(r, x);
    return subsetMeet(a, y);
  }
  static SubsetPred predMixed(Rng& r, const FinSet& x) { return gen::subset(r, x); }
  static json jobj(const FinSet& x) { return json{{"carrier", x.size}}; }
  static json jpred(const SubsetPred& p) { return detail::jSubset(p); }
  static json jmorph(const PartialFn& f) { return detail::jPartialFn(f); }
  static json jscalar(bool s) { return json(s); }
};

template <>
struct Inst<ProbEff> {
  using E = ProbEff;
  static FinSet obj(Rng& r, const SuiteConfig& cfg) {
    return gen::finSet(r, std::min(cfg.maxCarrier, 5));
  }
  static FuzzyPred pred(Rng& r, const FinSet& x) { return gen::fuzzy(r, x); }
  static KernelMap morph(Rng& r, const FinSet& x, const FinSet& y) {
    return gen::kernel(r, x, y);
  }
  static KernelMap total(Rng& r, const FinSet& x, const FinSet& y) {
    return gen::totalKernel(r, x, y);
  }
  static KernelMap state(Rng& r, const FinSet& x) { return gen::probState(r, x); }
  static FuzzyPred predBelow(Rng& r, const FinSet&, const FuzzyPred& y) {
    FuzzyPred a;
    a.v.reserve(y.v.size());
    for (const auto& val : y.v) a.v.push_back(Rational01::mul(gen::rational(r), val));
    return a;
  }
  static FuzzyPred predMixed(Rng& r, const FinSet& x) {
    FuzzyPred p;
    p.v.reserve(x.size);
    for (int i = 0; i < x.size; ++i) {
      int kind = r.intIn(0, 2);
      p.v.push_back(kind == 0 ? Rational01::zero()
                              : (kind == 1 ? Rational01::one() : gen::rational(r)));
    }
    return p;
  }
  static json jobj(const FinSet& x) { return json{{"carrier", x.size}}; }
  static json jpred(const FuzzyPred& p) { return detail::jFuzzy(p); }
  static json jmorph(const KernelMap& f) { return detail::jKernel(f); }
  static json jscalar(const Rational01& s) { return json(s.str()); }
};

template <>
struct Inst<QuantumEff> {
  using E = QuantumEff;
  static VnAlg obj(Rng& r, const SuiteConfig&) { return gen::randomAlg(r); }
  static BlockEffect pred(Rng& r, const VnAlg& x) { return gen::blockEffect(r, x); }
  static KrausMap morph(Rng& r, const VnAlg& x, const VnAlg& y) {
    return gen::krausSub(r, x, y);
  }
  static KrausMap total(Rng& r, const VnAlg& x, const VnAlg& y) {
    return gen::krausTotal(r, x, y);
  }
  static KrausMap state(Rng& r, const VnAlg& x) { return gen::quantumState(r, x); }
  static BlockEffect predBelow(Rng& r, const VnAlg& x, const BlockEffect& y) {
    BlockEffect e = gen::blockEffect(r, x);
    BlockEffect out{x, {}};
    for (int i = 0; i < x.numBlocks(); ++i) {
      CMatrix root = psdSqrt(y.blocks[i]);
      out.blocks.push_back(root * e.blocks[i] * root);
    }
    return out;
  }
  static BlockEffect predMixed(Rng& r, const VnAlg& x) { return gen::blockEffectMixed(r, x); }
  static json jobj(const VnAlg& x) { return json{{"blockDims", x.blockDims}}; }
  static json jpred(const BlockEffect& p) { return detail::jBlockEffect(p); }
  static json jmorph(const KrausMap& f) { return detail::jKraus(f); }
  static json jscalar(double s) { return json(s); }
};

/// Dispatches a templated suite body over cfg.instance.
template <template <class> class Body>
std::optional<json> dispatch(const SuiteConfig& cfg, long long trial) {
  if (cfg.instance == "boolean") return Body<BooleanEff>::run(cfg, trial);
  if (cfg.instance == "prob") return Body<ProbEff>::run(cfg, trial);
  if (cfg.instance == "quantum") return Body<QuantumEff>::run(cfg, trial);
  throw Error("unknown instance '" + cfg.instance + "'");
}

}  // namespace effectus::law
