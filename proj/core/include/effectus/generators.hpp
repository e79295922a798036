#pragma once

#include <vector>

#include "effectus/boolean.hpp"
#include "effectus/prob.hpp"
#include "effectus/quantum.hpp"
#include "effectus/rng.hpp"

namespace effectus::gen {

// Seeded samplers for the three instances. Rational weights keep their
// denominators small (<= 16 before reduction) so exhaustive sub-suites and
// replayed cases stay exact and readable.

Rational01 rational(Rng& rng);

FinSet finSet(Rng& rng, int maxCarrier);

SubsetPred subset(Rng& rng, const FinSet& x);
PartialFn partialFn(Rng& rng, const FinSet& x, const FinSet& y);
PartialFn totalFn(Rng& rng, const FinSet& x, const FinSet& y);
PartialFn boolState(Rng& rng, const FinSet& x);  // total point 1 -> X

FuzzyPred fuzzy(Rng& rng, const FinSet& x);
SubDist subDist(Rng& rng, int cod);
SubDist dist(Rng& rng, int cod);  // mass exactly 1
KernelMap kernel(Rng& rng, const FinSet& x, const FinSet& y);
KernelMap totalKernel(Rng& rng, const FinSet& x, const FinSet& y);
KernelMap probState(Rng& rng, const FinSet& x);  // total 1 -> X

VnAlg randomAlg(Rng& rng);  // block dims drawn from {[2],[3],[2,1],[2,2]}
CMatrix haarUnitary(Rng& rng, int n);
CMatrix randomEffectMatrix(Rng& rng, int n);
CMatrix randomEffectMatrixMixed(Rng& rng, int n);
CMatrix randomProjectionMatrix(Rng& rng, int n);
CMatrix randomDensityMatrix(Rng& rng, int n);
std::vector<cplx> randomUnitVector(Rng& rng, int n);

BlockEffect blockEffect(Rng& rng, const VnAlg& x);
BlockEffect blockProjection(Rng& rng, const VnAlg& x);
/// Effect whose spectrum mixes exact 0s, exact 1s and generic values, so
/// floors and comprehensions are routinely nontrivial.
BlockEffect blockEffectMixed(Rng& rng, const VnAlg& x);
KrausMap krausTotal(Rng& rng, const VnAlg& x, const VnAlg& y);
KrausMap krausSub(Rng& rng, const VnAlg& x, const VnAlg& y);
KrausMap quantumState(Rng& rng, const VnAlg& x);  // total 1 -> X
/// Side-effect-free map below the identity: a central multiplier.
KrausMap centralMultiplier(Rng& rng, const VnAlg& x);
/// Unital *-homomorphism: unitary conjugation, optionally permuting
/// equal-dimension blocks.
KrausMap sharpPreserving(Rng& rng, const VnAlg& x);

}  // namespace effectus::gen
