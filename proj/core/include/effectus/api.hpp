#pragma once

#include <optional>
#include <vector>

#include "effectus/boolean.hpp"
#include "effectus/errors.hpp"
#include "effectus/prob.hpp"
#include "effectus/quantum.hpp"

namespace effectus::api {

// The operation vocabulary shared by the three instances. Everything here is
// written once against the instance interface (BooleanEff, ProbEff,
// QuantumEff): kernels, box substitution, pairing, instruments, validity,
// conditioning, decomposition and the theta map are all derived from the
// categorical primitives rather than re-implemented per instance.

template <class E>
typename E::Pred kerSupp(const typename E::Morph& f) {
  // ker-supplement = truth after f.
  return E::morphToPred(E::compose(E::predToMorph(E::codOf(f), E::truth(E::codOf(f))), f));
}

template <class E>
typename E::Pred kernel(const typename E::Morph& f) {
  return E::portho(kerSupp<E>(f));
}

template <class E>
bool isTotal(const typename E::Morph& f) {
  return E::isTotal(f);
}

/// box_f(q) = (q-orth after f)-orth: the weakest liberal precondition.
template <class E>
typename E::Pred boxSubst(const typename E::Morph& f, const typename E::Pred& q) {
  auto lifted = E::compose(E::predToMorph(E::codOf(f), E::portho(q)), f);
  return E::portho(E::morphToPred(lifted));
}

/// diamond_f(q) = q after f.
template <class E>
typename E::Pred diaSubst(const typename E::Morph& f, const typename E::Pred& q) {
  return E::morphToPred(E::compose(E::predToMorph(E::codOf(f), q), f));
}

/// Partial pairing into a binary coproduct: (kappa1 f) ovee (kappa2 g).
/// Defined when the kernel-supplements are orthogonal; total iff they sum
/// to truth.
template <class E>
typename E::Morph pairing(const typename E::Morph& f, const typename E::Morph& g) {
  auto kf = kerSupp<E>(f);
  auto kg = kerSupp<E>(g);
  if (!E::povee(kf, kg)) throw NotOrthogonal("pairing");
  auto x = E::codOf(f);
  auto y = E::codOf(g);
  auto lifted = E::ovee(E::compose(E::inj(x, y, 0), f), E::compose(E::inj(x, y, 1), g));
  if (!lifted) throw NotOrthogonal("pairing bound");
  return *lifted;
}

template <class E>
typename E::Morph assertMap(const typename E::Obj& x, const typename E::Pred& p) {
  return E::assertMap(x, p);
}

/// instr_p = << asrt_p, asrt_p-orth >> : X -> X+X. Total by construction.
template <class E>
typename E::Morph instrument(const typename E::Obj& x, const typename E::Pred& p) {
  return pairing<E>(E::assertMap(x, p), E::assertMap(x, E::portho(p)));
}

/// p & q = q after asrt_p.
template <class E>
typename E::Pred andThen(const typename E::Obj& x, const typename E::Pred& p,
                         const typename E::Pred& q) {
  return diaSubst<E>(E::assertMap(x, p), q);
}

/// omega |= p, the scalar p after omega.
template <class E>
typename E::Scalar validity(const typename E::Morph& omega, const typename E::Pred& p) {
  return E::scalarValue(E::compose(E::predToMorph(E::codOf(omega), p), omega));
}

/// Galois correspondence for a total map: f omega |= q iff omega |= box_f q.
template <class E>
bool galoisCheck(const typename E::Morph& f, const typename E::Morph& omega,
                 const typename E::Pred& q) {
  if (!E::isTotal(f)) throw NotTotal("galoisCheck");
  auto lhs = validity<E>(E::compose(f, omega), q);
  auto rhs = validity<E>(omega, boxSubst<E>(f, q));
  return E::scalarEq(lhs, rhs);
}

template <class E>
std::optional<std::pair<typename E::Morph, typename E::Scalar>> normalize(
    const typename E::Morph& omega) {
  return E::normalizeSub(omega);
}

/// Conditioning: normalise asrt_p after omega; empty iff omega |= p is zero.
template <class E>
std::optional<typename E::Morph> condition(const typename E::Morph& omega,
                                           const typename E::Pred& p) {
  auto sub = E::compose(E::assertMap(E::codOf(omega), p), omega);
  auto n = E::normalizeSub(sub);
  if (!n) return std::nullopt;
  return n->first;
}

/// Law of total probability over a test (pairwise orthogonal, summing to
/// truth): omega |= q equals the ovee of (omega|p_i |= q) (omega |= p_i).
template <class E>
bool totalProbability(const typename E::Morph& omega,
                      const std::vector<typename E::Pred>& test, const typename E::Pred& q) {
  auto x = E::codOf(omega);
  auto acc = E::falsity(x);
  for (const auto& p : test) {
    auto s = E::povee(acc, p);
    if (!s) throw NotATest("test members are not pairwise orthogonal");
    acc = *s;
  }
  if (!E::peq(acc, E::truth(x))) throw NotATest("test does not sum to truth");

  typename E::Scalar lhs = validity<E>(omega, q);
  bool any = false;
  typename E::Scalar sum{};
  for (const auto& p : test) {
    auto vp = validity<E>(omega, p);
    if (E::scalarIsZero(vp)) continue;
    auto cond = condition<E>(omega, p);
    if (!cond) continue;
    auto term = E::scalarMulS(validity<E>(*cond, q), vp);
    sum = any ? E::scalarAdd(sum, term) : term;
    any = true;
  }
  if (!any) return E::scalarIsZero(lhs);
  return E::scalarEq(lhs, sum);
}

/// floor via the image of the comprehension map; ceil by duality.
template <class E>
typename E::Pred floorOf(const typename E::Obj& x, const typename E::Pred& p) {
  return E::floorPred(x, p);
}

template <class E>
typename E::Pred ceilOf(const typename E::Obj& x, const typename E::Pred& p) {
  return E::portho(E::floorPred(x, E::portho(p)));
}

template <class E>
struct Decomposition {
  typename E::Pred pred;
  typename E::Morph left, right;  // total maps out of the two quotients
  typename E::Morph dc;           // the total decomposition map
};

/// Splits a total map into a binary coproduct as (f1 + f2) after dc_p,
/// where p = (!+!) after f.
template <class E>
Decomposition<E> decompose(const typename E::Obj& x1, const typename E::Obj& x2,
                           const typename E::Morph& f) {
  if (!E::isTotal(f)) throw NotTotal("decompose");
  auto y = E::domOf(f);
  auto p = diaSubst<E>(f, E::predCotuple(E::truth(x1), E::falsity(x2)));

  auto qLeft = E::quotient(y, E::portho(p));  // ker(pproj1 f) = p-orth
  auto qRight = E::quotient(y, p);
  Decomposition<E> d{p,
                     E::factorQuotient(qLeft, E::compose(E::pproj(x1, x2, 0), f)),
                     E::factorQuotient(qRight, E::compose(E::pproj(x1, x2, 1), f)),
                     pairing<E>(qLeft.map, qRight.map)};
  return d;
}

template <class E>
typename E::Morph recompose(const typename E::Obj& x1, const typename E::Obj& x2,
                            const Decomposition<E>& d) {
  auto sum = E::cotuple(E::compose(E::inj(x1, x2, 0), d.left),
                        E::compose(E::inj(x1, x2, 1), d.right));
  return E::compose(sum, d.dc);
}

/// theta_p = xi_{p-orth} after pi_p, always total; an isomorphism exactly
/// when p is sharp.
template <class E>
typename E::Morph theta(const typename E::Obj& x, const typename E::Pred& p) {
  auto c = E::comprehend(x, p);
  auto q = E::quotient(x, E::portho(p));
  return E::compose(q.map, c.map);
}

/// Inverse of theta for sharp p, built from the assert map by factoring
/// through the quotient and then the comprehension.
template <class E>
typename E::Morph thetaInverse(const typename E::Obj& x, const typename E::Pred& p) {
  auto c = E::comprehend(x, p);
  auto q = E::quotient(x, E::portho(p));
  auto bar = E::factorQuotient(q, E::assertMap(x, p));
  return E::factorComprehension(c, bar);
}

}  // namespace effectus::api
