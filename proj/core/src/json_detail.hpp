#pragma once

// Internal nlohmann-based converters shared by json_io and the suites.
// Not part of the installed interface.

#include "json.hpp"

#include "effectus/boolean.hpp"
#include "effectus/prob.hpp"
#include "effectus/quantum.hpp"

namespace effectus::detail {

using nlohmann::json;

json jPartialFn(const PartialFn& f);
PartialFn pPartialFn(const json& j);

json jSubset(const SubsetPred& p);
SubsetPred pSubset(const json& j);

json jFuzzy(const FuzzyPred& p);
FuzzyPred pFuzzy(const json& j);

json jSubDist(const SubDist& d);
SubDist pSubDist(const json& j);

json jKernel(const KernelMap& f);
KernelMap pKernel(const json& j);

json jMatrix(const CMatrix& m);
CMatrix pMatrix(const json& j);

json jBlockEffect(const BlockEffect& p);
BlockEffect pBlockEffect(const json& j);

json jKraus(const KrausMap& f);
KrausMap pKraus(const json& j);

json jBlockState(const BlockState& s);
BlockState pBlockState(const json& j);

}  // namespace effectus::detail
