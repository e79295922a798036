#pragma once

#include <string>

#include "effectus/boolean.hpp"
#include "effectus/prob.hpp"
#include "effectus/quantum.hpp"
#include "effectus/report.hpp"

namespace effectus::io {

// JSON text encodings of the wire formats:
//   rationals            "num/den"
//   partial functions    {"dom": n, "cod": m, "table": [int|null, ...]}
//   kernels              {"dom": n, "cod": m, "rows": [{"i": "num/den", ...}, ...]}
//   fuzzy predicates     ["num/den", ...]
//   matrices             {"rows": r, "cols": c, "re": [...], "im": [...]}
//   block effects        {"blockDims": [...], "blocks": [matrix, ...]}
//   kraus maps           {"domDims": [...], "codDims": [...],
//                         "terms": [{"src": i, "dst": j, "k": matrix}, ...]}
//   block states         {"blockDims": [...], "densities": [matrix, ...]}
// Reports follow {suite, anchor, instance, seed, trials, mode, status,
// failures: [case...], elapsed_ms}.

std::string toJson(const PartialFn& f);
PartialFn partialFnFromJson(const std::string& text);

std::string toJson(const SubsetPred& p);
std::string toJson(const KernelMap& f);
KernelMap kernelFromJson(const std::string& text);
std::string toJson(const FuzzyPred& p);
FuzzyPred fuzzyFromJson(const std::string& text);

std::string toJson(const CMatrix& m);
CMatrix matrixFromJson(const std::string& text);
std::string toJson(const BlockEffect& p);
BlockEffect blockEffectFromJson(const std::string& text);
std::string toJson(const KrausMap& f);
KrausMap krausFromJson(const std::string& text);
std::string toJson(const BlockState& s);
BlockState blockStateFromJson(const std::string& text);

std::string toJson(const LawReport& r);
std::string reportsToJson(const std::vector<LawReport>& rs);

/// Runs an `eval` case file: a JSON object naming an operation and its
/// operands. Returns the printed result. Raises ParseError on malformed
/// input and Error subclasses on domain failures.
std::string evalCase(const std::string& text);

}  // namespace effectus::io
