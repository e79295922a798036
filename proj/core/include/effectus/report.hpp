#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace effectus {

enum class SuiteStatus { pass, fail, inconclusive };

std::string statusName(SuiteStatus s);

struct SuiteConfig {
  std::string instance;  // "boolean" | "prob" | "quantum"
  std::uint64_t seed = 0;
  int trials = 200;
  int maxCarrier = 5;
  std::map<std::string, double> tolOverrides;
  std::string unitary = "identity";  // duality-perturbed: identity|phase|hadamard
};

/// Outcome of one property suite run. Failures are replayable case files
/// (serialized JSON); status is fail exactly when failures is nonempty,
/// except that falsification probes report `inconclusive` when they find
/// no witness without a guarantee that none exists.
struct LawReport {
  std::string suite;
  std::string anchor;
  std::string instance;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string mode;  // "exhaustive" | "random"
  SuiteStatus status = SuiteStatus::pass;
  std::vector<std::string> failures;
  double elapsedMs = 0.0;
};

}  // namespace effectus
