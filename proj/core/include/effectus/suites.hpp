#pragma once

#include <string>
#include <utility>
#include <vector>

#include "effectus/report.hpp"

namespace effectus::law {

/// The registered suites as (id, anchor) pairs, in registration order.
std::vector<std::pair<std::string, std::string>> suiteRegistry();

/// Instances a suite applies to.
std::vector<std::string> suiteInstances(const std::string& id);

/// Runs a suite. Deterministic in (id, cfg): identical inputs produce
/// identical failure sets. Throws UnknownSuite for unregistered ids and
/// Error when cfg.instance is not supported by the suite.
LawReport runSuite(const std::string& id, const SuiteConfig& cfg);

/// Re-executes a single recorded case file in isolation; the returned
/// report covers exactly that trial.
LawReport replayCase(const std::string& caseJson);

}  // namespace effectus::law
