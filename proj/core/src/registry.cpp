#include <algorithm>
#include <chrono>

#include "effectus/suites.hpp"
#include "suites_detail.hpp"

namespace effectus::law {

namespace {

const std::vector<Suite>& allSuites() {
  static std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    auto append = [&](std::vector<Suite> group) {
      for (auto& s : group) {
        for (const auto& existing : out)
          if (existing.id == s.id) throw Error("duplicate suite registration: " + s.id);
        out.push_back(std::move(s));
      }
    };
    append(suitesAlgebra());
    append(suitesMaps());
    append(suitesStates());
    append(suitesActions());
    append(suitesStructure());
    append(suitesTelos());
    return out;
  }();
  return suites;
}

const Suite& findSuite(const std::string& id) {
  for (const auto& s : allSuites())
    if (s.id == id) return s;
  throw UnknownSuite(id);
}

json caseEnvelope(const Suite& suite, const SuiteConfig& cfg, long long trial,
                  const json& detail) {
  json tol = json::object();
  for (const auto& [k, v] : cfg.tolOverrides) tol[k] = v;
  return json{{"schema", 1},       {"suite", suite.id}, {"instance", cfg.instance},
              {"seed", cfg.seed},  {"trial", trial},    {"maxCarrier", cfg.maxCarrier},
              {"unitary", cfg.unitary}, {"tol", tol},   {"detail", detail}};
}

void applyTolerances(const SuiteConfig& cfg) {
  Tolerances t;
  t.apply(cfg.tolOverrides);
  tolerances() = t;
}

LawReport runTrials(const Suite& suite, const SuiteConfig& cfg, long long first,
                    long long count, const std::string& mode) {
  LawReport rep;
  rep.suite = suite.id;
  rep.anchor = suite.anchor;
  rep.instance = cfg.instance;
  rep.seed = cfg.seed;
  rep.trials = static_cast<int>(count);
  rep.mode = mode;

  auto t0 = std::chrono::steady_clock::now();
  for (long long trial = first; trial < first + count; ++trial) {
    auto bad = suite.runCase(cfg, trial);
    if (bad) rep.failures.push_back(caseEnvelope(suite, cfg, trial, *bad).dump());
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsedMs = std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (!rep.failures.empty())
    rep.status = SuiteStatus::fail;
  else if (suite.probe && suite.cleanStatus)
    rep.status = suite.cleanStatus(cfg);
  else
    rep.status = SuiteStatus::pass;
  return rep;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> suiteRegistry() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : allSuites()) out.emplace_back(s.id, s.anchor);
  return out;
}

std::vector<std::string> suiteInstances(const std::string& id) {
  return findSuite(id).instances;
}

LawReport runSuite(const std::string& id, const SuiteConfig& cfg) {
  const Suite& suite = findSuite(id);
  if (std::find(suite.instances.begin(), suite.instances.end(), cfg.instance) ==
      suite.instances.end())
    throw Error("suite '" + id + "' does not apply to instance '" + cfg.instance + "'");
  applyTolerances(cfg);
  long long exhaustive = suite.exhaustiveCount(cfg);
  long long total = exhaustive + cfg.trials;
  return runTrials(suite, cfg, 0, total, exhaustive > 0 ? "exhaustive" : "random");
}

LawReport replayCase(const std::string& caseJson) {
  json j = json::parse(caseJson, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed case file");
  if (!j.contains("schema") || j.at("schema").get<int>() != 1)
    throw ParseError("unsupported case schema version");
  SuiteConfig cfg;
  cfg.instance = j.at("instance").get<std::string>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.maxCarrier = j.at("maxCarrier").get<int>();
  cfg.unitary = j.value("unitary", std::string("identity"));
  if (j.contains("tol"))
    for (auto it = j.at("tol").begin(); it != j.at("tol").end(); ++it)
      cfg.tolOverrides[it.key()] = it.value().get<double>();
  long long trial = j.at("trial").get<long long>();

  const Suite& suite = findSuite(j.at("suite").get<std::string>());
  applyTolerances(cfg);
  cfg.trials = 1;
  return runTrials(suite, cfg, trial, 1, "replay");
}

}  // namespace effectus::law
