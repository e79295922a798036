// Command-line front end: run law suites, replay recorded counterexamples,
// evaluate one-off case files, list the registry.
//
// Exit codes: 0 pass, 1 law failure, 2 usage/config error, 3 internal error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "effectus/errors.hpp"
#include "effectus/json_io.hpp"
#include "effectus/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw effectus::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeOut(const std::string& outPath, const std::string& text) {
  if (outPath.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(outPath);
  if (!out) throw effectus::Error("cannot write '" + outPath + "'");
  out << text << "\n";
}

std::string textSummary(const effectus::LawReport& r) {
  std::ostringstream os;
  os << r.suite << " [" << r.instance << "] " << effectus::statusName(r.status) << " ("
     << r.trials << " cases, " << r.mode << ", " << r.elapsedMs << " ms)";
  if (!r.failures.empty()) {
    os << "\n  failures: " << r.failures.size();
    for (const auto& f : r.failures) os << "\n  case: " << f;
  }
  return os.str();
}

struct CheckOptions {
  std::string instance;
  std::string suitesCsv;
  std::uint64_t seed = 0;
  bool seedSet = false;
  int trials = 200;
  std::vector<std::string> tolOverrides;
  std::string format = "text";
  std::string outPath;
  std::string unitary = "identity";
};

int runCheck(const CheckOptions& opt) {
  using namespace effectus;
  if (opt.instance != "boolean" && opt.instance != "prob" && opt.instance != "quantum") {
    std::cerr << "unknown instance '" << opt.instance << "'\n";
    return kExitUsage;
  }
  SuiteConfig cfg;
  cfg.instance = opt.instance;
  cfg.trials = opt.trials;
  cfg.unitary = opt.unitary;
  cfg.seed = opt.seed;
  if (!opt.seedSet) {
    if (const char* env = std::getenv("EFFECTUS_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
  }
  for (const auto& kv : opt.tolOverrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad --tol override '" << kv << "' (expected key=value)\n";
      return kExitUsage;
    }
    try {
      cfg.tolOverrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "bad --tol value in '" << kv << "'\n";
      return kExitUsage;
    }
  }

  std::vector<std::string> ids;
  if (opt.suitesCsv.empty()) {
    for (const auto& [id, anchor] : law::suiteRegistry()) {
      auto insts = law::suiteInstances(id);
      if (std::find(insts.begin(), insts.end(), cfg.instance) != insts.end()) ids.push_back(id);
    }
  } else {
    std::stringstream ss(opt.suitesCsv);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) ids.push_back(part);
    }
  }

  std::vector<LawReport> reports;
  bool anyFailure = false;
  for (const auto& id : ids) {
    LawReport r = law::runSuite(id, cfg);
    anyFailure = anyFailure || r.status == SuiteStatus::fail;
    reports.push_back(std::move(r));
  }

  if (opt.format == "json") {
    writeOut(opt.outPath, io::reportsToJson(reports));
  } else {
    std::ostringstream os;
    for (const auto& r : reports) os << textSummary(r) << "\n";
    writeOut(opt.outPath, os.str());
  }
  return anyFailure ? kExitFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effectus: law checking for Boolean, probabilistic and quantum instances"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* checkCmd = app.add_subcommand("check", "run property suites");
  checkCmd->add_option("--instance", check.instance, "boolean | prob | quantum")->required();
  checkCmd->add_option("--suites", check.suitesCsv, "comma-separated suite ids (default: all)");
  auto* seedOpt = checkCmd->add_option("--seed", check.seed, "master seed (u64)");
  checkCmd->add_option("--trials", check.trials, "random trials per suite")
      ->check(CLI::PositiveNumber);
  checkCmd->add_option("--tol", check.tolOverrides, "tolerance override key=value")
      ->take_all();
  checkCmd->add_option("--format", check.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  checkCmd->add_option("--out", check.outPath, "write the report to a file");
  checkCmd->add_option("--unitary", check.unitary,
                       "perturbation for duality-perturbed: identity | phase | hadamard");

  std::string replayPath;
  auto* replayCmd = app.add_subcommand("replay", "re-execute a recorded counterexample");
  replayCmd->add_option("file", replayPath, "case file produced by a failing suite")->required();

  std::string evalPath;
  auto* evalCmd = app.add_subcommand("eval", "evaluate a one-off operation case file");
  evalCmd->add_option("file", evalPath, "JSON case naming an operation and operands")->required();

  auto* listCmd = app.add_subcommand("list", "print the suite registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (checkCmd->parsed()) {
      check.seedSet = seedOpt->count() > 0;
      return runCheck(check);
    }
    if (replayCmd->parsed()) {
      effectus::LawReport r = effectus::law::replayCase(readFile(replayPath));
      std::cout << textSummary(r) << "\n";
      return r.status == effectus::SuiteStatus::fail ? kExitFailure : kExitPass;
    }
    if (evalCmd->parsed()) {
      std::cout << effectus::io::evalCase(readFile(evalPath)) << "\n";
      return kExitPass;
    }
    if (listCmd->parsed()) {
      for (const auto& [id, anchor] : effectus::law::suiteRegistry()) {
        std::string insts;
        for (const auto& i : effectus::law::suiteInstances(id))
          insts += (insts.empty() ? "" : ",") + i;
        std::cout << id << "\t[" << insts << "]\t" << anchor << "\n";
      }
      return kExitPass;
    }
  } catch (const effectus::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const effectus::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const effectus::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
