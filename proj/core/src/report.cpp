#include "effectus/report.hpp"

#include "effectus/errors.hpp"

namespace effectus {

std::string statusName(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass:
      return "pass";
    case SuiteStatus::fail:
      return "fail";
    case SuiteStatus::inconclusive:
      return "inconclusive";
  }
  throw Error("bad status");
}

}  // namespace effectus
