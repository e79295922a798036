#include "effectus/tolerances.hpp"

#include "effectus/errors.hpp"

namespace effectus {

void Tolerances::apply(const std::map<std::string, double>& overrides) {
  for (const auto& [key, val] : overrides) {
    if (key == "herm")
      herm = val;
    else if (key == "spec")
      spec = val;
    else if (key == "eig")
      eig = val;
    else if (key == "proj")
      proj = val;
    else if (key == "ceilCutoff")
      ceilCutoff = val;
    else if (key == "floorCutoff")
      floorCutoff = val;
    else if (key == "scalar")
      scalar = val;
    else if (key == "morph")
      morph = val;
    else
      throw Error("unknown tolerance key '" + key + "'");
  }
}

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

}  // namespace effectus
