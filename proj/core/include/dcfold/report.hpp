#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dcfold {

// One named pass/fail outcome; witness carries a short counterexample
// description when the check fails.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  std::string case_name;
  std::vector<Check> checks;

  bool ok() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }

  // Fold another report in, prefixing its check names.
  void absorb(const CheckReport& other, const std::string& prefix) {
    for (const Check& c : other.checks)
      checks.push_back({prefix + c.name, c.pass, c.witness});
  }
};

} // namespace dcfold
