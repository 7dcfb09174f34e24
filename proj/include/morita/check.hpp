#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace morita {

// One violated law: the law name plus enough coordinates to reproduce it.
struct Violation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string witness = "") {
    violations.push_back({std::move(law), std::move(witness)});
  }
  void merge(const ValidationReport& o, const std::string& prefix = "") {
    for (const auto& v : o.violations) {
      violations.push_back({prefix.empty() ? v.law : prefix + "." + v.law, v.witness});
    }
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.law;
      if (!v.witness.empty()) s += " [" + v.witness + "]";
    }
    return s;
  }
};

}  // namespace morita
