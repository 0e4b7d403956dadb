#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lpa {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when there is nothing to show
};

// Outcome of a verifier: one named entry per check performed.
class Report {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, std::move(witness)});
  }

  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
  }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks_)
      if (!c.passed) out.push_back(c);
    return out;
  }

  const std::vector<Check>& checks() const { return checks_; }
  bool empty() const { return checks_.empty(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace lpa
