#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lhm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Pass/fail per named condition. Validation never throws for a failed
/// condition; it records it here.
class ValidationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }

  bool ok() const noexcept {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  const CheckResult* find(std::string_view name) const noexcept {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  bool passed(std::string_view name) const noexcept {
    const auto* c = find(name);
    return c != nullptr && c->passed;
  }

  std::string summary() const {
    std::string out;
    for (const auto& c : checks_) {
      out += c.name;
      out += c.passed ? ": pass" : ": FAIL";
      if (!c.detail.empty()) out += " (" + c.detail + ")";
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace lhm
