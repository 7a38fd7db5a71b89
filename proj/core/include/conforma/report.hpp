#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace conforma {

enum class CheckStatus { Pass, Fail, Skipped, Inconclusive };

std::string status_str(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;   // residual sample on failure, notes otherwise
};

// Deterministic CI report: byte-stable for a fixed config and seed apart from
// the wall_ms field. FAIL anywhere means a nonzero process exit code.
class Report {
 public:
  Report(std::string command, nlohmann::json config)
      : command_(std::move(command)), config_(std::move(config)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks_.push_back({name, pass ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  void assumption(const std::string& a) { assumptions_.push_back(a); }

  bool failed() const;
  std::size_t count(CheckStatus s) const;

  nlohmann::json to_json(long wall_ms) const;
  std::string to_text() const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> assumptions_;
};

}  // namespace conforma
