#include "conforma/report.hpp"

#include <sstream>

namespace conforma {

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool Report::failed() const {
  for (const auto& c : checks_)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

std::size_t Report::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (c.status == s) ++n;
  return n;
}

nlohmann::json Report::to_json(long wall_ms) const {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["tool"] = "conforma";
  doc["command"] = command_;
  doc["config"] = config_;
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    doc["checks"].push_back(e);
  }
  doc["assumptions"] = assumptions_;
  doc["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skipped", count(CheckStatus::Skipped)},
                    {"inconclusive", count(CheckStatus::Inconclusive)}};
  doc["wall_ms"] = wall_ms;
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << command_ << " ==\n";
  for (const auto& c : checks_) {
    os << "[" << status_str(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << "\n";
  }
  if (!assumptions_.empty()) {
    os << "consumed nonzero assumptions:\n";
    for (const auto& a : assumptions_) os << "  * " << a << "\n";
  }
  os << "summary: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail)
     << " fail, " << count(CheckStatus::Skipped) << " skipped, "
     << count(CheckStatus::Inconclusive) << " inconclusive\n";
  return os.str();
}

}  // namespace conforma
