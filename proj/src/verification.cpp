#include "catlaw/verification.hpp"

#include <cstdio>
#include <sstream>

namespace catlaw {

void VerificationReport::check(std::string id, std::string tag, bool passed, std::string witness) {
  checks_.push_back({std::move(id), std::move(tag), passed, std::move(witness)});
}

void VerificationReport::add(const std::string& id, const Report& r) {
  for (const auto& f : r.findings()) check(id, f.tag, f.passed, f.witness);
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  results_.update(other.results_);
}

bool VerificationReport::ok() const { return failed() == 0; }

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.passed ? 1 : 0;
  return n;
}

std::size_t VerificationReport::failed() const { return checks_.size() - passed(); }

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json entry = {{"id", c.id}, {"tag", c.tag}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"command", command_},
          {"checks", std::move(checks)},
          {"results", results_},
          {"summary", {{"total", checks_.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string VerificationReport::to_text(double seconds) const {
  std::ostringstream out;
  out << "command:";
  for (const auto& a : command_) out << ' ' << a;
  out << '\n';
  for (const auto& c : checks_) {
    out << (c.passed ? "  pass  " : "  FAIL  ") << c.id << "  [" << c.tag << ']';
    if (!c.witness.empty()) out << "  " << c.witness;
    out << '\n';
  }
  if (!results_.empty()) out << "results: " << results_.dump(2) << '\n';
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s", seconds);
  out << "summary: " << passed() << " passed, " << failed() << " failed, " << checks_.size() << " total (" << timing
      << ")\n";
  return out.str();
}

}  // namespace catlaw
