#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catlaw/report.hpp"

namespace catlaw {

struct CheckEntry {
  std::string id;
  std::string tag;
  bool passed = true;
  std::string witness;
};

// What a CLI command or the self-test emits. JSON output carries no timing
// so it is byte-stable across runs and job counts.
class VerificationReport {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit VerificationReport(std::vector<std::string> command = {}) : command_(std::move(command)) {}

  void check(std::string id, std::string tag, bool passed, std::string witness = {});
  // One entry per finding of `r`, all under `id`.
  void add(const std::string& id, const Report& r);
  void merge(const VerificationReport& other);

  // Free-form results (counts, constructed objects) shown next to the checks.
  nlohmann::json& results() { return results_; }
  const nlohmann::json& results() const { return results_; }

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const;
  const std::vector<CheckEntry>& checks() const { return checks_; }
  const std::vector<std::string>& command() const { return command_; }

  nlohmann::json to_json() const;
  std::string to_text(double seconds) const;

 private:
  std::vector<std::string> command_;
  std::vector<CheckEntry> checks_;
  nlohmann::json results_ = nlohmann::json::object();
};

}  // namespace catlaw
