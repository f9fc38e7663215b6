#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catlaw {

enum class ErrorKind {
  Parse,
  Validation,
  Typing,
  CompositionTypeMismatch,
  TypeMismatch,
  BaseMismatch,
  CapExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Short machine-readable name, e.g. "UnitComponentMistyped".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

struct Issue {
  std::string code;    // MissingComposite, NonAssociative, UnitLawViolation, DanglingId, ...
  std::string detail;
};

// Raised by validate_category with every violated axiom instance.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }
  bool has(const std::string& code) const;

 private:
  std::vector<Issue> issues_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::uint64_t estimate, std::uint64_t cap);

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

inline Error typing_error(std::string code, const std::string& what) {
  return Error(ErrorKind::Typing, std::move(code), what);
}

}  // namespace catlaw
