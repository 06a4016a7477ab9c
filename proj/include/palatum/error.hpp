#pragma once

#include <stdexcept>
#include <string>

namespace palatum {

/// Base for all library errors. `code()` is a short machine-greppable tag
/// ("domain", "validation", "io", ...) used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Malformed input data: broken invariants, bad JSON documents, duplicate names.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
  ValidationError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace palatum
