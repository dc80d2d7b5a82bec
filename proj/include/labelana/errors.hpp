#pragma once

#include <stdexcept>
#include <string>

namespace labelana {

// Exit-code mapping used by the CLI: Parse -> 2, Validation -> 3, Resource -> 4.
// Logic errors indicate an internal soundness bug and are never expected.
enum class ErrorKind { Parse, Validation, Resource, Logic };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::Parse: return "parse";
      case ErrorKind::Validation: return "validation";
      case ErrorKind::Resource: return "resource";
      case ErrorKind::Logic: return "logic";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(std::string m) : Error(ErrorKind::Parse, std::move(m)) {}
};

struct ValidationError : Error {
  explicit ValidationError(std::string m) : Error(ErrorKind::Validation, std::move(m)) {}
};

struct ResourceError : Error {
  explicit ResourceError(std::string m) : Error(ErrorKind::Resource, std::move(m)) {}
};

struct LogicError : Error {
  explicit LogicError(std::string m) : Error(ErrorKind::Logic, std::move(m)) {}
};

}  // namespace labelana
