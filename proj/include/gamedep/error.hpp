#pragma once

#include <stdexcept>
#include <string>

namespace gamedep {

enum class ErrorKind {
  Input,     // precondition violated by a caller-supplied value
  Parse,     // malformed document text
  Scope,     // identifier not declared in the ambient graph
  Locality,  // payoff keyed by something other than Adj+(player)
  Resource,  // configured size guard exceeded
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure surfaced by the library. `line()` is 1-based, or 0 when the
/// error is not tied to a document position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  int line_;
  std::string message_;
};

}  // namespace gamedep
