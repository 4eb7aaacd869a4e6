#include "gamedep/error.hpp"

namespace gamedep {

namespace {

std::string with_line(const std::string& message, int line) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Input: return "input error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Scope: return "scope error";
    case ErrorKind::Locality: return "locality error";
    case ErrorKind::Resource: return "resource error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(with_line(message, line)), kind_(kind), line_(line), message_(message) {}

}  // namespace gamedep
