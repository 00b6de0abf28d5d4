#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bilateral {

enum class ErrorKind {
  Parse,
  WrongType,
  WrongShape,
  MismatchedMajors,
  MismatchedConclusions,
  RestrictionViolation,
  IllFormed,
  UnknownName,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::MismatchedMajors: return "MismatchedMajors";
    case ErrorKind::MismatchedConclusions: return "MismatchedConclusions";
    case ErrorKind::RestrictionViolation: return "RestrictionViolation";
    case ErrorKind::IllFormed: return "IllFormed";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Source position, 1-based. Line 0 means "unknown".
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(ErrorKind::Parse, format(pos, message)), pos_(pos), detail_(message) {}

  SourcePos pos() const noexcept { return pos_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(SourcePos pos, const std::string& message) {
    if (pos.line == 0) return message;
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  }

  SourcePos pos_;
  std::string detail_;
};

}  // namespace bilateral
