#pragma once

#include <stdexcept>
#include <string>

namespace d2tk {

enum class ErrorCode {
  AsymmetricAdjacency,
  SelfLoop,
  Duplicate,
  NotConnected,
  NotSphere,
  UnknownVertex,
  NotAnEdge,
  BadSurgery,
  CrossingChords,
  Disconnects,
  UnsupportedDelta,
  PaletteExceeded,
  TooLarge,
  PartialAssignment,
  BadSpec,
  UnknownFixture,
  Parse,
  BadRule,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors keep the 1-based input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace d2tk
