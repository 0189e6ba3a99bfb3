#pragma once

#include <stdexcept>
#include <string>

namespace invflip {

// Pipeline stage that raised an error. Diagnostics are prefixed with the
// stage name so a failing batch run localizes immediately.
enum class Stage {
  Parse,
  Extract,
  Synth,
  Simulate,
  Report,
};

const char* stage_name(Stage s);

enum class Errc {
  Syntax,
  NoInvariantFound,
  UnsupportedAtom,
  MissingParam,
  DuplicatePv,
  ImplicationOnly,
  EmptyPlan,
  UnknownTag,
  LengthMismatch,
  InvalidConfig,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(Stage stage, Errc code, const std::string& what)
      : std::runtime_error(what), stage_(stage), code_(code) {}

  Stage stage() const { return stage_; }
  Errc code() const { return code_; }

  // "[stage] message" form used by the CLI and harness.
  std::string labeled() const {
    return std::string("[") + stage_name(stage_) + "] " + what();
  }

 private:
  Stage stage_;
  Errc code_;
};

// Syntax or validation failure with a source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& expected,
             const std::string& what)
      : Error(Stage::Parse, Errc::Syntax, what),
        line_(line),
        column_(column),
        expected_(expected) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace invflip
