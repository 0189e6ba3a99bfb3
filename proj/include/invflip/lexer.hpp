#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invflip {

enum class Tok {
  End,
  Ident,
  Number,
  KwProgram,
  KwEndProgram,
  KwVar,
  KwEndVar,
  KwIf,
  KwThen,
  KwElse,
  KwEndIf,
  KwOr,
  KwAnd,
  KwNot,
  KwBool,
  KwReal,
  KwPid,
  Assign,     // :=
  OutArrow,   // =>
  Colon,
  Semicolon,
  Comma,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Lt,
  Gt,
  Le,
  Ge,
  Minus,
};

const char* tok_name(Tok t);

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

// Hand-rolled lexer for the ST subset. Comments "(* ... *)" are skipped;
// the most recent one is retained so the parser can attach a same-line
// trailing comment to a declaration as its unit annotation.
class Lexer {
 public:
  explicit Lexer(std::string_view src);

  Token next();

  // Consumes the unit comment if one was skipped on the given source line.
  std::optional<std::string> take_comment_on_line(int line);

 private:
  void skip_ws_and_comments();
  char peek() const;
  char get();
  bool eof() const;

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  struct SkippedComment {
    std::string text;
    int line;
  };
  std::vector<SkippedComment> comments_;
};

}  // namespace invflip
