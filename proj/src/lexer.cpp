#include "invflip/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "invflip/errors.hpp"

namespace invflip {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::KwProgram: return "PROGRAM";
    case Tok::KwEndProgram: return "END_PROGRAM";
    case Tok::KwVar: return "VAR";
    case Tok::KwEndVar: return "END_VAR";
    case Tok::KwIf: return "IF";
    case Tok::KwThen: return "THEN";
    case Tok::KwElse: return "ELSE";
    case Tok::KwEndIf: return "END_IF";
    case Tok::KwOr: return "OR";
    case Tok::KwAnd: return "AND";
    case Tok::KwNot: return "NOT";
    case Tok::KwBool: return "BOOL";
    case Tok::KwReal: return "REAL";
    case Tok::KwPid: return "PID";
    case Tok::Assign: return "':='";
    case Tok::OutArrow: return "'=>'";
    case Tok::Colon: return "':'";
    case Tok::Semicolon: return "';'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::Minus: return "'-'";
  }
  return "?";
}

Lexer::Lexer(std::string_view src) : src_(src) {}

char Lexer::peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

bool Lexer::eof() const { return pos_ >= src_.size(); }

char Lexer::get() {
  char c = src_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void Lexer::skip_ws_and_comments() {
  while (!eof()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      get();
      continue;
    }
    if (c == '(' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
      int start_line = line_;
      int start_col = column_;
      get();
      get();
      std::string body;
      while (true) {
        if (eof()) {
          throw ParseError(start_line, start_col, "'*)'",
                           "unterminated comment");
        }
        char d = get();
        if (d == '*' && peek() == ')') {
          get();
          break;
        }
        body += d;
      }
      // trim
      size_t b = body.find_first_not_of(" \t");
      size_t e = body.find_last_not_of(" \t\r\n");
      std::string trimmed =
          (b == std::string::npos) ? std::string() : body.substr(b, e - b + 1);
      comments_.push_back({std::move(trimmed), start_line});
      if (comments_.size() > 16) comments_.erase(comments_.begin());
      continue;
    }
    break;
  }
}

std::optional<std::string> Lexer::take_comment_on_line(int line) {
  // A trailing comment may still be unlexed when the parser has not pulled
  // the next token yet: consume it now if it starts on the same line.
  size_t p = pos_;
  while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) ++p;
  if (p + 1 < src_.size() && src_[p] == '(' && src_[p + 1] == '*' &&
      line_ == line) {
    while (pos_ < p) get();
    size_t before = comments_.size();
    skip_ws_and_comments();
    while (comments_.size() > before + 1) comments_.pop_back();
  }
  for (auto it = comments_.begin(); it != comments_.end(); ++it) {
    if (it->line == line) {
      auto out = std::move(it->text);
      comments_.erase(it);
      return out;
    }
  }
  return std::nullopt;
}

static const std::unordered_map<std::string, Tok>& keyword_map() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"PROGRAM", Tok::KwProgram}, {"END_PROGRAM", Tok::KwEndProgram},
      {"VAR", Tok::KwVar},         {"END_VAR", Tok::KwEndVar},
      {"IF", Tok::KwIf},           {"THEN", Tok::KwThen},
      {"ELSE", Tok::KwElse},       {"END_IF", Tok::KwEndIf},
      {"OR", Tok::KwOr},           {"AND", Tok::KwAnd},
      {"NOT", Tok::KwNot},         {"BOOL", Tok::KwBool},
      {"REAL", Tok::KwReal},       {"PID", Tok::KwPid},
  };
  return kw;
}

Token Lexer::next() {
  skip_ws_and_comments();
  Token t;
  t.line = line_;
  t.column = column_;
  if (eof()) {
    t.kind = Tok::End;
    return t;
  }
  char c = peek();
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string word;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      word += get();
    }
    auto it = keyword_map().find(word);
    t.kind = it != keyword_map().end() ? it->second : Tok::Ident;
    t.text = std::move(word);
    return t;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      num += get();
    }
    if (peek() == '.') {
      // Require a digit after the point; "1." is a syntax error.
      if (pos_ + 1 >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        throw ParseError(t.line, t.column, "digit after '.'",
                         "malformed number '" + num + ".'");
      }
      num += get();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        num += get();
      }
    }
    t.kind = Tok::Number;
    t.text = std::move(num);
    return t;
  }
  get();
  switch (c) {
    case ':':
      if (peek() == '=') {
        get();
        t.kind = Tok::Assign;
      } else {
        t.kind = Tok::Colon;
      }
      return t;
    case '=':
      if (peek() == '>') {
        get();
        t.kind = Tok::OutArrow;
        return t;
      }
      throw ParseError(t.line, t.column, "'=>' or ':='", "stray '='");
    case ';': t.kind = Tok::Semicolon; return t;
    case ',': t.kind = Tok::Comma; return t;
    case '(': t.kind = Tok::LParen; return t;
    case ')': t.kind = Tok::RParen; return t;
    case '{': t.kind = Tok::LBrace; return t;
    case '}': t.kind = Tok::RBrace; return t;
    case '-': t.kind = Tok::Minus; return t;
    case '<':
      if (peek() == '=') {
        get();
        t.kind = Tok::Le;
      } else {
        t.kind = Tok::Lt;
      }
      return t;
    case '>':
      if (peek() == '=') {
        get();
        t.kind = Tok::Ge;
      } else {
        t.kind = Tok::Gt;
      }
      return t;
    default:
      throw ParseError(t.line, t.column, "token",
                       std::string("unexpected character '") + c + "'");
  }
}

}  // namespace invflip
