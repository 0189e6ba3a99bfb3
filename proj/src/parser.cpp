#include "invflip/parser.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "invflip/lexer.hpp"

namespace invflip {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {
    cur_ = lex_.next();
    next_ = lex_.next();
  }

  Program parse() {
    Program p;
    expect(Tok::KwProgram);
    p.name = expect(Tok::Ident).text;
    if (cur_.kind == Tok::KwVar) parse_var_block(p);
    while (cur_.kind != Tok::KwEndProgram) {
      if (cur_.kind == Tok::End) {
        fail("END_PROGRAM");
      }
      p.stmts.push_back(parse_stmt());
    }
    expect(Tok::KwEndProgram);
    if (cur_.kind != Tok::End) fail("end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    std::string got = cur_.kind == Tok::Ident || cur_.kind == Tok::Number
                          ? "'" + cur_.text + "'"
                          : tok_name(cur_.kind);
    throw ParseError(cur_.line, cur_.column, expected,
                     "expected " + expected + ", got " + got);
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) fail(tok_name(kind));
    return advance();
  }

  Token advance() {
    Token t = cur_;
    cur_ = next_;
    next_ = lex_.next();
    return t;
  }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    advance();
    return true;
  }

  RealLit parse_number_lit() {
    bool neg = accept(Tok::Minus);
    Token num = expect(Tok::Number);
    RealLit lit = RealLit::from_text((neg ? "-" : "") + num.text);
    return lit;
  }

  void parse_var_block(Program& p) {
    expect(Tok::KwVar);
    while (cur_.kind != Tok::KwEndVar) {
      if (cur_.kind == Tok::End) fail("END_VAR");
      p.decls.push_back(parse_decl());
    }
    expect(Tok::KwEndVar);
  }

  VarDecl parse_decl() {
    VarDecl d;
    Token name = expect(Tok::Ident);
    d.name = name.text;
    d.line = name.line;
    expect(Tok::Colon);
    switch (cur_.kind) {
      case Tok::KwBool: d.dtype = DType::Bool; break;
      case Tok::KwReal: d.dtype = DType::Real; break;
      case Tok::KwPid: d.dtype = DType::Pid; break;
      default: fail("BOOL, REAL or PID");
    }
    advance();
    if (cur_.kind == Tok::Assign) {
      if (d.dtype == DType::Pid) fail("';' (PID instances take no initializer)");
      advance();
      d.init = parse_number_lit();
    }
    if (cur_.kind == Tok::LBrace) {
      if (d.dtype == DType::Pid) fail("';' (PID instances take no pragma)");
      advance();
      Token key = expect(Tok::Ident);
      if (key.text != "kind") {
        throw ParseError(key.line, key.column, "'kind'",
                         "unknown pragma '" + key.text + "'");
      }
      expect(Tok::Assign);
      Token val = expect(Tok::Ident);
      if (val.text == "physical") d.kind = VarKind::Physical;
      else if (val.text == "environmental") d.kind = VarKind::Environmental;
      else if (val.text == "operator") d.kind = VarKind::Operator;
      else if (val.text == "actuator") d.kind = VarKind::Actuator;
      else
        throw ParseError(val.line, val.column,
                         "physical, environmental, operator or actuator",
                         "unknown kind '" + val.text + "'");
      d.kind_explicit = true;
      expect(Tok::RBrace);
    }
    Token semi = expect(Tok::Semicolon);
    d.unit = lex_.take_comment_on_line(semi.line);
    if (d.unit && d.unit->empty()) d.unit.reset();
    return d;
  }

  StmtPtr parse_stmt() {
    if (cur_.kind == Tok::KwIf) return parse_if();
    if (cur_.kind == Tok::Ident) {
      if (next_.kind == Tok::Assign) return parse_assign();
      if (next_.kind == Tok::LParen) return parse_pid_call();
      fail("':=' or '(' after identifier");
    }
    fail("statement");
  }

  StmtPtr parse_if() {
    Token kw = expect(Tok::KwIf);
    ExprPtr cond = parse_expr();
    expect(Tok::KwThen);
    std::vector<StmtPtr> then_body;
    while (cur_.kind != Tok::KwElse && cur_.kind != Tok::KwEndIf) {
      if (cur_.kind == Tok::End) fail("END_IF");
      then_body.push_back(parse_stmt());
    }
    std::vector<StmtPtr> else_body;
    bool has_else = false;
    if (accept(Tok::KwElse)) {
      has_else = true;
      while (cur_.kind != Tok::KwEndIf) {
        if (cur_.kind == Tok::End) fail("END_IF");
        else_body.push_back(parse_stmt());
      }
    }
    expect(Tok::KwEndIf);
    expect(Tok::Semicolon);
    return Stmt::make_if(std::move(cond), std::move(then_body),
                         std::move(else_body), has_else, kw.line);
  }

  StmtPtr parse_assign() {
    Token name = expect(Tok::Ident);
    expect(Tok::Assign);
    ExprPtr value = parse_expr();
    expect(Tok::Semicolon);
    return Stmt::make_assign(name.text, std::move(value), name.line);
  }

  StmtPtr parse_pid_call() {
    Token name = expect(Tok::Ident);
    expect(Tok::LParen);
    std::vector<PidArg> args;
    std::string out_target;
    bool saw_out = false;
    while (true) {
      Token pname = expect(Tok::Ident);
      if (cur_.kind == Tok::OutArrow) {
        advance();
        if (saw_out) {
          throw ParseError(pname.line, pname.column, "single output binding",
                           "duplicate '=>' output binding");
        }
        saw_out = true;
        if (pname.text != "OUT") {
          throw ParseError(pname.line, pname.column, "'OUT'",
                           "unknown output parameter '" + pname.text + "'");
        }
        out_target = expect(Tok::Ident).text;
      } else {
        expect(Tok::Assign);
        PidArg arg;
        arg.name = pname.text;
        if (pname.text == "ACTION") {
          Token val = expect(Tok::Ident);
          arg.is_action = true;
          if (val.text == "DIRECT") arg.action = PidAction::Direct;
          else if (val.text == "REVERSE") arg.action = PidAction::Reverse;
          else
            throw ParseError(val.line, val.column, "DIRECT or REVERSE",
                             "unknown action '" + val.text + "'");
        } else if (cur_.kind == Tok::Ident) {
          Token v = advance();
          auto e = Expr::make_var(v.text);
          const_cast<Expr*>(e.get())->line = v.line;
          arg.expr = e;
        } else {
          int line = cur_.line;
          auto e = Expr::make_real(parse_number_lit());
          const_cast<Expr*>(e.get())->line = line;
          arg.expr = e;
        }
        args.push_back(std::move(arg));
      }
      if (accept(Tok::Comma)) continue;
      break;
    }
    expect(Tok::RParen);
    expect(Tok::Semicolon);
    if (!saw_out) {
      throw ParseError(name.line, name.column, "OUT => binding",
                       "PID call '" + name.text + "' has no OUT => binding");
    }
    return Stmt::make_pid_call(name.text, std::move(args),
                               std::move(out_target), name.line);
  }

  // Precedence: NOT > AND > OR. Comparisons are atoms.
  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (cur_.kind == Tok::KwOr) {
      int line = advance().line;
      ExprPtr rhs = parse_and();
      e = Expr::make_or(std::move(e), std::move(rhs));
      const_cast<Expr*>(e.get())->line = line;
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_not();
    while (cur_.kind == Tok::KwAnd) {
      int line = advance().line;
      ExprPtr rhs = parse_not();
      e = Expr::make_and(std::move(e), std::move(rhs));
      const_cast<Expr*>(e.get())->line = line;
    }
    return e;
  }

  ExprPtr parse_not() {
    if (cur_.kind == Tok::KwNot) {
      int line = advance().line;
      ExprPtr e = Expr::make_not(parse_not());
      const_cast<Expr*>(e.get())->line = line;
      return e;
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    if (accept(Tok::LParen)) {
      ExprPtr e = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (cur_.kind == Tok::Number || cur_.kind == Tok::Minus) {
      int line = cur_.line;
      ExprPtr e = Expr::make_real(parse_number_lit());
      const_cast<Expr*>(e.get())->line = line;
      return e;
    }
    if (cur_.kind == Tok::Ident) {
      Token name = advance();
      CmpOp op;
      bool is_cmp = true;
      switch (cur_.kind) {
        case Tok::Lt: op = CmpOp::Lt; break;
        case Tok::Gt: op = CmpOp::Gt; break;
        case Tok::Le: op = CmpOp::Le; break;
        case Tok::Ge: op = CmpOp::Ge; break;
        default: is_cmp = false; op = CmpOp::Lt; break;
      }
      if (!is_cmp) {
        ExprPtr e = Expr::make_var(name.text);
        const_cast<Expr*>(e.get())->line = name.line;
        return e;
      }
      advance();
      ExprPtr e = Expr::make_cmp(name.text, op, parse_number_lit());
      const_cast<Expr*>(e.get())->line = name.line;
      return e;
    }
    fail("expression");
  }

  Lexer lex_;
  Token cur_;
  Token next_;
};

// --------------------------------------------------------------------------
// Validation: declaration uniqueness, reference resolution, kind defaulting,
// type checks, and 0/1 literal normalization in boolean contexts.
// --------------------------------------------------------------------------

enum class ValType { Bool, Real };

class Validator {
 public:
  explicit Validator(Program p) : prog_(std::move(p)) {}

  Program run() {
    check_unique_decls();
    collect_if_assigned();
    resolve_kinds();
    std::vector<StmtPtr> body;
    body.reserve(prog_.stmts.size());
    for (const auto& s : prog_.stmts) body.push_back(check_stmt(*s));
    prog_.stmts = std::move(body);
    return std::move(prog_);
  }

 private:
  [[noreturn]] void type_fail(int line, const std::string& msg) {
    throw ParseError(line, 1, "well-typed program", msg);
  }

  void check_unique_decls() {
    std::unordered_set<std::string> seen;
    for (const auto& d : prog_.decls) {
      if (!seen.insert(d.name).second) {
        throw ParseError(d.line, 1, "unique declaration",
                         "duplicate declaration of '" + d.name + "'");
      }
      if (d.dtype == DType::Bool && d.init) {
        if ((d.init->value != 0.0 && d.init->value != 1.0) ||
            d.init->text.find('.') != std::string::npos) {
          type_fail(d.line, "BOOL initializer of '" + d.name +
                                "' must be 0 or 1");
        }
      }
    }
  }

  const VarDecl& decl_of(const std::string& name, int line) {
    const VarDecl* d = prog_.find_decl(name);
    if (!d) {
      throw ParseError(line, 1, "declared identifier",
                       "undeclared identifier '" + name + "'");
    }
    return *d;
  }

  void collect_if_assigned_walk(const std::vector<StmtPtr>& body,
                                bool inside_if) {
    for (const auto& s : body) {
      switch (s->kind) {
        case Stmt::Kind::If:
          collect_if_assigned_walk(s->then_body, true);
          collect_if_assigned_walk(s->else_body, true);
          break;
        case Stmt::Kind::Assign:
          if (inside_if) if_assigned_.insert(s->target);
          break;
        case Stmt::Kind::PidCall:
          break;
      }
    }
  }

  void collect_if_assigned() { collect_if_assigned_walk(prog_.stmts, false); }

  void resolve_kinds() {
    for (auto& d : prog_.decls) {
      if (d.kind_explicit || d.dtype == DType::Pid) continue;
      if (d.dtype == DType::Bool && if_assigned_.count(d.name)) {
        d.kind = VarKind::Actuator;
      } else {
        d.kind = VarKind::Physical;
      }
    }
  }

  ValType value_type(const VarDecl& d, int line) {
    switch (d.dtype) {
      case DType::Bool: return ValType::Bool;
      case DType::Real: return ValType::Real;
      case DType::Pid:
        type_fail(line, "PID instance '" + d.name + "' used as a value");
    }
    return ValType::Real;
  }

  // Returns the (possibly rebuilt) expression and its type.
  std::pair<ExprPtr, ValType> check_expr(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Cmp: {
        const VarDecl& d = decl_of(e->var, e->line);
        if (value_type(d, e->line) != ValType::Real) {
          type_fail(e->line, "comparison on non-REAL variable '" + e->var +
                                 "'");
        }
        return {e, ValType::Bool};
      }
      case Expr::Kind::BoolConst:
        return {e, ValType::Bool};
      case Expr::Kind::RealConst:
        return {e, ValType::Real};
      case Expr::Kind::VarRef: {
        const VarDecl& d = decl_of(e->name, e->line);
        return {e, value_type(d, e->line)};
      }
      case Expr::Kind::And:
      case Expr::Kind::Or: {
        auto [l, lt] = check_bool_operand(e->lhs);
        auto [r, rt] = check_bool_operand(e->rhs);
        (void)lt;
        (void)rt;
        if (l == e->lhs && r == e->rhs) return {e, ValType::Bool};
        ExprPtr rebuilt = e->kind == Expr::Kind::And
                              ? Expr::make_and(std::move(l), std::move(r))
                              : Expr::make_or(std::move(l), std::move(r));
        const_cast<Expr*>(rebuilt.get())->line = e->line;
        return {rebuilt, ValType::Bool};
      }
      case Expr::Kind::Not: {
        auto [c, ct] = check_bool_operand(e->lhs);
        (void)ct;
        if (c == e->lhs) return {e, ValType::Bool};
        ExprPtr rebuilt = Expr::make_not(std::move(c));
        const_cast<Expr*>(rebuilt.get())->line = e->line;
        return {rebuilt, ValType::Bool};
      }
    }
    type_fail(e->line, "unsupported expression");
  }

  // A boolean context: 0/1 numeric literals normalize to BoolConst.
  std::pair<ExprPtr, ValType> check_bool_operand(const ExprPtr& e) {
    if (ExprPtr b = as_bool_const(e)) return {b, ValType::Bool};
    auto [checked, t] = check_expr(e);
    if (t != ValType::Bool) {
      type_fail(e->line, "boolean operator applied to non-boolean operand");
    }
    return {checked, t};
  }

  ExprPtr as_bool_const(const ExprPtr& e) {
    if (e->kind != Expr::Kind::RealConst) return nullptr;
    if (e->rval.text.find('.') != std::string::npos) return nullptr;
    if (e->rval.value != 0.0 && e->rval.value != 1.0) return nullptr;
    ExprPtr b = Expr::make_bool(static_cast<int>(e->rval.value));
    const_cast<Expr*>(b.get())->line = e->line;
    return b;
  }

  StmtPtr check_stmt(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::If: {
        ExprPtr cond;
        if (ExprPtr b = as_bool_const(s.cond)) {
          cond = std::move(b);
        } else {
          auto [c, t] = check_expr(s.cond);
          if (t != ValType::Bool) {
            type_fail(s.line, "IF condition is not boolean");
          }
          cond = std::move(c);
        }
        std::vector<StmtPtr> then_body, else_body;
        for (const auto& c : s.then_body) then_body.push_back(check_stmt(*c));
        for (const auto& c : s.else_body) else_body.push_back(check_stmt(*c));
        return Stmt::make_if(std::move(cond), std::move(then_body),
                             std::move(else_body), s.has_else, s.line);
      }
      case Stmt::Kind::Assign: {
        const VarDecl& d = decl_of(s.target, s.line);
        ValType target_t = value_type(d, s.line);
        ExprPtr value;
        if (target_t == ValType::Bool) {
          auto [v, t] = check_bool_operand(s.value);
          (void)t;
          value = std::move(v);
        } else {
          auto [v, t] = check_expr(s.value);
          if (t != ValType::Real) {
            type_fail(s.line, "assignment of boolean value to REAL '" +
                                  s.target + "'");
          }
          value = std::move(v);
        }
        return Stmt::make_assign(s.target, std::move(value), s.line);
      }
      case Stmt::Kind::PidCall: {
        const VarDecl& d = decl_of(s.instance, s.line);
        if (d.dtype != DType::Pid) {
          type_fail(s.line, "'" + s.instance + "' is not a PID instance");
        }
        for (const auto& a : s.args) {
          if (a.is_action) continue;
          if (a.expr->kind == Expr::Kind::VarRef) {
            decl_of(a.expr->name, a.expr->line);
          }
        }
        const VarDecl& out = decl_of(s.out_target, s.line);
        if (out.dtype != DType::Real) {
          type_fail(s.line, "PID OUT target '" + s.out_target +
                                "' must be REAL");
        }
        return std::make_shared<Stmt>(s);
      }
    }
    type_fail(s.line, "unsupported statement");
  }

  Program prog_;
  std::unordered_set<std::string> if_assigned_;
};

}  // namespace

Program parse_program(const SourceFile& source) {
  try {
    Parser parser(source.body);
    Program p = parser.parse();
    Validator v(std::move(p));
    return v.run();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(0, 0, "valid program", ex.what());
  }
}

Program parse_text(const std::string& text, FileRole role,
                   const std::string& path) {
  SourceFile f;
  f.path = path;
  f.body = text;
  f.role = role;
  return parse_program(f);
}

}  // namespace invflip
