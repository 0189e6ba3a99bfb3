#include "invflip/ast.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace invflip {

std::string canonical_real_text(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, res.ptr);
  if (s.find('e') == std::string::npos && s.find('E') == std::string::npos) {
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
  }
  // The grammar has no exponent form; fall back to plain decimal and trim.
  std::snprintf(buf, sizeof(buf), "%.17f", value);
  s = buf;
  size_t last = s.find_last_not_of('0');
  if (last != std::string::npos && s[last] == '.') ++last;
  s.erase(last + 1);
  return s;
}

RealLit RealLit::from_text(std::string text) {
  RealLit lit;
  lit.value = std::strtod(text.c_str(), nullptr);
  lit.text = std::move(text);
  return lit;
}

RealLit RealLit::from_value(double value) {
  RealLit lit;
  lit.value = value;
  lit.text = canonical_real_text(value);
  return lit;
}

const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Gt: return ">";
    case CmpOp::Le: return "<=";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

CmpOp cmp_op_negated(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Ge: return CmpOp::Lt;
  }
  return op;
}

const char* dtype_name(DType t) {
  switch (t) {
    case DType::Bool: return "BOOL";
    case DType::Real: return "REAL";
    case DType::Pid: return "PID";
  }
  return "?";
}

const char* var_kind_name(VarKind k) {
  switch (k) {
    case VarKind::Physical: return "physical";
    case VarKind::Environmental: return "environmental";
    case VarKind::Operator: return "operator";
    case VarKind::Actuator: return "actuator";
  }
  return "?";
}

const char* pid_action_name(PidAction a) {
  return a == PidAction::Direct ? "DIRECT" : "REVERSE";
}

ExprPtr Expr::make_cmp(std::string var, CmpOp op, RealLit threshold) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Cmp;
  e->var = std::move(var);
  e->op = op;
  e->threshold = std::move(threshold);
  return e;
}

ExprPtr Expr::make_bool(int value) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::BoolConst;
  e->bval = value ? 1 : 0;
  return e;
}

ExprPtr Expr::make_real(RealLit lit) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::RealConst;
  e->rval = std::move(lit);
  return e;
}

ExprPtr Expr::make_var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::VarRef;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::make_and(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::And;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::make_or(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Or;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::make_not(ExprPtr child) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Not;
  e->lhs = std::move(child);
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Cmp:
      return a.var == b.var && a.op == b.op &&
             a.threshold.value == b.threshold.value;
    case Expr::Kind::BoolConst:
      return a.bval == b.bval;
    case Expr::Kind::RealConst:
      return a.rval.value == b.rval.value;
    case Expr::Kind::VarRef:
      return a.name == b.name;
    case Expr::Kind::And:
    case Expr::Kind::Or:
      return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
    case Expr::Kind::Not:
      return expr_equal(a.lhs, b.lhs);
  }
  return false;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_equal(*a, *b);
}

StmtPtr Stmt::make_if(ExprPtr cond, std::vector<StmtPtr> then_body,
                      std::vector<StmtPtr> else_body, bool has_else,
                      int line) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::If;
  s->cond = std::move(cond);
  s->then_body = std::move(then_body);
  s->else_body = std::move(else_body);
  s->has_else = has_else;
  s->line = line;
  return s;
}

StmtPtr Stmt::make_assign(std::string target, ExprPtr value, int line) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::Assign;
  s->target = std::move(target);
  s->value = std::move(value);
  s->line = line;
  return s;
}

StmtPtr Stmt::make_pid_call(std::string instance, std::vector<PidArg> args,
                            std::string out_target, int line) {
  auto s = std::make_shared<Stmt>();
  s->kind = Kind::PidCall;
  s->instance = std::move(instance);
  s->args = std::move(args);
  s->out_target = std::move(out_target);
  s->line = line;
  return s;
}

static bool pid_arg_equal(const PidArg& a, const PidArg& b) {
  if (a.name != b.name || a.is_action != b.is_action) return false;
  if (a.is_action) return a.action == b.action;
  return expr_equal(a.expr, b.expr);
}

static bool body_equal(const std::vector<StmtPtr>& a,
                       const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!stmt_equal(*a[i], *b[i])) return false;
  }
  return true;
}

bool stmt_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Stmt::Kind::If:
      return expr_equal(a.cond, b.cond) && a.has_else == b.has_else &&
             body_equal(a.then_body, b.then_body) &&
             body_equal(a.else_body, b.else_body);
    case Stmt::Kind::Assign:
      return a.target == b.target && expr_equal(a.value, b.value);
    case Stmt::Kind::PidCall: {
      if (a.instance != b.instance || a.out_target != b.out_target) {
        return false;
      }
      if (a.args.size() != b.args.size()) return false;
      for (size_t i = 0; i < a.args.size(); ++i) {
        if (!pid_arg_equal(a.args[i], b.args[i])) return false;
      }
      return true;
    }
  }
  return false;
}

const VarDecl* Program::find_decl(const std::string& decl_name) const {
  for (const auto& d : decls) {
    if (d.name == decl_name) return &d;
  }
  return nullptr;
}

static bool decl_equal(const VarDecl& a, const VarDecl& b) {
  if (a.name != b.name || a.dtype != b.dtype) return false;
  if (a.dtype != DType::Pid && a.kind != b.kind) return false;
  if (a.init.has_value() != b.init.has_value()) return false;
  if (a.init && a.init->value != b.init->value) return false;
  return true;
}

bool program_equal(const Program& a, const Program& b) {
  if (a.name != b.name) return false;
  if (a.decls.size() != b.decls.size()) return false;
  for (size_t i = 0; i < a.decls.size(); ++i) {
    if (!decl_equal(a.decls[i], b.decls[i])) return false;
  }
  return body_equal(a.stmts, b.stmts);
}

}  // namespace invflip
