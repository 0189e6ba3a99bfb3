#include "invflip/emitter.hpp"

#include <sstream>

namespace invflip {

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    case Expr::Kind::Not: return 3;
    default: return 4;  // atoms
  }
}

void emit_expr_rec(const Expr& e, std::ostream& os) {
  switch (e.kind) {
    case Expr::Kind::Cmp:
      os << '(' << e.var << ' ' << cmp_op_text(e.op) << ' '
         << e.threshold.text << ')';
      return;
    case Expr::Kind::BoolConst:
      os << e.bval;
      return;
    case Expr::Kind::RealConst:
      os << e.rval.text;
      return;
    case Expr::Kind::VarRef:
      os << e.name;
      return;
    case Expr::Kind::Not: {
      os << "NOT ";
      bool parens = precedence(e.lhs->kind) < precedence(Expr::Kind::Not);
      if (parens) os << '(';
      emit_expr_rec(*e.lhs, os);
      if (parens) os << ')';
      return;
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      const char* op = e.kind == Expr::Kind::And ? " AND " : " OR ";
      int prec = precedence(e.kind);
      // Left child keeps same-precedence chains flat; a right child of the
      // same precedence is parenthesized to preserve the tree shape.
      bool lp = precedence(e.lhs->kind) < prec;
      bool rp = precedence(e.rhs->kind) <= prec;
      if (lp) os << '(';
      emit_expr_rec(*e.lhs, os);
      if (lp) os << ')';
      os << op;
      if (rp) os << '(';
      emit_expr_rec(*e.rhs, os);
      if (rp) os << ')';
      return;
    }
  }
}

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void emit_stmt(const Stmt& s, std::ostream& os, int depth) {
  switch (s.kind) {
    case Stmt::Kind::If: {
      indent(os, depth);
      os << "IF ";
      emit_expr_rec(*s.cond, os);
      os << " THEN\n";
      for (const auto& c : s.then_body) emit_stmt(*c, os, depth + 1);
      if (s.has_else) {
        indent(os, depth);
        os << "ELSE\n";
        for (const auto& c : s.else_body) emit_stmt(*c, os, depth + 1);
      }
      indent(os, depth);
      os << "END_IF;\n";
      return;
    }
    case Stmt::Kind::Assign: {
      indent(os, depth);
      os << s.target << " := ";
      emit_expr_rec(*s.value, os);
      os << ";\n";
      return;
    }
    case Stmt::Kind::PidCall: {
      indent(os, depth);
      os << s.instance << '(';
      bool first = true;
      for (const auto& a : s.args) {
        if (!first) os << ", ";
        first = false;
        os << a.name << " := ";
        if (a.is_action) {
          os << pid_action_name(a.action);
        } else {
          emit_expr_rec(*a.expr, os);
        }
      }
      if (!first) os << ", ";
      os << "OUT => " << s.out_target << ");\n";
      return;
    }
  }
}

void emit_decl(const VarDecl& d, std::ostream& os, int depth) {
  indent(os, depth);
  os << d.name << " : " << dtype_name(d.dtype);
  if (d.dtype == DType::Pid) {
    os << ";\n";
    return;
  }
  if (d.init) {
    os << " := ";
    if (d.dtype == DType::Bool) {
      os << static_cast<int>(d.init->value);
    } else {
      os << d.init->text;
    }
  }
  os << " {kind := " << var_kind_name(d.kind) << "};\n";
}

}  // namespace

std::string emit_expr(const Expr& e) {
  std::ostringstream os;
  emit_expr_rec(e, os);
  return os.str();
}

std::string emit_program(const Program& p) {
  std::ostringstream os;
  os << "PROGRAM " << p.name << "\n";
  if (!p.decls.empty()) {
    indent(os, 1);
    os << "VAR\n";
    for (const auto& d : p.decls) emit_decl(d, os, 2);
    indent(os, 1);
    os << "END_VAR\n";
  }
  for (const auto& s : p.stmts) emit_stmt(*s, os, 1);
  os << "END_PROGRAM\n";
  return os.str();
}

}  // namespace invflip
