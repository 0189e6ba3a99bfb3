#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace invflip {

// ---------------------------------------------------------------------------
// Source files
// ---------------------------------------------------------------------------

enum class FileRole { Safety, Control };

struct SourceFile {
  std::string path;
  std::string body;  // UTF-8 program text
  FileRole role = FileRole::Safety;
};

// ---------------------------------------------------------------------------
// Literals
// ---------------------------------------------------------------------------

// A numeric literal keeps the spelling it was parsed with so emission is
// byte-stable; comparisons downstream use the double value.
struct RealLit {
  std::string text;
  double value = 0.0;

  static RealLit from_text(std::string text);
  // Canonical spelling for synthesized values: shortest round-trip decimal,
  // always with a fraction part, never exponent form.
  static RealLit from_value(double value);
};

std::string canonical_real_text(double value);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class CmpOp { Lt, Gt, Le, Ge };

const char* cmp_op_text(CmpOp op);
CmpOp cmp_op_negated(CmpOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Cmp, BoolConst, RealConst, VarRef, And, Or, Not };

  Kind kind;
  int line = 0;  // source position when parsed; not structural

  // Cmp: var op threshold
  std::string var;
  CmpOp op = CmpOp::Lt;
  RealLit threshold;

  // BoolConst (0/1)
  int bval = 0;

  // RealConst
  RealLit rval;

  // VarRef
  std::string name;

  // And/Or use lhs+rhs, Not uses lhs only.
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr make_cmp(std::string var, CmpOp op, RealLit threshold);
  static ExprPtr make_bool(int value);
  static ExprPtr make_real(RealLit lit);
  static ExprPtr make_var(std::string name);
  static ExprPtr make_and(ExprPtr l, ExprPtr r);
  static ExprPtr make_or(ExprPtr l, ExprPtr r);
  static ExprPtr make_not(ExprPtr e);
};

bool expr_equal(const Expr& a, const Expr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

enum class DType { Bool, Real, Pid };

enum class VarKind { Physical, Environmental, Operator, Actuator };

const char* dtype_name(DType t);
const char* var_kind_name(VarKind k);

struct VarDecl {
  std::string name;
  DType dtype = DType::Real;
  VarKind kind = VarKind::Physical;  // resolved; defaults applied at parse
  bool kind_explicit = false;        // pragma was present in the source
  std::optional<RealLit> init;       // BOOL inits hold 0/1 in .value
  std::optional<std::string> unit;   // from a trailing (* ... *) comment;
                                     // annotation only, not structural
  int line = 0;
};

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

enum class PidAction { Direct, Reverse };

const char* pid_action_name(PidAction a);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

// One named argument of a PID block call. ACTION takes an enum token,
// everything else an expression (identifier or literal).
struct PidArg {
  std::string name;
  bool is_action = false;
  ExprPtr expr;                           // when !is_action
  PidAction action = PidAction::Direct;   // when is_action
};

struct Stmt {
  enum class Kind { If, Assign, PidCall };

  Kind kind;
  int line = 0;

  // If
  ExprPtr cond;
  std::vector<StmtPtr> then_body;
  std::vector<StmtPtr> else_body;
  bool has_else = false;

  // Assign
  std::string target;
  ExprPtr value;

  // PidCall
  std::string instance;
  std::vector<PidArg> args;   // in source order
  std::string out_target;     // the single OUT => binding

  static StmtPtr make_if(ExprPtr cond, std::vector<StmtPtr> then_body,
                         std::vector<StmtPtr> else_body, bool has_else,
                         int line = 0);
  static StmtPtr make_assign(std::string target, ExprPtr value, int line = 0);
  static StmtPtr make_pid_call(std::string instance, std::vector<PidArg> args,
                               std::string out_target, int line = 0);
};

bool stmt_equal(const Stmt& a, const Stmt& b);

// ---------------------------------------------------------------------------
// Program
// ---------------------------------------------------------------------------

struct Program {
  std::string name;
  std::vector<VarDecl> decls;
  std::vector<StmtPtr> stmts;

  const VarDecl* find_decl(const std::string& name) const;
};

// Structural equality: literal values (not spellings) and resolved kinds;
// unit annotations are ignored, they do not survive emission.
bool program_equal(const Program& a, const Program& b);

}  // namespace invflip
