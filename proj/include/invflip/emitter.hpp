#pragma once

#include <string>

#include "invflip/ast.hpp"

namespace invflip {

// Canonical text form: 2-space indents, one statement per line, comparison
// leaves parenthesized, kind pragma always spelled out. Deterministic:
// equal ASTs emit identical bytes, and parse(emit(p)) == p structurally.
std::string emit_program(const Program& p);

std::string emit_expr(const Expr& e);

}  // namespace invflip
