#pragma once

#include "invflip/ast.hpp"
#include "invflip/errors.hpp"

namespace invflip {

// Parses and validates one ST program. Throws ParseError on malformed
// syntax, duplicate declarations, undeclared identifiers, or type
// mismatches; never aborts on any input.
Program parse_program(const SourceFile& source);

// Convenience for tests and synthesized text.
Program parse_text(const std::string& text,
                   FileRole role = FileRole::Safety,
                   const std::string& path = "<memory>");

}  // namespace invflip
