#pragma once

#include <nlohmann/json_fwd.hpp>

#include "invflip/ast.hpp"

namespace invflip {

nlohmann::json expr_to_json(const Expr& e);
nlohmann::json program_to_json(const Program& p);

}  // namespace invflip
