#pragma once

#include <string>

#include "brickforge/dsl/ast.hpp"

namespace brickforge::dsl {

// Renders an AST back to concrete syntax. parse(printProgram(p)) reproduces p
// exactly (structural equality).
std::string printExpr(const Expr& expr);
std::string printProgram(const Program& program);

}  // namespace brickforge::dsl
