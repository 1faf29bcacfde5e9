#pragma once

#include <string_view>
#include <vector>

#include "brickforge/dsl/ast.hpp"
#include "brickforge/dsl/lexer.hpp"

namespace brickforge::dsl {

// Recursive-descent parser. Application is left-associative and curried;
// top-level items are `;`-terminated.
Program parse(const std::vector<Token>& tokens);

// Convenience: tokenize then parse.
Program parseSource(std::string_view source);

}  // namespace brickforge::dsl
