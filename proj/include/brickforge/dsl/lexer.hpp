#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brickforge/error.hpp"

namespace brickforge::dsl {

enum class TokenKind { Keyword, Ident, Int, String, Punct };

struct Token {
    TokenKind kind;
    std::string lexeme;  // string tokens hold the decoded value
    int line = 1;
    int column = 1;
    std::size_t offset = 0;
};

// Comments (* ... *) nest and are skipped. `~` is a punct token; the parser
// combines it with an integer literal. Strings are double-quoted with
// \" \\ \n \t escapes.
std::vector<Token> tokenize(std::string_view source);

bool isKeyword(std::string_view word);

}  // namespace brickforge::dsl
