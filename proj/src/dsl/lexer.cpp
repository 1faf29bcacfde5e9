#include "brickforge/dsl/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace brickforge::dsl {

namespace {

constexpr std::array<std::string_view, 15> kKeywords = {
    "open", "fun", "val", "let", "in", "end", "if", "then",
    "else", "andalso", "orelse", "div", "mod", "true", "false",
};

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }
    SourcePos here() const { return {line, column}; }
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identBody(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

void skipComment(Cursor& cur) {
    SourcePos open = cur.here();
    cur.advance();  // '('
    cur.advance();  // '*'
    int depth = 1;
    while (depth > 0) {
        if (cur.done()) {
            throw Error(ErrorKind::Lex, "unterminated comment", open);
        }
        if (cur.peek() == '(' && cur.peek(1) == '*') {
            cur.advance();
            cur.advance();
            ++depth;
        } else if (cur.peek() == '*' && cur.peek(1) == ')') {
            cur.advance();
            cur.advance();
            --depth;
        } else {
            cur.advance();
        }
    }
}

std::string scanString(Cursor& cur) {
    SourcePos open = cur.here();
    cur.advance();  // opening quote
    std::string value;
    while (true) {
        if (cur.done() || cur.peek() == '\n') {
            throw Error(ErrorKind::Lex, "unterminated string", open);
        }
        char c = cur.advance();
        if (c == '"') return value;
        if (c == '\\') {
            if (cur.done()) throw Error(ErrorKind::Lex, "unterminated string", open);
            char esc = cur.advance();
            switch (esc) {
                case '"': value += '"'; break;
                case '\\': value += '\\'; break;
                case 'n': value += '\n'; break;
                case 't': value += '\t'; break;
                default:
                    throw Error(ErrorKind::Lex, std::string("unknown escape '\\") + esc + "'",
                                open);
            }
        } else {
            value += c;
        }
    }
}

}  // namespace

bool isKeyword(std::string_view word) {
    for (std::string_view kw : kKeywords) {
        if (kw == word) return true;
    }
    return false;
}

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    Cursor cur{source};
    while (!cur.done()) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '(' && cur.peek(1) == '*') {
            skipComment(cur);
            continue;
        }
        SourcePos start = cur.here();
        std::size_t offset = cur.pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                digits += cur.advance();
            }
            long long value = 0;
            auto [ptr, ec] =
                std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                throw Error(ErrorKind::Lex, "integer literal out of range", start);
            }
            tokens.push_back({TokenKind::Int, digits, start.line, start.column, offset});
            continue;
        }
        if (identStart(c)) {
            std::string word;
            while (!cur.done() && identBody(cur.peek())) {
                word += cur.advance();
            }
            TokenKind kind = isKeyword(word) ? TokenKind::Keyword : TokenKind::Ident;
            tokens.push_back({kind, std::move(word), start.line, start.column, offset});
            continue;
        }
        if (c == '"') {
            std::string value = scanString(cur);
            tokens.push_back({TokenKind::String, std::move(value), start.line, start.column, offset});
            continue;
        }
        // punctuation, longest match first
        std::string punct;
        if ((c == '<' && (cur.peek(1) == '=' || cur.peek(1) == '>')) ||
            (c == '>' && cur.peek(1) == '=')) {
            punct += cur.advance();
            punct += cur.advance();
        } else if (c == '(' || c == ')' || c == ',' || c == ';' || c == '=' || c == '<' ||
                   c == '>' || c == '+' || c == '-' || c == '*' || c == '~') {
            punct += cur.advance();
        } else {
            throw Error(ErrorKind::Lex, std::string("illegal character '") + c + "'", start);
        }
        tokens.push_back({TokenKind::Punct, std::move(punct), start.line, start.column, offset});
    }
    return tokens;
}

}  // namespace brickforge::dsl
