#include "brickforge/dsl/parser.hpp"

#include <charconv>

namespace brickforge::dsl {

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    Program parseProgram() {
        Program program;
        while (!done()) {
            program.push_back(parseDecl());
        }
        return program;
    }

private:
    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) {
            throw Error(ErrorKind::Parse, "unexpected end of input", endPos());
        }
        return tokens_[pos_];
    }

    SourcePos endPos() const {
        if (tokens_.empty()) return {1, 1};
        const Token& last = tokens_.back();
        return {last.line, last.column + static_cast<int>(last.lexeme.size())};
    }

    SourcePos posOf(const Token& t) const { return {t.line, t.column}; }

    const Token& advance() {
        const Token& t = peek();
        ++pos_;
        return t;
    }

    bool checkKeyword(std::string_view kw) const {
        return !done() && tokens_[pos_].kind == TokenKind::Keyword && tokens_[pos_].lexeme == kw;
    }

    bool checkPunct(std::string_view p) const {
        return !done() && tokens_[pos_].kind == TokenKind::Punct && tokens_[pos_].lexeme == p;
    }

    bool matchKeyword(std::string_view kw) {
        if (checkKeyword(kw)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool matchPunct(std::string_view p) {
        if (checkPunct(p)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        if (done()) {
            throw Error(ErrorKind::Parse, "expected " + expected + ", found end of input",
                        endPos());
        }
        const Token& t = tokens_[pos_];
        throw Error(ErrorKind::Parse, "expected " + expected + ", found '" + t.lexeme + "'",
                    posOf(t));
    }

    const Token& expectPunct(std::string_view p) {
        if (!checkPunct(p)) fail("'" + std::string(p) + "'");
        return advance();
    }

    const Token& expectKeyword(std::string_view kw) {
        if (!checkKeyword(kw)) fail("'" + std::string(kw) + "'");
        return advance();
    }

    std::string expectIdent() {
        if (done() || tokens_[pos_].kind != TokenKind::Ident) fail("identifier");
        return advance().lexeme;
    }

    std::int64_t parseIntLexeme(const Token& t) const {
        std::int64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), value);
        if (ec != std::errc{} || ptr != t.lexeme.data() + t.lexeme.size()) {
            throw Error(ErrorKind::Parse, "integer literal out of range", posOf(t));
        }
        return value;
    }

    Decl parseDecl() {
        const Token& first = peek();
        SourcePos at = posOf(first);
        if (matchKeyword("open")) {
            std::string level = expectIdent();
            expectPunct(";");
            return {OpenDecl{std::move(level)}, at};
        }
        if (matchKeyword("fun")) {
            std::string name = expectIdent();
            std::vector<Param> params;
            while (!done() && (tokens_[pos_].kind == TokenKind::Ident || checkPunct("("))) {
                params.push_back(parseParam());
            }
            if (params.empty()) fail("parameter");
            expectPunct("=");
            ExprPtr body = parseExpr();
            expectPunct(";");
            return {FunDecl{std::move(name), std::move(params), std::move(body)}, at};
        }
        if (matchKeyword("val")) {
            std::string name = expectIdent();
            expectPunct("=");
            ExprPtr value = parseExpr();
            expectPunct(";");
            return {ValDecl{std::move(name), std::move(value)}, at};
        }
        ExprPtr expr = parseExpr();
        expectPunct(";");
        return {TopExpr{std::move(expr)}, at};
    }

    Param parseParam() {
        if (matchPunct("(")) {
            Param param;
            param.names.push_back(expectIdent());
            while (matchPunct(",")) {
                param.names.push_back(expectIdent());
            }
            expectPunct(")");
            param.isTuple = param.names.size() > 1;  // (x) binds like a bare identifier
            return param;
        }
        return Param{{expectIdent()}, false};
    }

    ExprPtr parseExpr() {
        const Token& first = peek();
        SourcePos at = posOf(first);
        if (matchKeyword("let")) {
            std::vector<LetBinding> bindings;
            while (checkKeyword("val")) {
                const Token& valTok = advance();
                std::string name = expectIdent();
                expectPunct("=");
                ExprPtr value = parseExpr();
                bindings.push_back({std::move(name), std::move(value), posOf(valTok)});
            }
            expectKeyword("in");
            ExprPtr body = parseExpr();
            expectKeyword("end");
            return makeExpr<LetExpr>(at, std::move(bindings), std::move(body));
        }
        if (matchKeyword("if")) {
            ExprPtr cond = parseExpr();
            expectKeyword("then");
            ExprPtr thenBranch = parseExpr();
            expectKeyword("else");
            ExprPtr elseBranch = parseExpr();
            return makeExpr<IfExpr>(at, std::move(cond), std::move(thenBranch),
                                    std::move(elseBranch));
        }
        return parseOrElse();
    }

    ExprPtr parseOrElse() {
        ExprPtr lhs = parseAndAlso();
        while (checkKeyword("orelse")) {
            SourcePos at = posOf(advance());
            ExprPtr rhs = parseAndAlso();
            lhs = makeExpr<OrElseExpr>(at, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parseAndAlso() {
        ExprPtr lhs = parseCompare();
        while (checkKeyword("andalso")) {
            SourcePos at = posOf(advance());
            ExprPtr rhs = parseCompare();
            lhs = makeExpr<AndAlsoExpr>(at, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parseCompare() {
        ExprPtr lhs = parseAdd();
        static const std::pair<std::string_view, BinOp> ops[] = {
            {"=", BinOp::Eq}, {"<>", BinOp::Ne}, {"<=", BinOp::Le},
            {">=", BinOp::Ge}, {"<", BinOp::Lt}, {">", BinOp::Gt}};
        for (const auto& [sym, op] : ops) {
            if (checkPunct(sym)) {
                SourcePos at = posOf(advance());
                ExprPtr rhs = parseAdd();
                return makeExpr<BinaryExpr>(at, op, std::move(lhs), std::move(rhs));
            }
        }
        return lhs;
    }

    ExprPtr parseAdd() {
        ExprPtr lhs = parseMul();
        while (checkPunct("+") || checkPunct("-")) {
            const Token& opTok = advance();
            BinOp op = opTok.lexeme == "+" ? BinOp::Add : BinOp::Sub;
            ExprPtr rhs = parseMul();
            lhs = makeExpr<BinaryExpr>(posOf(opTok), op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parseMul() {
        ExprPtr lhs = parseApply();
        while (checkPunct("*") || checkKeyword("div") || checkKeyword("mod")) {
            const Token& opTok = advance();
            BinOp op = opTok.lexeme == "*" ? BinOp::Mul
                       : opTok.lexeme == "div" ? BinOp::Div
                                               : BinOp::Mod;
            ExprPtr rhs = parseApply();
            lhs = makeExpr<BinaryExpr>(posOf(opTok), op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    bool atAtom() const {
        if (done()) return false;
        const Token& t = tokens_[pos_];
        switch (t.kind) {
            case TokenKind::Int:
            case TokenKind::String:
            case TokenKind::Ident:
                return true;
            case TokenKind::Keyword:
                return t.lexeme == "true" || t.lexeme == "false";
            case TokenKind::Punct:
                return t.lexeme == "(" || t.lexeme == "~";
        }
        return false;
    }

    ExprPtr parseApply() {
        ExprPtr expr = parseAtom();
        while (atAtom()) {
            SourcePos at{expr->pos};
            ExprPtr arg = parseAtom();
            expr = makeExpr<ApplyExpr>(at, std::move(expr), std::move(arg));
        }
        return expr;
    }

    ExprPtr parseAtom() {
        if (done()) fail("expression");
        const Token& t = peek();
        SourcePos at = posOf(t);
        switch (t.kind) {
            case TokenKind::Int:
                advance();
                return makeExpr<IntLit>(at, parseIntLexeme(t));
            case TokenKind::String:
                advance();
                return makeExpr<StringLit>(at, t.lexeme);
            case TokenKind::Ident:
                advance();
                return makeExpr<Var>(at, t.lexeme);
            case TokenKind::Keyword:
                if (t.lexeme == "true" || t.lexeme == "false") {
                    advance();
                    return makeExpr<BoolLit>(at, t.lexeme == "true");
                }
                fail("expression");
            case TokenKind::Punct:
                if (t.lexeme == "~") {
                    advance();
                    if (done() || tokens_[pos_].kind != TokenKind::Int) fail("integer literal");
                    const Token& lit = advance();
                    return makeExpr<IntLit>(at, -parseIntLexeme(lit));
                }
                if (t.lexeme == "(") {
                    advance();
                    ExprPtr first = parseExpr();
                    if (checkPunct(",")) {
                        std::vector<ExprPtr> items;
                        items.push_back(std::move(first));
                        while (matchPunct(",")) {
                            items.push_back(parseExpr());
                        }
                        expectPunct(")");
                        return makeExpr<TupleExpr>(at, std::move(items));
                    }
                    if (checkPunct(";")) {
                        std::vector<ExprPtr> items;
                        items.push_back(std::move(first));
                        while (matchPunct(";")) {
                            items.push_back(parseExpr());
                        }
                        expectPunct(")");
                        return makeExpr<SeqExpr>(at, std::move(items));
                    }
                    expectPunct(")");
                    return first;  // plain grouping
                }
                fail("expression");
        }
        fail("expression");
    }
};

}  // namespace

Program parse(const std::vector<Token>& tokens) { return Parser(tokens).parseProgram(); }

Program parseSource(std::string_view source) { return parse(tokenize(source)); }

}  // namespace brickforge::dsl
