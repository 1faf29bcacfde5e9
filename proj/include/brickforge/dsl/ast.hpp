#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "brickforge/error.hpp"

namespace brickforge::dsl {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Gt, Le, Ge };

const char* binOpSymbol(BinOp op);
bool isComparison(BinOp op);

// Negative integer literals fold SML's `~` into the value.
struct IntLit { std::int64_t value = 0; };
struct BoolLit { bool value = false; };
struct StringLit { std::string value; };
struct Var { std::string name; };
struct TupleExpr { std::vector<ExprPtr> items; };          // arity >= 2
struct ApplyExpr { ExprPtr fn; ExprPtr arg; };             // curried, left-assoc
struct SeqExpr { std::vector<ExprPtr> items; };            // arity >= 2
struct LetBinding { std::string name; ExprPtr value; SourcePos pos; };
struct LetExpr { std::vector<LetBinding> bindings; ExprPtr body; };
struct IfExpr { ExprPtr cond; ExprPtr thenBranch; ExprPtr elseBranch; };
struct AndAlsoExpr { ExprPtr lhs; ExprPtr rhs; };
struct OrElseExpr { ExprPtr lhs; ExprPtr rhs; };
struct BinaryExpr { BinOp op; ExprPtr lhs; ExprPtr rhs; };

struct Expr {
    std::variant<IntLit, BoolLit, StringLit, Var, TupleExpr, ApplyExpr, SeqExpr, LetExpr,
                 IfExpr, AndAlsoExpr, OrElseExpr, BinaryExpr>
        node;
    SourcePos pos;
};

// A `fun` parameter: a plain identifier or a tuple of identifiers.
struct Param {
    std::vector<std::string> names;
    bool isTuple = false;
};

struct OpenDecl { std::string level; };
struct FunDecl { std::string name; std::vector<Param> params; ExprPtr body; };
struct ValDecl { std::string name; ExprPtr value; };
struct TopExpr { ExprPtr expr; };

struct Decl {
    std::variant<OpenDecl, FunDecl, ValDecl, TopExpr> node;
    SourcePos pos;
};

using Program = std::vector<Decl>;

// Structural equality; source positions are ignored.
bool equal(const Expr& a, const Expr& b);
bool equal(const Decl& a, const Decl& b);
bool equal(const Program& a, const Program& b);

template <typename T, typename... Args>
ExprPtr makeExpr(SourcePos pos, Args&&... args) {
    return std::make_unique<Expr>(Expr{T{std::forward<Args>(args)...}, pos});
}

}  // namespace brickforge::dsl
