#include "brickforge/dsl/ast.hpp"

namespace brickforge::dsl {

const char* binOpSymbol(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "div";
        case BinOp::Mod: return "mod";
        case BinOp::Eq: return "=";
        case BinOp::Ne: return "<>";
        case BinOp::Lt: return "<";
        case BinOp::Gt: return ">";
        case BinOp::Le: return "<=";
        case BinOp::Ge: return ">=";
    }
    return "?";
}

bool isComparison(BinOp op) {
    switch (op) {
        case BinOp::Eq:
        case BinOp::Ne:
        case BinOp::Lt:
        case BinOp::Gt:
        case BinOp::Le:
        case BinOp::Ge:
            return true;
        default:
            return false;
    }
}

namespace {

bool equalList(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal(*a[i], *b[i])) return false;
    }
    return true;
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Var>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, TupleExpr>) {
                return equalList(lhs.items, rhs.items);
            } else if constexpr (std::is_same_v<T, ApplyExpr>) {
                return equal(*lhs.fn, *rhs.fn) && equal(*lhs.arg, *rhs.arg);
            } else if constexpr (std::is_same_v<T, SeqExpr>) {
                return equalList(lhs.items, rhs.items);
            } else if constexpr (std::is_same_v<T, LetExpr>) {
                if (lhs.bindings.size() != rhs.bindings.size()) return false;
                for (std::size_t i = 0; i < lhs.bindings.size(); ++i) {
                    if (lhs.bindings[i].name != rhs.bindings[i].name) return false;
                    if (!equal(*lhs.bindings[i].value, *rhs.bindings[i].value)) return false;
                }
                return equal(*lhs.body, *rhs.body);
            } else if constexpr (std::is_same_v<T, IfExpr>) {
                return equal(*lhs.cond, *rhs.cond) && equal(*lhs.thenBranch, *rhs.thenBranch) &&
                       equal(*lhs.elseBranch, *rhs.elseBranch);
            } else if constexpr (std::is_same_v<T, AndAlsoExpr>) {
                return equal(*lhs.lhs, *rhs.lhs) && equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, OrElseExpr>) {
                return equal(*lhs.lhs, *rhs.lhs) && equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                return lhs.op == rhs.op && equal(*lhs.lhs, *rhs.lhs) && equal(*lhs.rhs, *rhs.rhs);
            }
        },
        a.node);
}

bool equal(const Decl& a, const Decl& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const T& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, OpenDecl>) {
                return lhs.level == rhs.level;
            } else if constexpr (std::is_same_v<T, FunDecl>) {
                if (lhs.name != rhs.name || lhs.params.size() != rhs.params.size()) return false;
                for (std::size_t i = 0; i < lhs.params.size(); ++i) {
                    if (lhs.params[i].isTuple != rhs.params[i].isTuple ||
                        lhs.params[i].names != rhs.params[i].names) {
                        return false;
                    }
                }
                return equal(*lhs.body, *rhs.body);
            } else if constexpr (std::is_same_v<T, ValDecl>) {
                return lhs.name == rhs.name && equal(*lhs.value, *rhs.value);
            } else if constexpr (std::is_same_v<T, TopExpr>) {
                return equal(*lhs.expr, *rhs.expr);
            }
        },
        a.node);
}

bool equal(const Program& a, const Program& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace brickforge::dsl
