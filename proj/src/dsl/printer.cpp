#include "brickforge/dsl/printer.hpp"

namespace brickforge::dsl {

namespace {

// Grammar levels, loosest to tightest. A node printed into a context that
// demands a tighter level gets wrapped in parentheses.
enum Level : int {
    kExpr = 0,     // let / if live here
    kOrElse = 1,
    kAndAlso = 2,
    kCompare = 3,
    kAdd = 4,
    kMul = 5,
    kApply = 6,
    kAtom = 7,
};

int levelOf(const Expr& e) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, LetExpr> || std::is_same_v<T, IfExpr>) {
                return kExpr;
            } else if constexpr (std::is_same_v<T, OrElseExpr>) {
                return kOrElse;
            } else if constexpr (std::is_same_v<T, AndAlsoExpr>) {
                return kAndAlso;
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                if (isComparison(node.op)) return kCompare;
                return (node.op == BinOp::Add || node.op == BinOp::Sub) ? kAdd : kMul;
            } else if constexpr (std::is_same_v<T, ApplyExpr>) {
                return kApply;
            } else {
                return kAtom;
            }
        },
        e.node);
}

std::string escapeString(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string intLexeme(std::int64_t value) {
    if (value < 0) return "~" + std::to_string(-value);
    return std::to_string(value);
}

std::string render(const Expr& e);

std::string renderAt(const Expr& e, int context) {
    if (levelOf(e) >= context) return render(e);
    return "(" + render(e) + ")";
}

std::string render(const Expr& e) {
    return std::visit(
        [&](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                return intLexeme(node.value);
            } else if constexpr (std::is_same_v<T, BoolLit>) {
                return node.value ? "true" : "false";
            } else if constexpr (std::is_same_v<T, StringLit>) {
                return escapeString(node.value);
            } else if constexpr (std::is_same_v<T, Var>) {
                return node.name;
            } else if constexpr (std::is_same_v<T, TupleExpr>) {
                std::string out = "(";
                for (std::size_t i = 0; i < node.items.size(); ++i) {
                    if (i > 0) out += ", ";
                    out += render(*node.items[i]);
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, SeqExpr>) {
                std::string out = "(";
                for (std::size_t i = 0; i < node.items.size(); ++i) {
                    if (i > 0) out += "; ";
                    out += render(*node.items[i]);
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, ApplyExpr>) {
                return renderAt(*node.fn, kApply) + " " + renderAt(*node.arg, kAtom);
            } else if constexpr (std::is_same_v<T, LetExpr>) {
                std::string out = "let";
                for (const LetBinding& b : node.bindings) {
                    out += " val " + b.name + " = " + render(*b.value);
                }
                out += " in " + render(*node.body) + " end";
                return out;
            } else if constexpr (std::is_same_v<T, IfExpr>) {
                return "if " + render(*node.cond) + " then " + render(*node.thenBranch) +
                       " else " + render(*node.elseBranch);
            } else if constexpr (std::is_same_v<T, OrElseExpr>) {
                return renderAt(*node.lhs, kOrElse) + " orelse " + renderAt(*node.rhs, kAndAlso);
            } else if constexpr (std::is_same_v<T, AndAlsoExpr>) {
                return renderAt(*node.lhs, kAndAlso) + " andalso " +
                       renderAt(*node.rhs, kCompare);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                if (isComparison(node.op)) {
                    return renderAt(*node.lhs, kAdd) + " " + binOpSymbol(node.op) + " " +
                           renderAt(*node.rhs, kAdd);
                }
                if (node.op == BinOp::Add || node.op == BinOp::Sub) {
                    return renderAt(*node.lhs, kAdd) + " " + binOpSymbol(node.op) + " " +
                           renderAt(*node.rhs, kMul);
                }
                return renderAt(*node.lhs, kMul) + " " + binOpSymbol(node.op) + " " +
                       renderAt(*node.rhs, kApply);
            }
        },
        e.node);
}

std::string renderParam(const Param& param) {
    if (!param.isTuple) return param.names.front();
    std::string out = "(";
    for (std::size_t i = 0; i < param.names.size(); ++i) {
        if (i > 0) out += ", ";
        out += param.names[i];
    }
    return out + ")";
}

}  // namespace

std::string printExpr(const Expr& expr) { return render(expr); }

std::string printProgram(const Program& program) {
    std::string out;
    for (const Decl& decl : program) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, OpenDecl>) {
                    out += "open " + node.level + ";\n";
                } else if constexpr (std::is_same_v<T, FunDecl>) {
                    out += "fun " + node.name;
                    for (const Param& p : node.params) out += " " + renderParam(p);
                    out += " = " + render(*node.body) + ";\n";
                } else if constexpr (std::is_same_v<T, ValDecl>) {
                    out += "val " + node.name + " = " + render(*node.value) + ";\n";
                } else if constexpr (std::is_same_v<T, TopExpr>) {
                    out += render(*node.expr) + ";\n";
                }
            },
            decl.node);
    }
    return out;
}

}  // namespace brickforge::dsl
