#include "brickforge/dsl/interp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace brickforge::dsl {

namespace {

enum class BuiltinId {
    Build2D,
    Put2D,
    Line2D,
    Circle2D,
    Ring2D,
    SetMySpace2D,
    ClearMySpace2D,
    Build3D,
    Put3D,
    TraverseWithin,
    Show2D,
    Show3D,
    ShowMc,
    ShowStl,
    ShowLdraw,
    ShowBinvox,
};

struct BuiltinInfo {
    BuiltinId id;
    const char* name;
    int arity;
    int level;  // lowest Level_k that binds it
};

constexpr BuiltinInfo kBuiltinTable[] = {
    {BuiltinId::Build2D, "build2D", 1, 1},
    {BuiltinId::Put2D, "put2D", 3, 1},
    {BuiltinId::Show2D, "show2D", 1, 1},
    {BuiltinId::Line2D, "line2D", 3, 2},
    {BuiltinId::Circle2D, "circle2D", 3, 2},
    {BuiltinId::Ring2D, "ring2D", 3, 2},
    {BuiltinId::SetMySpace2D, "setMySpace2D", 2, 3},
    {BuiltinId::ClearMySpace2D, "clearMySpace2D", 0, 3},
    {BuiltinId::ShowMc, "showMC", 1, 3},
    {BuiltinId::ShowStl, "showSTL", 1, 3},
    {BuiltinId::ShowLdraw, "showLDraw", 1, 3},
    {BuiltinId::ShowBinvox, "showBinvox", 1, 3},
    {BuiltinId::Build3D, "build3D", 1, 4},
    {BuiltinId::Put3D, "put3D", 3, 4},
    {BuiltinId::Show3D, "show3D", 1, 4},
    {BuiltinId::TraverseWithin, "traverseWithin", 3, 5},
};

struct Value;
struct EnvNode;
using EnvPtr = std::shared_ptr<EnvNode>;

struct TupleV {
    std::vector<Value> items;
};
struct StringV {
    std::string value;
};
struct BrickV {
    std::string name;
};
struct EmptyV {};
struct UnitV {};
struct ClosureV {
    std::vector<Param> params;  // remaining parameters
    const Expr* body;
    EnvPtr env;
    std::string self;  // for recursive references
};
struct BuiltinV {
    BuiltinId id;
    int arity;
    std::vector<Value> args;  // collected so far
};

struct Value {
    std::variant<std::int64_t, bool, StringV, TupleV, BrickV, EmptyV, UnitV, ClosureV, BuiltinV>
        v;
};

struct EnvNode {
    std::unordered_map<std::string, Value> vars;
    EnvPtr parent;
};

const char* typeName(const Value& value) {
    return std::visit(
        [](const auto& v) -> const char* {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) return "int";
            else if constexpr (std::is_same_v<T, bool>) return "bool";
            else if constexpr (std::is_same_v<T, StringV>) return "string";
            else if constexpr (std::is_same_v<T, TupleV>) return "tuple";
            else if constexpr (std::is_same_v<T, BrickV>) return "brick";
            else if constexpr (std::is_same_v<T, EmptyV>) return "EMPTY";
            else if constexpr (std::is_same_v<T, UnitV>) return "unit";
            else return "function";
        },
        value.v);
}

[[noreturn]] void evalError(const std::string& message, SourcePos pos) {
    throw Error(ErrorKind::Eval, message, pos);
}

class Interpreter {
public:
    Interpreter(std::shared_ptr<const Palette> palette, const EvalOptions& options)
        : palette_(palette ? std::move(palette) : defaultPaletteShared()),
          options_(options),
          budget_(options.cellBudget) {
        env_ = std::make_shared<EnvNode>();
    }

    EvalResult run(const Program& program) {
        for (const Decl& decl : program) {
            runDecl(decl);
        }
        EvalResult result;
        result.space = std::move(space_);
        result.directives = std::move(directives_);
        return result;
    }

private:
    std::shared_ptr<const Palette> palette_;
    const EvalOptions& options_;
    EnvPtr env_;  // top-level chain; every declaration adds a node
    std::variant<std::monostate, Space2D, Space3D> space_;
    std::vector<ShowDirective> directives_;
    std::size_t budget_;
    std::size_t depth_ = 0;
    int openedLevel_ = 0;

    // ---- declarations ----

    void runDecl(const Decl& decl) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, OpenDecl>) {
                    openLevel(node.level, decl.pos);
                } else if constexpr (std::is_same_v<T, FunDecl>) {
                    Value closure{ClosureV{node.params, node.body.get(), env_, node.name}};
                    bind(node.name, std::move(closure));
                } else if constexpr (std::is_same_v<T, ValDecl>) {
                    bind(node.name, eval(*node.value, env_));
                } else if constexpr (std::is_same_v<T, TopExpr>) {
                    eval(*node.expr, env_);
                }
            },
            decl.node);
    }

    void bind(const std::string& name, Value value) {
        auto node = std::make_shared<EnvNode>();
        node->parent = env_;
        node->vars.emplace(name, std::move(value));
        env_ = node;
    }

    void openLevel(const std::string& level, SourcePos pos) {
        int k = 0;
        if (level.rfind("Level_", 0) == 0 && level.size() == 7 && level[6] >= '1' &&
            level[6] <= '5') {
            k = level[6] - '0';
        }
        if (k == 0) {
            evalError("unknown level '" + level + "' (expected Level_1 .. Level_5)", pos);
        }
        auto node = std::make_shared<EnvNode>();
        node->parent = env_;
        for (const BuiltinInfo& info : kBuiltinTable) {
            if (info.level <= k) {
                node->vars.emplace(info.name, Value{BuiltinV{info.id, info.arity, {}}});
            }
        }
        for (const BrickDef& def : palette_->bricks()) {
            node->vars.emplace(def.name, Value{BrickV{def.name}});
        }
        if (k >= 5) {
            node->vars.emplace("EMPTY", Value{EmptyV{}});
        }
        env_ = node;
        openedLevel_ = std::max(openedLevel_, k);
    }

    // ---- expressions ----

    Value eval(const Expr& expr, const EnvPtr& env) {
        return std::visit(
            [&](const auto& node) -> Value {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, IntLit>) {
                    return Value{node.value};
                } else if constexpr (std::is_same_v<T, BoolLit>) {
                    return Value{node.value};
                } else if constexpr (std::is_same_v<T, StringLit>) {
                    return Value{StringV{node.value}};
                } else if constexpr (std::is_same_v<T, Var>) {
                    return lookup(node.name, env, expr.pos);
                } else if constexpr (std::is_same_v<T, TupleExpr>) {
                    TupleV tuple;
                    tuple.items.reserve(node.items.size());
                    for (const ExprPtr& item : node.items) {
                        tuple.items.push_back(eval(*item, env));
                    }
                    return Value{std::move(tuple)};
                } else if constexpr (std::is_same_v<T, SeqExpr>) {
                    Value last{UnitV{}};
                    for (const ExprPtr& item : node.items) {
                        last = eval(*item, env);
                    }
                    return last;
                } else if constexpr (std::is_same_v<T, ApplyExpr>) {
                    Value fn = eval(*node.fn, env);
                    Value arg = eval(*node.arg, env);
                    return apply(std::move(fn), std::move(arg), expr.pos);
                } else if constexpr (std::is_same_v<T, LetExpr>) {
                    EnvPtr scope = env;
                    for (const LetBinding& binding : node.bindings) {
                        auto frame = std::make_shared<EnvNode>();
                        frame->parent = scope;
                        frame->vars.emplace(binding.name, eval(*binding.value, scope));
                        scope = frame;
                    }
                    return eval(*node.body, scope);
                } else if constexpr (std::is_same_v<T, IfExpr>) {
                    Value cond = eval(*node.cond, env);
                    if (!std::holds_alternative<bool>(cond.v)) {
                        evalError(std::string("if condition must be bool, got ") +
                                      typeName(cond),
                                  node.cond->pos);
                    }
                    return std::get<bool>(cond.v) ? eval(*node.thenBranch, env)
                                                  : eval(*node.elseBranch, env);
                } else if constexpr (std::is_same_v<T, AndAlsoExpr>) {
                    if (!asBool(eval(*node.lhs, env), node.lhs->pos, "andalso")) {
                        return Value{false};
                    }
                    return Value{asBool(eval(*node.rhs, env), node.rhs->pos, "andalso")};
                } else if constexpr (std::is_same_v<T, OrElseExpr>) {
                    if (asBool(eval(*node.lhs, env), node.lhs->pos, "orelse")) {
                        return Value{true};
                    }
                    return Value{asBool(eval(*node.rhs, env), node.rhs->pos, "orelse")};
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    return evalBinary(node, env, expr.pos);
                }
            },
            expr.node);
    }

    Value lookup(const std::string& name, const EnvPtr& env, SourcePos pos) {
        for (EnvNode* node = env.get(); node != nullptr; node = node->parent.get()) {
            auto it = node->vars.find(name);
            if (it != node->vars.end()) {
                // Nullary builtins act as commands and run on reference.
                if (const auto* builtin = std::get_if<BuiltinV>(&it->second.v)) {
                    if (builtin->arity == 0) {
                        return execBuiltin(builtin->id, {}, pos);
                    }
                }
                return it->second;
            }
        }
        evalError("unbound identifier '" + name + "'", pos);
    }

    bool asBool(Value value, SourcePos pos, const char* what) {
        if (!std::holds_alternative<bool>(value.v)) {
            evalError(std::string(what) + " operand must be bool, got " + typeName(value), pos);
        }
        return std::get<bool>(value.v);
    }

    Value evalBinary(const BinaryExpr& node, const EnvPtr& env, SourcePos pos) {
        Value lhs = eval(*node.lhs, env);
        Value rhs = eval(*node.rhs, env);
        if (node.op == BinOp::Eq || node.op == BinOp::Ne) {
            bool eq = valueEquals(lhs, rhs, pos);
            return Value{node.op == BinOp::Eq ? eq : !eq};
        }
        if (!std::holds_alternative<std::int64_t>(lhs.v) ||
            !std::holds_alternative<std::int64_t>(rhs.v)) {
            evalError(std::string("operator ") + binOpSymbol(node.op) + " needs ints, got " +
                          typeName(lhs) + " and " + typeName(rhs),
                      pos);
        }
        std::int64_t a = std::get<std::int64_t>(lhs.v);
        std::int64_t b = std::get<std::int64_t>(rhs.v);
        switch (node.op) {
            case BinOp::Lt: return Value{a < b};
            case BinOp::Gt: return Value{a > b};
            case BinOp::Le: return Value{a <= b};
            case BinOp::Ge: return Value{a >= b};
            case BinOp::Add: {
                std::int64_t r;
                if (__builtin_add_overflow(a, b, &r)) evalError("integer overflow", pos);
                return Value{r};
            }
            case BinOp::Sub: {
                std::int64_t r;
                if (__builtin_sub_overflow(a, b, &r)) evalError("integer overflow", pos);
                return Value{r};
            }
            case BinOp::Mul: {
                std::int64_t r;
                if (__builtin_mul_overflow(a, b, &r)) evalError("integer overflow", pos);
                return Value{r};
            }
            case BinOp::Div:
            case BinOp::Mod: {
                if (b == 0) evalError("division by zero", pos);
                // SML div/mod round toward negative infinity.
                std::int64_t q = a / b;
                std::int64_t r = a % b;
                if (r != 0 && (r < 0) != (b < 0)) {
                    --q;
                    r += b;
                }
                return Value{node.op == BinOp::Div ? q : r};
            }
            default: break;
        }
        evalError("unsupported operator", pos);
    }

    bool valueEquals(const Value& lhs, const Value& rhs, SourcePos pos) {
        if (std::holds_alternative<std::int64_t>(lhs.v) &&
            std::holds_alternative<std::int64_t>(rhs.v)) {
            return std::get<std::int64_t>(lhs.v) == std::get<std::int64_t>(rhs.v);
        }
        if (std::holds_alternative<bool>(lhs.v) && std::holds_alternative<bool>(rhs.v)) {
            return std::get<bool>(lhs.v) == std::get<bool>(rhs.v);
        }
        if (std::holds_alternative<StringV>(lhs.v) && std::holds_alternative<StringV>(rhs.v)) {
            return std::get<StringV>(lhs.v).value == std::get<StringV>(rhs.v).value;
        }
        if (std::holds_alternative<BrickV>(lhs.v) && std::holds_alternative<BrickV>(rhs.v)) {
            return std::get<BrickV>(lhs.v).name == std::get<BrickV>(rhs.v).name;
        }
        if ((std::holds_alternative<BrickV>(lhs.v) && std::holds_alternative<EmptyV>(rhs.v)) ||
            (std::holds_alternative<EmptyV>(lhs.v) && std::holds_alternative<BrickV>(rhs.v))) {
            return false;
        }
        if (std::holds_alternative<EmptyV>(lhs.v) && std::holds_alternative<EmptyV>(rhs.v)) {
            return true;
        }
        evalError(std::string("cannot compare ") + typeName(lhs) + " and " + typeName(rhs), pos);
    }

    Value apply(Value fn, Value arg, SourcePos pos) {
        if (auto* closure = std::get_if<ClosureV>(&fn.v)) {
            if (++depth_ > options_.recursionLimit) {
                --depth_;
                evalError("recursion limit exceeded (" +
                              std::to_string(options_.recursionLimit) + ")",
                          pos);
            }
            struct DepthGuard {
                std::size_t& d;
                ~DepthGuard() { --d; }
            } guard{depth_};

            auto frame = std::make_shared<EnvNode>();
            frame->parent = closure->env;
            if (!closure->self.empty()) {
                frame->vars.emplace(closure->self, fn);
            }
            bindParam(closure->params.front(), std::move(arg), *frame, pos);
            if (closure->params.size() == 1) {
                return eval(*closure->body, frame);
            }
            ClosureV rest{std::vector<Param>(closure->params.begin() + 1, closure->params.end()),
                          closure->body, frame, std::string()};
            return Value{std::move(rest)};
        }
        if (auto* builtin = std::get_if<BuiltinV>(&fn.v)) {
            BuiltinV next = *builtin;
            next.args.push_back(std::move(arg));
            if (static_cast<int>(next.args.size()) == next.arity) {
                return execBuiltin(next.id, std::move(next.args), pos);
            }
            return Value{std::move(next)};
        }
        evalError(std::string("value of type ") + typeName(fn) + " cannot be applied", pos);
    }

    void bindParam(const Param& param, Value arg, EnvNode& frame, SourcePos pos) {
        if (!param.isTuple) {
            frame.vars.emplace(param.names.front(), std::move(arg));
            return;
        }
        auto* tuple = std::get_if<TupleV>(&arg.v);
        if (!tuple || tuple->items.size() != param.names.size()) {
            evalError("expected a " + std::to_string(param.names.size()) + "-tuple argument, got " +
                          typeName(arg),
                      pos);
        }
        for (std::size_t i = 0; i < param.names.size(); ++i) {
            frame.vars.emplace(param.names[i], std::move(tuple->items[i]));
        }
    }

    // ---- builtin execution ----

    std::int64_t asInt(const Value& value, SourcePos pos, const char* what) {
        if (!std::holds_alternative<std::int64_t>(value.v)) {
            evalError(std::string(what) + " must be an int, got " + typeName(value), pos);
        }
        return std::get<std::int64_t>(value.v);
    }

    int asCoord(const Value& value, SourcePos pos, const char* what) {
        std::int64_t v = asInt(value, pos, what);
        if (v < -1000000000 || v > 1000000000) {
            evalError(std::string(what) + " is out of the coordinate range", pos);
        }
        return static_cast<int>(v);
    }

    std::vector<int> asIntTuple(const Value& value, std::size_t lo, std::size_t hi, SourcePos pos,
                                const char* what) {
        auto* tuple = std::get_if<TupleV>(&value.v);
        if (!tuple || tuple->items.size() < lo || tuple->items.size() > hi) {
            evalError(std::string(what) + " must be a tuple of " + std::to_string(lo) +
                          (hi > lo ? " or " + std::to_string(hi) : "") + " ints, got " +
                          typeName(value),
                      pos);
        }
        std::vector<int> out;
        out.reserve(tuple->items.size());
        for (const Value& item : tuple->items) {
            out.push_back(asCoord(item, pos, what));
        }
        return out;
    }

    std::string asBrickName(const Value& value, SourcePos pos) {
        if (auto* brick = std::get_if<BrickV>(&value.v)) {
            return brick->name;
        }
        if (std::holds_alternative<EmptyV>(value.v)) {
            evalError("EMPTY can only be returned from a brick function, not placed", pos);
        }
        evalError(std::string("expected a brick, got ") + typeName(value), pos);
    }

    std::string asStringValue(const Value& value, SourcePos pos, const char* what) {
        if (auto* s = std::get_if<StringV>(&value.v)) {
            return s->value;
        }
        evalError(std::string(what) + " must be a string, got " + typeName(value), pos);
    }

    Space2D& require2D(SourcePos pos, const char* what) {
        if (std::holds_alternative<std::monostate>(space_)) {
            evalError(std::string(what) + " before build2D", pos);
        }
        if (!std::holds_alternative<Space2D>(space_)) {
            evalError(std::string(what) + " needs a 2D space, but build3D was used", pos);
        }
        return std::get<Space2D>(space_);
    }

    Space3D& require3D(SourcePos pos, const char* what) {
        if (std::holds_alternative<std::monostate>(space_)) {
            evalError(std::string(what) + " before build3D", pos);
        }
        if (!std::holds_alternative<Space3D>(space_)) {
            evalError(std::string(what) + " needs a 3D space, but build2D was used", pos);
        }
        return std::get<Space3D>(space_);
    }

    void chargeBudget(std::int64_t cells, SourcePos pos) {
        if (cells < 0 || static_cast<std::size_t>(cells) > budget_) {
            evalError("placement exceeds the evaluation cell budget", pos);
        }
        budget_ -= static_cast<std::size_t>(cells);
    }

    // Cells a clipped box placement will visit; 2D takes h = 1.
    std::int64_t clippedVolume(std::int64_t x0, std::int64_t y0, std::int64_t z0, std::int64_t w,
                               std::int64_t h, std::int64_t d, std::int64_t boxW, std::int64_t boxH,
                               std::int64_t boxD) {
        std::int64_t x1 = std::min(x0 + w, boxW), y1 = std::min(y0 + h, boxH),
                     z1 = std::min(z0 + d, boxD);
        x0 = std::max<std::int64_t>(x0, 0);
        y0 = std::max<std::int64_t>(y0, 0);
        z0 = std::max<std::int64_t>(z0, 0);
        if (x1 <= x0 || y1 <= y0 || z1 <= z0) return 0;
        return (x1 - x0) * (y1 - y0) * (z1 - z0);
    }

    std::pair<std::int64_t, std::int64_t> writable2D(const Space2D& space) {
        if (space.region()) {
            return {space.region()->dims.width, space.region()->dims.depth};
        }
        return {space.dims().width, space.dims().depth};
    }

    void recordShow(ShowTarget target, const Value& arg, SourcePos pos, const char* what) {
        std::string name = asStringValue(arg, pos, "artifact name");
        if (std::holds_alternative<std::monostate>(space_)) {
            evalError(std::string(what) + " before build2D/build3D", pos);
        }
        if ((target == ShowTarget::Show2D && !std::holds_alternative<Space2D>(space_)) ||
            (target == ShowTarget::Show3D && !std::holds_alternative<Space3D>(space_))) {
            evalError(std::string(what) + " does not match the built space", pos);
        }
        directives_.push_back({target, std::move(name), pos});
    }

    Value execBuiltin(BuiltinId id, std::vector<Value> args, SourcePos pos) {
        try {
            return execBuiltinInner(id, std::move(args), pos);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Eval) throw;
            // Library errors (dimension, palette, range...) gain a position.
            throw Error(ErrorKind::Eval, e.message(), pos);
        }
    }

    Value execBuiltinInner(BuiltinId id, std::vector<Value> args, SourcePos pos) {
        switch (id) {
            case BuiltinId::Build2D: {
                auto dims = asIntTuple(args[0], 2, 2, pos, "build2D dimensions");
                if (std::holds_alternative<std::monostate>(space_) == false) {
                    evalError("the space is already built; only one build per program", pos);
                }
                if (dims[0] > options_.maxDimension || dims[1] > options_.maxDimension) {
                    evalError("build2D dimensions exceed the evaluator limit", pos);
                }
                space_ = Space2D({dims[0], dims[1]}, palette_);
                return Value{UnitV{}};
            }
            case BuiltinId::Build3D: {
                auto dims = asIntTuple(args[0], 3, 3, pos, "build3D dimensions");
                if (std::holds_alternative<std::monostate>(space_) == false) {
                    evalError("the space is already built; only one build per program", pos);
                }
                if (dims[0] > options_.maxDimension || dims[1] > options_.maxDimension ||
                    dims[2] > options_.maxDimension) {
                    evalError("build3D dimensions exceed the evaluator limit", pos);
                }
                space_ = Space3D({dims[0], dims[1], dims[2]}, palette_);
                return Value{UnitV{}};
            }
            case BuiltinId::Put2D: {
                auto size = asIntTuple(args[0], 2, 2, pos, "put2D size");
                std::string brick = asBrickName(args[1], pos);
                auto origin = asIntTuple(args[2], 2, 2, pos, "put2D coordinate");
                Space2D& space = require2D(pos, "put2D");
                auto [w, d] = writable2D(space);
                chargeBudget(clippedVolume(origin[0], origin[1], 0, size[0], size[1], 1, w, d, 1),
                             pos);
                space.put({size[0], size[1]}, brick, {origin[0], origin[1]});
                return Value{UnitV{}};
            }
            case BuiltinId::Put3D: {
                auto size = asIntTuple(args[0], 3, 3, pos, "put3D size");
                std::string brick = asBrickName(args[1], pos);
                auto origin = asIntTuple(args[2], 3, 3, pos, "put3D coordinate");
                Space3D& space = require3D(pos, "put3D");
                std::int64_t w = space.dims().width, h = space.dims().height,
                             d = space.dims().depth;
                if (space.region()) {
                    w = space.region()->dims.width;
                    h = space.region()->dims.height;
                    d = space.region()->dims.depth;
                }
                chargeBudget(clippedVolume(origin[0], origin[1], origin[2], size[0], size[2],
                                           size[1], w, h, d),
                             pos);
                space.put({size[0], size[1], size[2]}, brick, {origin[0], origin[1], origin[2]});
                return Value{UnitV{}};
            }
            case BuiltinId::Line2D: {
                std::string brick = asBrickName(args[0], pos);
                auto p0 = asIntTuple(args[1], 2, 2, pos, "line2D endpoint");
                auto p1 = asIntTuple(args[2], 2, 2, pos, "line2D endpoint");
                Space2D& space = require2D(pos, "line2D");
                std::int64_t dx = static_cast<std::int64_t>(p1[0]) - p0[0];
                std::int64_t dy = static_cast<std::int64_t>(p1[1]) - p0[1];
                std::int64_t steps = std::max(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
                chargeBudget(steps + 1, pos);
                space.line(brick, {p0[0], p0[1]}, {p1[0], p1[1]});
                return Value{UnitV{}};
            }
            case BuiltinId::Circle2D:
            case BuiltinId::Ring2D: {
                std::int64_t radius = asInt(args[0], pos, "radius");
                std::string brick = asBrickName(args[1], pos);
                auto center = asIntTuple(args[2], 2, 2, pos, "center");
                const char* what = id == BuiltinId::Circle2D ? "circle2D" : "ring2D";
                Space2D& space = require2D(pos, what);
                if (radius < 0) evalError("radius must be >= 0", pos);
                if (radius > 1000000000) evalError("radius is out of range", pos);
                auto [w, d] = writable2D(space);
                chargeBudget(clippedVolume(center[0] - radius, center[1] - radius, 0,
                                           2 * radius + 1, 2 * radius + 1, 1, w, d, 1),
                             pos);
                if (id == BuiltinId::Circle2D) {
                    space.circle(static_cast<int>(radius), brick, {center[0], center[1]});
                } else {
                    space.ring(static_cast<int>(radius), brick, {center[0], center[1]});
                }
                return Value{UnitV{}};
            }
            case BuiltinId::SetMySpace2D: {
                auto origin = asIntTuple(args[0], 2, 2, pos, "setMySpace2D origin");
                auto dims = asIntTuple(args[1], 2, 2, pos, "setMySpace2D dimensions");
                Space2D& space = require2D(pos, "setMySpace2D");
                space.setMySpace({{origin[0], origin[1]}, {dims[0], dims[1]}});
                return Value{UnitV{}};
            }
            case BuiltinId::ClearMySpace2D: {
                Space2D& space = require2D(pos, "clearMySpace2D");
                space.clearMySpace();
                return Value{UnitV{}};
            }
            case BuiltinId::TraverseWithin:
                return execTraverse(std::move(args), pos);
            case BuiltinId::Show2D:
                recordShow(ShowTarget::Show2D, args[0], pos, "show2D");
                return Value{UnitV{}};
            case BuiltinId::Show3D:
                recordShow(ShowTarget::Show3D, args[0], pos, "show3D");
                return Value{UnitV{}};
            case BuiltinId::ShowMc:
                recordShow(ShowTarget::Mc, args[0], pos, "showMC");
                return Value{UnitV{}};
            case BuiltinId::ShowStl:
                recordShow(ShowTarget::Stl, args[0], pos, "showSTL");
                return Value{UnitV{}};
            case BuiltinId::ShowLdraw:
                recordShow(ShowTarget::Ldraw, args[0], pos, "showLDraw");
                return Value{UnitV{}};
            case BuiltinId::ShowBinvox:
                recordShow(ShowTarget::Binvox, args[0], pos, "showBinvox");
                return Value{UnitV{}};
        }
        evalError("unknown builtin", pos);
    }

    Value execTraverse(std::vector<Value> args, SourcePos pos) {
        auto lo = asIntTuple(args[0], 2, 3, pos, "traverseWithin lower bound");
        auto hi = asIntTuple(args[1], 2, 3, pos, "traverseWithin upper bound");
        if (lo.size() != hi.size()) {
            evalError("traverseWithin bounds must have the same arity", pos);
        }
        Value fn = args[2];
        if (!std::holds_alternative<ClosureV>(fn.v) && !std::holds_alternative<BuiltinV>(fn.v)) {
            evalError(std::string("traverseWithin needs a brick function, got ") + typeName(fn),
                      pos);
        }

        auto callBrickFn = [&](const std::vector<int>& coords) -> std::optional<std::string> {
            TupleV tuple;
            for (int c : coords) tuple.items.push_back(Value{static_cast<std::int64_t>(c)});
            Value result;
            try {
                result = apply(fn, Value{std::move(tuple)}, pos);
            } catch (Error& e) {
                std::string at = " (at cell (";
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    if (i > 0) at += ",";
                    at += std::to_string(coords[i]);
                }
                at += "))";
                throw Error(ErrorKind::Eval, e.message() + at,
                            e.pos() ? *e.pos() : pos);
            }
            if (std::holds_alternative<EmptyV>(result.v)) return std::nullopt;
            if (auto* brick = std::get_if<BrickV>(&result.v)) return brick->name;
            evalError(std::string("brick function must return a brick or EMPTY, got ") +
                          typeName(result),
                      pos);
        };

        if (lo.size() == 2) {
            Space2D& space = require2D(pos, "traverseWithin");
            if (lo[0] > hi[0] || lo[1] > hi[1]) {
                evalError("traverseWithin bounds are inverted", pos);
            }
            auto [w, d] = writable2D(space);
            chargeBudget(clippedVolume(lo[0], lo[1], 0, static_cast<std::int64_t>(hi[0]) - lo[0] + 1,
                                       static_cast<std::int64_t>(hi[1]) - lo[1] + 1, 1, w, d, 1),
                         pos);
            space.traverseWithin({lo[0], lo[1]}, {hi[0], hi[1]},
                                 [&](Coord2 c) { return callBrickFn({c.x, c.y}); });
        } else {
            Space3D& space = require3D(pos, "traverseWithin");
            if (lo[0] > hi[0] || lo[1] > hi[1] || lo[2] > hi[2]) {
                evalError("traverseWithin bounds are inverted", pos);
            }
            std::int64_t w = space.dims().width, h = space.dims().height, d = space.dims().depth;
            if (space.region()) {
                w = space.region()->dims.width;
                h = space.region()->dims.height;
                d = space.region()->dims.depth;
            }
            chargeBudget(clippedVolume(lo[0], lo[1], lo[2],
                                       static_cast<std::int64_t>(hi[0]) - lo[0] + 1,
                                       static_cast<std::int64_t>(hi[1]) - lo[1] + 1,
                                       static_cast<std::int64_t>(hi[2]) - lo[2] + 1, w, h, d),
                         pos);
            space.traverseWithin({lo[0], lo[1], lo[2]}, {hi[0], hi[1], hi[2]},
                                 [&](Coord3 c) { return callBrickFn({c.x, c.y, c.z}); });
        }
        return Value{UnitV{}};
    }
};

}  // namespace

EvalResult evaluate(const Program& program, std::shared_ptr<const Palette> palette,
                    const EvalOptions& options) {
    Interpreter interp(std::move(palette), options);
    return interp.run(program);
}

}  // namespace brickforge::dsl
