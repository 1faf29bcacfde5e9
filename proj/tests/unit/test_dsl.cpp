#include <doctest.h>

#include <random>

#include "brickforge/dsl/interp.hpp"
#include "brickforge/dsl/lexer.hpp"
#include "brickforge/dsl/parser.hpp"
#include "brickforge/dsl/printer.hpp"
#include "support/ast_gen.hpp"
#include "support/fixtures.hpp"

using namespace brickforge;
using namespace brickforge::dsl;

namespace {

EvalResult evalSource(const std::string& source) {
    return evaluate(parseSource(source));
}

Error captureError(const std::string& source) {
    try {
        evalSource(source);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an error");
    return Error(ErrorKind::Eval, "unreachable");
}

}  // namespace

TEST_CASE("tokenize basics") {
    SUBCASE("a put call makes 13 tokens ending in a semicolon") {
        auto tokens = tokenize("put2D (37,28) RED (0,0);");
        REQUIRE(tokens.size() == 13);
        CHECK(tokens[0].kind == TokenKind::Ident);
        CHECK(tokens[0].lexeme == "put2D");
        CHECK(tokens.back().kind == TokenKind::Punct);
        CHECK(tokens.back().lexeme == ";");
    }
    SUBCASE("comment-only input yields no tokens") {
        CHECK(tokenize("(* generated by Bricklayer Lite version 0.9 *)").empty());
    }
    SUBCASE("comments nest") {
        CHECK(tokenize("(* outer (* inner *) still out *) x").size() == 1);
    }
    SUBCASE("unterminated comment reports line 1") {
        try {
            tokenize("(* unterminated");
            FAIL("expected a lex error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Lex);
            REQUIRE(e.pos().has_value());
            CHECK(e.pos()->line == 1);
        }
    }
    SUBCASE("negative literals use ~") {
        auto tokens = tokenize("~5");
        REQUIRE(tokens.size() == 2);
        CHECK(tokens[0].lexeme == "~");
        CHECK(tokens[1].lexeme == "5");
    }
    SUBCASE("string escapes decode") {
        auto tokens = tokenize(R"("a\"b\n")");
        REQUIRE(tokens.size() == 1);
        CHECK(tokens[0].kind == TokenKind::String);
        CHECK(tokens[0].lexeme == "a\"b\n");
    }
    SUBCASE("unterminated string") {
        CHECK_THROWS_AS(tokenize("\"oops"), Error);
    }
    SUBCASE("illegal characters carry a position") {
        try {
            tokenize("x @");
            FAIL("expected a lex error");
        } catch (const Error& e) {
            REQUIRE(e.pos().has_value());
            CHECK(e.pos()->line == 1);
            CHECK(e.pos()->column == 3);
        }
    }
    SUBCASE("positions strictly increase") {
        auto tokens = tokenize("a b\n c d");
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            CHECK(tokens[i].offset > tokens[i - 1].offset);
        }
    }
    SUBCASE("integer overflow is a lex error") {
        CHECK_THROWS_AS(tokenize("99999999999999999999999"), Error);
    }
}

TEST_CASE("parse the flag program") {
    Program program = parseSource(testsupport::kFlagProgram);
    REQUIRE(program.size() == 5);
    CHECK(std::holds_alternative<OpenDecl>(program[0].node));
    CHECK(std::get<OpenDecl>(program[0].node).level == "Level_3");

    REQUIRE(std::holds_alternative<FunDecl>(program[1].node));
    const FunDecl& fun = std::get<FunDecl>(program[1].node);
    CHECK(fun.name == "flag");
    REQUIRE(fun.params.size() == 1);
    CHECK(fun.params[0].isTuple);
    CHECK(fun.params[0].names == std::vector<std::string>{"x", "z"});
    REQUIRE(std::holds_alternative<SeqExpr>(fun.body->node));
    const SeqExpr& body = std::get<SeqExpr>(fun.body->node);
    REQUIRE(body.items.size() == 3);
    for (const ExprPtr& item : body.items) {
        CHECK(std::holds_alternative<ApplyExpr>(item->node));
    }

    CHECK(std::holds_alternative<TopExpr>(program[2].node));
    CHECK(std::holds_alternative<TopExpr>(program[3].node));
    CHECK(std::holds_alternative<TopExpr>(program[4].node));
}

TEST_CASE("parse shapes") {
    SUBCASE("identity function") {
        Program program = parseSource("fun f x = x;");
        REQUIRE(program.size() == 1);
        const FunDecl& fun = std::get<FunDecl>(program[0].node);
        CHECK(fun.params.size() == 1);
        CHECK(!fun.params[0].isTuple);
        CHECK(std::holds_alternative<Var>(fun.body->node));
    }
    SUBCASE("application is left-associative") {
        Program program = parseSource("f a b;");
        const TopExpr& top = std::get<TopExpr>(program[0].node);
        const ApplyExpr& outer = std::get<ApplyExpr>(top.expr->node);
        CHECK(std::holds_alternative<ApplyExpr>(outer.fn->node));
        CHECK(std::holds_alternative<Var>(outer.arg->node));
    }
    SUBCASE("put2D parses as curried application") {
        Program program = parseSource("put2D (37,28) RED (0,0);");
        const TopExpr& top = std::get<TopExpr>(program[0].node);
        const ApplyExpr& outer = std::get<ApplyExpr>(top.expr->node);
        const ApplyExpr& mid = std::get<ApplyExpr>(outer.fn->node);
        const ApplyExpr& inner = std::get<ApplyExpr>(mid.fn->node);
        CHECK(std::get<Var>(inner.fn->node).name == "put2D");
        CHECK(std::holds_alternative<TupleExpr>(inner.arg->node));
        CHECK(std::get<Var>(mid.arg->node).name == "RED");
        CHECK(std::holds_alternative<TupleExpr>(outer.arg->node));
    }
    SUBCASE("precedence: application > mul > add > compare > andalso > orelse") {
        Program program = parseSource("val r = 1 + 2 * f 3 < 4 andalso true orelse false;");
        const ValDecl& val = std::get<ValDecl>(program[0].node);
        const OrElseExpr& orelse = std::get<OrElseExpr>(val.value->node);
        const AndAlsoExpr& andalso = std::get<AndAlsoExpr>(orelse.lhs->node);
        const BinaryExpr& cmp = std::get<BinaryExpr>(andalso.lhs->node);
        CHECK(cmp.op == BinOp::Lt);
        const BinaryExpr& add = std::get<BinaryExpr>(cmp.lhs->node);
        CHECK(add.op == BinOp::Add);
        const BinaryExpr& mul = std::get<BinaryExpr>(add.rhs->node);
        CHECK(mul.op == BinOp::Mul);
        CHECK(std::holds_alternative<ApplyExpr>(mul.rhs->node));
    }
    SUBCASE("let with several bindings") {
        Program program = parseSource("val r = let val a = 1 val b = a + 1 in a * b end;");
        const ValDecl& val = std::get<ValDecl>(program[0].node);
        const LetExpr& let = std::get<LetExpr>(val.value->node);
        CHECK(let.bindings.size() == 2);
    }
    SUBCASE("negative literal atom") {
        Program program = parseSource("val a = ~5;");
        const ValDecl& val = std::get<ValDecl>(program[0].node);
        CHECK(std::get<IntLit>(val.value->node).value == -5);
    }
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("broken tuple") {
        try {
            parseSource("put2D (1,;");
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
            REQUIRE(e.pos().has_value());
            CHECK(e.pos()->line == 1);
            CHECK(e.pos()->column == 10);  // the semicolon
        }
    }
    SUBCASE("missing semicolon") {
        CHECK_THROWS_AS(parseSource("open Level_1"), Error);
    }
    SUBCASE("fun without parameters") {
        CHECK_THROWS_AS(parseSource("fun f = 1;"), Error);
    }
    SUBCASE("expected-token message names the found token") {
        try {
            parseSource("open 5;");
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("identifier") != std::string::npos);
        }
    }
}

TEST_CASE("printer round trip on hand-built sources") {
    const char* sources[] = {
        testsupport::kFlagProgram,
        "fun g (x,y) = if (x+y) mod 2 = 0 then BLACK else WHITE;",
        "val a = (1; 2; 3);",
        "val t = (1, (2, 3), \"s\");",
        "val n = ~42;",
        "val b = 1 < 2 andalso 3 <> 4 orelse false;",
        "val c = let val x = 1 in let val x = x + 1 in x end end;",
        "fun h a (b,c) = a * (b + c);",
    };
    for (const char* source : sources) {
        Program once = parseSource(source);
        Program twice = parseSource(printProgram(once));
        CHECK(equal(once, twice));
    }
}

TEST_CASE("printer round trip on random programs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        testsupport::AstGen gen(seed);
        Program program = gen.program();
        std::string printed = printProgram(program);
        CAPTURE(printed);
        Program reparsed = parseSource(printed);
        CHECK(equal(program, reparsed));
    }
}

TEST_CASE("the flag program evaluates to the documented artifact") {
    EvalResult result = evalSource(testsupport::kFlagProgram);
    REQUIRE(result.has2D());
    const Space2D& space = result.space2D();
    CHECK(space.dims() == Dim2{64, 64});
    CHECK(space.occupiedCount() == 1036);
    std::size_t red = 0, white = 0;
    for (const auto& [c, brick] : space.occupiedCells()) {
        (brick == "RED" ? red : white) += 1;
    }
    CHECK(red == 792);
    CHECK(white == 244);
    REQUIRE(result.directives.size() == 1);
    CHECK(result.directives[0].target == ShowTarget::Show2D);
    CHECK(result.directives[0].name == "flag");
}

TEST_CASE("show before build is rejected") {
    Error e = captureError("open Level_3; show2D \"x\";");
    CHECK(e.kind() == ErrorKind::Eval);
    REQUIRE(e.pos().has_value());
    CHECK(std::string(e.what()).find("before build") != std::string::npos);
}

TEST_CASE("level gating of traverseWithin") {
    const char* body =
        "build2D (8,8); "
        "fun g (x,y) = if (x+y) mod 2 = 0 then BLACK else WHITE; "
        "traverseWithin (0,0) (7,7) g; "
        "show2D \"cb\";";
    SUBCASE("Level_3 leaves it unbound") {
        Error e = captureError(std::string("open Level_3; ") + body);
        CHECK(e.kind() == ErrorKind::Eval);
        CHECK(std::string(e.what()).find("traverseWithin") != std::string::npos);
    }
    SUBCASE("Level_5 binds it") {
        EvalResult result = evalSource(std::string("open Level_5; ") + body);
        REQUIRE(result.has2D());
        CHECK(result.space2D().occupiedCount() == 64);
        std::size_t black = 0, white = 0;
        for (const auto& [c, brick] : result.space2D().occupiedCells()) {
            (brick == "BLACK" ? black : white) += 1;
        }
        CHECK(black == 32);
        CHECK(white == 32);
    }
}

TEST_CASE("evaluation errors carry positions") {
    SUBCASE("put before build") {
        Error e = captureError("open Level_3;\nput2D (1,1) RED (0,0);");
        CHECK(e.kind() == ErrorKind::Eval);
        REQUIRE(e.pos().has_value());
        CHECK(e.pos()->line == 2);
    }
    SUBCASE("unbound identifier") {
        Error e = captureError("open Level_3; build2D (4,4); put2D (1,1) MAUVE (0,0);");
        CHECK(std::string(e.what()).find("MAUVE") != std::string::npos);
    }
    SUBCASE("nothing bound before open") {
        Error e = captureError("build2D (4,4);");
        CHECK(std::string(e.what()).find("build2D") != std::string::npos);
    }
    SUBCASE("arity mismatch on a tuple parameter") {
        Error e = captureError("fun f (a,b) = a; val x = f (1,2,3);");
        CHECK(std::string(e.what()).find("tuple") != std::string::npos);
    }
    SUBCASE("type mismatch in arithmetic") {
        Error e = captureError("val x = 1 + \"two\";");
        CHECK(std::string(e.what()).find("int") != std::string::npos);
    }
    SUBCASE("division by zero") {
        Error e = captureError("val x = 1 div 0;");
        CHECK(std::string(e.what()).find("zero") != std::string::npos);
    }
    SUBCASE("second build") {
        Error e = captureError("open Level_3; build2D (4,4); build2D (4,4);");
        CHECK(std::string(e.what()).find("already built") != std::string::npos);
    }
    SUBCASE("placing EMPTY directly") {
        Error e = captureError("open Level_5; build2D (4,4); put2D (1,1) EMPTY (0,0);");
        CHECK(std::string(e.what()).find("EMPTY") != std::string::npos);
    }
    SUBCASE("2D op on a 3D space") {
        Error e = captureError("open Level_5; build3D (4,4,4); put2D (1,1) RED (0,0);");
        CHECK(std::string(e.what()).find("2D") != std::string::npos);
    }
    SUBCASE("unknown level") {
        Error e = captureError("open Level_9;");
        CHECK(std::string(e.what()).find("Level_9") != std::string::npos);
    }
}

TEST_CASE("lexical scoping and shadowing") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "val n = 3;\n"
        "fun f x = let val n = x * 2 in n end;\n"
        "build2D (16,16);\n"
        "put2D (f n, n) RED (0,0);\n");  // (6, 3) rectangle
    CHECK(result.space2D().occupiedCount() == 18);

    SUBCASE("closures capture their definition environment") {
        EvalResult r = evalSource(
            "open Level_3;\n"
            "val n = 2;\n"
            "fun g x = x + n;\n"
            "val n = 100;\n"
            "build2D (16,16);\n"
            "put2D (g 1, 1) RED (0,0);\n");  // g uses n = 2, so width 3
        CHECK(r.space2D().occupiedCount() == 3);
    }
}

TEST_CASE("andalso and orelse short-circuit") {
    // the right operand would divide by zero; short-circuiting must skip it
    EvalResult andFalse = evalSource(
        "open Level_3; build2D (4,4); "
        "put2D (1,1) RED (if false andalso 1 div 0 = 0 then (1,1) else (0,0));");
    CHECK(andFalse.space2D().occupiedCount() == 1);

    EvalResult orTrue = evalSource(
        "open Level_3; build2D (4,4); "
        "put2D (1,1) RED (if true orelse 1 div 0 = 0 then (0,0) else (1,1));");
    CHECK(orTrue.space2D().occupiedCount() == 1);

    CHECK_THROWS_AS(evalSource("val x = true andalso 1 div 0 = 0;"), Error);
}

TEST_CASE("curried user functions support partial application") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "build2D (16,16);\n"
        "fun putAt size brick (x,y) = put2D size brick (x,y);\n"
        "val redSquare = putAt (2,2) RED;\n"
        "redSquare (0,0);\n"
        "redSquare (4,4);\n");
    CHECK(result.space2D().occupiedCount() == 8);
}

TEST_CASE("recursion works and the depth limit halts runaways") {
    EvalResult ok = evalSource(
        "open Level_3;\n"
        "build2D (32,1);\n"
        "fun paint n = if n < 0 then 0 else (put2D (1,1) RED (n,0); paint (n - 1));\n"
        "paint 9;\n");
    CHECK(ok.space2D().occupiedCount() == 10);

    Error e = captureError("fun loop x = loop x; val r = loop 1;");
    CHECK(std::string(e.what()).find("recursion") != std::string::npos);
}

TEST_CASE("SML div and mod round toward negative infinity") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "build2D (16,16);\n"
        "put2D (1,1) RED (~7 div 2 + 8, ~7 mod 2);\n");  // (-4 + 8, 1) = (4, 1)
    REQUIRE(result.space2D().occupiedCount() == 1);
    CHECK(result.space2D().occupiedCells()[0].first == Coord2{4, 1});
}

TEST_CASE("nullary clearMySpace2D runs on reference") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "build2D (32,32);\n"
        "setMySpace2D (10,10) (5,5);\n"
        "put2D (2,2) RED (0,0);\n"
        "clearMySpace2D;\n"
        "put2D (1,1) BLUE (0,0);\n");
    const Space2D& space = result.space2D();
    CHECK(space.occupiedCount() == 5);
    REQUIRE(space.at({0, 0}) != nullptr);
    CHECK(*space.at({0, 0}) == "BLUE");
    REQUIRE(space.at({10, 10}) != nullptr);
    CHECK(*space.at({10, 10}) == "RED");
}

TEST_CASE("olympic-style rings with regions compose") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "build2D (64,32);\n"
        "fun oneRing (ox,oy) = (setMySpace2D (ox,oy) (11,11); ring2D 5 BLUE (5,5));\n"
        "oneRing (0,0);\n"
        "oneRing (12,0);\n"
        "oneRing (24,0);\n");
    // three translated copies of the same ring
    Space2D reference = build2D({64, 32});
    reference.ring(5, "BLUE", {5, 5});
    std::size_t one = reference.occupiedCount();
    CHECK(result.space2D().occupiedCount() == 3 * one);
}

TEST_CASE("show directives record in order after the build") {
    EvalResult result = evalSource(
        "open Level_3;\n"
        "build2D (8,8);\n"
        "put2D (2,2) RED (0,0);\n"
        "showLDraw \"a\";\n"
        "showSTL \"b\";\n"
        "showMC \"c\";\n"
        "showBinvox \"d\";\n");
    REQUIRE(result.directives.size() == 4);
    CHECK(result.directives[0].target == ShowTarget::Ldraw);
    CHECK(result.directives[1].target == ShowTarget::Stl);
    CHECK(result.directives[2].target == ShowTarget::Mc);
    CHECK(result.directives[3].target == ShowTarget::Binvox);
    CHECK(result.directives[3].name == "d");
}

TEST_CASE("3D programs evaluate") {
    EvalResult result = evalSource(
        "open Level_5;\n"
        "build3D (8,8,8);\n"
        "put3D (8,8,8) RED (0,0,0);\n"
        "show3D \"cube\";\n");
    REQUIRE(result.has3D());
    CHECK(result.space3D().occupiedCount() == 512);
}

TEST_CASE("the cell budget stops hostile placements") {
    EvalOptions options;
    options.cellBudget = 1000;
    Program program = parseSource(
        "open Level_3;\nbuild2D (1000,1000);\nput2D (1000,1000) RED (0,0);\n");
    try {
        evaluate(program, nullptr, options);
        FAIL("expected an eval error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Eval);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("evaluator dimension guard") {
    Error e = captureError("open Level_3; build2D (99999999,2);");
    CHECK(std::string(e.what()).find("limit") != std::string::npos);
}

TEST_CASE("traverseWithin propagates brick-function errors with the cell") {
    Error e = captureError(
        "open Level_5;\n"
        "build2D (4,4);\n"
        "fun g (x,y) = if x = 2 andalso y = 1 then 1 div 0 else 0;\n"
        "fun h (x,y) = if g (x,y) = 0 then RED else EMPTY;\n"
        "traverseWithin (0,0) (3,3) h;\n");
    CHECK(std::string(e.what()).find("zero") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);
}
