#include "doctest.h"

#include "barrc/parser.hpp"

using namespace barrc;

namespace {

struct Parsed {
    SourceFile file;
    std::vector<Token> tokens;
    DirectiveSet directives;
    SyntaxTree tree;
};

Parsed parse(const std::string& text) {
    Parsed p{SourceFile("t.c", text), {}, {}, {}};
    p.tokens = tokenize(p.file).tokens;
    p.directives = parse_directives(p.tokens);
    auto branches = select_branch(p.tokens, p.directives, p.file.line_count(), {});
    p.tree = parse_translation_unit(p.tokens, p.directives, branches, ParseOptions{});
    return p;
}

const Stmt& body_item(const Parsed& p, std::size_t fn, std::size_t i) {
    return *p.tree.items.at(fn).function->body->children.at(i);
}

}  // namespace

TEST_CASE("function definition with a return") {
    auto p = parse("int main(void) { return 0; }");
    REQUIRE(p.tree.problems.empty());
    REQUIRE(p.tree.items.size() == 1);
    REQUIRE(p.tree.items[0].function);
    CHECK(p.tree.items[0].function->name() == "main");
    CHECK(p.tree.items[0].function->declarator().void_params);
    REQUIRE(p.tree.items[0].function->body->children.size() == 1);
    CHECK(body_item(p, 0, 0).kind == StmtKind::Return);
}

TEST_CASE("two declarators in one declaration") {
    auto p = parse("char * x, y;");
    REQUIRE(p.tree.items.size() == 1);
    const Decl& d = *p.tree.items[0].decl;
    REQUIRE(d.declarators.size() == 2);
    CHECK(d.declarators[0].name == "x");
    CHECK(d.declarators[0].pointer_depth == 1);
    CHECK(d.declarators[1].name == "y");
    CHECK(d.declarators[1].pointer_depth == 0);
    CHECK(p.tree.roles[1] == TokenRole::DeclPointer);
    CHECK(p.tree.roles[3] == TokenRole::DeclComma);
}

TEST_CASE("bitfield member") {
    auto p = parse("struct { unsigned int a : 3; } s;");
    REQUIRE(p.tree.problems.empty());
    const Decl& d = *p.tree.items[0].decl;
    REQUIRE(d.spec.body);
    REQUIRE(d.spec.body->members.size() == 1);
    const Decl& m = d.spec.body->members[0];
    CHECK(m.spec.explicit_unsigned);
    REQUIRE(m.declarators.size() == 1);
    CHECK(m.declarators[0].name == "a");
    REQUIRE(m.declarators[0].bitfield_width);
    CHECK(m.declarators[0].bitfield_width->text == "3");
}

TEST_CASE("precedence levels") {
    auto p = parse("void f(void) { x = a + b * c; }");
    const Stmt& s = body_item(p, 0, 0);
    REQUIRE(s.expr);
    CHECK(s.expr->kind == ExprKind::Assign);
    const Expr& sum = *s.expr->children[1];
    CHECK(sum.text == "+");
    CHECK(sum.precedence == 4);
    CHECK(sum.children[1]->text == "*");
    CHECK(sum.children[1]->precedence == 3);
}

TEST_CASE("if else chain and loops") {
    auto p = parse(
        "void f(void)\n{\n    if (a) { b(); } else if (c) { d(); } else { e(); }\n"
        "    while (x) { }\n    do { y(); } while (z);\n    for (i = 0; i < 3; i++) { }\n}\n");
    REQUIRE(p.tree.problems.empty());
    const Stmt& chain = body_item(p, 0, 0);
    CHECK(chain.kind == StmtKind::If);
    REQUIRE(chain.has_else());
    CHECK(chain.else_branch()->kind == StmtKind::If);
    CHECK(body_item(p, 0, 1).kind == StmtKind::While);
    CHECK(body_item(p, 0, 2).kind == StmtKind::DoWhile);
    const Stmt& loop = body_item(p, 0, 3);
    CHECK(loop.kind == StmtKind::For);
    CHECK(loop.for_init);
    CHECK(loop.for_cond);
    CHECK(loop.for_step);
}

TEST_CASE("switch with case labels flattened into the body") {
    auto p = parse("void f(int x) { switch (x) { case 1: a(); break; default: break; } }");
    REQUIRE(p.tree.problems.empty());
    const Stmt& sw = body_item(p, 0, 0);
    REQUIRE(sw.kind == StmtKind::Switch);
    const Stmt& body = *sw.body();
    REQUIRE(body.children.size() == 5);
    CHECK(body.children[0]->kind == StmtKind::Case);
    CHECK(body.children[1]->kind == StmtKind::Expr);
    CHECK(body.children[2]->kind == StmtKind::Break);
    CHECK(body.children[3]->kind == StmtKind::Default);
}

TEST_CASE("typedef names drive declaration parsing") {
    auto p = parse("typedef unsigned char byte_t;\nvoid f(void) { byte_t * p = 0; uint8_t n; n = 2u; }");
    REQUIRE(p.tree.problems.empty());
    CHECK(body_item(p, 1, 0).kind == StmtKind::Decl);
    CHECK(body_item(p, 1, 0).decl->declarators[0].pointer_depth == 1);
    CHECK(body_item(p, 1, 1).kind == StmtKind::Decl);
    CHECK(body_item(p, 1, 2).kind == StmtKind::Expr);
}

TEST_CASE("cast versus parenthesised expression") {
    auto p = parse("void f(void) { a = (uint8_t)b; c = (d) + 1; }");
    REQUIRE(p.tree.problems.empty());
    CHECK(body_item(p, 0, 0).expr->children[1]->kind == ExprKind::Cast);
    CHECK(body_item(p, 0, 1).expr->children[1]->kind == ExprKind::Binary);
}

TEST_CASE("K&R definition") {
    auto p = parse("int add(a, b) int a; int b; { return a + b; }");
    REQUIRE(p.tree.problems.empty());
    REQUIRE(p.tree.items[0].function);
    CHECK(p.tree.items[0].function->declarator().knr_identifiers);
    CHECK(p.tree.items[0].function->knr_decls.size() == 2);
}

TEST_CASE("recovery after an unparseable statement") {
    auto p = parse("void f(void)\n{\n    x = = 3;\n    y = 1;\n}\nint z;\n");
    CHECK(p.tree.problems.size() == 1);
    REQUIRE(p.tree.items.size() == 2);
    const auto& body = p.tree.items[0].function->body->children;
    REQUIRE(body.size() == 2);
    CHECK(body[0]->kind == StmtKind::Error);
    CHECK(body[1]->kind == StmtKind::Expr);
    CHECK(p.tree.items[1].decl->declarators[0].name == "z");
}

TEST_CASE("recovery at file scope") {
    auto p = parse("int 3x;\nint ok;\n");
    CHECK_FALSE(p.tree.problems.empty());
    REQUIRE_FALSE(p.tree.items.empty());
    CHECK(p.tree.items.back().decl->declarators[0].name == "ok");
}

TEST_CASE("inactive branches are not parsed") {
    auto p = parse("#ifdef DEBUG\nthis is not C\n#endif\nint x;\n");
    CHECK(p.tree.problems.empty());
    CHECK(p.tree.items.size() == 1);
}

TEST_CASE("symbol table scoping and linkage") {
    auto p = parse("static int a;\nint b;\nvoid f(void) { int a; a = b; }\n");
    const auto& syms = p.tree.symbols;
    int fa = syms.find_file_scope("a");
    REQUIRE(fa >= 0);
    CHECK(syms.symbols[static_cast<std::size_t>(fa)].linkage == Linkage::Internal);
    CHECK(syms.symbols[static_cast<std::size_t>(syms.find_file_scope("b"))].linkage == Linkage::External);
    const Expr& assign = *body_item(p, 2, 1).expr;
    int local = assign.children[0]->symbol;
    REQUIRE(local >= 0);
    CHECK(local != fa);
    CHECK(syms.symbols[static_cast<std::size_t>(local)].scope == DeclScope::Block);
}

TEST_CASE("resolve_local_type") {
    auto p = parse("void f(void) { uint8_t x; int16_t s; x = 3u; s = y; }");
    const auto& syms = p.tree.symbols;
    const Expr& a1 = *body_item(p, 0, 2).expr;
    CHECK(classify_type(resolve_local_type(*a1.children[0], syms), syms) == ValueClass::Unsigned);
    CHECK(classify_type(resolve_local_type(*a1.children[1], syms), syms) == ValueClass::Unsigned);
    const Expr& a2 = *body_item(p, 0, 3).expr;
    CHECK(classify_type(resolve_local_type(*a2.children[0], syms), syms) == ValueClass::Signed);
    CHECK(classify_type(resolve_local_type(*a2.children[1], syms), syms) == ValueClass::Unknown);
}

TEST_CASE("roles for spacing") {
    auto p = parse("int f(int a) { return g(a, -b) ? p->q : s[1]; }");
    REQUIRE(p.tree.problems.empty());
    auto role_of = [&](const std::string& sp, int nth = 0) {
        for (std::size_t i = 0; i < p.tokens.size(); ++i) {
            if (p.tokens[i].spelling == sp && nth-- == 0) return p.tree.roles[i];
        }
        return TokenRole::None;
    };
    CHECK(role_of("(") == TokenRole::DefParamsOpen);
    CHECK(role_of("(", 1) == TokenRole::CallOpen);
    CHECK(role_of(",") == TokenRole::ArgComma);
    CHECK(role_of("-") == TokenRole::UnaryPrefix);
    CHECK(role_of("?") == TokenRole::TernaryQuestion);
    CHECK(role_of(":") == TokenRole::TernaryColon);
    CHECK(role_of("->") == TokenRole::MemberAccess);
    CHECK(role_of("[") == TokenRole::SubscriptOpen);
    CHECK(role_of("{") == TokenRole::BlockOpen);
}

TEST_CASE("function pointer declarator") {
    auto p = parse("void (*handler)(int);\nvoid g(void (*cb)(void));\n");
    REQUIRE(p.tree.problems.empty());
    const Declarator& d = p.tree.items[0].decl->declarators[0];
    CHECK(d.name == "handler");
    CHECK(d.pointer_depth == 1);
    CHECK_FALSE(d.is_function);
    CHECK(p.tree.items[1].decl->declarators[0].is_function);
}

TEST_CASE("attributes and extension keywords are skipped") {
    Parsed p{SourceFile("t.c", "__interrupt void isr(void) __attribute__((used));\nint x;\n"), {}, {}, {}};
    p.tokens = tokenize(p.file).tokens;
    p.directives = parse_directives(p.tokens);
    auto branches = select_branch(p.tokens, p.directives, p.file.line_count(), {});
    ParseOptions opts;
    opts.extension_patterns = {"__asm*", "__attribute__", "__interrupt"};
    p.tree = parse_translation_unit(p.tokens, p.directives, branches, opts);
    CHECK(p.tree.problems.empty());
    CHECK(p.tree.items.size() == 2);
}
