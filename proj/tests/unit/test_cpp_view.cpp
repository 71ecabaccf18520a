#include "doctest.h"

#include "barrc/cpp_view.hpp"

using namespace barrc;

namespace {

struct View {
    SourceFile file;
    std::vector<Token> tokens;
    DirectiveSet set;
};

View view(const std::string& text) {
    View v{SourceFile("t.h", text), {}, {}};
    v.tokens = tokenize(v.file).tokens;
    v.set = parse_directives(v.tokens);
    return v;
}

}  // namespace

TEST_CASE("function-like macro definition") {
    auto v = view("#define SQ(x) ((x)*(x))\n");
    REQUIRE(v.set.macros.size() == 1);
    const auto& m = v.set.macros[0];
    CHECK(m.name == "SQ");
    CHECK(m.is_function_like);
    CHECK(m.params == std::vector<std::string>{"x"});
    CHECK(m.body.size() == 9);
}

TEST_CASE("object-like macro with parenthesised body") {
    auto v = view("#define A (1)\n");
    REQUIRE(v.set.macros.size() == 1);
    CHECK_FALSE(v.set.macros[0].is_function_like);
    CHECK(v.set.macros[0].body.size() == 3);
}

TEST_CASE("malformed parameter list is a problem") {
    auto v = view("#define F(a, 1) a\n");
    CHECK(v.set.macros.empty());
    CHECK(v.set.problems.size() == 1);
}

TEST_CASE("include styles") {
    auto v = view("#include \"crc.h\"\n#include <stdint.h>\n");
    REQUIRE(v.set.includes.size() == 2);
    CHECK(v.set.includes[0].style == IncludeStyle::Quote);
    CHECK(v.set.includes[0].path_text == "crc.h");
    CHECK(v.set.includes[1].style == IncludeStyle::Angle);
    CHECK(v.set.includes[1].path_text == "stdint.h");
}

TEST_CASE("directive spans continuation lines") {
    auto v = view("#define X \\\n 1\nint y;\n");
    REQUIRE(v.set.directives.size() == 1);
    CHECK(v.set.directives[0].first_line == 1);
    CHECK(v.set.directives[0].last_line == 2);
    CHECK_FALSE(v.set.in_directive(v.tokens.size() - 2));
}

TEST_CASE("header guard detection") {
    auto good = view("#ifndef CRC_H\n#define CRC_H\nint f(void);\n#endif /* CRC_H */\n");
    auto g = detect_header_guard(good.tokens, good.set);
    REQUIRE(g.has_value());
    CHECK(g->macro_name == "CRC_H");
    CHECK(g->endif_has_comment);

    auto trailing = view("#ifndef CRC_H\n#define CRC_H\n#endif\nint f(void);\n");
    CHECK_FALSE(detect_header_guard(trailing.tokens, trailing.set).has_value());

    auto mismatch = view("#ifndef CRC_H\n#define CRC_X\n#endif\n");
    CHECK_FALSE(detect_header_guard(mismatch.tokens, mismatch.set).has_value());

    auto leading = view("int a;\n#ifndef CRC_H\n#define CRC_H\n#endif\n");
    CHECK_FALSE(detect_header_guard(leading.tokens, leading.set).has_value());

    auto bare = view("/* hdr */\n#ifndef CRC_H\n#define CRC_H\n#endif\n");
    auto bg = detect_header_guard(bare.tokens, bare.set);
    REQUIRE(bg.has_value());
    CHECK_FALSE(bg->endif_has_comment);
}

TEST_CASE("branch selection picks one arm") {
    auto v = view("#if 1\nA\n#else\nB\n#endif\nC\n");
    auto b = select_branch(v.tokens, v.set, v.file.line_count(), {});
    CHECK(b.problems.empty());
    CHECK(b.active(2));
    CHECK_FALSE(b.active(4));
    CHECK(b.active(6));
}

TEST_CASE("branch selection uses defines") {
    auto v = view("#define FOO 2\n#if defined(BAR) || FOO > 1\nA\n#elif 1\nB\n#endif\n#ifdef BAR\nC\n#endif\n");
    auto b = select_branch(v.tokens, v.set, v.file.line_count(), {});
    CHECK(b.active(3));
    CHECK_FALSE(b.active(5));
    CHECK_FALSE(b.active(8));
    auto with_bar = select_branch(v.tokens, v.set, v.file.line_count(), {{"BAR", "1"}});
    CHECK(with_bar.active(8));
}

TEST_CASE("nested inactive region stays inactive") {
    auto v = view("#if 0\n#if 1\nA\n#else\nB\n#endif\n#endif\n");
    auto b = select_branch(v.tokens, v.set, v.file.line_count(), {});
    CHECK_FALSE(b.active(3));
    CHECK_FALSE(b.active(5));
}

TEST_CASE("unbalanced conditionals leave the rest active") {
    auto v = view("#endif\nA\n");
    auto b = select_branch(v.tokens, v.set, v.file.line_count(), {});
    CHECK(b.problems.size() == 1);
    CHECK(b.active(2));

    auto open = view("#if 0\nA\n");
    auto ob = select_branch(open.tokens, open.set, open.file.line_count(), {});
    CHECK(ob.problems.size() == 1);
    CHECK(ob.active(2));
}
