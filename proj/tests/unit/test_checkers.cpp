#include "doctest.h"

#include <algorithm>

#include "analyze.hpp"
#include "barrc/catalog.hpp"

using namespace barrc;
using namespace barrc::testing;

namespace {

std::vector<std::string> messages(const std::string& text, std::initializer_list<const char*> ids) {
    std::vector<std::string> out;
    for (const auto& f : analyze_only(text, ids).files) {
        for (const auto& d : f.diagnostics) out.push_back(d.message);
    }
    return out;
}

}  // namespace

TEST_CASE("macro parenthesization") {
    // Parameter used twice, everything else in order.
    auto sq = keys_for("#define SQ(x) ((x) * (x))\n", {"6.3.b"});
    CHECK(sq.size() == 1);

    // Bare body and bare parameters: (i) plus (ii) for each of the four uses.
    auto max = messages("#define MAX(a, b) a > b ? a : b\n", {"6.3.b"});
    CHECK(max.size() >= 2);
    CHECK(std::any_of(max.begin(), max.end(), [](const std::string& m) { return m.find("parenthes") != std::string::npos; }));

    CHECK(keys_for("#define NOP() do {} while (0)\n", {"6.3.b"}).empty());
    CHECK(keys_for("#define ONE(a) (a)\n", {"6.3.b"}).empty());
    CHECK(keys_for("#define STR(a) #a\n#define CAT(a, b) a ## b\n", {"6.3.b"}).empty());
    CHECK(keys_for("#define BAIL(a) do { if ((a) != 0) { return; } } while (0)\n", {"6.3.b"}).size() == 1);
}

TEST_CASE("naming") {
    CHECK(keys_for("void Delay_ms(void);\n", {"6.1.e"}) == std::vector<std::string>{"1:6 6.1.e"});
    CHECK(keys_for("int *pg_buf;\n", {"7.1.o"}).size() == 1);
    CHECK(keys_for("int *gp_buf;\n", {"7.1.o"}).empty());
    std::string long_name(32, 'v');
    CHECK(keys_for("int " + long_name + ";\n", {"7.1.d"}).size() == 1);
    CHECK(keys_for("int " + long_name.substr(1) + ";\n", {"7.1.d"}).empty());
}

TEST_CASE("operators and expressions") {
    CHECK(keys_for("int f(int x)\n{\n    return (x == 5);\n}\n", {"8.6.a"}) == std::vector<std::string>{"3:15 8.6.a"});
    CHECK(keys_for("int f(int x)\n{\n    return (5 == x);\n}\n", {"8.6.a"}).empty());
    CHECK(keys_for("int f(int a, int b, int c)\n{\n    return (a + b * c);\n}\n", {"1.4.a"}).size() == 1);
    CHECK(keys_for("int f(int a, int b, int c)\n{\n    return (a + (b * c));\n}\n", {"1.4.a"}).empty());
    CHECK(keys_for("_Bool f(int *p)\n{\n    return ((_Bool)p);\n}\n", {"5.6.b"}).size() == 1);
}

TEST_CASE("unknown types stay quiet") {
    // No in-file declarations: only constant-driven signedness findings are possible.
    std::string text = "void f(void)\n{\n    x = y & z;\n    if (a < b)\n    {\n        c = d;\n    }\n}\n";
    CHECK(keys_for(text, {"5.3.b", "5.3.c", "5.4.b"}).empty());
}

TEST_CASE("spacing and layout") {
    CHECK(keys_for("void f(void)\n{\n    int a;\n    a=1;\n}\n", {"3.1.b"}).size() == 2);
    CHECK(keys_for("void f(void)\n{\n\tint a;\n}\n", {"3.5.a"}) == std::vector<std::string>{"3:1 3.5.a"});
    std::string longline = "int value_" + std::string(75, 'x') + ";\n";
    CHECK(keys_for(longline, {"1.2.a"}) == std::vector<std::string>{"1:81 1.2.a"});
}

TEST_CASE("goto and braces") {
    std::string text = "void f(int a)\n{\n    if (a)\n        a = 0;\n    goto done;\ndone:\n    return;\n}\n";
    auto keys = keys_for(text, {"1.3.a", "1.7.c"});
    CHECK(std::count_if(keys.begin(), keys.end(), [](const std::string& k) { return k.ends_with("1.3.a"); }) == 1);
    CHECK(std::count_if(keys.begin(), keys.end(), [](const std::string& k) { return k.ends_with("1.7.c"); }) == 1);
}

TEST_CASE("function length") {
    // Counted from the declarator line to the closing brace.
    auto function_of = [](int total_lines) {
        std::string text = "void g(void);\nvoid f(void)\n{\n";
        for (int i = 0; i < total_lines - 3; ++i) text += "    g();\n";
        return text + "}\n";
    };
    CHECK(keys_for(function_of(100), {"6.2.a"}).empty());
    CHECK(keys_for(function_of(101), {"6.2.a"}) == std::vector<std::string>{"2:6 6.2.a"});
}

TEST_CASE("includes") {
    CHECK(keys_for("#include \"/usr/include/x.h\"\n", {"4.3.d"}).size() == 1);
    CHECK(keys_for("#include \"other.c\"\n", {"4.3.f"}).size() == 1);
    CHECK(keys_for("#include <stdio.h>\n", {"4.3.d", "4.3.f"}).empty());
}

TEST_CASE("only automatic and heuristic guidelines report") {
    std::string text = "int Bad_Name=1;\nvoid f(int x)\n{\n\tif (x == 5) x=2;\n}\n";
    Config c;
    set_guideline(c, "all", true);
    auto result = run_all({SourceFile("probe.c", text)}, c, 1);
    std::size_t guideline_findings = 0;
    for (const auto& f : result.files) {
        for (const auto& d : f.diagnostics) {
            if (!d.rule.is_guideline()) continue;
            ++guideline_findings;
            CHECK(catalog().at(d.rule.guideline()).enforceability != Enforceability::Manual);
        }
    }
    CHECK(guideline_findings > 0);
}

TEST_CASE("checkers are pure") {
    std::string text = "int Bad_Name=1;\nvoid f(int x)\n{\n\tif (x == 5) x=2;\n}\n";
    Config c;
    set_guideline(c, "all", true);
    auto a = finding_keys(run_all({SourceFile("probe.c", text)}, c, 1));
    auto b = finding_keys(run_all({SourceFile("probe.c", text)}, c, 4));
    CHECK(a == b);
}

TEST_CASE("empty file set") {
    CHECK(run_all({}, Config{}, 1).files.empty());
}
