#include "doctest.h"

#include "barrc/config.hpp"
#include "barrc/deviation.hpp"

using namespace barrc;

TEST_CASE("config defaults") {
    Config c = parse_config("{}");
    CHECK(c.line_length == 80);
    CHECK(c.indent_width == 4);
    CHECK(c.max_function_lines == 100);
    CHECK(c.min_identifier_length == 3);
    CHECK(c.max_identifier_significant == 31);
    CHECK(c.module_name_significant == 8);
    CHECK(c.goto_policy == GotoPolicy::Forbid);
    auto on = c.effective_enabled();
    CHECK(on.count(gid("2.1.c")));
    CHECK(on.count(gid("8.4.b")));
    for (const char* off : {"2.2.h", "4.3.b", "4.3.e", "5.2.c", "5.6.a"}) CHECK_FALSE(on.count(gid(off)));
}

TEST_CASE("config single override") {
    Config c = parse_config(R"({"line_length": 100})");
    CHECK(c.line_length == 100);
    CHECK(c.indent_width == 4);
}

TEST_CASE("config enable and disable") {
    Config c = parse_config(R"({"disable": ["2.1.c"], "enable": ["4.3.e"]})");
    auto on = c.effective_enabled();
    CHECK_FALSE(on.count(gid("2.1.c")));
    CHECK(on.count(gid("4.3.e")));
    Config all = parse_config(R"({"enable": ["all"]})");
    CHECK(all.effective_enabled().size() == 143);
    Config none = parse_config(R"({"disable": ["all"], "enable": ["1.2.a"]})");
    CHECK(none.effective_enabled() == std::set<GuidelineId>{gid("1.2.a")});
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config(R"({"line_lenght": 100})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"line_length": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"enable": ["9.9.z"]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"enable": ["1.2.a"], "disable": ["1.2.a"]})"), ConfigError);
    try {
        parse_config("{\n  \"line_length\": 100,\n  oops\n}");
        FAIL("expected error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        parse_config(R"({"bogus": 1})");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
}

namespace {

DeviationScan scan(const std::string& text) {
    SourceFile f("t.c", text);
    return collect_deviations(f, tokenize(f).tokens);
}

Diagnostic finding(const char* id, int line) {
    Diagnostic d;
    d.rule = gid(id);
    d.path = "t.c";
    d.span.start = {line, 1};
    d.message = "m";
    return d;
}

}  // namespace

TEST_CASE("deviation scopes") {
    auto s = scan("x = 1; /* barr-c: deviation 8.6.a legacy API */\n");
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].scope == DeviationScope::SameLine);
    CHECK(s.records[0].guideline == gid("8.6.a"));
    CHECK(s.records[0].reason == "legacy API");
    CHECK(s.records[0].target_line == 1);

    s = scan("int a;\n// barr-c: deviation 3.5.a vendor table\n\n\tint b;\n");
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].scope == DeviationScope::NextLine);
    CHECK(s.records[0].target_line == 4);

    s = scan("/* barr-c: deviation-file 1.2.a generated */\nint a;\n");
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].scope == DeviationScope::File);
}

TEST_CASE("deviation syntax problems") {
    CHECK(scan("/* barr-c: deviation 1.7.c */\n").problems.size() == 1);
    CHECK(scan("/* barr-c: deviation 9.9.q why */\n").problems.size() == 1);
    CHECK(scan("/* barr-c: ignore 1.2.a why */\n").problems.size() == 1);
    CHECK(scan("/* mentions barr-c only in passing */\n").problems.empty());
}

TEST_CASE("suppression") {
    std::vector<Diagnostic> none{finding("3.5.a", 4)};
    auto before = none;
    CHECK(apply_suppressions(none, {}, "t.c").empty());
    CHECK_FALSE(none[0].suppressed);

    auto s = scan("int a;\n// barr-c: deviation 3.5.a vendor table\n\n\tint b;\n\tint c;\n");
    std::vector<Diagnostic> ds{finding("3.5.a", 4), finding("3.5.a", 5), finding("1.2.a", 4)};
    auto unused = apply_suppressions(ds, s.records, "t.c");
    CHECK(unused.empty());
    CHECK(ds[0].suppressed);
    CHECK_FALSE(ds[1].suppressed);
    CHECK_FALSE(ds[2].suppressed);
    CHECK(ds.size() == 3);

    auto f = scan("/* barr-c: deviation-file 1.2.a generated */\n");
    std::vector<Diagnostic> longs{finding("1.2.a", 2), finding("1.2.a", 5), finding("1.2.a", 9)};
    apply_suppressions(longs, f.records, "t.c");
    for (const auto& d : longs) CHECK(d.suppressed);

    auto also = finding("1.7.c", 2);
    also.also = {gid("8.5.a")};
    std::vector<Diagnostic> goto_diag{also};
    auto g = scan("x = 1;\n/* barr-c: deviation 8.5.a error exit */\ngoto done;\n");
    CHECK(apply_suppressions(goto_diag, g.records, "t.c").size() == 1);  // targets line 3, finding on 2
    goto_diag[0].span.start.line = 3;
    goto_diag[0].suppressed = false;
    CHECK(apply_suppressions(goto_diag, g.records, "t.c").empty());
    CHECK(goto_diag[0].suppressed);
}
