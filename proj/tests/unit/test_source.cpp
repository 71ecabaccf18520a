#include "doctest.h"

#include "barrc/guideline_id.hpp"
#include "barrc/source.hpp"

using namespace barrc;

TEST_CASE("line table keeps each terminator") {
    SourceFile f("t.c", "a\r\nb");
    REQUIRE(f.line_count() == 2);
    CHECK(f.line(1).terminator == LineTerminator::CRLF);
    CHECK(f.line(2).terminator == LineTerminator::None);
    CHECK(f.line_text(1) == "a");
    CHECK(f.line_text(2) == "b");
}

TEST_CASE("mixed terminators and a trailing newline") {
    SourceFile f("t.c", "x\ry\n\nz\n");
    REQUIRE(f.line_count() == 4);
    CHECK(f.line(1).terminator == LineTerminator::CR);
    CHECK(f.line(2).terminator == LineTerminator::LF);
    CHECK(f.is_blank_line(3));
    CHECK_FALSE(f.is_blank_line(4));
}

TEST_CASE("empty file has no lines") {
    SourceFile f("t.c", "");
    CHECK(f.line_count() == 0);
}

TEST_CASE("pos_of maps offsets to 1-based positions") {
    SourceFile f("t.c", "ab\ncd");
    CHECK(f.pos_of(0) == SourcePos{1, 1});
    CHECK(f.pos_of(1) == SourcePos{1, 2});
    CHECK(f.pos_of(3) == SourcePos{2, 1});
    CHECK(f.pos_of(4) == SourcePos{2, 2});
}

TEST_CASE("splice_lines joins backslash continuations") {
    SourceFile f("t.c", "#define A \\\n  1\nint x;\n");
    auto r = splice_lines(f);
    REQUIRE(r.lines.size() == 2);
    CHECK(r.lines[0].first_line == 1);
    CHECK(r.lines[0].last_line == 2);
    CHECK(r.lines[0].spliced);
    CHECK(r.lines[1].first_line == 3);
    CHECK(r.dangling_continuations.empty());
}

TEST_CASE("backslash on the last line dangles") {
    SourceFile f("t.c", "int x; \\");
    auto r = splice_lines(f);
    REQUIRE(r.dangling_continuations.size() == 1);
    CHECK(r.dangling_continuations[0] == 1);
}

TEST_CASE("guideline ids parse and order numerically") {
    CHECK(GuidelineId::parse("1.3.a").has_value());
    CHECK_FALSE(GuidelineId::parse("9.1.a").has_value());
    CHECK_FALSE(GuidelineId::parse("1.3").has_value());
    CHECK_FALSE(GuidelineId::parse("1.3.z").has_value());
    CHECK(gid("1.8.c") < gid("2.1.a"));
    CHECK(gid("3.1.b") < gid("3.1.m"));
    CHECK(gid("3.1.m").str() == "3.1.m");
}
