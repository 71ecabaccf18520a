#include "doctest.h"

#include "barrc/lexer.hpp"

#include <random>

using namespace barrc;

namespace {

std::vector<Token> lex(const std::string& text) {
    return tokenize(SourceFile("t.c", text)).tokens;
}

std::vector<std::string> spellings(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (const auto& t : toks) {
        if (t.kind != TokenKind::EndOfFile) out.push_back(t.spelling);
    }
    return out;
}

}  // namespace

TEST_CASE("comment between identifiers is trivia") {
    auto toks = lex("a/*c*/b");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].spelling == "a");
    CHECK(toks[1].spelling == "b");
    REQUIRE(toks[1].leading_trivia.size() == 1);
    CHECK(toks[1].leading_trivia[0].kind == TriviaKind::BlockComment);
    CHECK(toks[1].leading_trivia[0].text == "/*c*/");
}

TEST_CASE("maximal munch") {
    CHECK(spellings(lex("x--y")) == std::vector<std::string>{"x", "--", "y"});
    CHECK(spellings(lex("a>>=b")) == std::vector<std::string>{"a", ">>=", "b"});
    CHECK(spellings(lex("p->q...")) == std::vector<std::string>{"p", "->", "q", "..."});
}

TEST_CASE("digraphs keep their lexeme but map the spelling") {
    auto toks = lex("<: :>");
    REQUIRE(toks.size() == 3);
    CHECK(toks[0].lexeme == "<:");
    CHECK(toks[0].spelling == "[");
    CHECK(toks[1].spelling == "]");
}

TEST_CASE("keywords and identifiers") {
    auto toks = lex("while whilex _Bool");
    CHECK(toks[0].kind == TokenKind::Keyword);
    CHECK(toks[1].kind == TokenKind::Identifier);
    CHECK(toks[2].kind == TokenKind::Keyword);
}

TEST_CASE("number suffixes") {
    auto toks = lex("10U 3UL 7 1.5f 2.0L 0x1Fu");
    CHECK(toks[0].suffix.is_unsigned);
    CHECK(toks[1].suffix.is_unsigned);
    CHECK(toks[1].suffix.long_count == 1);
    CHECK_FALSE(toks[2].suffix.is_unsigned);
    CHECK(toks[3].kind == TokenKind::FloatConstant);
    CHECK(toks[3].suffix.is_float);
    CHECK(toks[4].suffix.is_long_double);
    CHECK(toks[5].suffix.is_unsigned);
}

TEST_CASE("line splice inside an identifier") {
    auto toks = lex("ab\\\ncd");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].spelling == "abcd");
    CHECK(toks[0].lexeme == "ab\\\ncd");
}

TEST_CASE("directive marker and header name") {
    auto toks = lex("#include <stdio.h>\nx < y;\n");
    CHECK(toks[0].kind == TokenKind::PpDirectiveMarker);
    CHECK(toks[2].kind == TokenKind::HeaderName);
    CHECK(toks[2].spelling == "<stdio.h>");
    CHECK(toks[4].is_punct("<"));
}

TEST_CASE("hash in the middle of a line is a punctuator") {
    auto toks = lex("a # b");
    CHECK(toks[1].kind == TokenKind::Punctuator);
}

TEST_CASE("unterminated block comment is reported") {
    auto stream = tokenize(SourceFile("t.c", "int x; /* open\nint y;\n"));
    CHECK_FALSE(stream.errors.empty());
    CHECK(reconstruct(stream.tokens) == "int x; /* open\nint y;\n");
}

TEST_CASE("unterminated string is reported") {
    auto stream = tokenize(SourceFile("t.c", "char *s = \"abc;\nint y;\n"));
    CHECK_FALSE(stream.errors.empty());
    CHECK(reconstruct(stream.tokens) == "char *s = \"abc;\nint y;\n");
}

TEST_CASE("at_line_start marks the first token of each logical line") {
    auto toks = lex("a b\nc \\\n d\n");
    CHECK(toks[0].at_line_start);
    CHECK_FALSE(toks[1].at_line_start);
    CHECK(toks[2].at_line_start);
    CHECK_FALSE(toks[3].at_line_start);
}

TEST_CASE("round trip over random byte strings") {
    const std::string alphabet = "ab1_ \t\n\r\\/*\"'#<>=+-.;{}()x0u\f\v\x80";
    std::mt19937 rng(12345);
    for (int i = 0; i < 500; ++i) {
        std::string s;
        int n = static_cast<int>(rng() % 80);
        for (int k = 0; k < n; ++k) s += alphabet[rng() % alphabet.size()];
        auto stream = tokenize(SourceFile("t.c", s));
        REQUIRE(reconstruct(stream.tokens) == s);
        REQUIRE(stream.tokens.back().kind == TokenKind::EndOfFile);
    }
}

TEST_CASE("operator context by preceding token") {
    auto toks = lex("a = -b * c; x = *p; f(&y);");
    // '-' after '=' is unary, '*' after identifier is binary
    CHECK(classify_operator_context(toks, 2) == OperatorContext::UnaryOp);
    CHECK(classify_operator_context(toks, 4) == OperatorContext::BinaryOp);
    CHECK(classify_operator_context(toks, 9) == OperatorContext::UnaryOp);
    CHECK(classify_operator_context(toks, 14) == OperatorContext::UnaryOp);
}
