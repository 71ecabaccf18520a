#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "barrc/source.hpp"

namespace barrc {

enum class TokenKind {
    Keyword,
    Identifier,
    IntConstant,
    FloatConstant,
    CharConstant,
    StringLiteral,
    Punctuator,
    PpDirectiveMarker,
    HeaderName,  // <...> operand of #include
    Unknown,     // stray byte that starts no token
    EndOfFile,
};

enum class TriviaKind { Spaces, LineComment, BlockComment, Newline, FormFeed, OtherControl, LineSplice };

struct Trivia {
    TriviaKind kind = TriviaKind::Spaces;
    std::string text;
    Span span;

    bool is_comment() const { return kind == TriviaKind::LineComment || kind == TriviaKind::BlockComment; }
};

struct NumberSuffix {
    bool is_unsigned = false;
    int long_count = 0;
    bool is_float = false;        // f/F on a floating constant
    bool is_long_double = false;  // l/L on a floating constant
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string lexeme;    // exact source bytes
    std::string spelling;  // lexeme with line splices removed and digraphs mapped
    Span span;
    std::vector<Trivia> leading_trivia;
    bool at_line_start = false;  // first token of its logical line
    NumberSuffix suffix;

    bool is(TokenKind k, std::string_view s) const { return kind == k && spelling == s; }
    bool is_punct(std::string_view s) const { return is(TokenKind::Punctuator, s); }
    bool is_keyword(std::string_view s) const { return is(TokenKind::Keyword, s); }
    bool is_identifier() const { return kind == TokenKind::Identifier; }
    bool is_constant() const {
        return kind == TokenKind::IntConstant || kind == TokenKind::FloatConstant ||
               kind == TokenKind::CharConstant || kind == TokenKind::StringLiteral;
    }
    bool has_newline_before() const;
    bool has_comment_before() const;
};

struct LexError {
    SourcePos pos;
    std::string message;
};

struct TokenStream {
    std::vector<Token> tokens;  // always ends with EndOfFile
    std::vector<LexError> errors;
};

bool is_c99_keyword(std::string_view word);

TokenStream tokenize(const SourceFile& file);

/// Reassembles trivia and lexemes; equals the file bytes for every stream produced by tokenize.
std::string reconstruct(const std::vector<Token>& tokens);

/// Parser-assigned roles, consumed by spacing and layout checks.
enum class TokenRole {
    None,
    UnaryPrefix,
    UnaryPostfix,
    Binary,
    Assign,
    TernaryQuestion,
    TernaryColon,
    DeclPointer,
    MemberAccess,
    Designator,
    SubscriptOpen,
    SubscriptClose,
    DeclArrayOpen,
    DeclArrayClose,
    CallOpen,
    CallClose,
    DeclParamsOpen,
    DeclParamsClose,
    DefParamsOpen,
    DefParamsClose,
    DeclGroupOpen,
    DeclGroupClose,
    CastOpen,
    CastClose,
    GroupOpen,
    GroupClose,
    ControlOpen,
    ControlClose,
    SizeofOpen,
    SizeofClose,
    BlockOpen,
    BlockClose,
    RecordOpen,
    RecordClose,
    InitOpen,
    InitClose,
    StatementSemi,
    ForSemi,
    ParamComma,
    ArgComma,
    DeclComma,
    ListComma,
    CommaOperator,
    LabelColon,
    CaseColon,
    BitfieldColon,
};

enum class OperatorContext { UnaryOp, BinaryOp, DeclPointer, DeclAddress, Other };

/// Classifies + - * & ++ -- ! ~ at `index`. Parser roles, when given, take precedence over the
/// preceding-token rule.
OperatorContext classify_operator_context(std::span<const Token> tokens, std::size_t index,
                                          std::span<const TokenRole> roles = {});

}  // namespace barrc
