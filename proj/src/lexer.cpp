#include "barrc/lexer.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace barrc {

namespace {

constexpr std::array<std::string_view, 37> kC99Keywords = {
    "auto",     "break",  "case",     "char",   "const",    "continue", "default",  "do",
    "double",   "else",   "enum",     "extern", "float",    "for",      "goto",     "if",
    "inline",   "int",    "long",     "register", "restrict", "return", "short",    "signed",
    "sizeof",   "static", "struct",   "switch", "typedef",  "union",    "unsigned", "void",
    "volatile", "while",  "_Bool",    "_Complex", "_Imaginary",
};

// Longest first so that the first match is the maximal munch.
constexpr std::array<std::string_view, 54> kPunctuators = {
    "%:%:", "...", "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&",
    "||",   "*=",  "/=",  "%=",  "+=", "-=", "&=", "^=", "|=", "##", "<:", ":>", "<%", "%>",
    "%:",   "[",   "]",   "(",   ")",  "{",  "}",  ".",  "&",  "*",  "+",  "-",  "~",  "!",
    "/",    "%",   "<",   ">",   "^",  "|",  "?",  ":",  ";",  "=",  ",",  "#",
};

std::string_view digraph_spelling(std::string_view p) {
    if (p == "<:") return "[";
    if (p == ":>") return "]";
    if (p == "<%") return "{";
    if (p == "%>") return "}";
    if (p == "%:") return "#";
    if (p == "%:%:") return "##";
    return p;
}

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_control_byte(unsigned char c) { return c < 0x20 || c == 0x7F; }

class Lexer {
public:
    explicit Lexer(const SourceFile& file) : file_(file), b_(file.bytes()), n_(b_.size()) {}

    TokenStream run() {
        TokenStream out;
        bool line_start = true;
        while (true) {
            std::vector<Trivia> trivia;
            bool saw_newline = lex_trivia(trivia);
            if (saw_newline) {
                line_start = true;
                directive_ = DirectiveState::None;
            }
            Token tok;
            tok.leading_trivia = std::move(trivia);
            tok.at_line_start = line_start;
            if (pos_ >= n_) {
                tok.kind = TokenKind::EndOfFile;
                tok.span = file_.span_of(n_, n_);
                out.tokens.push_back(std::move(tok));
                break;
            }
            lex_token(tok);
            line_start = false;
            out.tokens.push_back(std::move(tok));
        }
        out.errors = std::move(errors_);
        return out;
    }

private:
    enum class DirectiveState { None, AfterHash, ExpectHeader, InBody };

    // Length of a backslash-newline at p, or 0.
    std::size_t splice_at(std::size_t p) const {
        if (p + 1 < n_ && b_[p] == '\\') {
            if (b_[p + 1] == '\n') return 2;
            if (b_[p + 1] == '\r') return (p + 2 < n_ && b_[p + 2] == '\n') ? 3 : 2;
        }
        return 0;
    }

    std::size_t skip_splices(std::size_t p) const {
        while (std::size_t len = splice_at(p)) {
            p += len;
        }
        return p;
    }

    std::size_t newline_at(std::size_t p) const {
        if (p < n_ && b_[p] == '\n') return 1;
        if (p < n_ && b_[p] == '\r') return (p + 1 < n_ && b_[p + 1] == '\n') ? 2 : 1;
        return 0;
    }

    std::size_t end_of_line(std::size_t p) const {
        while (p < n_ && b_[p] != '\n' && b_[p] != '\r') ++p;
        return p;
    }

    void push_trivia(std::vector<Trivia>& out, TriviaKind kind, std::size_t begin, std::size_t end) {
        out.push_back(Trivia{kind, b_.substr(begin, end - begin), file_.span_of(begin, end)});
    }

    bool lex_trivia(std::vector<Trivia>& out) {
        bool newline = false;
        while (pos_ < n_) {
            const std::size_t start = pos_;
            const auto c = static_cast<unsigned char>(b_[pos_]);
            if (c == ' ' || c == '\t') {
                while (pos_ < n_ && (b_[pos_] == ' ' || b_[pos_] == '\t')) ++pos_;
                push_trivia(out, TriviaKind::Spaces, start, pos_);
            } else if (std::size_t nl = newline_at(pos_)) {
                pos_ += nl;
                push_trivia(out, TriviaKind::Newline, start, pos_);
                newline = true;
            } else if (c == '\f') {
                ++pos_;
                push_trivia(out, TriviaKind::FormFeed, start, pos_);
            } else if (std::size_t sp = splice_at(pos_)) {
                pos_ += sp;
                push_trivia(out, TriviaKind::LineSplice, start, pos_);
            } else if (c == '/' && pos_ + 1 < n_ && b_[pos_ + 1] == '/') {
                lex_line_comment();
                push_trivia(out, TriviaKind::LineComment, start, pos_);
            } else if (c == '/' && pos_ + 1 < n_ && b_[pos_ + 1] == '*') {
                lex_block_comment();
                push_trivia(out, TriviaKind::BlockComment, start, pos_);
            } else if (is_control_byte(c)) {
                ++pos_;
                push_trivia(out, TriviaKind::OtherControl, start, pos_);
            } else {
                break;
            }
        }
        return newline;
    }

    void lex_line_comment() {
        pos_ += 2;
        while (pos_ < n_) {
            if (std::size_t sp = splice_at(pos_)) {
                pos_ += sp;
                continue;
            }
            if (b_[pos_] == '\n' || b_[pos_] == '\r') break;
            ++pos_;
        }
    }

    void lex_block_comment() {
        const std::size_t start = pos_;
        pos_ += 2;
        while (pos_ + 1 < n_) {
            if (b_[pos_] == '*' && b_[pos_ + 1] == '/') {
                pos_ += 2;
                return;
            }
            ++pos_;
        }
        errors_.push_back({file_.pos_of(start), "unterminated block comment"});
        pos_ = end_of_line(start);
    }

    void lex_token(Token& tok) {
        const std::size_t start = pos_;
        const auto c = static_cast<unsigned char>(b_[pos_]);
        if (directive_ == DirectiveState::ExpectHeader && c == '<') {
            std::size_t close = pos_ + 1;
            std::size_t eol = end_of_line(pos_);
            while (close < eol && b_[close] != '>') ++close;
            if (close < eol) {
                pos_ = close + 1;
                finish(tok, TokenKind::HeaderName, start);
                directive_ = DirectiveState::InBody;
                return;
            }
        }
        if (c == 'L' && pos_ + 1 < n_ && (b_[pos_ + 1] == '"' || b_[pos_ + 1] == '\'')) {
            ++pos_;
            lex_quoted(tok, start, b_[pos_]);
        } else if (is_ident_start(c)) {
            lex_identifier(tok, start);
        } else if (is_digit(c) || (c == '.' && pos_ + 1 < n_ && is_digit(static_cast<unsigned char>(b_[pos_ + 1])))) {
            lex_number(tok, start);
        } else if (c == '"' || c == '\'') {
            lex_quoted(tok, start, static_cast<char>(c));
        } else if (!lex_punctuator(tok, start)) {
            ++pos_;
            while (pos_ < n_ && static_cast<unsigned char>(b_[pos_]) >= 0x80) ++pos_;
            finish(tok, TokenKind::Unknown, start);
        }
        advance_directive_state(tok);
    }

    void advance_directive_state(Token& tok) {
        if (tok.kind == TokenKind::Punctuator && tok.spelling == "#" && tok.at_line_start) {
            tok.kind = TokenKind::PpDirectiveMarker;
            directive_ = DirectiveState::AfterHash;
            return;
        }
        if (directive_ == DirectiveState::AfterHash) {
            directive_ = (tok.kind == TokenKind::Identifier &&
                          (tok.spelling == "include" || tok.spelling == "include_next"))
                             ? DirectiveState::ExpectHeader
                             : DirectiveState::InBody;
        } else if (directive_ == DirectiveState::ExpectHeader) {
            directive_ = DirectiveState::InBody;
        }
    }

    void finish(Token& tok, TokenKind kind, std::size_t start) {
        tok.kind = kind;
        tok.lexeme = b_.substr(start, pos_ - start);
        if (tok.spelling.empty()) {
            tok.spelling = tok.lexeme;
        }
        tok.span = file_.span_of(start, pos_);
    }

    // Consumes identifier/number continuation characters across line splices.
    template <typename Pred>
    void consume_while(std::string& spelling, Pred pred) {
        while (true) {
            std::size_t next = skip_splices(pos_);
            if (next < n_ && pred(next)) {
                spelling.push_back(b_[next]);
                pos_ = next + 1;
            } else {
                break;
            }
        }
    }

    void lex_identifier(Token& tok, std::size_t start) {
        std::string spelling(1, b_[pos_]);
        ++pos_;
        consume_while(spelling, [&](std::size_t p) { return is_ident_char(static_cast<unsigned char>(b_[p])); });
        tok.spelling = spelling;
        finish(tok, is_c99_keyword(spelling) ? TokenKind::Keyword : TokenKind::Identifier, start);
    }

    void lex_number(Token& tok, std::size_t start) {
        std::string spelling(1, b_[pos_]);
        ++pos_;
        consume_while(spelling, [&](std::size_t p) {
            auto ch = static_cast<unsigned char>(b_[p]);
            if (is_ident_char(ch) || ch == '.') return true;
            if ((ch == '+' || ch == '-') && !spelling.empty()) {
                char prev = static_cast<char>(std::tolower(static_cast<unsigned char>(spelling.back())));
                bool hex = spelling.size() > 1 && spelling[0] == '0' && (spelling[1] == 'x' || spelling[1] == 'X');
                return hex ? prev == 'p' : (prev == 'e' || prev == 'p');
            }
            return false;
        });
        tok.spelling = spelling;
        classify_number(tok);
        finish(tok, tok.kind, start);
    }

    static void classify_number(Token& tok) {
        const std::string& s = tok.spelling;
        bool hex = s.size() > 1 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
        bool is_float = s.find('.') != std::string::npos;
        if (hex) {
            is_float = is_float || s.find_first_of("pP") != std::string::npos;
        } else {
            is_float = is_float || s.find_first_of("eE") != std::string::npos;
        }
        // Suffix letters trail the digits.
        std::size_t end = s.size();
        while (end > 0) {
            char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(s[end - 1])));
            bool suffix_char = ch == 'u' || ch == 'l' || (is_float && ch == 'f');
            if (!suffix_char) break;
            --end;
        }
        std::string suffix = s.substr(end);
        if (is_float) {
            tok.kind = TokenKind::FloatConstant;
            for (char ch : suffix) {
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                if (ch == 'f') tok.suffix.is_float = true;
                if (ch == 'l') tok.suffix.is_long_double = true;
            }
        } else {
            tok.kind = TokenKind::IntConstant;
            for (char ch : suffix) {
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
                if (ch == 'u') tok.suffix.is_unsigned = true;
                if (ch == 'l') ++tok.suffix.long_count;
            }
        }
    }

    void lex_quoted(Token& tok, std::size_t start, char quote) {
        std::string spelling = b_.substr(start, pos_ - start);
        spelling.push_back(quote);
        ++pos_;
        bool closed = false;
        while (true) {
            pos_ = skip_splices(pos_);
            if (pos_ >= n_ || b_[pos_] == '\n' || b_[pos_] == '\r') break;
            char ch = b_[pos_];
            spelling.push_back(ch);
            ++pos_;
            if (ch == quote) {
                closed = true;
                break;
            }
            if (ch == '\\') {
                pos_ = skip_splices(pos_);
                if (pos_ < n_ && b_[pos_] != '\n' && b_[pos_] != '\r') {
                    spelling.push_back(b_[pos_]);
                    ++pos_;
                }
            }
        }
        if (!closed) {
            errors_.push_back({file_.pos_of(start),
                               quote == '"' ? "unterminated string literal" : "unterminated character constant"});
        }
        tok.spelling = spelling;
        finish(tok, quote == '"' ? TokenKind::StringLiteral : TokenKind::CharConstant, start);
    }

    bool lex_punctuator(Token& tok, std::size_t start) {
        std::string_view rest = std::string_view(b_).substr(pos_);
        for (auto p : kPunctuators) {
            if (rest.substr(0, p.size()) == p) {
                pos_ += p.size();
                tok.spelling = std::string(digraph_spelling(p));
                finish(tok, TokenKind::Punctuator, start);
                return true;
            }
        }
        return false;
    }

    const SourceFile& file_;
    const std::string& b_;
    const std::size_t n_;
    std::size_t pos_ = 0;
    DirectiveState directive_ = DirectiveState::None;
    std::vector<LexError> errors_;
};

}  // namespace

bool Token::has_newline_before() const {
    return std::any_of(leading_trivia.begin(), leading_trivia.end(),
                       [](const Trivia& t) { return t.kind == TriviaKind::Newline || t.kind == TriviaKind::LineSplice; });
}

bool Token::has_comment_before() const {
    return std::any_of(leading_trivia.begin(), leading_trivia.end(), [](const Trivia& t) { return t.is_comment(); });
}

bool is_c99_keyword(std::string_view word) {
    return std::find(kC99Keywords.begin(), kC99Keywords.end(), word) != kC99Keywords.end();
}

TokenStream tokenize(const SourceFile& file) { return Lexer(file).run(); }

std::string reconstruct(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& tok : tokens) {
        for (const auto& t : tok.leading_trivia) {
            out += t.text;
        }
        out += tok.lexeme;
    }
    return out;
}

OperatorContext classify_operator_context(std::span<const Token> tokens, std::size_t index,
                                          std::span<const TokenRole> roles) {
    if (index >= tokens.size() || tokens[index].kind != TokenKind::Punctuator) {
        return OperatorContext::Other;
    }
    const std::string& sym = tokens[index].spelling;
    static constexpr std::array<std::string_view, 8> kAmbiguous = {"+", "-", "*", "&", "++", "--", "!", "~"};
    if (std::find(kAmbiguous.begin(), kAmbiguous.end(), sym) == kAmbiguous.end()) {
        return OperatorContext::Other;
    }
    if (index < roles.size()) {
        switch (roles[index]) {
            case TokenRole::DeclPointer:
                return sym == "&" ? OperatorContext::DeclAddress : OperatorContext::DeclPointer;
            case TokenRole::UnaryPrefix:
            case TokenRole::UnaryPostfix:
                return OperatorContext::UnaryOp;
            case TokenRole::Binary:
                return OperatorContext::BinaryOp;
            default:
                break;
        }
    }
    if (sym == "++" || sym == "--" || sym == "!" || sym == "~") {
        return OperatorContext::UnaryOp;
    }
    if (index == 0) {
        return OperatorContext::UnaryOp;
    }
    const Token& prev = tokens[index - 1];
    bool operand_before = prev.kind == TokenKind::Identifier || prev.kind == TokenKind::IntConstant ||
                          prev.kind == TokenKind::FloatConstant || prev.kind == TokenKind::CharConstant ||
                          prev.kind == TokenKind::StringLiteral || prev.is_punct(")") || prev.is_punct("]");
    return operand_before ? OperatorContext::BinaryOp : OperatorContext::UnaryOp;
}

}  // namespace barrc
