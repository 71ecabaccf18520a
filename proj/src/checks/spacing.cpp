// Horizontal spacing around keywords, operators and punctuation (3.1.a-m).

#include "checks/check.hpp"

namespace barrc {

namespace {

struct Spacer {
    CheckContext& ctx;
    std::vector<bool> code;

    /// Requires exactly `want` spaces between tokens a and b when they share a line and only spaces
    /// separate them. The finding is placed at token `at`.
    void require(std::string_view id, std::size_t a, std::size_t b, int want, std::size_t at, const std::string& msg) {
        const auto& toks = ctx.tokens();
        if (a >= toks.size() || b >= toks.size() || a >= b) return;
        const Token& ta = toks[a];
        const Token& tb = toks[b];
        if (tb.kind == TokenKind::EndOfFile || !same_line(ta, tb)) return;
        int have = gap_spaces(ta, tb);
        if (have < 0 || have == want) return;
        if (auto* d = ctx.report(gid(id), toks[at].span, msg)) {
            d->fix.push_back({ta.span.end, tb.span.begin, std::string(static_cast<std::size_t>(want), ' '), gid(id)});
        }
    }

    /// Neighbouring code tokens; kNoToken at the edges or across a directive.
    std::size_t prev(std::size_t i) const { return i > 0 && code[i - 1] ? i - 1 : kNoToken; }
    std::size_t next(std::size_t i) const { return i + 1 < code.size() && code[i + 1] ? i + 1 : kNoToken; }

    void around(std::string_view id, std::size_t i, int want, const std::string& what) {
        std::string adj = want ? "one space" : "no space";
        if (std::size_t p = prev(i); p != kNoToken) require(id, p, i, want, i, "expected " + adj + " before " + what);
        if (std::size_t n = next(i); n != kNoToken) require(id, i, n, want, n, "expected " + adj + " after " + what);
    }
};

bool is_one_of(const Token& t, std::initializer_list<std::string_view> spellings) {
    for (auto s : spellings) {
        if (t.spelling == s) return true;
    }
    return false;
}

}  // namespace

void check_spacing_rules(CheckContext& ctx) {
    const auto& toks = ctx.tokens();
    Spacer sp{ctx, std::vector<bool>(toks.size(), false)};
    for (std::size_t i : ctx.tree().code_tokens) sp.code[i] = true;

    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (!sp.code[i]) continue;
        const Token& t = toks[i];
        const std::string quoted = "'" + t.spelling + "'";
        std::size_t p = sp.prev(i), n = sp.next(i);

        if (t.kind == TokenKind::Keyword && is_one_of(t, {"if", "while", "for", "switch", "return"})) {
            if (n != kNoToken && !(t.spelling == "return" && toks[n].is_punct(";"))) {
                sp.require("3.1.a", i, n, 1, n, "expected one space after " + quoted);
            }
            continue;
        }

        switch (ctx.role(i)) {
            case TokenRole::Assign:
                sp.around("3.1.b", i, 1, quoted);
                break;
            case TokenRole::Binary:
                sp.around("3.1.c", i, 1, quoted);
                break;
            case TokenRole::UnaryPrefix:
                if (n != kNoToken) {
                    bool ptr = t.spelling == "*" || t.spelling == "&";
                    sp.require(ptr ? "3.1.e" : "3.1.d", i, n, 0, i, "unexpected space after unary " + quoted);
                }
                break;
            case TokenRole::UnaryPostfix:
                if (p != kNoToken) sp.require("3.1.d", p, i, 0, i, "unexpected space before " + quoted);
                break;
            case TokenRole::DeclPointer:
                // `char ** pp`, `(void *)`, `(* p_fn)` and unnamed parameters have no neighbour to space from.
                if (p != kNoToken && !toks[p].is_punct("*") && !toks[p].is_punct("(")) {
                    sp.require("3.1.e", p, i, 1, i, "expected one space before pointer '*'");
                }
                if (n != kNoToken && !toks[n].is_punct("*") && !toks[n].is_punct(")") && !toks[n].is_punct(",") &&
                    !toks[n].is_punct("[")) {
                    sp.require("3.1.e", i, n, 1, n, "expected one space after pointer '*'");
                }
                break;
            case TokenRole::TernaryQuestion:
            case TokenRole::TernaryColon:
                sp.around("3.1.f", i, 1, quoted);
                break;
            case TokenRole::MemberAccess:
                sp.around("3.1.g", i, 0, quoted);
                break;
            case TokenRole::SubscriptOpen:
            case TokenRole::DeclArrayOpen:
                sp.around("3.1.h", i, 0, "'['");
                break;
            case TokenRole::SubscriptClose:
            case TokenRole::DeclArrayClose:
                if (p != kNoToken) sp.require("3.1.h", p, i, 0, i, "unexpected space before ']'");
                break;
            case TokenRole::CallOpen:
            case TokenRole::DeclParamsOpen:
            case TokenRole::DefParamsOpen:
                if (p != kNoToken && (toks[p].is_identifier() || toks[p].is_punct(")"))) {
                    sp.require("3.1.j", p, i, 0, i, "unexpected space between function name and '('");
                }
                if (ctx.role(i) == TokenRole::CallOpen && n != kNoToken && !toks[n].is_punct(")")) {
                    sp.require("3.1.i", i, n, 0, n, "unexpected space after '('");
                }
                break;
            case TokenRole::GroupOpen:
            case TokenRole::CastOpen:
            case TokenRole::ControlOpen:
            case TokenRole::SizeofOpen:
                if (n != kNoToken && !toks[n].is_punct(";")) sp.require("3.1.i", i, n, 0, n, "unexpected space after '('");
                break;
            case TokenRole::GroupClose:
            case TokenRole::CastClose:
            case TokenRole::ControlClose:
            case TokenRole::SizeofClose:
            case TokenRole::CallClose:
                if (p != kNoToken && !toks[p].is_punct("(") && !toks[p].is_punct(";")) {
                    sp.require("3.1.i", p, i, 0, i, "unexpected space before ')'");
                }
                break;
            case TokenRole::ParamComma:
            case TokenRole::ArgComma:
                if (n != kNoToken) sp.require("3.1.k", i, n, 1, n, "expected one space after ','");
                break;
            case TokenRole::ForSemi:
                if (n != kNoToken && !toks[n].is_punct(";") && !toks[n].is_punct(")")) {
                    sp.require("3.1.l", i, n, 1, n, "expected one space after ';' in for header");
                }
                break;
            case TokenRole::StatementSemi:
                if (p != kNoToken && ctx.role(p) != TokenRole::ControlClose && !toks[p].is_keyword("else") &&
                    !toks[p].is_keyword("do") && !toks[p].is_punct(":") && !toks[p].is_punct("{") &&
                    !toks[p].is_punct("}") && !toks[p].is_punct(";")) {
                    sp.require("3.1.m", p, i, 0, i, "unexpected space before ';'");
                }
                break;
            default:
                break;
        }
    }
}

}  // namespace barrc
