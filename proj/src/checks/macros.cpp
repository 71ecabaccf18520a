// Macro rules (6.3.b, 1.1.c).

#include <map>

#include "checks/check.hpp"

namespace barrc {

namespace {

bool outer_parens(const std::vector<const Token*>& body) {
    if (body.size() < 2 || !body.front()->is_punct("(") || !body.back()->is_punct(")")) return false;
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i]->is_punct("(")) ++depth;
        if (body[i]->is_punct(")")) --depth;
        if (depth == 0 && i + 1 < body.size()) return false;
    }
    return depth == 0;
}

bool do_while_zero(const std::vector<const Token*>& b) {
    std::size_t n = b.size();
    if (n < 6 || !b[0]->is_keyword("do")) return false;
    return b[n - 4]->is_keyword("while") && b[n - 3]->is_punct("(") && b[n - 2]->spelling == "0" && b[n - 1]->is_punct(")");
}

// `#x` or `a ## b`: the result is a single token, so there is nothing to parenthesize.
bool only_stringify_or_paste(const std::vector<const Token*>& b) {
    bool op = false;
    for (const Token* t : b) {
        if (t->is_punct("#") || t->is_punct("##") || t->is_punct("%:") || t->is_punct("%:%:")) op = true;
        else if (t->kind == TokenKind::Punctuator) return false;
    }
    return op;
}

}  // namespace

void check_macro_rules(CheckContext& ctx) {
    const auto& toks = ctx.tokens();
    for (const auto& m : ctx.view.directives.macros) {
        if (!ctx.view.branches.active(ctx.tok(m.name_token).span.start.line) || !m.is_function_like) continue;
        std::vector<const Token*> body;
        for (std::size_t b : m.body) body.push_back(&toks[b]);

        if (body.size() > 1 && !outer_parens(body) && !do_while_zero(body) && !only_stringify_or_paste(body)) {
            ctx.report_at("6.3.b", m.name_token, "macro body is not enclosed in parentheses");
        }

        std::set<std::string> params(m.params.begin(), m.params.end());
        if (m.variadic) params.insert("__VA_ARGS__");
        bool reported_unparenthesized = false;
        std::map<std::string, int> uses;
        for (std::size_t i = 0; i < body.size(); ++i) {
            const Token& t = *body[i];
            if (t.is_keyword("return") || t.is_keyword("goto") || t.is_keyword("break") || t.is_keyword("continue")) {
                ctx.report_at("6.3.b", m.body[i], "macro body contains '" + t.spelling + "'");
            }
            if (!t.is_identifier() || !params.count(t.spelling)) continue;
            bool stringified = i > 0 && (body[i - 1]->is_punct("#") || body[i - 1]->is_punct("##") || body[i - 1]->is_punct("%:") );
            bool pasted = i + 1 < body.size() && body[i + 1]->is_punct("##");
            if (stringified || pasted) continue;
            bool wrapped = i > 0 && i + 1 < body.size() && body[i - 1]->is_punct("(") && body[i + 1]->is_punct(")");
            if (!wrapped && !reported_unparenthesized) {
                ctx.report_at("6.3.b", m.body[i], "macro parameter '" + t.spelling + "' is not parenthesized");
                reported_unparenthesized = true;
            }
            if (++uses[t.spelling] == 2) {
                ctx.report_at("6.3.b", m.body[i], "macro parameter '" + t.spelling + "' is used more than once");
            }
        }
    }

    if (!ctx.on("1.1.c")) return;
    for (const auto& d : ctx.view.directives.directives) {
        if (d.kind == DirectiveKind::Pragma && ctx.view.branches.active(d.first_line)) {
            ctx.report_at("1.1.c", d.first_token, "#pragma directive");
        }
    }
    ParseOptions opts;
    opts.extension_patterns = ctx.config.extension_patterns;
    std::vector<bool> scan(toks.size(), false);
    for (std::size_t i : ctx.tree().code_tokens) scan[i] = true;
    for (const auto& m : ctx.view.directives.macros) {
        if (!ctx.view.branches.active(ctx.tok(m.name_token).span.start.line)) continue;
        for (std::size_t b : m.body) scan[b] = true;
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (!scan[i] || !toks[i].is_identifier()) continue;
        const std::string& w = toks[i].spelling;
        if (w == "asm" || w == "_Pragma" || matches_extension(w, opts)) {
            ctx.report_at("1.1.c", i, "compiler extension '" + w + "'");
        }
    }
}

}  // namespace barrc
