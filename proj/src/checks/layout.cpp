// Alignment, indentation and brace placement (3.2.a-d, 3.4.a-b, 8.3.a, 1.3.a-b, 8.4.d).

#include "checks/check.hpp"

namespace barrc {

namespace {

int line_of(const CheckContext& ctx, std::size_t tok) { return ctx.tok(tok).span.start.line; }
int end_line_of(const CheckContext& ctx, std::size_t tok) { return ctx.tok(tok).span.stop.line; }
int col_of(const CheckContext& ctx, std::size_t tok) { return ctx.tok(tok).span.start.column; }

/// Column of the first token on the line holding `tok`.
int line_indent(const CheckContext& ctx, std::size_t tok) {
    std::size_t f = first_token_on_line(ctx.tokens(), line_of(ctx, tok));
    return f == kNoToken ? col_of(ctx, tok) : col_of(ctx, f);
}

bool starts_line(const CheckContext& ctx, std::size_t tok) {
    return first_token_on_line(ctx.tokens(), line_of(ctx, tok)) == tok;
}

struct RunItem {
    int first_line = 0;
    int last_line = 0;
    std::size_t key = kNoToken;  // token whose column must agree; kNoToken ends the run
};

void check_runs(CheckContext& ctx, std::string_view id, const std::vector<RunItem>& items, const std::string& what) {
    std::size_t i = 0;
    while (i < items.size()) {
        if (items[i].key == kNoToken) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < items.size() && items[j].key != kNoToken && items[j].first_line == items[j - 1].last_line + 1) ++j;
        int col = col_of(ctx, items[i].key);
        for (std::size_t k = i + 1; k < j; ++k) {
            if (col_of(ctx, items[k].key) != col) {
                ctx.report_at(id, items[k].key, what + " not aligned with the line above");
                break;
            }
        }
        i = j;
    }
}

std::size_t aligned_name(const Decl& d) {
    if (d.storage == Storage::Typedef || d.declarators.empty()) return kNoToken;
    const Declarator& dr = d.declarators.front();
    if (dr.is_function || dr.name_token == kNoToken) return kNoToken;
    return dr.name_token;
}

RunItem decl_item(const CheckContext& ctx, const Decl& d) {
    return {line_of(ctx, d.first_token), end_line_of(ctx, d.last_token), aligned_name(d)};
}

RunItem stmt_item(const CheckContext& ctx, const Stmt& s, std::string_view id) {
    RunItem it{line_of(ctx, s.first_token), end_line_of(ctx, s.last_token), kNoToken};
    if (id == "3.2.a" && s.kind == StmtKind::Decl && s.decl) it.key = aligned_name(*s.decl);
    if (id == "3.2.c" && s.kind == StmtKind::Expr && s.expr && s.expr->kind == ExprKind::Assign) it.key = s.expr->op_token;
    return it;
}

void record_runs(CheckContext& ctx, const Decl& d) {
    if (!d.spec.body) return;
    std::vector<RunItem> members;
    for (const auto& m : d.spec.body->members) {
        members.push_back(decl_item(ctx, m));
        record_runs(ctx, m);
    }
    check_runs(ctx, "3.2.b", members, "member name");
}

bool is_loop(StmtKind k) { return k == StmtKind::While || k == StmtKind::DoWhile || k == StmtKind::For; }

bool has_comment_inside(const CheckContext& ctx, const Stmt& compound) {
    for (std::size_t t = compound.keyword_token + 1; t <= compound.last_token && t < ctx.tokens().size(); ++t) {
        if (ctx.tok(t).has_comment_before()) return true;
    }
    return false;
}

void check_switch(CheckContext& ctx, const Stmt& sw) {
    const Stmt* body = sw.body();
    if (!body || body->kind != StmtKind::Compound) return;
    int width = ctx.config.indent_width;
    int label_col = -1;
    int case_col = -1;
    const auto& kids = body->children;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        const Stmt& s = *kids[i];
        if (s.kind == StmtKind::Case || s.kind == StmtKind::Default) {
            case_col = col_of(ctx, s.first_token);
            if (label_col < 0) {
                label_col = case_col;
            } else if (case_col != label_col) {
                ctx.report_at("3.4.b", s.first_token, "case label not aligned with the first label of the switch");
            }
            continue;
        }
        if (case_col < 0 || !starts_line(ctx, s.first_token)) continue;
        bool closes = s.kind == StmtKind::Break &&
                      (i + 1 == kids.size() || kids[i + 1]->kind == StmtKind::Case || kids[i + 1]->kind == StmtKind::Default);
        if (closes) {
            if (col_of(ctx, s.first_token) != case_col) {
                ctx.report_at("8.3.a", s.first_token, "break not aligned with its case label");
            }
            continue;
        }
        if (s.kind == StmtKind::Label) continue;
        if (col_of(ctx, s.first_token) != case_col + width) {
            ctx.report_at("3.4.b", s.first_token,
                          "case contents should be indented " + std::to_string(width) + " columns from the label");
        }
    }
}

void check_compound(CheckContext& ctx, const Stmt& c, bool switch_body) {
    std::vector<RunItem> decls, assigns;
    for (const auto& k : c.children) {
        decls.push_back(stmt_item(ctx, *k, "3.2.a"));
        assigns.push_back(stmt_item(ctx, *k, "3.2.c"));
        if (k->decl) record_runs(ctx, *k->decl);
    }
    check_runs(ctx, "3.2.a", decls, "variable name");
    check_runs(ctx, "3.2.c", assigns, "assignment operator");

    // 3.4.a: statements starting a line sit one step in from the brace's line.
    int want = line_indent(ctx, c.keyword_token) + ctx.config.indent_width;
    for (const auto& k : c.children) {
        if (k->kind == StmtKind::Label || k->kind == StmtKind::Error) continue;
        if (switch_body && k->kind != StmtKind::Case && k->kind != StmtKind::Default) continue;
        if (!starts_line(ctx, k->first_token)) continue;
        if (col_of(ctx, k->first_token) != want) {
            ctx.report_at("3.4.a", k->first_token, "expected indentation to column " + std::to_string(want));
        }
    }

    // 1.3.b: braces alone on their lines, closing brace under the opening line's indentation.
    std::size_t open = c.keyword_token, close = c.last_token;
    const auto& toks = ctx.tokens();
    auto alone = [&](std::size_t t, bool allow_while_after) {
        bool before = t > 0 && toks[t - 1].kind != TokenKind::EndOfFile && toks[t - 1].span.stop.line == line_of(ctx, t) &&
                      !ctx.view.directives.in_directive(t - 1);
        bool after = t + 1 < toks.size() && toks[t + 1].kind != TokenKind::EndOfFile &&
                     line_of(ctx, t + 1) == end_line_of(ctx, t) && !(allow_while_after && toks[t + 1].is_keyword("while"));
        return !before && !after;
    };
    if (!alone(open, false)) ctx.report_at("1.3.b", open, "'{' is not alone on its line");
    if (close < toks.size() && toks[close].is_punct("}")) {
        if (!alone(close, true)) {
            ctx.report_at("1.3.b", close, "'}' is not alone on its line");
        } else if (col_of(ctx, close) != line_indent(ctx, open)) {
            ctx.report_at("1.3.b", close, "'}' is not in the same column as its '{'");
        }
    }
}

void visit(CheckContext& ctx, const Stmt& s, bool switch_body) {
    if (s.kind == StmtKind::Compound) check_compound(ctx, s, switch_body);
    if (s.kind == StmtKind::Switch) check_switch(ctx, s);

    // 1.3.a and 8.4.d
    auto braced = [](const Stmt* b) { return b && b->kind == StmtKind::Compound; };
    if (s.kind == StmtKind::If) {
        if (!braced(s.then_branch())) ctx.report_at("1.3.a", s.keyword_token, "if body is not enclosed in braces");
        const Stmt* e = s.else_branch();
        if (e && !braced(e) && e->kind != StmtKind::If) ctx.report_at("1.3.a", s.else_token, "else body is not enclosed in braces");
    } else if (s.kind == StmtKind::Switch) {
        if (!braced(s.body())) ctx.report_at("1.3.a", s.keyword_token, "switch body is not enclosed in braces");
    } else if (is_loop(s.kind)) {
        const Stmt* b = s.body();
        if (!braced(b)) ctx.report_at("1.3.a", s.keyword_token, "loop body is not enclosed in braces");
        if (b && b->kind == StmtKind::Empty) {
            ctx.report_at("8.4.d", s.keyword_token, "empty loop body needs braces around an explanatory comment");
        } else if (b && b->kind == StmtKind::Compound && b->children.empty() && !has_comment_inside(ctx, *b)) {
            ctx.report_at("8.4.d", s.keyword_token, "empty loop body needs a comment explaining why");
        }
    }

    bool sw = s.kind == StmtKind::Switch;
    if (s.for_init) visit(ctx, *s.for_init, false);
    for (const auto& k : s.children) {
        if (k) visit(ctx, *k, sw && k.get() == s.body());
    }
}

}  // namespace

void check_layout_rules(CheckContext& ctx) {
    std::vector<RunItem> top;
    for (const auto& item : ctx.tree().items) {
        if (item.decl) {
            top.push_back(decl_item(ctx, *item.decl));
            record_runs(ctx, *item.decl);
        } else {
            top.push_back({line_of(ctx, item.first_token), end_line_of(ctx, item.last_token), kNoToken});
            if (item.function->body) visit(ctx, *item.function->body, false);
        }
    }
    check_runs(ctx, "3.2.a", top, "variable name");

    if (ctx.on("3.2.d")) {
        const SourceFile& f = ctx.view.file;
        for (const auto& d : ctx.view.directives.directives) {
            if (d.hash_column == 1) continue;
            const Token& hash = ctx.tok(d.first_token);
            std::size_t line_start = f.line(hash.span.start.line).offset;
            std::string_view lead(f.bytes().data() + line_start, hash.span.begin - line_start);
            auto* diag = ctx.report("3.2.d", hash.span, "'#' of a preprocessor directive is not in column 1");
            if (diag && lead.find_first_not_of(" \t") == std::string_view::npos) {
                diag->fix.push_back({line_start, hash.span.begin, "", gid("3.2.d")});
            }
        }
    }
}

}  // namespace barrc
