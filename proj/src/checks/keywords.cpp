// Banned keywords, goto and process-exit rules (1.7.a-d, 5.2.b, 5.4.a-b, 1.1.d, 8.5.a-b).

#include <map>

#include "checks/check.hpp"

namespace barrc {

void check_keyword_bans(CheckContext& ctx) {
    const auto& toks = ctx.tokens();
    const auto& dirs = ctx.view.directives;

    // Code tokens plus macro bodies; directive names and inactive lines are excluded.
    std::vector<bool> scan(toks.size(), false);
    for (std::size_t i : ctx.tree().code_tokens) scan[i] = true;
    for (const auto& m : dirs.macros) {
        if (!ctx.view.branches.active(ctx.tok(m.name_token).span.start.line)) continue;
        for (std::size_t b : m.body) scan[b] = true;
    }

    std::vector<bool> in_typedef(toks.size(), false);
    for (const Decl* d : all_decls(ctx.tree())) {
        if (d->storage != Storage::Typedef) continue;
        for (std::size_t k : d->spec.keyword_tokens) in_typedef[k] = true;
    }

    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (!scan[i]) continue;
        const Token& t = toks[i];
        if (t.kind == TokenKind::FloatConstant) {
            ctx.report_at("5.4.a", i, "floating-point constant");
            continue;
        }
        if (t.kind != TokenKind::Keyword) continue;
        const std::string& k = t.spelling;
        if (k == "auto") ctx.report_at("1.7.a", i, "'auto' keyword");
        else if (k == "register") ctx.report_at("1.7.b", i, "'register' keyword");
        else if (k == "short" || k == "long") ctx.report_at("5.2.b", i, "'" + k + "' keyword");
        else if (k == "continue") ctx.report_at("1.7.d", i, "'continue' statement");
        else if (k == "float" || k == "double") {
            ctx.report_at("5.4.a", i, "floating-point type '" + k + "'");
            if (!in_typedef[i]) ctx.report_at("5.4.b", i, "use float32_t, float64_t or float128_t instead of '" + k + "'");
        }
    }

    for (const auto& m : dirs.macros) {
        if (c99_keywords().count(m.name)) ctx.report_at("1.1.d", m.name_token, "macro named after keyword '" + m.name + "'");
    }
}

namespace {

struct GotoScan {
    CheckContext& ctx;
    // Labels per compound, with their token index.
    std::map<const Stmt*, std::vector<std::pair<std::string, std::size_t>>> labels;
    std::map<std::string, std::size_t> all_labels;

    void collect(const Stmt& s) {
        walk_stmt(s, [&](const Stmt& x) {
            if (x.kind != StmtKind::Compound) return;
            for (const auto& k : x.children) {
                if (k->kind == StmtKind::Label) {
                    labels[&x].emplace_back(k->label, k->keyword_token);
                    all_labels.emplace(k->label, k->keyword_token);
                }
            }
        });
        // Labelled statements outside a block still count as defined.
        walk_stmt(s, [&](const Stmt& x) {
            if (x.kind == StmtKind::Label) all_labels.emplace(x.label, x.keyword_token);
        });
    }

    void check(const Stmt& s, std::vector<const Stmt*>& blocks) {
        if (s.kind == StmtKind::Compound) blocks.push_back(&s);
        if (s.kind == StmtKind::Goto) report(s, blocks);
        if (s.for_init) check(*s.for_init, blocks);
        for (const auto& k : s.children) {
            if (k) check(*k, blocks);
        }
        if (s.kind == StmtKind::Compound) blocks.pop_back();
    }

    void report(const Stmt& g, const std::vector<const Stmt*>& blocks) {
        if (!all_labels.count(g.label)) {
            Diagnostic d;
            d.rule = ToolRule::Parse;
            d.path = ctx.view.path;
            d.span = ctx.tok(g.keyword_token).span;
            d.message = "goto to undefined label '" + g.label + "'";
            d.severity = Severity::ToolError;
            ctx.out.push_back(std::move(d));
        }
        if (ctx.config.goto_policy == GotoPolicy::ForwardOnly) {
            for (const Stmt* b : blocks) {
                auto it = labels.find(b);
                if (it == labels.end()) continue;
                for (const auto& [name, tok] : it->second) {
                    if (name == g.label && tok > g.keyword_token) return;
                }
            }
        }
        std::string msg = ctx.config.goto_policy == GotoPolicy::ForwardOnly
                              ? "goto '" + g.label + "' does not jump forward within the same or an enclosing block"
                              : "goto statement";
        if (ctx.on("1.7.c")) {
            auto* d = ctx.report_at("1.7.c", g.keyword_token, msg);
            if (ctx.on("8.5.a")) d->also.push_back(gid("8.5.a"));
        } else {
            ctx.report_at("8.5.a", g.keyword_token, msg);
        }
    }
};

}  // namespace

void check_goto_rules(CheckContext& ctx) {
    for (const auto& item : ctx.tree().items) {
        if (!item.function || !item.function->body) continue;
        GotoScan scan{ctx, {}, {}};
        scan.collect(*item.function->body);
        std::vector<const Stmt*> blocks;
        scan.check(*item.function->body, blocks);

        if (!ctx.on("8.5.b")) continue;
        walk_stmt(*item.function->body, [&](const Stmt& s) {
            for (const Expr* root : stmt_exprs(s)) {
                walk_expr(*root, [&](const Expr& e) {
                    if (e.kind != ExprKind::Call || e.children.empty() || e.children[0]->kind != ExprKind::Ident) return;
                    const std::string& n = e.children[0]->text;
                    if (n == "abort" || n == "exit" || n == "setjmp" || n == "longjmp") {
                        ctx.report_at("8.5.b", e.children[0]->first_token, "call to " + n + "()");
                    }
                });
            }
        });
    }
}

}  // namespace barrc
