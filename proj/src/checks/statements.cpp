// Statement structure rules (3.3.a-b, 6.2.c, 8.2.a-d, 8.3.b-c, 8.4.a-c).

#include <cstdlib>

#include "checks/check.hpp"

namespace barrc {

namespace {

bool is_control(StmtKind k) {
    return k == StmtKind::If || k == StmtKind::Switch || k == StmtKind::While || k == StmtKind::DoWhile ||
           k == StmtKind::For;
}

bool is_label(StmtKind k) { return k == StmtKind::Case || k == StmtKind::Default || k == StmtKind::Label; }

struct StmtChecker {
    CheckContext& ctx;

    int first_line(const Stmt& s) const { return ctx.tok(s.first_token).span.start.line; }
    int last_line(const Stmt& s) const { return ctx.tok(s.last_token).span.stop.line; }

    /// First line of a statement including comments on their own lines just above it.
    int lead_line(const Stmt& s) const {
        const Token& t = ctx.tok(s.first_token);
        int prev_line = s.first_token > 0 ? ctx.tok(s.first_token - 1).span.stop.line : 0;
        for (const auto& tr : t.leading_trivia) {
            if (tr.is_comment() && tr.span.start.line > prev_line) return tr.span.start.line;
        }
        return t.span.start.line;
    }

    void compound(const Stmt& c) {
        const auto& kids = c.children;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const Stmt& s = *kids[i];
            if (s.kind == StmtKind::Error) continue;
            const Stmt* prev = i > 0 ? kids[i - 1].get() : nullptr;
            if (prev && prev->kind != StmtKind::Error && !is_label(prev->kind) && first_line(s) == last_line(*prev)) {
                ctx.report_at("3.3.a", s.first_token, "more than one statement on this line");
            }
            if (!prev || is_label(prev->kind) || prev->kind == StmtKind::Error) continue;
            bool needs_blank = is_control(s.kind) || (s.kind == StmtKind::Decl && prev->kind != StmtKind::Decl);
            int lead = lead_line(s);
            if (needs_blank && lead > 1 && !ctx.view.file.is_blank_line(lead - 1)) {
                ctx.report_at("3.3.b", s.first_token, "no blank line before this block of code");
            }
        }
    }

    // ---- if/else chains

    std::vector<const Stmt*> clauses(const Stmt& head, bool& ends_with_else, bool& has_else_if) const {
        std::vector<const Stmt*> out;
        const Stmt* s = &head;
        ends_with_else = false;
        has_else_if = false;
        while (true) {
            out.push_back(s->then_branch());
            const Stmt* e = s->else_branch();
            if (!e) break;
            if (e->kind == StmtKind::If) {
                has_else_if = true;
                s = e;
                continue;
            }
            out.push_back(e);
            ends_with_else = true;
            break;
        }
        return out;
    }

    void if_chain(const Stmt& head) {
        bool ends_with_else = false, has_else_if = false;
        auto cl = clauses(head, ends_with_else, has_else_if);
        if (has_else_if && !ends_with_else) {
            ctx.report_at("8.2.d", head.keyword_token, "if/else-if chain does not end with an else clause");
        }
        if (cl.size() >= 2 && cl[0]) {
            int first = last_line(*cl[0]) - first_line(*cl[0]) + 1;
            for (std::size_t i = 1; i < cl.size(); ++i) {
                if (cl[i] && last_line(*cl[i]) - first_line(*cl[i]) + 1 < first) {
                    ctx.report_at("8.2.a", head.keyword_token, "a shorter clause follows the first one; put the shortest first");
                    break;
                }
            }
        }
    }

    // ---- switch

    static bool ends_flow(const Stmt& s) {
        if (s.kind == StmtKind::Break || s.kind == StmtKind::Return || s.kind == StmtKind::Goto ||
            s.kind == StmtKind::Continue) {
            return true;
        }
        if (s.kind == StmtKind::Compound && !s.children.empty()) return ends_flow(*s.children.back());
        return false;
    }

    void switch_stmt(const Stmt& sw) {
        const Stmt* body = sw.body();
        if (!body || body->kind != StmtKind::Compound) return;
        const auto& kids = body->children;
        bool has_default = false;
        for (const auto& k : kids) has_default = has_default || k->kind == StmtKind::Default;
        if (!has_default) ctx.report_at("8.3.b", sw.keyword_token, "switch has no default case");

        // Sections: labels followed by statements up to the next label.
        std::size_t i = 0;
        while (i < kids.size()) {
            if (kids[i]->kind != StmtKind::Case && kids[i]->kind != StmtKind::Default) {
                ++i;
                continue;
            }
            std::size_t label = i;
            while (i < kids.size() && (kids[i]->kind == StmtKind::Case || kids[i]->kind == StmtKind::Default)) ++i;
            std::size_t body_begin = i;
            while (i < kids.size() && kids[i]->kind != StmtKind::Case && kids[i]->kind != StmtKind::Default) ++i;
            if (i == body_begin || i == kids.size()) continue;  // empty section, or the last one
            if (ends_flow(*kids[i - 1])) continue;
            if (!ctx.tok(kids[i]->first_token).has_comment_before()) {
                ctx.report_at("8.3.c", kids[label]->first_token, "case falls through without a comment explaining why");
            }
        }
    }

    // ---- loops

    void magic_numbers(const Expr* e) {
        if (!e) return;
        walk_expr(*e, [&](const Expr& x) {
            if (x.kind != ExprKind::Const || x.const_kind != TokenKind::IntConstant) return;
            long long v = std::strtoll(x.text.c_str(), nullptr, 0);
            if (v == 0 || v == 1 || ctx.config.loop_literal_whitelist.count(v)) return;
            ctx.report_at("8.4.a", x.first_token, "magic number " + x.text + " in a loop bound or start");
        });
    }

    void assignments_in(const Expr* e) {
        if (!e) return;
        walk_expr(*e, [&](const Expr& x) {
            if (x.kind == ExprKind::Assign) ctx.report_at("8.4.b", x.op_token, "assignment in a loop's controlling expression");
        });
    }

    static std::string modified_name(const Expr& x) {
        const Expr* target = nullptr;
        if (x.kind == ExprKind::Assign) target = x.children[0].get();
        if ((x.kind == ExprKind::Postfix || x.kind == ExprKind::Unary) && (x.text == "++" || x.text == "--")) {
            target = x.children[0].get();
        }
        return target && target->kind == ExprKind::Ident ? target->text : "";
    }

    void loop(const Stmt& s) {
        if (s.kind == StmtKind::For) {
            if (s.for_init && s.for_init->expr) magic_numbers(s.for_init->expr.get());
            if (s.for_init && s.for_init->decl) {
                for (const auto& d : s.for_init->decl->declarators) magic_numbers(d.init.get());
            }
            magic_numbers(s.for_cond.get());
            assignments_in(s.for_cond.get());

            // Every identifier the init clause sets counts as a loop variable.
            std::set<std::string> vars;
            if (s.for_init && s.for_init->expr) {
                walk_expr(*s.for_init->expr, [&](const Expr& x) {
                    if (x.kind == ExprKind::Assign && !modified_name(x).empty()) vars.insert(modified_name(x));
                });
            } else if (s.for_init && s.for_init->decl) {
                for (const auto& d : s.for_init->decl->declarators) vars.insert(d.name);
            }
            if (!vars.empty() && s.for_step) {
                walk_expr(*s.for_step, [&](const Expr& x) {
                    std::string m = modified_name(x);
                    if (!m.empty() && !vars.count(m)) {
                        ctx.report_at("8.4.b", x.first_token, "for step modifies '" + m + "', which the init clause does not set");
                    }
                });
            }
            return;
        }
        magic_numbers(s.expr.get());
        assignments_in(s.expr.get());
        if (s.expr) {
            const Expr* c = s.expr.get();
            while (c->kind == ExprKind::Paren && !c->children.empty()) c = c->children[0].get();
            bool forever = (c->kind == ExprKind::Const && c->const_kind == TokenKind::IntConstant &&
                            std::strtoll(c->text.c_str(), nullptr, 0) != 0) ||
                           (c->kind == ExprKind::Ident && c->text == "true");
            if (forever) {
                ctx.report_at("8.4.c", s.kind == StmtKind::DoWhile ? s.while_token : s.keyword_token,
                              "infinite loop should be written 'for (;;)'");
            }
        }
    }

    // ---- traversal

    void visit(const Stmt& s, int if_depth, bool else_if) {
        if (s.kind == StmtKind::Compound) compound(s);
        if (s.kind == StmtKind::Switch) switch_stmt(s);
        if (s.kind == StmtKind::While || s.kind == StmtKind::DoWhile || s.kind == StmtKind::For) loop(s);
        int depth = if_depth;
        if (s.kind == StmtKind::If) {
            if (!else_if) {
                depth = if_depth + 1;
                if (depth > 2) ctx.report_at("8.2.b", s.keyword_token, "if/else nested more than two levels deep");
                if_chain(s);
            }
            const Stmt* t = s.then_branch();
            const Stmt* e = s.else_branch();
            if (t) visit(*t, depth, false);
            if (e) visit(*e, depth, e->kind == StmtKind::If);
            return;
        }
        if (s.for_init) visit(*s.for_init, depth, false);
        for (const auto& k : s.children) {
            if (k) visit(*k, depth, false);
        }
    }
};

}  // namespace

void check_statement_rules(CheckContext& ctx) {
    StmtChecker sc{ctx};
    const TopLevelItem* prev = nullptr;
    for (const auto& item : ctx.tree().items) {
        if (prev && ctx.tok(item.first_token).span.start.line == ctx.tok(prev->last_token).span.stop.line) {
            ctx.report_at("3.3.a", item.first_token, "more than one declaration on this line");
        }
        prev = &item;
        if (!item.function || !item.function->body) continue;
        const Stmt& body = *item.function->body;
        sc.visit(body, 0, false);

        // 6.2.c: the only return is the function's last statement.
        const Stmt* last = body.children.empty() ? nullptr : body.children.back().get();
        walk_stmt(body, [&](const Stmt& s) {
            if (s.kind == StmtKind::Return && &s != last) {
                ctx.report_at("6.2.c", s.keyword_token, "return is not the last statement of the function");
            }
        });
    }
}

}  // namespace barrc
