// Expression rules (1.4.a-b, 8.2.c, 8.6.a, 5.6.b, 5.3.b-c, 5.4.b equality).

#include "checks/check.hpp"

namespace barrc {

namespace {

bool is_logical(const Expr& e) { return e.kind == ExprKind::Binary && (e.text == "&&" || e.text == "||"); }

bool is_bitwise_op(const std::string& op) {
    return op == "&" || op == "|" || op == "^" || op == "<<" || op == ">>" || op == "&=" || op == "|=" ||
           op == "^=" || op == "<<=" || op == ">>=";
}

bool is_mixing_op(const std::string& op) {
    return op == "+" || op == "-" || op == "*" || op == "/" || op == "%" || op == "<" || op == ">" || op == "<=" ||
           op == ">=" || op == "==" || op == "!=";
}

bool is_decimal_unsuffixed(const Expr& e) {
    if (e.kind != ExprKind::Const || e.const_kind != TokenKind::IntConstant || e.suffix.is_unsigned) return false;
    return e.text == "0" || (!e.text.empty() && e.text[0] >= '1' && e.text[0] <= '9');
}

const Expr& strip_parens(const Expr& e) {
    const Expr* p = &e;
    while (p->kind == ExprKind::Paren && !p->children.empty()) p = p->children[0].get();
    return *p;
}

struct ExprChecker {
    CheckContext& ctx;

    ValueClass value_class(const Expr& e) const {
        return classify_type(resolve_local_type(e, ctx.symbols()), ctx.symbols());
    }

    /// Literal constants, enumeration constants and macro-style (all-uppercase) names.
    bool is_constant(const Expr& raw) const {
        const Expr& e = strip_parens(raw);
        switch (e.kind) {
            case ExprKind::Const:
            case ExprKind::String:
                return true;
            case ExprKind::Ident: {
                if (e.symbol >= 0 && ctx.symbols().symbols[static_cast<std::size_t>(e.symbol)].kind == SymbolKind::EnumConst) {
                    return true;
                }
                if (e.symbol >= 0) return false;
                return has_upper(e.text) && !has_lower(e.text);
            }
            case ExprKind::Unary:
                return (e.text == "-" || e.text == "+" || e.text == "~") && is_constant(*e.children[0]);
            case ExprKind::Cast:
                return is_constant(*e.children[0]);
            default:
                return false;
        }
    }

    bool simple_term(const Expr& e) const {
        switch (e.kind) {
            case ExprKind::Ident:
            case ExprKind::Const:
                return true;
            case ExprKind::Member:
                return simple_term(*e.children[0]);
            case ExprKind::Index:
                return simple_term(*e.children[0]) && simple_term(*e.children[1]);
            case ExprKind::Paren:
                return simple_term(*e.children[0]);
            case ExprKind::Unary:
                return (e.text == "-" || e.text == "*") && simple_term(*e.children[0]);
            default:
                return false;
        }
    }

    std::string text_of(const Expr& e) const {
        const auto& b = ctx.view.file.bytes();
        std::size_t from = ctx.tok(e.first_token).span.begin, to = ctx.tok(e.last_token).span.end;
        return b.substr(from, to - from);
    }

    void check_tree(const Expr& root) {
        walk_expr(root, [&](const Expr& e) { check_node(e); });
    }

    void check_node(const Expr& e) {
        if (e.kind == ExprKind::Binary) {
            for (const auto& c : e.children) {
                // 1.4.a: mixed precedence without parentheses.
                if (!is_logical(e) && c->kind == ExprKind::Binary && c->precedence != e.precedence) {
                    ctx.report_at("1.4.a", c->op_token, "parenthesize '" + c->text + "' inside '" + e.text + "'");
                }
                // 1.4.b: operands of && and || are identifiers, constants or parenthesized.
                if (is_logical(e)) {
                    bool chain = c->kind == ExprKind::Binary && c->text == e.text;
                    bool simple = c->kind == ExprKind::Ident || c->kind == ExprKind::Const || c->kind == ExprKind::Paren;
                    if (!chain && !simple) {
                        ctx.report_at("1.4.b", c->first_token, "operand of '" + e.text + "' is not parenthesized");
                    }
                }
            }
            const Expr& l = *e.children[0];
            const Expr& r = *e.children[1];

            if ((e.text == "==" || e.text == "!=") && is_constant(r) && !is_constant(l)) {
                if (auto* d = ctx.report_at("8.6.a", e.op_token, "place the constant on the left of '" + e.text + "'")) {
                    if (simple_term(l) && simple_term(r)) {
                        std::size_t lb = ctx.tok(l.first_token).span.begin, le = ctx.tok(l.last_token).span.end;
                        std::size_t rb = ctx.tok(r.first_token).span.begin, re = ctx.tok(r.last_token).span.end;
                        d->fix.push_back({lb, le, text_of(r), gid("8.6.a")});
                        d->fix.push_back({rb, re, text_of(l), gid("8.6.a")});
                    }
                }
            }

            ValueClass lc = value_class(l), rc = value_class(r);
            if (is_bitwise_op(e.text)) {
                bool shift = e.text == "<<" || e.text == ">>";
                if (lc == ValueClass::Signed || (!shift && rc == ValueClass::Signed)) {
                    ctx.report_at("5.3.b", e.op_token, "bitwise '" + e.text + "' applied to signed data");
                }
            }
            if (is_mixing_op(e.text)) {
                bool lconst = strip_parens(l).kind == ExprKind::Const, rconst = strip_parens(r).kind == ExprKind::Const;
                bool mixed = !lconst && !rconst &&
                             ((lc == ValueClass::Signed && rc == ValueClass::Unsigned) ||
                              (lc == ValueClass::Unsigned && rc == ValueClass::Signed));
                bool bare = (is_decimal_unsuffixed(strip_parens(l)) && rc == ValueClass::Unsigned && !rconst) ||
                            (is_decimal_unsuffixed(strip_parens(r)) && lc == ValueClass::Unsigned && !lconst);
                if (mixed) {
                    ctx.report_at("5.3.c", e.op_token, "signed and unsigned operands mixed in '" + e.text + "'");
                } else if (bare) {
                    ctx.report_at("5.3.c", e.op_token, "constant compared or combined with unsigned data lacks a 'u' suffix");
                }
            }
            if (e.text == "==" || e.text == "!=") {
                auto floating = [&](const Expr& x, ValueClass c) {
                    const Expr& s = strip_parens(x);
                    return c == ValueClass::Floating || (s.kind == ExprKind::Const && s.const_kind == TokenKind::FloatConstant);
                };
                if (floating(l, lc) || floating(r, rc)) {
                    ctx.report_at("5.4.b", e.op_token, "floating-point values tested with '" + e.text + "'");
                }
            }
        } else if (e.kind == ExprKind::Assign && is_bitwise_op(e.text)) {
            ValueClass lc = value_class(*e.children[0]);
            ValueClass rc = value_class(*e.children[1]);
            bool shift = e.text == "<<=" || e.text == ">>=";
            if (lc == ValueClass::Signed || (!shift && rc == ValueClass::Signed)) {
                ctx.report_at("5.3.b", e.op_token, "bitwise '" + e.text + "' applied to signed data");
            }
        } else if (e.kind == ExprKind::Unary && e.text == "~") {
            if (value_class(*e.children[0]) == ValueClass::Signed) {
                ctx.report_at("5.3.b", e.op_token, "bitwise '~' applied to signed data");
            }
        } else if (e.kind == ExprKind::Cast && e.type_name) {
            const Decl& t = *e.type_name;
            bool ptr = !t.declarators.empty() && t.declarators[0].pointer_depth > 0;
            if (!ptr && classify_type(t.spec, ctx.symbols()) == ValueClass::Boolean) {
                ctx.report_at("5.6.b", e.first_token, "conversion to Boolean by cast; use a comparison");
            }
        }
    }
};

}  // namespace

void check_expression_rules(CheckContext& ctx) {
    ExprChecker ec{ctx};
    for (const Decl* d : all_decls(ctx.tree())) {
        if (d->scope != DeclScope::File) continue;
        for (const auto& dr : d->declarators) {
            if (dr.init) ec.check_tree(*dr.init);
        }
    }
    for (const auto& item : ctx.tree().items) {
        if (!item.function || !item.function->body) continue;
        walk_stmt(*item.function->body, [&](const Stmt& s) {
            for (const Expr* e : stmt_exprs(s)) ec.check_tree(*e);
            if (s.kind == StmtKind::If && s.expr) {
                walk_expr(*s.expr, [&](const Expr& e) {
                    if (e.kind == ExprKind::Assign) ctx.report_at("8.2.c", e.op_token, "assignment inside an if condition");
                });
            }
        });
    }
}

}  // namespace barrc
