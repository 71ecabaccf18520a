// Declaration rules (8.1.a, 7.2.c-d, 5.3.a, 5.1.b, 5.2.a, 5.2.c, 5.6.a, 6.2.d-f).

#include "checks/check.hpp"

namespace barrc {

namespace {

bool integer_keywords(const TypeSpec& s) {
    return s.basic_integer_keywords && (s.base == BaseType::Char || s.base == BaseType::SignedInt || s.base == BaseType::UnsignedInt);
}

bool is_boolean_expr(const Expr& e) {
    const Expr* p = &e;
    while (p->kind == ExprKind::Paren && !p->children.empty()) p = p->children[0].get();
    if (p->kind == ExprKind::Unary && p->text == "!") return true;
    if (p->kind != ExprKind::Binary) return false;
    static const std::set<std::string> ops = {"==", "!=", "<", ">", "<=", ">=", "&&", "||"};
    return ops.count(p->text) != 0;
}

std::size_t type_anchor(const Decl& d, const std::vector<Token>& toks) {
    static const std::set<std::string_view> ints = {"char", "short", "int", "long", "signed", "unsigned"};
    for (std::size_t t : d.spec.keyword_tokens) {
        if (ints.count(toks[t].spelling)) return t;
    }
    if (!d.spec.keyword_tokens.empty()) return d.spec.keyword_tokens.front();
    return d.spec.first_token != kNoToken ? d.spec.first_token : d.first_token;
}

}  // namespace

void check_declaration_rules(CheckContext& ctx) {
    const auto& tree = ctx.tree();
    std::size_t first_function = kNoToken;
    for (const auto& item : tree.items) {
        if (item.function) {
            first_function = item.first_token;
            break;
        }
    }
    std::set<std::string> main_params;
    for (const auto& item : tree.items) {
        if (item.function && item.function->name() == "main") {
            for (const auto& p : item.function->declarator().params) {
                if (!p.declarators.empty()) main_params.insert(p.declarators[0].name);
            }
        }
    }

    for (const Decl* dp : all_decls(tree)) {
        const Decl& d = *dp;
        if (d.declarators.size() > 1) {
            ctx.report_at("8.1.a", d.declarators[1].name_token != kNoToken ? d.declarators[1].name_token : d.declarators[1].first_token,
                          "more than one declarator in a declaration");
        }
        if (d.scope == DeclScope::File && d.spec.body && d.storage != Storage::Typedef) {
            ctx.report_at("5.1.b", d.spec.first_token, "struct, union or enum defined without a typedef");
        }

        for (const auto& dr : d.declarators) {
            if (dr.name_token == kNoToken && dr.first_token == kNoToken) continue;
            std::size_t at = dr.name_token != kNoToken ? dr.name_token : dr.first_token;
            bool object = !dr.is_function && d.storage != Storage::Typedef;

            if (d.scope == DeclScope::File && object && d.storage != Storage::Extern && first_function != kNoToken &&
                d.first_token > first_function) {
                ctx.report_at("7.2.c", at, "global variable '" + dr.name + "' defined after the first function");
            }
            if ((d.scope == DeclScope::File || d.scope == DeclScope::Block) && object && d.storage != Storage::Extern &&
                dr.pointer_depth > 0 && !dr.is_array && !dr.init && !dr.name.empty()) {
                ctx.report_at("7.2.d", at, "pointer '" + dr.name + "' is not initialized");
            }
            if (dr.bitfield_width) {
                ValueClass c = classify_type(d.spec, ctx.symbols());
                bool ok = (d.spec.explicit_unsigned && !d.spec.explicit_signed) || c == ValueClass::Boolean ||
                          (!d.spec.basic_integer_keywords && c == ValueClass::Unsigned);
                if (!ok) ctx.report_at("5.3.a", at, "bit-field '" + dr.name + "' does not have an explicitly unsigned type");
            }

            // Plain char is for characters and strings; signed/unsigned char is numeric data.
            bool char_data = d.spec.base == BaseType::Char && !d.spec.explicit_signed && !d.spec.explicit_unsigned;
            bool exempt = d.storage == Storage::Typedef || dr.bitfield_width || char_data || dr.is_function ||
                          (d.scope == DeclScope::Param && main_params.count(dr.name));
            if (integer_keywords(d.spec) && !exempt) {
                ctx.report_at("5.2.a", type_anchor(d, ctx.tokens()), "use a fixed-width integer type from <stdint.h>");
            }

            if (object && d.spec.base == BaseType::Char && dr.pointer_depth == 0 && !dr.is_array) {
                bool numeric_init = dr.init && dr.init->kind == ExprKind::Const && dr.init->const_kind == TokenKind::IntConstant;
                if (numeric_init || d.spec.explicit_signed || d.spec.explicit_unsigned) {
                    ctx.report_at("5.2.c", type_anchor(d, ctx.tokens()), "char used for non-character data");
                }
            }

            if (object && dr.pointer_depth == 0 && !dr.is_array && d.scope != DeclScope::Member) {
                ValueClass c = classify_type(d.spec, ctx.symbols());
                if ((c == ValueClass::Signed || c == ValueClass::Unsigned) &&
                    (dr.name.rfind("b_", 0) == 0 || dr.name.rfind("is_", 0) == 0 || (dr.init && is_boolean_expr(*dr.init)))) {
                    ctx.report_at("5.6.a", at, "'" + dr.name + "' holds Boolean data but is not declared bool");
                }
            }

            if (dr.is_function) {
                if (dr.knr_identifiers) {
                    ctx.report_at("6.2.f", at, "function '" + dr.name + "' uses an identifier-list parameter declaration");
                } else if (dr.empty_params) {
                    ctx.report_at("6.2.f", dr.params_open != kNoToken ? dr.params_open : at,
                                  "function '" + dr.name + "' declares no parameter types; use (void)");
                }
                for (const auto& p : dr.params) {
                    if (p.declarators.empty() || p.declarators[0].name.empty()) {
                        ctx.report_at("6.2.f", p.first_token, "unnamed parameter");
                    }
                }
            }
        }
    }

    // 6.2.e: static on every declaration of an internal name.
    for (const auto& s : ctx.symbols().symbols) {
        if (s.scope_id != 0 || (s.kind != SymbolKind::Function && s.kind != SymbolKind::Object)) continue;
        bool any_static = false;
        for (Storage st : s.storages) any_static = any_static || st == Storage::Static;
        if (!any_static) continue;
        for (std::size_t i = 0; i < s.storages.size() && i < s.name_tokens.size(); ++i) {
            if (s.storages[i] != Storage::Static) {
                ctx.report_at("6.2.e", s.name_tokens[i], "'" + s.name + "' is declared static elsewhere; repeat 'static' here");
            }
        }
    }

    // 6.2.d: public functions have a prototype in the module's header.
    if (ctx.view.sibling && !ctx.view.is_header) {
        const SymbolTable& header = ctx.view.sibling->tree.symbols;
        for (const auto& item : tree.items) {
            if (!item.function || item.function->is_static() || item.function->name() == "main") continue;
            int s = header.find_file_scope(item.function->name());
            if (s < 0 || header.symbols[static_cast<std::size_t>(s)].kind != SymbolKind::Function) {
                const auto& dr = item.function->declarator();
                ctx.report_at("6.2.d", dr.name_token, "public function '" + dr.name + "' has no prototype in " +
                                                          ctx.view.sibling_header->filename().string());
            }
        }
    }
}

}  // namespace barrc
