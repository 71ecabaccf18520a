#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "barrc/analyzer.hpp"
#include "barrc/catalog.hpp"
#include "barrc/parser.hpp"

namespace barrc {

struct CheckContext {
    const TranslationView& view;
    const Config& config;
    const std::set<GuidelineId>& enabled;
    std::vector<Diagnostic>& out;

    bool on(GuidelineId id) const { return enabled.count(id) != 0; }
    bool on(std::string_view id) const { return on(gid(id)); }
    const std::vector<Token>& tokens() const { return view.tokens(); }
    const Token& tok(std::size_t i) const { return view.tokens()[i]; }
    const SyntaxTree& tree() const { return view.tree; }
    const SymbolTable& symbols() const { return view.tree.symbols; }
    TokenRole role(std::size_t i) const {
        return i < view.tree.roles.size() ? view.tree.roles[i] : TokenRole::None;
    }

    /// Adds a finding when the guideline is enabled; returns nullptr otherwise.
    Diagnostic* report(GuidelineId id, const Span& span, std::string message);
    Diagnostic* report(std::string_view id, const Span& span, std::string message) {
        return report(gid(id), span, std::move(message));
    }
    Diagnostic* report_at(std::string_view id, std::size_t token, std::string message) {
        return report(gid(id), tok(token).span, std::move(message));
    }
};

void check_line_rules(CheckContext& ctx);
void check_spacing_rules(CheckContext& ctx);
/// Alignment, indentation, case layout and braces share one walk over the blocks.
void check_layout_rules(CheckContext& ctx);
void check_comment_rules(CheckContext& ctx);
void check_keyword_bans(CheckContext& ctx);
void check_goto_rules(CheckContext& ctx);
void check_expression_rules(CheckContext& ctx);
void check_statement_rules(CheckContext& ctx);
void check_declaration_rules(CheckContext& ctx);
void check_naming_rules(CheckContext& ctx);
void check_module_rules(CheckContext& ctx);
void check_macro_rules(CheckContext& ctx);

/// Cross-file checks (4.1.b, 4.2.a) over the whole analyzed set.
void check_file_set(const std::vector<const TranslationView*>& views, const Config& config,
                    const std::set<GuidelineId>& enabled, std::vector<std::vector<Diagnostic>>& out);

// ---- shared helpers

/// Calls f on every statement in the tree, outermost first.
template <class F>
void walk_stmt(const Stmt& s, F&& f) {
    f(s);
    if (s.for_init) walk_stmt(*s.for_init, f);
    for (const auto& c : s.children) {
        if (c) walk_stmt(*c, f);
    }
}

template <class F>
void walk_expr(const Expr& e, F&& f) {
    f(e);
    for (const auto& c : e.children) {
        if (c) walk_expr(*c, f);
    }
}

/// Every expression directly owned by a statement (not its sub-statements).
std::vector<const Expr*> stmt_exprs(const Stmt& s);

/// Every declaration in the file: top-level, function parameters, locals, members.
std::vector<const Decl*> all_decls(const SyntaxTree& tree);

/// Index of the first token on a physical line, or kNoToken.
std::size_t first_token_on_line(const std::vector<Token>& tokens, int line);

/// True when tokens a and b (a before b) are on the same physical line with nothing but spaces between.
bool same_line(const Token& a, const Token& b);

/// Number of space bytes between the end of a and the start of b, or -1 if anything else separates them.
int gap_spaces(const Token& a, const Token& b);

bool is_lower_snake(std::string_view s);
bool has_upper(std::string_view s);
bool has_lower(std::string_view s);

const std::set<std::string>& c99_keywords();
const std::set<std::string>& cpp_keywords();
const std::set<std::string>& stdlib_names();
const std::set<std::string>& standard_header_names();

}  // namespace barrc
