// Naming rules for files, types, functions, macros and variables
// (4.1.a, 4.1.c-d, 5.1.a, 5.1.c, 6.1.a-f, 6.1.i, 7.1.a-f, 7.1.j-m, 7.1.o).

#include <algorithm>
#include <regex>

#include "checks/check.hpp"

namespace barrc {

namespace {

bool reserved_word(const CheckContext& ctx, const std::string& name) {
    return c99_keywords().count(name) || cpp_keywords().count(name) || ctx.config.extension_keywords.count(name);
}

struct Prefix {
    bool g = false;
    int p = 0;
    bool b = false;
    bool h = false;
    bool misordered = false;
};

/// Reads the [g][p|pp][b|h] prefix from the leading underscore-separated segments, so both
/// gpb_name and g_p_b_name carry all three prefixes.
Prefix parse_prefix(const std::string& name) {
    static const std::regex grammar("^g?(pp|p)?(b|h)?$");
    static const std::regex letters("^[gpbh]+$");
    Prefix out;
    std::string p;
    std::size_t at = 0;
    for (;;) {
        auto us = name.find('_', at);
        if (us == std::string::npos || us == at) break;
        std::string seg = name.substr(at, us - at);
        if (!std::regex_match(p + seg, grammar)) {
            if (p.empty() && seg.size() <= 4 && std::regex_match(seg, letters)) out.misordered = true;
            break;
        }
        p += seg;
        at = us + 1;
    }
    out.g = p.find('g') != std::string::npos;
    out.p = static_cast<int>(std::count(p.begin(), p.end(), 'p'));
    out.b = p.find('b') != std::string::npos;
    out.h = p.find('h') != std::string::npos;
    return out;
}

}  // namespace

void check_naming_rules(CheckContext& ctx) {
    const auto& cfg = ctx.config;
    const std::size_t max_len = static_cast<std::size_t>(cfg.max_identifier_significant);
    const std::string stem = ctx.view.file.path().stem().string();
    const Span file_start = ctx.view.file.span_of(0, 0);

    if (!is_lower_snake(stem)) ctx.report("4.1.a", file_start, "module name '" + stem + "' is not lowercase letters, digits and underscores");
    if (ctx.view.is_header && standard_header_names().count(stem)) {
        ctx.report("4.1.c", file_start, "header '" + stem + ".h' shares its name with a standard library header");
    }

    for (const auto& item : ctx.tree().items) {
        if (item.function && item.function->name() == "main" && stem.find("main") == std::string::npos) {
            ctx.report_at("4.1.d", item.function->declarator().name_token, "module defining main() lacks 'main' in its file name");
        }
    }

    for (const auto& m : ctx.view.directives.macros) {
        if (!ctx.view.branches.active(ctx.tok(m.name_token).span.start.line)) continue;
        if (has_lower(m.name)) ctx.report_at("6.1.f", m.name_token, "macro name '" + m.name + "' contains lowercase letters");
    }

    for (const auto& s : ctx.symbols().symbols) {
        if (s.name_tokens.empty()) continue;
        std::size_t at = s.name_tokens.front();
        const std::string& n = s.name;

        if (s.kind == SymbolKind::Typedef) {
            static const std::regex type_name("^[a-z0-9_]*[a-z0-9]_t$");
            if (!std::regex_match(n, type_name)) ctx.report_at("5.1.a", at, "type name '" + n + "' is not lowercase ending in _t");
            if (ctx.view.is_header && s.scope_id == 0 && n.rfind(stem + "_", 0) != 0) {
                ctx.report_at("5.1.c", at, "public type '" + n + "' is not prefixed with '" + stem + "_'");
            }
            continue;
        }

        if (s.kind == SymbolKind::Function) {
            if (reserved_word(ctx, n)) ctx.report_at("6.1.a", at, "function named after keyword '" + n + "'");
            if (stdlib_names().count(n)) ctx.report_at("6.1.b", at, "function '" + n + "' reuses a standard library name");
            if (n.front() == '_') ctx.report_at("6.1.c", at, "function name '" + n + "' starts with an underscore");
            if (n.size() > max_len) ctx.report_at("6.1.d", at, "function name '" + n + "' is longer than " + std::to_string(max_len) + " characters");
            if (has_upper(n)) ctx.report_at("6.1.e", at, "function name '" + n + "' contains uppercase letters");
            if (ctx.view.is_header && s.linkage == Linkage::External && n.rfind(stem + "_", 0) != 0) {
                ctx.report_at("6.1.i", at, "public function '" + n + "' is not prefixed with '" + stem + "_'");
            }
            continue;
        }

        if (s.kind != SymbolKind::Object || s.scope == DeclScope::Member) continue;
        if (reserved_word(ctx, n)) ctx.report_at("7.1.a", at, "variable named after keyword '" + n + "'");
        if (stdlib_names().count(n)) ctx.report_at("7.1.b", at, "variable '" + n + "' reuses a standard library name");
        if (n.front() == '_') ctx.report_at("7.1.c", at, "variable name '" + n + "' starts with an underscore");
        if (n.size() > max_len) ctx.report_at("7.1.d", at, "variable name '" + n + "' is longer than " + std::to_string(max_len) + " characters");
        if (n.size() < static_cast<std::size_t>(cfg.min_identifier_length) && !cfg.short_name_exemptions.count(n)) {
            ctx.report_at("7.1.e", at, "variable name '" + n + "' is shorter than " + std::to_string(cfg.min_identifier_length) + " characters");
        }
        if (has_upper(n)) ctx.report_at("7.1.f", at, "variable name '" + n + "' contains uppercase letters");

        Prefix pre = parse_prefix(n);
        if (pre.misordered) {
            ctx.report_at("7.1.o", at, "prefixes of '" + n + "' are not in the order [g][p|pp][b|h]");
            continue;
        }
        bool global = s.scope_id == 0 && s.storage != Storage::Extern &&
                      (s.linkage == Linkage::External || (cfg.globals_include_static_filescope && s.linkage == Linkage::Internal));
        if (s.scope_id == 0 && s.storage == Storage::Extern) global = true;
        if (global && !pre.g) ctx.report_at("7.1.j", at, "global variable '" + n + "' does not start with 'g'");
        if (!s.is_array && s.pointer_depth == 1 && pre.p != 1) {
            ctx.report_at("7.1.k", at, "pointer variable '" + n + "' does not start with 'p'");
        }
        if (!s.is_array && s.pointer_depth == 2 && pre.p != 2) {
            ctx.report_at("7.1.l", at, "pointer-to-pointer variable '" + n + "' does not start with 'pp'");
        }
        if (!s.is_array && s.pointer_depth == 0 && classify_type(s.spec, ctx.symbols()) == ValueClass::Boolean && !pre.b) {
            ctx.report_at("7.1.m", at, "Boolean variable '" + n + "' does not start with 'b'");
        }
    }
}

}  // namespace barrc
