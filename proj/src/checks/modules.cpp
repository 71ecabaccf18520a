// Module structure: headers, includes, file naming across the set, function length
// (4.1.b, 4.2.a-b, 4.2.d, 4.3.b-f, 6.2.a).

#include <map>

#include "checks/check.hpp"

namespace barrc {

namespace fs = std::filesystem;

namespace {

bool under(const fs::path& file, const std::vector<fs::path>& dirs) {
    auto f = fs::weakly_canonical(file);
    for (const auto& d : dirs) {
        auto base = fs::weakly_canonical(d);
        auto rel = f.lexically_relative(base);
        if (!rel.empty() && *rel.begin() != "..") return true;
    }
    return false;
}

bool absolute_include(const std::string& p) {
    if (p.empty()) return false;
    if (p[0] == '/' || p[0] == '\\') return true;
    return p.size() >= 2 && std::isalpha(static_cast<unsigned char>(p[0])) && p[1] == ':';
}

/// Canonical section order of a source file; -1 for items with no fixed place.
int section_of_item(const TopLevelItem& item) {
    if (item.function) return item.function->is_static() ? 6 : 5;
    const Decl& d = *item.decl;
    if (d.storage == Storage::Typedef || (d.spec.body && d.declarators.empty())) return 2;
    if (d.declarators.empty()) return -1;
    const Declarator& dr = d.declarators.front();
    if (dr.is_function) return d.storage == Storage::Static ? 4 : -1;
    if (d.storage == Storage::Extern) return -1;
    return 3;
}

void check_section_order(CheckContext& ctx) {
    struct Entry {
        std::size_t token;
        int section;
        const char* what;
    };
    std::vector<Entry> entries;
    for (const auto& d : ctx.view.directives.directives) {
        if (!ctx.view.branches.active(d.first_line)) continue;
        if (d.kind == DirectiveKind::Include) entries.push_back({d.first_token, 1, "include"});
        if (d.kind == DirectiveKind::Define) entries.push_back({d.first_token, 2, "macro definition"});
    }
    static const char* names[] = {"comment block", "include", "type, constant or macro definition", "static data",
                                  "private prototype", "public function", "private function"};
    for (const auto& item : ctx.tree().items) {
        int s = section_of_item(item);
        if (s >= 0) entries.push_back({item.first_token, s, names[s]});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.token < b.token; });
    int highest = 0;
    const char* highest_what = "";
    for (const auto& e : entries) {
        if (e.section < highest) {
            ctx.report_at("4.3.b", e.token, std::string(e.what) + " appears after a " + highest_what);
            return;
        }
        if (e.section > highest) {
            highest = e.section;
            highest_what = names[e.section];
        }
    }
}

void check_unused_includes(CheckContext& ctx) {
    std::set<std::string> used;
    for (const auto& t : ctx.tokens()) {
        if (t.is_identifier()) used.insert(t.spelling);
    }
    for (const auto& inc : ctx.view.directives.includes) {
        if (inc.style != IncludeStyle::Quote || !inc.resolved) continue;
        std::error_code ec;
        if (ctx.view.sibling_header && fs::equivalent(*inc.resolved, *ctx.view.sibling_header, ec)) continue;
        std::unique_ptr<TranslationView> header;
        try {
            header = build_view(load_source(*inc.resolved), ctx.config);
        } catch (const IoError&) {
            continue;
        }
        bool needed = false;
        for (const auto& s : header->tree.symbols.symbols) needed = needed || (s.scope_id == 0 && used.count(s.name));
        for (const auto& m : header->directives.macros) {
            if (header->guard && m.name == header->guard->macro_name) continue;
            needed = needed || used.count(m.name);
        }
        if (!needed) ctx.report_at("4.3.e", inc.token, "nothing declared in \"" + inc.path_text + "\" is used");
    }
}

}  // namespace

void check_module_rules(CheckContext& ctx) {
    const TranslationView& v = ctx.view;
    const Span file_start = v.file.span_of(0, 0);

    if (v.is_header) {
        if (!v.guard) {
            ctx.report("4.2.b", file_start, "header has no #ifndef/#define/#endif include guard");
        } else if (!v.guard->endif_has_comment) {
            ctx.report_at("4.2.b", v.directives.directives[v.guard->endif_directive].first_token,
                          "#endif of the include guard has no comment naming the guard");
        }
        if (!ctx.config.public_header_dirs.empty() && under(v.file.path(), ctx.config.public_header_dirs)) {
            for (const auto& inc : v.directives.includes) {
                if (inc.resolved && under(*inc.resolved, ctx.config.private_header_dirs)) {
                    ctx.report_at("4.2.d", inc.token, "public header includes private header \"" + inc.path_text + "\"");
                }
            }
        }
    }

    for (const auto& inc : v.directives.includes) {
        if (!v.branches.active(ctx.tok(inc.token).span.start.line)) continue;
        if (absolute_include(inc.path_text)) ctx.report_at("4.3.d", inc.token, "absolute include path");
        if (inc.path_text.size() >= 2 && inc.path_text.substr(inc.path_text.size() - 2) == ".c") {
            ctx.report_at("4.3.f", inc.token, "source file included");
        }
    }

    if (!v.is_header && v.sibling_header) {
        std::string want = v.sibling_header->filename().string();
        bool found = false;
        for (const auto& inc : v.directives.includes) {
            if (fs::path(inc.path_text).filename().string() == want) found = true;
        }
        if (!found) ctx.report("4.3.c", file_start, "source file does not include its own header " + want);
    }

    for (const auto& item : ctx.tree().items) {
        if (!item.function || !item.function->body) continue;
        int first = ctx.tok(item.first_token).span.start.line;
        int last = ctx.tok(item.function->body->last_token).span.stop.line;
        int lines = last - first + 1;
        if (lines > ctx.config.max_function_lines) {
            ctx.report_at("6.2.a", item.function->declarator().name_token,
                          "function '" + item.function->name() + "' is " + std::to_string(lines) + " lines long (limit " +
                              std::to_string(ctx.config.max_function_lines) + ")");
        }
    }

    if (!v.is_header && ctx.on("4.3.b")) check_section_order(ctx);
    if (ctx.on("4.3.e")) check_unused_includes(ctx);
}

void check_file_set(const std::vector<const TranslationView*>& views, const Config& config,
                    const std::set<GuidelineId>& enabled, std::vector<std::vector<Diagnostic>>& out) {
    const std::size_t n = static_cast<std::size_t>(config.module_name_significant);
    std::map<std::string, std::set<std::string>> stems_by_prefix;
    for (const auto* v : views) {
        std::string stem = v->file.path().stem().string();
        stems_by_prefix[stem.substr(0, n)].insert(stem);
    }
    for (std::size_t i = 0; i < views.size(); ++i) {
        const TranslationView& v = *views[i];
        CheckContext ctx{v, config, enabled, out[i]};
        const Span file_start = v.file.span_of(0, 0);
        std::string ext = v.file.path().extension().string();
        std::string stem = v.file.path().stem().string();
        if (ext != ".c" && ext != ".h") {
            ctx.report("4.1.b", file_start, "module file name does not end in .c or .h");
        }
        const auto& peers = stems_by_prefix[stem.substr(0, n)];
        if (peers.size() > 1) {
            for (const auto& other : peers) {
                if (other == stem) continue;
                ctx.report("4.1.b", file_start, "module name '" + stem + "' is not unique in its first " + std::to_string(n) +
                                                    " characters (also '" + other + "')");
                break;
            }
        }
        if (ext == ".c" && !v.sibling_header) {
            bool has_main = false;
            for (const auto& item : v.tree.items) has_main = has_main || (item.function && item.function->name() == "main");
            if (!has_main || config.require_header_for_main) {
                ctx.report("4.2.a", file_start, "source file has no header file of the same name");
            }
        }
    }
}

}  // namespace barrc
