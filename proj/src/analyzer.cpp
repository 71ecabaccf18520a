#include "barrc/analyzer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "barrc/catalog.hpp"
#include "barrc/parser.hpp"
#include "checks/check.hpp"

namespace barrc {

namespace fs = std::filesystem;

std::set<GuidelineId> AnalysisResult::violated() const {
    std::set<GuidelineId> out;
    for (const auto& f : files) {
        for (const auto& d : f.diagnostics) {
            if (d.suppressed || !d.rule.is_guideline()) continue;
            out.insert(d.rule.guideline());
            out.insert(d.also.begin(), d.also.end());
        }
    }
    return out;
}

std::size_t AnalysisResult::unsuppressed_errors() const {
    std::size_t n = 0;
    for (const auto& f : files) {
        for (const auto& d : f.diagnostics) {
            if (!d.suppressed && d.severity == Severity::Error) ++n;
        }
    }
    return n;
}

namespace {

Span span_at(const SourceFile& file, SourcePos pos) {
    std::size_t offset = file.bytes().size();
    if (pos.line >= 1 && pos.line <= file.line_count()) {
        const auto& l = file.line(pos.line);
        offset = std::min(l.offset + static_cast<std::size_t>(std::max(pos.column, 1) - 1), l.end_offset());
    }
    return file.span_of(offset, offset);
}

Diagnostic tool_diag(const TranslationView& v, ToolRule rule, Span span, std::string message, Severity sev) {
    Diagnostic d;
    d.rule = rule;
    d.path = v.path;
    d.span = span;
    d.message = std::move(message);
    d.severity = sev;
    return d;
}

/// Findings about the input itself rather than any guideline.
std::vector<Diagnostic> input_problems(const TranslationView& v) {
    std::vector<Diagnostic> out;
    auto parse = [&](SourcePos pos, const std::string& msg) {
        out.push_back(tool_diag(v, ToolRule::Parse, span_at(v.file, pos), msg, Severity::ToolError));
    };
    for (const auto& e : v.lex.errors) parse(e.pos, e.message);
    for (int line : v.splices.dangling_continuations) {
        parse({line, static_cast<int>(v.file.line(line).length)}, "line continuation at end of file");
    }
    for (const auto& p : v.directives.problems) parse(p.pos, p.message);
    for (const auto& p : v.branches.problems) parse(p.pos, p.message);
    for (const auto& p : v.tree.problems) parse(p.pos, p.message);

    // Trigraphs are left untranslated; flag them.
    const std::string& b = v.file.bytes();
    for (std::size_t i = 0; i + 2 < b.size(); ++i) {
        if (b[i] == '?' && b[i + 1] == '?' && std::string_view("=/'()!<>-").find(b[i + 2]) != std::string_view::npos) {
            out.push_back(tool_diag(v, ToolRule::Extensions, v.file.span_of(i, i + 3),
                                    "trigraph '" + b.substr(i, 3) + "' is not translated", Severity::Advisory));
            i += 2;
        }
    }
    return out;
}

template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

using Checker = void (*)(CheckContext&);

constexpr Checker kCheckers[] = {
    check_line_rules,      check_spacing_rules,     check_layout_rules,    check_comment_rules,     check_keyword_bans,    check_goto_rules,
    check_expression_rules, check_statement_rules,  check_declaration_rules, check_naming_rules,
    check_module_rules,    check_macro_rules,
};

}  // namespace

std::unique_ptr<TranslationView> build_view(SourceFile file, const Config& config) {
    auto v = std::make_unique<TranslationView>();
    v->file = std::move(file);
    v->path = v->file.path().generic_string();
    v->is_header = v->file.path().extension() == ".h";
    v->lex = tokenize(v->file);
    v->splices = splice_lines(v->file);
    v->directives = parse_directives(v->lex.tokens);
    resolve_includes(v->directives.includes, v->file.path(), config.include_paths);
    v->branches = select_branch(v->lex.tokens, v->directives, v->file.line_count(), config.defines);
    v->guard = detect_header_guard(v->lex.tokens, v->directives);
    ParseOptions opts;
    opts.extra_typedefs = config.extra_typedefs;
    opts.extension_keywords = config.extension_keywords;
    opts.extension_patterns = config.extension_patterns;
    v->tree = parse_translation_unit(v->lex.tokens, v->directives, v->branches, opts);
    return v;
}

AnalysisResult run_all(std::vector<SourceFile> files, const Config& config, int jobs) {
    AnalysisResult result;
    result.enabled = config.effective_enabled();
    std::sort(files.begin(), files.end(),
              [](const SourceFile& a, const SourceFile& b) { return a.path().generic_string() < b.path().generic_string(); });

    std::vector<std::unique_ptr<TranslationView>> views(files.size());
    parallel_for(files.size(), jobs, [&](std::size_t i) { views[i] = build_view(std::move(files[i]), config); });

    // Sibling headers: the analyzed set first, then the file's own directory, then include paths.
    std::map<fs::path, const TranslationView*> by_path;
    std::multimap<std::string, const TranslationView*> headers_by_stem;
    for (const auto& v : views) {
        by_path[v->file.path().lexically_normal()] = v.get();
        if (v->is_header) headers_by_stem.emplace(v->file.path().stem().string(), v.get());
    }
    std::vector<std::unique_ptr<TranslationView>> extra;
    for (auto& v : views) {
        if (v->file.path().extension() != ".c") continue;
        fs::path want = (v->file.path().parent_path() / (v->file.path().stem().string() + ".h")).lexically_normal();
        if (auto it = by_path.find(want); it != by_path.end()) {
            v->sibling_header = want;
            v->sibling = it->second;
            continue;
        }
        auto range = headers_by_stem.equal_range(v->file.path().stem().string());
        if (range.first != range.second) {
            v->sibling_header = range.first->second->file.path();
            v->sibling = range.first->second;
            continue;
        }
        std::vector<fs::path> candidates{want};
        for (const auto& dir : config.include_paths) candidates.push_back(dir / want.filename());
        for (const auto& c : candidates) {
            std::error_code ec;
            if (!fs::is_regular_file(c, ec)) continue;
            try {
                extra.push_back(build_view(load_source(c), config));
                v->sibling_header = c;
                v->sibling = extra.back().get();
            } catch (const IoError&) {
            }
            break;
        }
    }

    std::vector<std::vector<Diagnostic>> per_file(views.size());
    parallel_for(views.size(), jobs, [&](std::size_t i) {
        const TranslationView& v = *views[i];
        CheckContext ctx{v, config, result.enabled, per_file[i]};
        for (Checker c : kCheckers) {
            try {
                c(ctx);
            } catch (const std::exception& e) {
                per_file[i].push_back(tool_diag(v, ToolRule::Parse, span_at(v.file, {1, 1}),
                                                std::string("internal checker failure: ") + e.what(), Severity::ToolError));
            }
        }
    });

    std::vector<const TranslationView*> set;
    for (const auto& v : views) set.push_back(v.get());
    check_file_set(set, config, result.enabled, per_file);

    result.files.resize(views.size());
    parallel_for(views.size(), jobs, [&](std::size_t i) {
        const TranslationView& v = *views[i];
        FileReport& r = result.files[i];
        r.path = v.path;
        r.diagnostics = std::move(per_file[i]);
        auto problems = input_problems(v);
        r.diagnostics.insert(r.diagnostics.end(), problems.begin(), problems.end());
        auto scan = collect_deviations(v.file, v.tokens());
        r.deviations = scan.records;
        auto unused = apply_suppressions(r.diagnostics, r.deviations, v.path);
        for (auto& d : scan.problems) d.path = v.path;
        r.diagnostics.insert(r.diagnostics.end(), scan.problems.begin(), scan.problems.end());
        r.diagnostics.insert(r.diagnostics.end(), unused.begin(), unused.end());
        std::stable_sort(r.diagnostics.begin(), r.diagnostics.end(), diagnostic_less);
        // One finding per (rule, position).
        r.diagnostics.erase(std::unique(r.diagnostics.begin(), r.diagnostics.end(),
                                        [](const Diagnostic& a, const Diagnostic& b) {
                                            return a.rule == b.rule && a.span.start == b.span.start &&
                                                   a.message == b.message;
                                        }),
                            r.diagnostics.end());
    });
    return result;
}

}  // namespace barrc
