// Comment content rules (2.1.b, 2.1.c, 2.2.h).

#include <sstream>

#include "checks/check.hpp"

namespace barrc {

namespace {

struct CommentRef {
    const Trivia* trivia;
    std::size_t token;  // token the comment is attached to
};

std::string_view body_of(const Trivia& t) {
    std::string_view s = t.text;
    s.remove_prefix(2);
    if (t.kind == TriviaKind::BlockComment && s.size() >= 2 && s.substr(s.size() - 2) == "*/") s.remove_suffix(2);
    return s;
}

bool looks_like_code_line(std::string line) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) return false;
    char c = line.back();
    return c == ';' || c == '{' || c == '}';
}

bool is_doc_comment(const Trivia& t) {
    std::string_view s = t.text;
    if (t.kind == TriviaKind::BlockComment) return s.substr(0, 3) == "/**" || s.substr(0, 3) == "/*!";
    return s.substr(0, 3) == "///" || s.substr(0, 3) == "//!";
}

}  // namespace

void check_comment_rules(CheckContext& ctx) {
    const SourceFile& f = ctx.view.file;
    std::vector<CommentRef> comments;
    for (std::size_t i = 0; i < ctx.tokens().size(); ++i) {
        for (const auto& tr : ctx.tok(i).leading_trivia) {
            if (tr.is_comment()) comments.push_back({&tr, i});
        }
    }

    for (const auto& c : comments) {
        std::string_view body = body_of(*c.trivia);
        std::size_t base = c.trivia->span.begin + 2;
        for (std::string_view bad : {"/*", "//", "\\"}) {
            auto at = body.find(bad);
            if (at == std::string_view::npos) continue;
            ctx.report("2.1.b", f.span_of(base + at, base + at + bad.size()),
                       "comment contains '" + std::string(bad) + "'");
            break;
        }
    }

    // 2.1.c: a block comment, or a run of line comments on consecutive lines, with two or more
    // lines that end like statements or braces.
    if (ctx.on("2.1.c")) {
        std::size_t i = 0;
        while (i < comments.size()) {
            const Trivia& first = *comments[i].trivia;
            int code_lines = 0;
            std::size_t j = i + 1;
            auto count = [&](const Trivia& t) {
                std::istringstream lines{std::string(body_of(t))};
                std::string line;
                while (std::getline(lines, line)) {
                    if (looks_like_code_line(line)) ++code_lines;
                }
            };
            count(first);
            if (first.kind == TriviaKind::LineComment) {
                int last_line = first.span.start.line;
                while (j < comments.size() && comments[j].trivia->kind == TriviaKind::LineComment &&
                       comments[j].trivia->span.start.line == last_line + 1) {
                    count(*comments[j].trivia);
                    last_line = comments[j].trivia->span.start.line;
                    ++j;
                }
            }
            if (code_lines >= 2) ctx.report("2.1.c", first.span, "comment appears to contain code");
            i = j;
        }
    }

    if (ctx.on("2.2.h")) {
        const auto& toks = ctx.tokens();
        bool module_doc = false;
        if (!toks.empty()) {
            for (const auto& tr : toks.front().leading_trivia) module_doc = module_doc || (tr.is_comment() && is_doc_comment(tr));
        }
        if (!module_doc && f.line_count() > 0) ctx.report("2.2.h", f.span_of(0, 0), "module has no documentation comment");
        for (const auto& item : ctx.tree().items) {
            if (!item.function) continue;
            bool doc = false;
            for (const auto& tr : ctx.tok(item.first_token).leading_trivia) doc = doc || (tr.is_comment() && is_doc_comment(tr));
            if (!doc) {
                const auto& dr = item.function->declarator();
                ctx.report_at("2.2.h", dr.name_token != kNoToken ? dr.name_token : item.first_token,
                              "function '" + item.function->name() + "' has no documentation comment");
            }
        }
    }
}

}  // namespace barrc
