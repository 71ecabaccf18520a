// Physical-line rules: length, tabs, line endings, control bytes, end-of-file comment.

#include <algorithm>
#include <cstdio>

#include "checks/check.hpp"

namespace barrc {

namespace {

/// Byte ranges of literal tokens, where bytes cannot be rewritten without changing the program.
std::vector<std::pair<std::size_t, std::size_t>> literal_ranges(const std::vector<Token>& tokens) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::StringLiteral || t.kind == TokenKind::CharConstant || t.kind == TokenKind::HeaderName) {
            out.emplace_back(t.span.begin, t.span.end);
        }
    }
    return out;
}

bool inside(const std::vector<std::pair<std::size_t, std::size_t>>& ranges, std::size_t offset) {
    auto it = std::upper_bound(ranges.begin(), ranges.end(), std::make_pair(offset, static_cast<std::size_t>(-1)));
    if (it == ranges.begin()) return false;
    --it;
    return offset >= it->first && offset < it->second;
}

bool comment_line(std::string_view s) {
    auto b = s.find_first_not_of(" \t\f");
    if (b == std::string_view::npos) return false;
    auto e = s.find_last_not_of(" \t\f");
    s = s.substr(b, e - b + 1);
    if (s.substr(0, 2) == "//") return true;
    return s.size() >= 4 && s.substr(0, 2) == "/*" && s.substr(s.size() - 2) == "*/";
}

}  // namespace

void check_line_rules(CheckContext& ctx) {
    const SourceFile& f = ctx.view.file;
    const std::string& bytes = f.bytes();
    auto literals = literal_ranges(ctx.tokens());
    const int limit = ctx.config.line_length;
    const int width = ctx.config.indent_width;

    for (int ln = 1; ln <= f.line_count(); ++ln) {
        const PhysicalLine& pl = f.line(ln);
        std::string_view text = f.line_text(ln);

        // Length in characters; UTF-8 continuation bytes do not start a character.
        int chars = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
            if (++chars == limit + 1) {
                ctx.report("1.2.a", f.span_of(pl.offset + i, pl.offset + text.size()),
                           "line exceeds " + std::to_string(limit) + " characters");
            }
        }

        int visual = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            std::size_t off = pl.offset + i;
            if (c == '\t') {
                int n = width - visual % width;
                if (auto* d = ctx.report("3.5.a", f.span_of(off, off + 1), "tab character")) {
                    if (!inside(literals, off)) d->fix.push_back({off, off + 1, std::string(static_cast<std::size_t>(n), ' '), gid("3.5.a")});
                }
                visual += n;
                continue;
            }
            ++visual;
            if ((c < 0x20 && c != '\f') || c == 0x7F) {
                char hex[8];
                std::snprintf(hex, sizeof hex, "0x%02X", c);
                if (auto* d = ctx.report("3.6.b", f.span_of(off, off + 1), std::string("control character ") + hex)) {
                    if (!inside(literals, off)) d->fix.push_back({off, off + 1, "", gid("3.6.b")});
                }
            }
        }

        if (pl.terminator == LineTerminator::CRLF || pl.terminator == LineTerminator::CR) {
            std::size_t off = pl.offset + pl.length;
            if (auto* d = ctx.report("3.6.a", f.span_of(off, off + pl.terminator_length()),
                                     pl.terminator == LineTerminator::CRLF ? "line ends with CR-LF" : "line ends with CR")) {
                d->fix.push_back({off, off + pl.terminator_length(), "\n", gid("3.6.a")});
            }
        }
    }

    if (!ctx.on("3.3.c") || f.line_count() == 0) return;
    const int n = f.line_count();
    const PhysicalLine& last = f.line(n);
    bool ok = n >= 2 && last.length == 0 && last.terminator != LineTerminator::None && comment_line(f.line_text(n - 1)) &&
              f.line(n - 1).terminator != LineTerminator::None;
    if (ok) return;
    std::string append;
    if (comment_line(f.line_text(n)) && last.terminator != LineTerminator::None) {
        append = "\n";
    } else if (comment_line(f.line_text(n))) {
        append = "\n\n";
    } else {
        if (last.terminator == LineTerminator::None && last.length > 0) append = "\n";
        append += ctx.config.eof_comment_text + "\n\n";
    }
    std::size_t end = bytes.size();
    if (auto* d = ctx.report("3.3.c", f.span_of(last.offset, last.offset),
                             "file does not end with an end-of-file comment and a blank line")) {
        d->fix.push_back({end, end, append, gid("3.3.c")});
    }
}

}  // namespace barrc
