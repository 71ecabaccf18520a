#include "barrc/deviation.hpp"

#include <cctype>
#include <sstream>

#include "barrc/catalog.hpp"

namespace barrc {

namespace {

constexpr std::string_view kMarker = "barr-c:";

/// Comment body without delimiters and decorative leading asterisks.
std::string comment_body(const Trivia& t) {
    std::string_view s = t.text;
    if (t.kind == TriviaKind::LineComment) {
        s.remove_prefix(2);
    } else {
        s.remove_prefix(2);
        if (s.size() >= 2 && s.substr(s.size() - 2) == "*/") s.remove_suffix(2);
    }
    return std::string(s);
}

std::string trim(std::string s) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) || s[e - 1] == '*')) --e;
    return s.substr(b, e - b);
}

Diagnostic syntax_problem(const SourceFile& file, const Span& span, std::string message) {
    Diagnostic d;
    d.rule = ToolRule::DeviationSyntax;
    d.path = file.path().generic_string();
    d.span = span;
    d.message = std::move(message);
    d.severity = Severity::Error;
    return d;
}

}  // namespace

DeviationScan collect_deviations(const SourceFile& file, const std::vector<Token>& tokens) {
    DeviationScan out;
    for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
        const Token& tok = tokens[ti];
        for (const Trivia& tr : tok.leading_trivia) {
            if (!tr.is_comment()) continue;
            std::string body = comment_body(tr);
            auto at = body.find(kMarker);
            if (at == std::string::npos) continue;
            std::istringstream words(body.substr(at + kMarker.size()));
            std::string keyword, id_text;
            words >> keyword >> id_text;
            DeviationRecord rec;
            rec.span = tr.span;
            if (keyword == "deviation") {
                rec.scope = DeviationScope::NextLine;
            } else if (keyword == "deviation-file") {
                rec.scope = DeviationScope::File;
            } else {
                out.problems.push_back(syntax_problem(file, tr.span, "unrecognized annotation after 'barr-c:'"));
                continue;
            }
            auto id = GuidelineId::parse(id_text);
            if (!id || !catalog().find(*id)) {
                out.problems.push_back(syntax_problem(
                    file, tr.span, id_text.empty() ? "deviation names no guideline" : "deviation names unknown guideline '" + id_text + "'"));
                continue;
            }
            std::string rest;
            std::getline(words, rest, '\0');
            rec.reason = trim(rest);
            if (rec.reason.empty()) {
                out.problems.push_back(syntax_problem(file, tr.span, "deviation from " + id->str() + " gives no reason"));
                continue;
            }
            rec.guideline = *id;

            if (rec.scope != DeviationScope::File) {
                int first = tr.span.start.line;
                int last = tr.span.stop.line;
                // Code before the comment on its first line, or after it on its last line.
                bool code_before = ti > 0 && tokens[ti - 1].span.stop.line == first &&
                                   tokens[ti - 1].kind != TokenKind::EndOfFile;
                bool code_after = tok.kind != TokenKind::EndOfFile && tok.span.start.line == last;
                if (code_before || code_after) {
                    rec.scope = DeviationScope::SameLine;
                    rec.target_line = code_before ? first : last;
                } else {
                    for (int l = last + 1; l <= file.line_count(); ++l) {
                        if (!file.is_blank_line(l)) {
                            rec.target_line = l;
                            break;
                        }
                    }
                }
            }
            out.records.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<Diagnostic> apply_suppressions(std::vector<Diagnostic>& diagnostics,
                                           const std::vector<DeviationRecord>& deviations,
                                           const std::string& path) {
    std::vector<bool> used(deviations.size(), false);
    for (auto& d : diagnostics) {
        if (!d.rule.is_guideline()) continue;
        for (std::size_t i = 0; i < deviations.size(); ++i) {
            const auto& dev = deviations[i];
            if (!d.covers(dev.guideline)) continue;
            if (dev.scope != DeviationScope::File && dev.target_line != d.span.start.line) continue;
            used[i] = true;
            if (!d.suppressed) {
                d.suppressed = true;
                d.deviation = i;
            }
        }
    }
    std::vector<Diagnostic> unused;
    for (std::size_t i = 0; i < deviations.size(); ++i) {
        if (used[i]) continue;
        Diagnostic d;
        d.rule = ToolRule::DeviationUnused;
        d.path = path;
        d.span = deviations[i].span;
        d.message = "deviation from " + deviations[i].guideline.str() + " matches no finding";
        d.severity = Severity::Advisory;
        unused.push_back(std::move(d));
    }
    return unused;
}

}  // namespace barrc
