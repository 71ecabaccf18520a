#include "barrc/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace barrc {

namespace {

constexpr const char* kVersion = "1.0.0";

std::map<RuleRef, std::size_t> rule_counts(const AnalysisResult& result) {
    std::map<RuleRef, std::size_t> counts;
    for (const auto& f : result.files) {
        for (const auto& d : f.diagnostics) {
            if (!d.suppressed) ++counts[d.rule];
        }
    }
    return counts;
}

std::string provided_by(const CrosswalkEntry& e) {
    std::string s;
    for (const auto& id : e.provided_by) {
        if (!s.empty()) s += e.any_of ? " or " : " and ";
        s += id.str();
    }
    return s;
}

std::string_view enforceability_name(Enforceability e) {
    switch (e) {
        case Enforceability::Automatic:
            return "automatic";
        case Enforceability::Heuristic:
            return "heuristic";
        case Enforceability::Manual:
            return "manual";
    }
    return "";
}

}  // namespace

MisraProjection project(const AnalysisResult& result, GotoPolicy goto_policy) {
    if (result.files.empty()) return misra_projection({}, {}, goto_policy);
    std::set<GuidelineId> enabled = result.enabled;
    for (const auto& g : catalog().guidelines()) {
        if (g.enforceability == Enforceability::Manual) enabled.insert(g.id);
    }
    return misra_projection(enabled, result.violated(), goto_policy);
}

std::string render_json(const AnalysisResult& result, const ReportOptions& options) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["version"] = kVersion;
    doc["files"] = ordered_json::array();
    for (const auto& f : result.files) {
        ordered_json file;
        file["path"] = f.path;
        file["findings"] = ordered_json::array();
        for (const auto& d : f.diagnostics) {
            ordered_json j;
            j["rule"] = d.rule.str();
            j["line"] = d.span.start.line;
            j["col"] = d.span.start.column;
            j["severity"] = severity_name(d.severity);
            j["message"] = d.message;
            j["suppressed"] = d.suppressed;
            j["fix_available"] = d.fix_available();
            file["findings"].push_back(std::move(j));
        }
        doc["files"].push_back(std::move(file));
    }
    doc["summary"] = ordered_json::object();
    for (const auto& [rule, n] : rule_counts(result)) doc["summary"][rule.str()] = n;

    ordered_json misra;
    misra["covered"] = ordered_json::array();
    misra["degraded"] = ordered_json::array();
    misra["unassessed"] = ordered_json::array();
    for (const auto& row : project(result, options.goto_policy).rows) {
        ordered_json r;
        r["id"] = row.entry->misra.str();
        r["coverage"] = row.entry->coverage == Coverage::Mostly ? "mostly" : "partially";
        r["provided_by"] = ordered_json::array();
        for (const auto& id : row.entry->provided_by) r["provided_by"].push_back(id.str());
        misra[std::string(projection_status_name(row.status))].push_back(std::move(r));
    }
    ordered_json gap = ordered_json::object();
    for (GapCategory c : {GapCategory::UndefinedUnspecified, GapCategory::ImplementationDefined, GapCategory::Readability,
                          GapCategory::Verifiability, GapCategory::DeveloperConfusion, GapCategory::RuntimeBehavior}) {
        gap[std::string(gap_category_key(c))] = ordered_json::array();
    }
    for (const auto& g : catalog().gaps()) gap[std::string(gap_category_key(g.category))].push_back(g.misra.str());
    misra["gap"] = std::move(gap);
    doc["misra"] = std::move(misra);
    return doc.dump(2) + "\n";
}

std::string render_text(const AnalysisResult& result, const ReportOptions& options) {
    std::ostringstream out;
    std::size_t errors = 0, advisories = 0, tool = 0, suppressed = 0;
    for (const auto& f : result.files) {
        for (const auto& d : f.diagnostics) {
            if (d.suppressed) {
                ++suppressed;
                if (!options.show_suppressed) continue;
                out << "(suppressed) ";
            } else if (d.severity == Severity::Error) {
                ++errors;
            } else if (d.severity == Severity::Advisory) {
                ++advisories;
            } else {
                ++tool;
            }
            out << d.path << ':' << d.span.start.line << ':' << d.span.start.column << ": [" << d.rule.str() << "] "
                << d.message << '\n';
        }
    }
    out << "\n" << result.files.size() << " file(s) analyzed: " << errors << " error(s), " << advisories
        << " advisory finding(s), " << tool << " tool finding(s), " << suppressed << " suppressed\n";
    for (const auto& [rule, n] : rule_counts(result)) out << "  " << rule.str() << ": " << n << '\n';

    if (options.misra_report) {
        auto proj = project(result, options.goto_policy);
        for (Coverage cov : {Coverage::Mostly, Coverage::Partially}) {
            out << "\nMISRA C:2012 guidelines " << (cov == Coverage::Mostly ? "mostly" : "partially") << " covered\n";
            for (const auto& row : proj.rows) {
                if (row.entry->coverage != cov) continue;
                std::string id = row.entry->misra.str();
                out << "  " << id << std::string(id.size() < 11 ? 11 - id.size() : 1, ' ')
                    << projection_status_name(row.status) << std::string(12 - projection_status_name(row.status).size(), ' ')
                    << "by " << provided_by(*row.entry) << '\n';
            }
        }
        out << "\nMISRA C:2012 guidelines outside the crosswalk\n";
        std::map<std::string, std::pair<int, int>> gap_counts;
        for (const auto& g : catalog().gaps()) {
            auto& c = gap_counts[std::string(gap_category_key(g.category))];
            (g.misra.is_directive ? c.first : c.second)++;
        }
        for (const auto& [key, c] : gap_counts) {
            out << "  " << key << ": " << c.first << " directive(s), " << c.second << " rule(s)\n";
        }
        out << "\nGuidelines in effect that need manual review\n ";
        int col = 1;
        for (const auto& g : catalog().guidelines()) {
            if (g.enforceability != Enforceability::Manual) continue;
            std::string id = " " + g.id.str();
            if (col + id.size() > 72) {
                out << "\n ";
                col = 1;
            }
            out << id;
            col += static_cast<int>(id.size());
        }
        out << '\n';
    }
    return out.str();
}

std::string render_rule_list() {
    std::ostringstream out;
    for (const auto& g : catalog().guidelines()) {
        std::string tags = std::string(g.starred ? "*" : " ") + (g.bug_killing ? "!" : " ");
        std::string id = g.id.str();
        out << id << std::string(8 - std::min<std::size_t>(id.size(), 7), ' ')
            << (g.kind == GuidelineKind::Directive ? 'D' : 'R') << ' ' << tags << ' '
            << enforceability_name(g.enforceability) << std::string(10 - enforceability_name(g.enforceability).size(), ' ')
            << (g.default_enabled ? "on " : "off") << ' ' << (g.fixable ? "fix " : "    ") << g.headline << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t at = 0;
    while (at < s.size()) {
        std::size_t nl = s.find('\n', at);
        std::size_t end = nl == std::string_view::npos ? s.size() : nl + 1;
        out.push_back(s.substr(at, end - at));
        at = end;
    }
    return out;
}

struct DiffOp {
    char kind;  // ' ', '-', '+'
    std::string_view line;
    std::size_t a_line;  // 0-based index in before
    std::size_t b_line;
};

std::vector<DiffOp> diff_ops(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
    std::size_t pre = 0;
    while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
    std::size_t suf = 0;
    while (suf < a.size() - pre && suf < b.size() - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) ++suf;
    std::size_t n = a.size() - pre - suf, m = b.size() - pre - suf;

    std::vector<DiffOp> ops;
    for (std::size_t i = 0; i < pre; ++i) ops.push_back({' ', a[i], i, i});
    if (n * m <= 25'000'000) {
        // Longest common subsequence table over the changed middle.
        std::vector<std::vector<std::uint32_t>> lcs(n + 1, std::vector<std::uint32_t>(m + 1, 0));
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = m; j-- > 0;) {
                lcs[i][j] = a[pre + i] == b[pre + j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
            }
        }
        std::size_t i = 0, j = 0;
        while (i < n || j < m) {
            if (i < n && j < m && a[pre + i] == b[pre + j]) {
                ops.push_back({' ', a[pre + i], pre + i, pre + j});
                ++i;
                ++j;
            } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
                ops.push_back({'-', a[pre + i], pre + i, pre + j});
                ++i;
            } else {
                ops.push_back({'+', b[pre + j], pre + i, pre + j});
                ++j;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) ops.push_back({'-', a[pre + i], pre + i, pre});
        for (std::size_t j = 0; j < m; ++j) ops.push_back({'+', b[pre + j], pre + n, pre + j});
    }
    for (std::size_t k = 0; k < suf; ++k) {
        ops.push_back({' ', a[a.size() - suf + k], a.size() - suf + k, b.size() - suf + k});
    }
    return ops;
}

void emit_line(std::ostringstream& out, char kind, std::string_view line) {
    out << kind << line;
    if (line.empty() || line.back() != '\n') out << "\n\\ No newline at end of file\n";
}

}  // namespace

std::string unified_diff(const std::string& path, std::string_view before, std::string_view after) {
    if (before == after) return "";
    auto a = split_lines(before);
    auto b = split_lines(after);
    auto ops = diff_ops(a, b);
    std::ostringstream out;
    out << "--- a/" << path << "\n+++ b/" << path << "\n";
    const std::size_t context = 3;
    std::size_t k = 0;
    while (k < ops.size()) {
        while (k < ops.size() && ops[k].kind == ' ') ++k;
        if (k == ops.size()) break;
        std::size_t start = k >= context ? k - context : 0;
        // Extend the hunk while changes are within 2*context of each other.
        std::size_t end = k;
        std::size_t last_change = k;
        while (end < ops.size()) {
            if (ops[end].kind != ' ') last_change = end;
            else if (end - last_change > 2 * context) break;
            ++end;
        }
        end = std::min(ops.size(), last_change + context + 1);
        std::size_t a_start = ops[start].a_line, b_start = ops[start].b_line;
        std::size_t a_count = 0, b_count = 0;
        for (std::size_t i = start; i < end; ++i) {
            if (ops[i].kind != '+') ++a_count;
            if (ops[i].kind != '-') ++b_count;
        }
        out << "@@ -" << (a_count ? a_start + 1 : a_start) << ',' << a_count << " +" << (b_count ? b_start + 1 : b_start)
            << ',' << b_count << " @@\n";
        for (std::size_t i = start; i < end; ++i) emit_line(out, ops[i].kind, ops[i].line);
        k = end;
    }
    return out.str();
}

}  // namespace barrc
