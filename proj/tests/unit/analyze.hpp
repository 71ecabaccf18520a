#pragma once

#include <string>
#include <vector>

#include "barrc/analyzer.hpp"

namespace barrc::testing {

/// Runs only the listed guidelines over one in-memory file.
inline AnalysisResult analyze_only(const std::string& text, std::initializer_list<const char*> ids,
                                   const std::string& name = "unit_probe.c") {
    Config c;
    set_guideline(c, "all", false);
    for (const char* id : ids) set_guideline(c, id, true);
    return run_all({SourceFile(name, text)}, c, 1);
}

/// "line:col rule" for every finding, in report order.
inline std::vector<std::string> finding_keys(const AnalysisResult& r) {
    std::vector<std::string> out;
    for (const auto& f : r.files) {
        for (const auto& d : f.diagnostics) {
            out.push_back(std::to_string(d.span.start.line) + ":" + std::to_string(d.span.start.column) + " " +
                          d.rule.str());
        }
    }
    return out;
}

inline std::vector<std::string> keys_for(const std::string& text, std::initializer_list<const char*> ids) {
    return finding_keys(analyze_only(text, ids));
}

}  // namespace barrc::testing
