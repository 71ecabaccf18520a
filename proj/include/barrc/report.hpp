#pragma once

#include <string>
#include <string_view>

#include "barrc/analyzer.hpp"

namespace barrc {

struct ReportOptions {
    bool show_suppressed = false;
    bool misra_report = false;
    GotoPolicy goto_policy = GotoPolicy::Forbid;
};

/// The projection implied by a run; every row is Unassessed when no file was analyzed.
MisraProjection project(const AnalysisResult& result, GotoPolicy goto_policy);

std::string render_json(const AnalysisResult& result, const ReportOptions& options);
std::string render_text(const AnalysisResult& result, const ReportOptions& options);

/// One line per catalog guideline.
std::string render_rule_list();

/// Unified diff with three lines of context; empty when the texts are equal.
std::string unified_diff(const std::string& path, std::string_view before, std::string_view after);

}  // namespace barrc
