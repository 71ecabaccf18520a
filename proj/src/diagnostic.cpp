#include "barrc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace barrc {

std::string_view tool_rule_name(ToolRule rule) {
    switch (rule) {
        case ToolRule::Parse:
            return "parse";
        case ToolRule::Extensions:
            return "extensions";
        case ToolRule::DeviationSyntax:
            return "deviation-syntax";
        case ToolRule::DeviationUnused:
            return "deviation-unused";
        case ToolRule::FixSkipped:
            return "fix-skipped";
    }
    return "unknown";
}

std::string RuleRef::str() const {
    if (is_guideline()) {
        return guideline().str();
    }
    return std::string(tool_rule_name(tool()));
}

std::strong_ordering RuleRef::operator<=>(const RuleRef& other) const {
    if (is_guideline() != other.is_guideline()) {
        return is_guideline() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (is_guideline()) {
        return guideline() <=> other.guideline();
    }
    return tool_rule_name(tool()) <=> tool_rule_name(other.tool());
}

std::string_view severity_name(Severity s) {
    switch (s) {
        case Severity::Error:
            return "error";
        case Severity::Advisory:
            return "advisory";
        case Severity::ToolError:
            return "tool-error";
    }
    return "unknown";
}

bool Diagnostic::covers(GuidelineId id) const {
    if (rule.is_guideline() && rule.guideline() == id) {
        return true;
    }
    return std::find(also.begin(), also.end(), id) != also.end();
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
    if (a.path != b.path) {
        return a.path < b.path;
    }
    if (a.span.start != b.span.start) {
        return a.span.start < b.span.start;
    }
    if (a.rule != b.rule) {
        return a.rule < b.rule;
    }
    return a.message < b.message;
}

}  // namespace barrc
