#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "barrc/guideline_id.hpp"
#include "barrc/source.hpp"

namespace barrc {

/// Findings that are about the tool or the input rather than a guideline.
enum class ToolRule { Parse, Extensions, DeviationSyntax, DeviationUnused, FixSkipped };

std::string_view tool_rule_name(ToolRule rule);

class RuleRef {
public:
    RuleRef(GuidelineId id) : value_(id) {}  // NOLINT(google-explicit-constructor)
    RuleRef(ToolRule rule) : value_(rule) {}  // NOLINT(google-explicit-constructor)

    bool is_guideline() const { return std::holds_alternative<GuidelineId>(value_); }
    GuidelineId guideline() const { return std::get<GuidelineId>(value_); }
    ToolRule tool() const { return std::get<ToolRule>(value_); }
    std::string str() const;

    /// Guidelines order numerically; tool rules sort after every guideline.
    std::strong_ordering operator<=>(const RuleRef& other) const;
    bool operator==(const RuleRef& other) const { return value_ == other.value_; }

private:
    std::variant<GuidelineId, ToolRule> value_;
};

enum class Severity { Error, Advisory, ToolError };

std::string_view severity_name(Severity s);

/// One byte-range replacement against the original file.
struct FixEdit {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string replacement;
    RuleRef rule = ToolRule::FixSkipped;
};

struct Diagnostic {
    RuleRef rule = ToolRule::Parse;
    /// Further guidelines reported by the same finding (e.g. 8.5.a alongside 1.7.c).
    std::vector<GuidelineId> also;
    std::string path;
    Span span;
    std::string message;
    Severity severity = Severity::Error;
    std::vector<FixEdit> fix;
    bool suppressed = false;
    std::optional<std::size_t> deviation;

    bool fix_available() const { return !fix.empty(); }
    bool covers(GuidelineId id) const;
};

/// Sort key: path, line, column, rule.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

}  // namespace barrc
