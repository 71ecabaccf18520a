#pragma once

#include <string>
#include <vector>

#include "barrc/diagnostic.hpp"
#include "barrc/lexer.hpp"

namespace barrc {

enum class DeviationScope { NextLine, SameLine, File };

struct DeviationRecord {
    GuidelineId guideline;
    DeviationScope scope = DeviationScope::NextLine;
    std::string reason;
    Span span;            // the annotating comment
    int target_line = 0;  // line covered by SameLine/NextLine records; 0 when none follows
};

struct DeviationScan {
    std::vector<DeviationRecord> records;
    std::vector<Diagnostic> problems;  // deviation-syntax findings
};

/// Finds `barr-c: deviation <id> <reason>` and `barr-c: deviation-file <id> <reason>` comments.
DeviationScan collect_deviations(const SourceFile& file, const std::vector<Token>& tokens);

/// Marks matching diagnostics suppressed (primary or secondary id) and returns one
/// deviation-unused advisory per record that matched nothing. Diagnostics are never removed.
std::vector<Diagnostic> apply_suppressions(std::vector<Diagnostic>& diagnostics,
                                           const std::vector<DeviationRecord>& deviations,
                                           const std::string& path);

}  // namespace barrc
