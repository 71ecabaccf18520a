#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "barrc/analyzer.hpp"

namespace barrc {

struct FixPlan {
    std::vector<FixEdit> edits;         // sorted by start, non-overlapping
    std::vector<Diagnostic> skipped;    // fix-skipped findings for conflicting fixes
};

/// Collects the fixes of unsuppressed findings. A finding's edits are taken together or not at all;
/// when they collide with an earlier finding's edits the later finding is skipped.
FixPlan plan_fixes(const std::vector<Diagnostic>& diagnostics);

/// Splices edits into the bytes. Throws std::out_of_range for an edit outside the buffer and
/// std::invalid_argument for unsorted or overlapping edits.
std::string apply_fixes(std::string_view bytes, const std::vector<FixEdit>& edits);

struct FixResult {
    std::string bytes;
    int rounds = 0;  // rounds that changed something
    std::vector<Diagnostic> skipped;
};

/// Repeats analyze, plan and apply on one file until nothing more can be fixed (at most max_rounds).
FixResult fix_file(const SourceFile& file, const Config& config, int max_rounds = 4);

}  // namespace barrc
