#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barrc/ast.hpp"
#include "barrc/config.hpp"
#include "barrc/cpp_view.hpp"
#include "barrc/deviation.hpp"
#include "barrc/diagnostic.hpp"
#include "barrc/lexer.hpp"
#include "barrc/source.hpp"

namespace barrc {

/// Everything known about one file.
struct TranslationView {
    SourceFile file;
    std::string path;  // display path, generic separators
    bool is_header = false;
    TokenStream lex;
    SpliceResult splices;
    DirectiveSet directives;
    BranchSelection branches;
    std::optional<HeaderGuard> guard;
    SyntaxTree tree;
    /// For a .c file, the same-root .h in the analyzed set, the same directory, or an include path.
    std::optional<std::filesystem::path> sibling_header;
    const TranslationView* sibling = nullptr;

    const std::vector<Token>& tokens() const { return lex.tokens; }
};

std::unique_ptr<TranslationView> build_view(SourceFile file, const Config& config);

struct FileReport {
    std::string path;
    std::vector<Diagnostic> diagnostics;  // sorted; suppressed ones included
    std::vector<DeviationRecord> deviations;
};

struct AnalysisResult {
    std::vector<FileReport> files;  // sorted by path
    std::set<GuidelineId> enabled;

    /// Guidelines with at least one unsuppressed finding.
    std::set<GuidelineId> violated() const;
    std::size_t unsuppressed_errors() const;
};

/// Analyzes the files as one set. jobs <= 0 uses the hardware concurrency. The result does not
/// depend on the number of workers.
AnalysisResult run_all(std::vector<SourceFile> files, const Config& config, int jobs = 0);

}  // namespace barrc
