#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barrc/lexer.hpp"

namespace barrc {

enum class DirectiveKind { Include, Define, Undef, If, Ifdef, Ifndef, Elif, Else, Endif, Pragma, Error, LineMarker, Other };

struct Directive {
    DirectiveKind kind = DirectiveKind::Other;
    std::size_t first_token = 0;  // the '#' marker
    std::size_t last_token = 0;   // inclusive
    Span span;
    int hash_column = 1;
    int first_line = 1;
    int last_line = 1;
};

struct MacroDef {
    std::string name;
    std::size_t name_token = 0;
    bool is_function_like = false;
    std::vector<std::string> params;
    bool variadic = false;
    std::vector<std::size_t> body;  // token indices
    std::size_t directive = 0;
    Span span;
};

enum class IncludeStyle { Angle, Quote };

struct IncludeRef {
    IncludeStyle style = IncludeStyle::Quote;
    std::string path_text;
    std::optional<std::filesystem::path> resolved;
    std::size_t token = 0;
    std::size_t directive = 0;
    Span span;
};

struct HeaderGuard {
    std::string macro_name;
    std::size_t ifndef_directive = 0;
    std::size_t define_directive = 0;
    std::size_t endif_directive = 0;
    bool endif_has_comment = false;
};

struct DirectiveProblem {
    SourcePos pos;
    std::string message;
};

struct DirectiveSet {
    std::vector<Directive> directives;
    std::vector<MacroDef> macros;
    std::vector<IncludeRef> includes;
    std::vector<DirectiveProblem> problems;
    /// Directive index per token, or npos for tokens outside directives.
    std::vector<std::size_t> directive_of_token;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    bool in_directive(std::size_t token) const { return directive_of_token.at(token) != npos; }
};

DirectiveSet parse_directives(const std::vector<Token>& tokens);

/// Fills IncludeRef::resolved: the includer's directory first (quote style only), then the
/// search paths in order.
void resolve_includes(std::vector<IncludeRef>& includes, const std::filesystem::path& includer,
                      const std::vector<std::filesystem::path>& search_paths);

std::optional<HeaderGuard> detect_header_guard(const std::vector<Token>& tokens, const DirectiveSet& set);

struct BranchSelection {
    /// Indexed by physical line - 1.
    std::vector<bool> line_active;
    std::vector<DirectiveProblem> problems;

    bool active(int line) const {
        return line < 1 || static_cast<std::size_t>(line) > line_active.size() ||
               line_active[static_cast<std::size_t>(line - 1)];
    }
};

/// Chooses one branch of every conditional. Identifiers not defined by `predefined` (or by an
/// earlier active #define) are 0 and defined() of them is false.
BranchSelection select_branch(const std::vector<Token>& tokens, const DirectiveSet& set, int line_count,
                              const std::map<std::string, std::string>& predefined);

}  // namespace barrc
