#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barrc/ast.hpp"
#include "barrc/cpp_view.hpp"

namespace barrc {

struct ParseOptions {
    std::set<std::string> extra_typedefs;
    std::set<std::string> extension_keywords;
    std::vector<std::string> extension_patterns;  // trailing '*' matches any suffix
};

bool matches_extension(const std::string& word, const ParseOptions& options);

/// Parses the active, non-directive tokens. Never throws; unparseable regions become problems.
SyntaxTree parse_translation_unit(const std::vector<Token>& tokens, const DirectiveSet& directives,
                                  const BranchSelection& branches, const ParseOptions& options);

/// Signedness of the <stdint.h>-style names known without their header.
std::optional<BaseType> builtin_typedef(const std::string& name);

/// Best-effort type of an expression. Pointer values and anything not declared in the file are Unknown.
TypeSpec resolve_local_type(const Expr& expr, const SymbolTable& symbols);

enum class ValueClass { Signed, Unsigned, Floating, Boolean, Unknown };

/// Classifies a resolved type, following in-file typedefs and the built-in names.
ValueClass classify_type(const TypeSpec& spec, const SymbolTable& symbols);

}  // namespace barrc
