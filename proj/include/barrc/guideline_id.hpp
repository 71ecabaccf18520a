#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace barrc {

/// Identifier of one guideline in "chapter.section.item" form, e.g. 1.3.a.
struct GuidelineId {
    int chapter = 0;
    int section = 0;
    char item = 'a';

    static std::optional<GuidelineId> parse(std::string_view text);
    std::string str() const;

    auto operator<=>(const GuidelineId&) const = default;
};

/// Shorthand for compile-time-known ids; throws std::invalid_argument on bad text.
GuidelineId gid(std::string_view text);

}  // namespace barrc
