#include "barrc/guideline_id.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace barrc {

namespace {

std::optional<int> parse_small_number(std::string_view text) {
    if (text.empty() || text.size() > 2) {
        return std::nullopt;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::optional<GuidelineId> GuidelineId::parse(std::string_view text) {
    auto first_dot = text.find('.');
    if (first_dot == std::string_view::npos) {
        return std::nullopt;
    }
    auto second_dot = text.find('.', first_dot + 1);
    if (second_dot == std::string_view::npos || second_dot + 2 != text.size()) {
        return std::nullopt;
    }
    auto chapter = parse_small_number(text.substr(0, first_dot));
    auto section = parse_small_number(text.substr(first_dot + 1, second_dot - first_dot - 1));
    char item = text.back();
    if (!chapter || !section || *chapter < 1 || *chapter > 8 || *section < 1 || *section > 8 ||
        item < 'a' || item > 'o') {
        return std::nullopt;
    }
    return GuidelineId{*chapter, *section, item};
}

std::string GuidelineId::str() const {
    return std::to_string(chapter) + "." + std::to_string(section) + "." + std::string(1, item);
}

GuidelineId gid(std::string_view text) {
    auto id = GuidelineId::parse(text);
    if (!id) {
        throw std::invalid_argument("bad guideline id: " + std::string(text));
    }
    return *id;
}

}  // namespace barrc
