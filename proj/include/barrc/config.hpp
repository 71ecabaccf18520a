#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "barrc/catalog.hpp"

namespace barrc {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::set<GuidelineId> enable;
    std::set<GuidelineId> disable;
    bool enable_all = false;
    bool disable_all = false;

    int line_length = 80;
    int indent_width = 4;
    int max_function_lines = 100;
    int min_identifier_length = 3;
    int max_identifier_significant = 31;
    int module_name_significant = 8;

    GotoPolicy goto_policy = GotoPolicy::Forbid;
    bool globals_include_static_filescope = false;
    std::vector<std::filesystem::path> include_paths;
    std::map<std::string, std::string> defines;
    std::vector<std::filesystem::path> public_header_dirs;
    std::vector<std::filesystem::path> private_header_dirs;
    std::set<long long> loop_literal_whitelist;
    std::set<std::string> short_name_exemptions;
    std::set<std::string> extension_keywords = {"entry", "fortran", "asm", "typeof"};
    std::vector<std::string> extension_patterns = {"__asm*", "__attribute__", "__interrupt"};
    std::set<std::string> extra_typedefs;
    std::string eof_comment_text = "/*** end of file ***/";
    bool require_header_for_main = false;
    int jobs = 0;  // 0 = hardware concurrency

    /// Guidelines in effect: defaults (every guideline but the opt-in heuristics), or all of
    /// them with "all", then explicit enables added and disables removed.
    std::set<GuidelineId> effective_enabled() const;
};

/// Parses a JSON config document. Throws ConfigError naming the line of a syntax error or
/// the offending key.
Config parse_config(std::string_view text, const Config& base = Config{});

/// Reads and parses a config file; relative paths inside it resolve against its directory.
Config load_config(const std::filesystem::path& path, const Config& base = Config{});

/// Adds an id (or "all") to the enable or disable list, removing it from the other one.
void set_guideline(Config& config, const std::string& id, bool enabled);

}  // namespace barrc
