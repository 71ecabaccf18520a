#include "barrc/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace barrc {

std::set<GuidelineId> Config::effective_enabled() const {
    std::set<GuidelineId> out;
    if (!disable_all) {
        for (const auto& g : catalog().guidelines()) {
            if (enable_all || g.default_enabled) out.insert(g.id);
        }
    }
    out.insert(enable.begin(), enable.end());
    for (const auto& id : disable) out.erase(id);
    return out;
}

void set_guideline(Config& config, const std::string& id, bool enabled) {
    if (id == "all") {
        if (enabled) {
            config.enable_all = true;
            config.disable_all = false;
            config.disable.clear();
        } else {
            config.disable_all = true;
            config.enable_all = false;
            config.enable.clear();
        }
        return;
    }
    auto parsed = GuidelineId::parse(id);
    if (!parsed || !catalog().find(*parsed)) throw ConfigError("unknown guideline id '" + id + "'");
    if (enabled) {
        config.enable.insert(*parsed);
        config.disable.erase(*parsed);
    } else {
        config.disable.insert(*parsed);
        config.enable.erase(*parsed);
    }
}

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

std::vector<std::string> string_list(const json& v, const std::string& key) {
    if (!v.is_array()) throw ConfigError("config key '" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw ConfigError("config key '" + key + "' must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

int positive(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 100000) {
        throw ConfigError("config key '" + key + "' must be a positive integer");
    }
    return v.get<int>();
}

bool boolean(const json& v, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be true or false");
    return v.get<bool>();
}

}  // namespace

Config parse_config(std::string_view text, const Config& base) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed config at line " + std::to_string(line_of_offset(text, e.byte)) + ": " +
                          e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    Config c = base;
    std::vector<std::string> enables, disables;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "enable") {
            enables = string_list(v, key);
        } else if (key == "disable") {
            disables = string_list(v, key);
        } else if (key == "line_length") {
            c.line_length = positive(v, key);
        } else if (key == "indent_width") {
            c.indent_width = positive(v, key);
        } else if (key == "max_function_lines") {
            c.max_function_lines = positive(v, key);
        } else if (key == "min_identifier_length") {
            c.min_identifier_length = positive(v, key);
        } else if (key == "max_identifier_significant") {
            c.max_identifier_significant = positive(v, key);
        } else if (key == "module_name_significant") {
            c.module_name_significant = positive(v, key);
        } else if (key == "goto_policy") {
            std::string p = v.is_string() ? v.get<std::string>() : "";
            if (p == "forbid") c.goto_policy = GotoPolicy::Forbid;
            else if (p == "forward_only") c.goto_policy = GotoPolicy::ForwardOnly;
            else throw ConfigError("config key 'goto_policy' must be \"forbid\" or \"forward_only\"");
        } else if (key == "globals_include_static_filescope") {
            c.globals_include_static_filescope = boolean(v, key);
        } else if (key == "require_header_for_main") {
            c.require_header_for_main = boolean(v, key);
        } else if (key == "include_paths") {
            for (const auto& s : string_list(v, key)) c.include_paths.emplace_back(s);
        } else if (key == "public_header_dirs") {
            for (const auto& s : string_list(v, key)) c.public_header_dirs.emplace_back(s);
        } else if (key == "private_header_dirs") {
            for (const auto& s : string_list(v, key)) c.private_header_dirs.emplace_back(s);
        } else if (key == "defines") {
            if (!v.is_object()) throw ConfigError("config key 'defines' must be an object");
            for (auto d = v.begin(); d != v.end(); ++d) {
                if (d.value().is_string()) c.defines[d.key()] = d.value().get<std::string>();
                else if (d.value().is_number_integer()) c.defines[d.key()] = std::to_string(d.value().get<long long>());
                else throw ConfigError("define '" + d.key() + "' must be a string or integer");
            }
        } else if (key == "loop_literal_whitelist") {
            if (!v.is_array()) throw ConfigError("config key 'loop_literal_whitelist' must be an array of integers");
            for (const auto& e : v) {
                if (!e.is_number_integer()) {
                    throw ConfigError("config key 'loop_literal_whitelist' must be an array of integers");
                }
                c.loop_literal_whitelist.insert(e.get<long long>());
            }
        } else if (key == "short_name_exemptions") {
            for (const auto& s : string_list(v, key)) c.short_name_exemptions.insert(s);
        } else if (key == "extension_keywords") {
            auto l = string_list(v, key);
            c.extension_keywords = std::set<std::string>(l.begin(), l.end());
        } else if (key == "extension_patterns") {
            c.extension_patterns = string_list(v, key);
        } else if (key == "extra_typedefs") {
            for (const auto& s : string_list(v, key)) c.extra_typedefs.insert(s);
        } else if (key == "eof_comment_text") {
            if (!v.is_string() || v.get<std::string>().empty()) {
                throw ConfigError("config key 'eof_comment_text' must be a non-empty string");
            }
            c.eof_comment_text = v.get<std::string>();
        } else if (key == "jobs") {
            c.jobs = positive(v, key);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    // "all" sets the baseline; individual ids then refine it.
    for (const auto& id : disables) {
        if (id == "all") set_guideline(c, id, false);
    }
    for (const auto& id : enables) {
        if (id == "all") set_guideline(c, id, true);
    }
    for (const auto& id : enables) {
        if (id != "all") set_guideline(c, id, true);
    }
    for (const auto& id : disables) {
        if (id == "all") continue;
        if (std::find(enables.begin(), enables.end(), id) != enables.end()) {
            throw ConfigError("guideline " + id + " is both enabled and disabled");
        }
        set_guideline(c, id, false);
    }
    return c;
}

Config load_config(const std::filesystem::path& path, const Config& base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    Config c = parse_config(ss.str(), base);
    auto dir = path.parent_path();
    auto anchor = [&](std::vector<std::filesystem::path>& list, std::size_t from) {
        for (std::size_t i = from; i < list.size(); ++i) {
            if (list[i].is_relative()) list[i] = (dir / list[i]).lexically_normal();
        }
    };
    anchor(c.include_paths, base.include_paths.size());
    anchor(c.public_header_dirs, base.public_header_dirs.size());
    anchor(c.private_header_dirs, base.private_header_dirs.size());
    return c;
}

}  // namespace barrc
