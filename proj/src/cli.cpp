#include "barrc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "barrc/fixer.hpp"
#include "barrc/report.hpp"

namespace barrc {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::string config_path;
    std::string format = "text";
    bool fix = false;
    bool fix_dry_run = false;
    bool misra_report = false;
    bool list_rules = false;
    bool show_suppressed = false;
    std::vector<std::string> include_paths;
    std::vector<std::string> enable;
    std::vector<std::string> disable;
    std::vector<std::string> defines;
    int jobs = -1;
};

bool is_source_path(const fs::path& p) {
    auto ext = p.extension().string();
    return ext == ".c" || ext == ".h";
}

// Expands directories into their .c/.h files. Missing paths are reported and skipped.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs, std::ostream& err, bool& failed) {
    std::vector<fs::path> out;
    for (const auto& in : inputs) {
        fs::path p(in);
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            std::vector<fs::path> found;
            for (auto it = fs::recursive_directory_iterator(p, ec); !ec && it != fs::recursive_directory_iterator();
                 it.increment(ec)) {
                if (it->is_regular_file(ec) && is_source_path(it->path())) found.push_back(it->path());
            }
            std::sort(found.begin(), found.end());
            out.insert(out.end(), found.begin(), found.end());
        } else if (fs::exists(p, ec)) {
            out.push_back(p);
        } else {
            err << "barrc-check: cannot read '" << in << "': no such file or directory\n";
            failed = true;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Config build_config(const Options& opt) {
    Config config;
    std::string path = opt.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("BARRC_CONFIG"); env && *env) path = env;
    }
    if (path.empty() && fs::exists("barrc.json")) path = "barrc.json";
    if (!path.empty()) config = load_config(path);

    // "all" first so that individual ids refine it regardless of flag order.
    for (const auto& id : opt.disable) {
        if (id == "all") set_guideline(config, id, false);
    }
    for (const auto& id : opt.enable) {
        if (id == "all") set_guideline(config, id, true);
    }
    for (const auto& id : opt.enable) {
        if (id != "all") set_guideline(config, id, true);
    }
    for (const auto& id : opt.disable) {
        if (id != "all") set_guideline(config, id, false);
    }
    for (const auto& dir : opt.include_paths) config.include_paths.emplace_back(dir);
    for (const auto& def : opt.defines) {
        auto eq = def.find('=');
        if (eq == 0 || def.empty()) throw ConfigError("bad --define '" + def + "'");
        if (eq == std::string::npos) config.defines[def] = "1";
        else config.defines[def.substr(0, eq)] = def.substr(eq + 1);
    }
    if (opt.jobs >= 0) config.jobs = opt.jobs;
    return config;
}

void print_skipped(const std::vector<Diagnostic>& skipped, std::ostream& err) {
    for (const auto& d : skipped) {
        err << d.path << ':' << d.span.start.line << ':' << d.span.start.column << ": [" << d.rule.str() << "] "
            << d.message << '\n';
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Checks C99 sources against the machine-checkable BARR-C:2018 guidelines", "barrc-check"};
    app.add_option("paths", opt.inputs, "Source files or directories");
    app.add_option("--config", opt.config_path, "Config file (default: $BARRC_CONFIG, then ./barrc.json)");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--fix", opt.fix, "Apply safe fixes in place");
    app.add_flag("--fix-dry-run", opt.fix_dry_run, "Print the fixes as a unified diff");
    app.add_flag("--misra-report", opt.misra_report, "Add the MISRA C:2012 projection to the text report");
    app.add_flag("--list-rules", opt.list_rules, "List the guideline catalog");
    app.add_flag("--show-suppressed", opt.show_suppressed, "Show findings covered by a deviation");
    app.add_option("--include-path,-I", opt.include_paths, "Directory searched for headers")->allow_extra_args(false);
    app.add_option("--enable", opt.enable, "Enable a guideline id, or all")->delimiter(',')->allow_extra_args(false);
    app.add_option("--disable", opt.disable, "Disable a guideline id, or all")->delimiter(',')->allow_extra_args(false);
    app.add_option("--define,-D", opt.defines, "Macro NAME or NAME=VALUE for conditional compilation")->allow_extra_args(false);
    app.add_option("--jobs,-j", opt.jobs, "Worker threads (0 = one per core)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (opt.list_rules) {
        out << render_rule_list();
        return 0;
    }
    if (opt.fix && opt.fix_dry_run) {
        err << "barrc-check: --fix and --fix-dry-run cannot be combined\n";
        return 2;
    }

    Config config;
    try {
        config = build_config(opt);
    } catch (const ConfigError& e) {
        err << "barrc-check: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "barrc-check: " << e.what() << '\n';
        return 2;
    }

    bool io_failed = false;
    std::vector<SourceFile> files;
    for (const auto& p : expand_inputs(opt.inputs, err, io_failed)) {
        try {
            files.push_back(load_source(p));
        } catch (const IoError& e) {
            err << "barrc-check: " << e.what() << '\n';
            io_failed = true;
        }
    }

    if (opt.fix || opt.fix_dry_run) {
        for (auto& f : files) {
            FixResult fixed = fix_file(f, config);
            print_skipped(fixed.skipped, err);
            if (fixed.bytes == f.bytes()) continue;
            if (opt.fix_dry_run) {
                out << unified_diff(f.path().generic_string(), f.bytes(), fixed.bytes);
                continue;
            }
            std::ofstream os(f.path(), std::ios::binary | std::ios::trunc);
            os << fixed.bytes;
            if (!os) {
                err << "barrc-check: cannot write '" << f.path().string() << "'\n";
                io_failed = true;
                continue;
            }
            f = SourceFile(f.path(), fixed.bytes);
        }
        if (opt.fix_dry_run) return io_failed ? 2 : 0;
    }

    AnalysisResult result = run_all(std::move(files), config, config.jobs);
    ReportOptions ro;
    ro.show_suppressed = opt.show_suppressed;
    ro.misra_report = opt.misra_report;
    ro.goto_policy = config.goto_policy;
    out << (opt.format == "json" ? render_json(result, ro) : render_text(result, ro));
    if (io_failed) return 2;
    return result.unsuppressed_errors() > 0 ? 1 : 0;
}

}  // namespace barrc
