#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "analyze.hpp"
#include "barrc/cli.hpp"
#include "barrc/report.hpp"
#include "json.hpp"

using namespace barrc;
using namespace barrc::testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> keys_of(const nlohmann::ordered_json& obj) {
    std::vector<std::string> out;
    for (auto it = obj.begin(); it != obj.end(); ++it) out.push_back(it.key());
    return out;
}

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "barrc-check");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// A scratch directory removed on scope exit.
struct Scratch {
    fs::path dir;
    explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / name) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string put(const std::string& name, const std::string& bytes) const {
        std::ofstream(dir / name, std::ios::binary) << bytes;
        return (dir / name).string();
    }
};

}  // namespace

TEST_CASE("empty run json") {
    AnalysisResult empty;
    auto doc = nlohmann::ordered_json::parse(render_json(empty, {}));
    CHECK(keys_of(doc) == std::vector<std::string>{"version", "files", "summary", "misra"});
    CHECK(doc["files"].empty());
    CHECK(doc["summary"].empty());
    CHECK(keys_of(doc["misra"]) == std::vector<std::string>{"covered", "degraded", "unassessed", "gap"});
    CHECK(doc["misra"]["unassessed"].size() == 41);
    CHECK(doc["misra"]["covered"].empty());
}

TEST_CASE("one finding json") {
    auto result = analyze_only("\tint a;\n", {"3.5.a"});
    auto doc = nlohmann::ordered_json::parse(render_json(result, {}));
    REQUIRE(doc["files"].size() == 1);
    const auto& findings = doc["files"][0]["findings"];
    REQUIRE(findings.size() == 1);
    CHECK(keys_of(findings[0]) ==
          std::vector<std::string>{"rule", "line", "col", "severity", "message", "suppressed", "fix_available"});
    CHECK(findings[0]["rule"] == "3.5.a");
    CHECK(findings[0]["line"] == 1);
    CHECK(findings[0]["col"] == 1);
    CHECK(findings[0]["fix_available"] == true);
    CHECK(doc["summary"]["3.5.a"] == 1);
}

TEST_CASE("gap table in json") {
    json doc = json::parse(render_json(AnalysisResult{}, {}));
    std::size_t total = 0;
    for (const auto& [key, ids] : doc["misra"]["gap"].items()) total += ids.size();
    CHECK(doc["misra"]["gap"].size() == 6);
    CHECK(total == 9 + 123);
}

TEST_CASE("text lines") {
    std::string text = "int value_" + std::string(75, 'x') + ";\n";
    auto result = analyze_only(text, {"1.2.a"});
    std::string out = render_text(result, {});
    CHECK(out.starts_with("unit_probe.c:1:81: [1.2.a] line exceeds 80 characters\n"));

    auto sup = analyze_only(text + "/* barr-c: deviation-file 1.2.a generated */\n", {"1.2.a"});
    ReportOptions show;
    show.show_suppressed = true;
    CHECK(render_text(sup, show).starts_with("(suppressed) unit_probe.c:1:81: [1.2.a]"));
    CHECK(render_text(sup, {}).find("[1.2.a]") == std::string::npos);
}

TEST_CASE("rule list") {
    std::string list = render_rule_list();
    CHECK(std::count(list.begin(), list.end(), '\n') == 143);
}

TEST_CASE("unified diff") {
    CHECK(unified_diff("a.c", "x\n", "x\n").empty());
    std::string d = unified_diff("a.c", "one\ntwo\nthree\n", "one\n2\nthree\n");
    CHECK(d == "--- a/a.c\n+++ b/a.c\n@@ -1,3 +1,3 @@\n one\n-two\n+2\n three\n");
    std::string tail = unified_diff("a.c", "x", "x\n");
    CHECK(tail.find("\\ No newline at end of file") != std::string::npos);
}

TEST_CASE("exit codes") {
    Scratch s("barrc-unit-cli");
    std::string clean = s.put("clean.c", "int clean_value;\n");
    std::string tab = s.put("tab.c", "\tint tab_value;\n");

    CHECK(cli({"--disable", "all", "--enable", "3.5.a", clean}).code == 0);
    Run one = cli({"--disable", "all", "--enable", "3.5.a", "--format", "json", tab});
    CHECK(one.code == 1);
    CHECK(json::parse(one.out)["files"][0]["findings"].size() == 1);
    CHECK(cli({(s.dir / "missing.c").string()}).code == 2);
    CHECK(cli({"--enable", "9.9.z", clean}).code == 2);
    CHECK(cli({"--fix", "--fix-dry-run", clean}).code == 2);
    CHECK(cli({"--no-such-flag"}).code == 2);

    // Advisory findings alone do not fail the run.
    std::string noheader = s.put("lonely.c", "int lonely_value;\n");
    CHECK(cli({"--disable", "all", "--enable", "4.2.a", noheader}).code == 0);
}

TEST_CASE("dry run and fix") {
    Scratch s("barrc-unit-fix");
    std::string tab = s.put("tab.c", "\tint tab_value;\n");
    Run dry = cli({"--disable", "all", "--enable", "3.5.a", "--fix-dry-run", tab});
    CHECK(dry.code == 0);
    CHECK(dry.out.find("+    int tab_value;") != std::string::npos);
    Run fix = cli({"--disable", "all", "--enable", "3.5.a", "--fix", tab});
    CHECK(fix.code == 0);
    std::ifstream in(tab, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(bytes == "    int tab_value;\n");
}

TEST_CASE("directories and config file") {
    Scratch s("barrc-unit-dir");
    fs::create_directories(s.dir / "sub");
    s.put("sub/deep.c", "\tint deep_value;\n");
    s.put("notes.txt", "\tnot C\n");
    std::string cfg = s.put("barrc.json", R"({"disable": ["all"], "enable": ["3.5.a"]})");
    Run r = cli({"--config", cfg, "--format", "json", s.dir.string()});
    CHECK(r.code == 1);
    json doc = json::parse(r.out);
    REQUIRE(doc["files"].size() == 1);
    CHECK(doc["files"][0]["path"].get<std::string>().ends_with("sub/deep.c"));

    std::string bad = s.put("bad.json", "{\"line_length\": }");
    CHECK(cli({"--config", bad, s.dir.string()}).code == 2);
}
