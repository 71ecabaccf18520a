#include "fixtures.hpp"

#include <algorithm>
#include <fstream>

namespace fs = std::filesystem;

namespace barrc::testing {

fs::path corpus_root() { return fs::path(BARRC_CORPUS_DIR); }

std::vector<Fixture> load_fixtures() {
    std::vector<Fixture> out;
    for (const auto& entry : fs::directory_iterator(corpus_root())) {
        if (!entry.is_directory()) continue;
        Fixture f;
        f.dir = entry.path();
        f.name = entry.path().filename().string();
        f.id = gid(f.name.substr(0, f.name.find('-')));
        for (const auto& e : fs::recursive_directory_iterator(f.dir)) {
            if (!e.is_regular_file()) continue;
            auto leaf = e.path().filename().string();
            if (leaf == "expected.txt" || leaf == "barrc.json") continue;
            f.files.push_back(e.path());
        }
        std::sort(f.files.begin(), f.files.end());
        std::ifstream in(f.dir / "expected.txt");
        for (std::string line; std::getline(in, line);) {
            if (!line.empty()) f.expected.insert(line);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
}

Config fixture_config(const Fixture& f) {
    Config c;
    if (fs::exists(f.dir / "barrc.json")) c = load_config(f.dir / "barrc.json");
    set_guideline(c, "all", false);
    set_guideline(c, f.id.str(), true);
    return c;
}

std::vector<SourceFile> fixture_sources(const Fixture& f) {
    std::vector<SourceFile> out;
    for (const auto& p : f.files) out.push_back(load_source(p));
    return out;
}

std::set<std::string> finding_lines(const Fixture& f, const AnalysisResult& result) {
    std::string prefix = f.dir.generic_string() + "/";
    std::set<std::string> out;
    for (const auto& file : result.files) {
        std::string path = file.path;
        if (path.starts_with(prefix)) path = path.substr(prefix.size());
        for (const auto& d : file.diagnostics) {
            out.insert(path + ":" + std::to_string(d.span.start.line) + ":" + std::to_string(d.span.start.column) +
                       ": [" + d.rule.str() + "]");
        }
    }
    return out;
}

std::set<std::string> run_fixture(const Fixture& f, int jobs) {
    return finding_lines(f, run_all(fixture_sources(f), fixture_config(f), jobs));
}

std::vector<std::pair<const Fixture*, fs::path>> corpus_files(const std::vector<Fixture>& fixtures) {
    std::vector<std::pair<const Fixture*, fs::path>> out;
    for (const auto& f : fixtures) {
        for (const auto& p : f.files) out.emplace_back(&f, p);
    }
    return out;
}

}  // namespace barrc::testing
