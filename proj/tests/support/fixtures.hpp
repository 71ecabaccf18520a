#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "barrc/analyzer.hpp"
#include "barrc/config.hpp"

namespace barrc::testing {

/// One directory of tests/corpus: the guideline it exercises, its sources and the expected findings.
struct Fixture {
    std::filesystem::path dir;
    std::string name;
    GuidelineId id;
    std::vector<std::filesystem::path> files;  // absolute, sorted
    std::set<std::string> expected;            // "file:line:col: [rule]"
};

std::filesystem::path corpus_root();

/// Every fixture under the corpus root, sorted by name.
std::vector<Fixture> load_fixtures();

/// The fixture's barrc.json (if any) with only its guideline enabled.
Config fixture_config(const Fixture& f);

std::vector<SourceFile> fixture_sources(const Fixture& f);

/// Findings of a run in expected.txt form, paths relative to the fixture directory.
std::set<std::string> finding_lines(const Fixture& f, const AnalysisResult& result);

std::set<std::string> run_fixture(const Fixture& f, int jobs = 1);

/// Every source file in the corpus, each with its fixture.
std::vector<std::pair<const Fixture*, std::filesystem::path>> corpus_files(const std::vector<Fixture>& fixtures);

}  // namespace barrc::testing
