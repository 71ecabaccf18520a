#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>

#include "fixtures.hpp"

using namespace barrc;
using namespace barrc::testing;

TEST_CASE("every fixture reproduces its expected findings") {
    auto fixtures = load_fixtures();
    REQUIRE(fixtures.size() >= 60);
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& f : fixtures) {
        CAPTURE(f.name);
        CHECK(run_fixture(f) == f.expected);
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(elapsed < 5.0);
}

TEST_CASE("every fixture exercises an existing guideline and expects a finding") {
    for (const auto& f : load_fixtures()) {
        CAPTURE(f.name);
        CHECK(catalog().find(f.id) != nullptr);
        CHECK(!f.files.empty());
        bool hit = false;
        for (const auto& line : f.expected) hit = hit || line.ends_with("[" + f.id.str() + "]");
        CHECK(hit);
    }
}

TEST_CASE("every automatic guideline has a fixture") {
    std::set<GuidelineId> covered;
    for (const auto& f : load_fixtures()) covered.insert(f.id);
    for (const auto& g : catalog().guidelines()) {
        if (g.enforceability != Enforceability::Automatic) continue;
        CAPTURE(g.id.str());
        CHECK(covered.count(g.id) == 1);
    }
}
