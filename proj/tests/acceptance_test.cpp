// Integration suite: runs every built-in verification criterion at its pinned
// tolerance (all arithmetic exact) and prints one pass/fail line per item.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <iostream>

#include <magcat/acceptance.hpp>

TEST_CASE("acceptance criteria") {
    const char* cli = std::getenv("MAGCAT_CLI");
    auto results = magcat::run_acceptance(cli ? cli : "");
    std::cout << magcat::format_acceptance_table(results);
    for (const auto& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
}
