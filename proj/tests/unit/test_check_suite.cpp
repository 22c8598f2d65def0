#include "doctest.h"

#include <sstream>

#include "projgeom/check_suite.hpp"

using namespace projgeom::check;

TEST_CASE("standard properties pass and runners agree") {
    const Summary serial = run_serial(standard_properties(), 1, 40);
    const Summary parallel = run_parallel(standard_properties(), 1, 40);
    CHECK(serial == parallel);
    CHECK(serial.all_passed());
    for (const PropertySummary& p : serial.properties) {
        CAPTURE(p.name);
        CHECK(p.passed == 40);
    }
}

TEST_CASE("output is deterministic") {
    std::ostringstream a;
    std::ostringstream b;
    print_summary(run_parallel(standard_properties(), 1, 1), a);
    print_summary(run_parallel(standard_properties(), 1, 1), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("all 11 properties passed") != std::string::npos);
}

TEST_CASE("a failing property is reported with its counterexample") {
    const std::vector<Property> broken{
        {"never_three",
         [](std::uint64_t, std::size_t index) {
             if (index % 10 == 3) {
                 return TrialOutcome{false, "projgeom nu --epsilon '3'", "index ends in three"};
             }
             return TrialOutcome{};
         }},
        {"throws", [](std::uint64_t, std::size_t) -> TrialOutcome { throw std::runtime_error("boom"); }},
    };
    const Summary s = run_parallel(broken, 7, 25);
    CHECK(s == run_serial(broken, 7, 25));
    CHECK_FALSE(s.all_passed());
    REQUIRE(s.properties.size() == 2);
    CHECK(s.properties[0].failed == 3);
    CHECK(s.properties[0].passed == 22);
    REQUIRE(s.properties[0].counterexamples.size() == 3);
    CHECK(s.properties[0].counterexamples[0].trial == 3);
    CHECK(s.properties[0].counterexamples[1].trial == 13);
    CHECK(s.properties[1].failed == 25);
    CHECK(s.properties[1].counterexamples.size() == 3);

    std::ostringstream out;
    print_summary(s, out);
    CHECK(out.str().find("FAIL never_three 22/25") != std::string::npos);
    CHECK(out.str().find("  trial 3: index ends in three\n    projgeom nu --epsilon '3'\n") != std::string::npos);
    CHECK(out.str().find("trial threw: boom") != std::string::npos);
    CHECK(out.str().find("2 of 2 properties failed") != std::string::npos);
}

TEST_CASE("shell quoting") {
    CHECK(shell_quote("y=2*x+4") == "'y=2*x+4'");
    CHECK(shell_quote("it's") == "'it'\\''s'");
}
