#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "symgauss/validate.hpp"

using namespace symgauss;

TEST_CASE("criterion keys are stable and ordered") {
    const auto& keys = criterion_keys();
    REQUIRE(keys.size() == 9);
    CHECK(keys.front() == "dilog-identity");
    CHECK(keys[4] == "macdonald-consistency");
    CHECK(keys.back() == "degree-order");
}

TEST_CASE("selected fast criteria run and pass") {
    CriterionOptions opts;
    opts.only = {"degree-order", "dilog-identity", "gradient-check"};
    const auto results = run_acceptance(opts);
    REQUIRE(results.size() == 3);
    // id order regardless of request order
    CHECK(results[0].id == 1);
    CHECK(results[1].id == 8);
    CHECK(results[2].id == 9);
    for (const auto& res : results) {
        CHECK(res.passed);
        CHECK(!res.subs.empty());
        CHECK(res.seconds >= 0.0);
        for (const auto& sub : res.subs) {
            CHECK(!sub.name.empty());
            CHECK(!sub.detail.empty());
        }
    }
    CHECK(all_passed(results));
}

TEST_CASE("report bytes are deterministic without timing") {
    CriterionOptions opts;
    opts.only = {"dilog-identity", "macdonald-consistency", "degree-order"};
    const auto a = format_report(run_acceptance(opts));
    const auto b = format_report(run_acceptance(opts));
    CHECK(a == b);
    CHECK(a.find("[PASS] 1. dilog-identity") == 0);
    CHECK(a.find("3/3 criteria passed") != std::string::npos);
}

TEST_CASE("invalid options are rejected") {
    CriterionOptions bad_key;
    bad_key.only = {"no-such-criterion"};
    CHECK_THROWS_AS(run_acceptance(bad_key), std::invalid_argument);

    CriterionOptions tiny;
    tiny.samples = 5000;
    tiny.only = {"degree-order"};
    CHECK_THROWS_AS(run_acceptance(tiny), std::invalid_argument);
}
