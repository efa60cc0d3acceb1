#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgauss/records.hpp"

using namespace symgauss;

namespace {

const double kAwkward[] = {3.14159265358979312,
                           1.0 / 3.0,
                           -2.5000000000000004,
                           1e-308,
                           -7.0,
                           0.0,
                           123456789.12345679};

bool same(const ClosedformRecord& a, const ClosedformRecord& b) {
    return a.family == b.family && a.rank == b.rank && a.sigma == b.sigma &&
           a.log_Za == b.log_Za && a.log_za == b.log_za;
}

bool same(const LimitRecord& a, const LimitRecord& b) {
    return a.family == b.family && a.t == b.t && a.F == b.F &&
           a.ranks == b.ranks && a.F_r == b.F_r && a.e2 == b.e2 && a.E2 == b.E2;
}

bool same(const EquilibriumRecord& a, const EquilibriumRecord& b) {
    if (a.kernel != b.kernel || a.rank != b.rank || a.beta != b.beta ||
        a.t != b.t || a.delta != b.delta || a.energy != b.energy ||
        a.grad_norm != b.grad_norm || a.has_target != b.has_target ||
        a.exploratory != b.exploratory)
        return false;
    if (!a.has_target) return true;
    return a.target == b.target && a.gap_percent == b.gap_percent;
}

}  // namespace

TEST_CASE("g17 rendering round-trips doubles exactly") {
    for (double x : kAwkward) {
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("closedform records round-trip through CSV and JSON") {
    std::vector<ClosedformRecord> rows;
    rows.push_back({"A", 1, 0.5, kAwkward[0], kAwkward[1]});
    rows.push_back({"B", 2, 1.0, kAwkward[2], kAwkward[3]});
    rows.push_back({"D", 4, 0.0625, kAwkward[4], kAwkward[6]});

    const auto csv = closedform_from_csv(to_csv(rows));
    REQUIRE(csv.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(csv[i], rows[i]));

    const auto jsn = closedform_from_json(to_json(rows));
    REQUIRE(jsn.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(jsn[i], rows[i]));

    CHECK(rows[0].ratio_log() == rows[0].log_Za - rows[0].log_za);
}

TEST_CASE("limit records round-trip with and without finite-rank columns") {
    std::vector<LimitRecord> rows;
    rows.push_back({"A", 1.0, kAwkward[0], {50, 100}, {kAwkward[1], kAwkward[2]},
                    1.25, kAwkward[6]});
    rows.push_back({"C", 2.0, kAwkward[3], {50, 100}, {kAwkward[4], kAwkward[5]},
                    -0.75, kAwkward[0]});

    const auto csv = limit_from_csv(to_csv(rows));
    REQUIRE(csv.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(csv[i], rows[i]));

    const auto jsn = limit_from_json(to_json(rows));
    REQUIRE(jsn.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(jsn[i], rows[i]));

    std::vector<LimitRecord> bare;
    bare.push_back({"B", 0.5, 0.25, {}, {}, 1.0, 2.0});
    const auto csv2 = limit_from_csv(to_csv(bare));
    REQUIRE(csv2.size() == 1);
    CHECK(same(csv2[0], bare[0]));
}

TEST_CASE("limit emission rejects inconsistent rank lists") {
    std::vector<LimitRecord> rows;
    rows.push_back({"A", 1.0, 0.1, {50}, {0.2}, 1.0, 1.0});
    rows.push_back({"A", 2.0, 0.1, {100}, {0.2}, 1.0, 1.0});
    CHECK_THROWS_AS(to_csv(rows), std::invalid_argument);
    rows[1].ranks = {50, 100};
    CHECK_THROWS_AS(to_csv(rows), std::invalid_argument);  // parallel-array mismatch
}

TEST_CASE("equilibrium records round-trip including blank targets") {
    std::vector<EquilibriumRecord> rows;
    EquilibriumRecord with;
    with.kernel = "A";
    with.rank = 200;
    with.beta = 2.0;
    with.t = 1.0;
    with.delta = 1.0;
    with.energy = kAwkward[0];
    with.grad_norm = kAwkward[3];
    with.has_target = true;
    with.target = kAwkward[1];
    with.gap_percent = kAwkward[6];
    EquilibriumRecord without;
    without.kernel = "BC";
    without.rank = 16;
    without.beta = 4.0;
    without.t = 0.5;
    without.delta = 2.0;
    without.energy = kAwkward[2];
    without.grad_norm = kAwkward[5];
    without.exploratory = true;
    rows = {with, without};

    const auto csv = equilibrium_from_csv(to_csv(rows));
    REQUIRE(csv.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(csv[i], rows[i]));

    const auto jsn = equilibrium_from_json(to_json(rows));
    REQUIRE(jsn.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(same(jsn[i], rows[i]));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(closedform_from_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(closedform_from_csv("bogus,header\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        closedform_from_csv("family,rank,sigma,log_Za,log_za\nA,1,0.5,x,2\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        closedform_from_csv("family,rank,sigma,log_Za,log_za\nA,1,0.5,2\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(limit_from_csv("family,t,F,e2,E2,Q_r50\nA,1,2,3,4,5\n"),
                    std::invalid_argument);
    // target present but gap blank: inconsistent pair
    CHECK_THROWS_AS(
        equilibrium_from_csv(
            "kernel,rank,beta,t,delta,energy,grad_norm,target,gap_percent,"
            "exploratory\nA,2,2,1,1,0.3,1e-9,0.31,,0\n"),
        std::invalid_argument);
}
