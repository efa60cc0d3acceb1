#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "symgauss/closedform.hpp"
#include "symgauss/highrank.hpp"
#include "symgauss/records.hpp"
#include "symgauss/rootsys.hpp"

using namespace symgauss;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SYMGAUSS_CLI) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.out.append(buf, got);
    }
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

}  // namespace

TEST_CASE("catalog json round-trips through the parser") {
    const CliResult res = run_cli("catalog --format json");
    REQUIRE(res.status == 0);
    const auto rows = catalog_from_json(res.out);
    REQUIRE(rows.size() == 11);
    const auto& builtin = catalog();
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].label == builtin[i].label);
        CHECK(rows[i].remark == builtin[i].remark);
    }
}

TEST_CASE("catalog --complex keeps exactly the four complex rows") {
    const CliResult res = run_cli("catalog --complex --format json");
    REQUIRE(res.status == 0);
    const auto rows = catalog_from_json(res.out);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.remark.find("complex") != std::string::npos);
    }
}

TEST_CASE("closedform csv matches the library values exactly") {
    const CliResult res =
        run_cli("closedform --family A --ranks 1 --sigma 1 --format csv");
    REQUIRE(res.status == 0);
    const auto rows = closedform_from_csv(res.out);
    REQUIRE(rows.size() == 1);
    const auto desc = typeiv_space(RootFamily::A, 1);
    const auto g = GaussParam::from_sigma(1.0);
    CHECK(rows[0].log_Za == log_Za_typeiv(desc, g));
    CHECK(rows[0].log_za == log_za_typeiv(desc, g));
    // by hand, the rank-1 integral at sigma = 1 is sqrt(pi/2) * (e - 1)
    const double by_hand =
        0.5 * std::log(2.0 * std::atan(1.0)) + std::log(std::exp(1.0) - 1.0);
    CHECK(rows[0].log_Za == doctest::Approx(by_hand).epsilon(1e-12));
}

TEST_CASE("closedform sigma grid emits one record per grid point") {
    const CliResult res =
        run_cli("closedform --family A --ranks 1 --sigma 0.1,0.2 --format csv");
    REQUIRE(res.status == 0);
    const auto rows = closedform_from_csv(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].sigma == 0.1);
    CHECK(rows[1].sigma == 0.2);
}

TEST_CASE("limit csv round-trips and matches the library") {
    const CliResult res =
        run_cli("limit --family C --t 1,2 --ranks 100 --format csv");
    REQUIRE(res.status == 0);
    const auto rows = limit_from_csv(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].F == F_limit(LimitFamily::C, 1.0));
    CHECK(rows[1].F == F_limit(LimitFamily::C, 2.0));
    REQUIRE(rows[0].ranks.size() == 1);
    CHECK(rows[0].F_r[0] == F_finite_rank(LimitFamily::C, 100, 1.0));
    // B and C share the limit column
    const CliResult res_b = run_cli("limit --family B --t 1,2 --format csv");
    REQUIRE(res_b.status == 0);
    const auto rows_b = limit_from_csv(res_b.out);
    CHECK(rows_b[0].F == rows[0].F);
    CHECK(rows_b[1].F == rows[1].F);
}

TEST_CASE("equilibrium json marks exploratory BC runs") {
    const CliResult res = run_cli(
        "equilibrium --kernel BC --ranks 5 --t 1 --delta 2 --format json");
    REQUIRE(res.status == 0);
    const auto rows = equilibrium_from_json(res.out);
    REQUIRE(rows.size() == 1);
    CHECK(!rows[0].has_target);
    CHECK(rows[0].exploratory);
    CHECK(rows[0].delta == 2.0);
    CHECK(rows[0].grad_norm < 1e-6);
}

TEST_CASE("delta=1 BC run equals the C-kernel run") {
    const CliResult bc =
        run_cli("equilibrium --kernel BC --ranks 8 --t 1 --format csv");
    const CliResult c =
        run_cli("equilibrium --kernel C --ranks 8 --t 1 --format csv");
    REQUIRE(bc.status == 0);
    REQUIRE(c.status == 0);
    const auto bc_rows = equilibrium_from_csv(bc.out);
    const auto c_rows = equilibrium_from_csv(c.out);
    REQUIRE(bc_rows.size() == 1);
    REQUIRE(c_rows.size() == 1);
    CHECK(bc_rows[0].energy == c_rows[0].energy);
    CHECK(bc_rows[0].target == c_rows[0].target);
    CHECK(!bc_rows[0].exploratory);
}

TEST_CASE("validate subset passes and is byte-deterministic") {
    const CliResult a = run_cli("validate --only dilog --only degree-order");
    CHECK(a.status == 0);
    CHECK(a.out.find("[PASS] 1. dilog-identity") != std::string::npos);
    CHECK(a.out.find("2/2 criteria passed") != std::string::npos);
    const CliResult b = run_cli("validate --only dilog --only degree-order");
    CHECK(b.out == a.out);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("closedform --family E --ranks 1 --sigma 1").status == 2);
    CHECK(run_cli("closedform --family A --sigma 1").status == 2);  // no ranks
    CHECK(run_cli("limit --family A --t 2,1").status == 2);  // not increasing
    CHECK(run_cli("equilibrium --kernel A --ranks 5 --delta 2").status == 2);
    CHECK(run_cli("validate --only no-such-key").status == 2);
    CHECK(run_cli("--bogus-flag").status == 2);
}
