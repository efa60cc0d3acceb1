#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "symgauss/highrank.hpp"
#include "symgauss/special.hpp"

using namespace symgauss;

TEST_CASE("free-energy limit values") {
    struct Row {
        double t, a, bcd;
    };
    // independently computed in 30-digit arithmetic
    const Row rows[] = {
        {0.5, 0.042534000375919569745, 0.17358815753566953092},
        {1.0, 0.086794078767834765459, 0.36075278101350808124},
        {2.0, 0.18037639050675404062, 0.77253432655231995224},
        {5.0, 0.49744009453892809352, 2.2258016570290860447},
    };
    for (const auto& row : rows) {
        CHECK(F_limit(LimitFamily::A, row.t) ==
              doctest::Approx(row.a).epsilon(1e-14));
        CHECK(F_limit(LimitFamily::B, row.t) ==
              doctest::Approx(row.bcd).epsilon(1e-14));
    }
}

TEST_CASE("B, C and D share one limit curve bitwise") {
    for (double t : {0.3, 0.5, 1.0, 2.0, 5.0, 11.0}) {
        const double b = F_limit(LimitFamily::B, t);
        CHECK(F_limit(LimitFamily::C, t) == b);
        CHECK(F_limit(LimitFamily::D, t) == b);
    }
}

TEST_CASE("the two limit curves are related by halving the interval") {
    for (double t : {0.3, 0.7, 1.5, 3.7, 8.0}) {
        CHECK(F_limit(LimitFamily::B, t) ==
              doctest::Approx(2.0 * F_limit(LimitFamily::A, 2.0 * t))
                  .epsilon(1e-14));
    }
}

TEST_CASE("limits agree with direct quadrature of the integral form") {
    for (double t : {0.5, 2.0}) {
        const double qa = adaptive_quad(
            [t](double s) { return (1.0 - s) * log_sch(0.5 * t * s); },
            {0.0, 1.0}, 1e-13);
        CHECK(F_limit(LimitFamily::A, t) ==
              doctest::Approx(t / 12.0 + qa).epsilon(1e-11));

        const double qb = adaptive_quad(
            [t](double s) { return (1.0 - 0.5 * s) * log_sch(0.5 * t * s); },
            {0.0, 2.0}, 1e-13);
        CHECK(F_limit(LimitFamily::B, t) ==
              doctest::Approx(t / 3.0 + qb).epsilon(1e-11));
    }
}

TEST_CASE("small-t expansion of the limits") {
    const double t = 1e-3;
    CHECK(std::abs(F_limit(LimitFamily::A, t) -
                   (t / 12.0 + t * t / 288.0)) < 1e-9);
    CHECK(std::abs(F_limit(LimitFamily::B, t) -
                   (t / 3.0 + t * t / 36.0)) < 1e-9);
}

TEST_CASE("finite-rank values converge to the limit") {
    for (auto family : {LimitFamily::A, LimitFamily::B, LimitFamily::C,
                        LimitFamily::D}) {
        const double f = F_limit(family, 1.0);
        const double gap50 = std::abs(F_finite_rank(family, 50, 1.0) - f);
        const double gap200 = std::abs(F_finite_rank(family, 200, 1.0) - f);
        CHECK(gap200 < gap50);
        // the gap decays like 1/rank with a family constant below 0.6
        CHECK(std::abs(F_finite_rank(family, 400, 1.0) - f) < 2e-3);
    }
}

TEST_CASE("quadratic-energy curves and equilibrium limits") {
    CHECK(e2_cone(1.0) ==
          doctest::Approx(0.75 + 0.5 * std::log(4.0)).epsilon(1e-15));
    CHECK(e2_domain(1.0) ==
          doctest::Approx(1.5 + std::log(2.0)).epsilon(1e-15));

    struct Row {
        double t, cone, domain;
    };
    const Row rows[] = {
        {0.5, 1.7471867704639983944, 2.7127062035842210879},
        {1.0, 1.356353101792110544, 1.8323943995464372282},
        {2.0, 0.91619719977321861409, 0.72746567344768004776},
    };
    for (const auto& row : rows) {
        CHECK(E2_equilibrium(E2Kind::Cone, row.t) ==
              doctest::Approx(row.cone).epsilon(1e-13));
        CHECK(E2_equilibrium(E2Kind::Domain, row.t) ==
              doctest::Approx(row.domain).epsilon(1e-13));
    }
}

TEST_CASE("beta rescaling of the equilibrium limit") {
    for (double t : {0.5, 1.0, 2.0}) {
        for (auto kind : {E2Kind::Cone, E2Kind::Domain}) {
            CHECK(beta_scaled_limit(kind, 2.0, t) ==
                  doctest::Approx(-E2_equilibrium(kind, t)).epsilon(1e-15));
            CHECK(beta_scaled_limit(kind, 4.0, t) ==
                  doctest::Approx(-2.0 * E2_equilibrium(kind, 2.0 * t))
                      .epsilon(1e-15));
            CHECK(beta_scaled_limit(kind, 1.0, t) ==
                  doctest::Approx(-0.5 * E2_equilibrium(kind, 0.5 * t))
                      .epsilon(1e-15));
        }
    }
}

TEST_CASE("non-positive arguments are rejected") {
    CHECK_THROWS_AS(F_limit(LimitFamily::A, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(F_limit(LimitFamily::B, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(F_finite_rank(LimitFamily::A, 10, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(e2_cone(0.0), std::invalid_argument);
    CHECK_THROWS_AS(e2_domain(-2.0), std::invalid_argument);
    CHECK_THROWS_AS(E2_equilibrium(E2Kind::Cone, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(beta_scaled_limit(E2Kind::Cone, 0.0, 1.0),
                    std::invalid_argument);
}
