#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "symgauss/closedform.hpp"
#include "symgauss/rootsys.hpp"

using namespace symgauss;

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

SpaceDescriptor tiv(RootFamily f, int r) { return typeiv_space(f, r); }
}  // namespace

TEST_CASE("GaussParam validation and t-scaling") {
    CHECK(GaussParam::from_sigma(0.5).sigma == 0.5);
    CHECK(GaussParam::from_t(2.0, 2).sigma == doctest::Approx(1.0));
    CHECK(GaussParam::from_t(1.0, 4).sigma2() == doctest::Approx(0.25));
    CHECK_THROWS_AS(GaussParam::from_sigma(0.0), std::invalid_argument);
    CHECK_THROWS_AS(GaussParam::from_sigma(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(GaussParam::from_t(0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(GaussParam::from_t(1.0, 0), std::invalid_argument);
}

TEST_CASE("closed forms reject non-complex descriptors") {
    const auto real_case = build_space(RootFamily::A, 2, {0, 1, 0});
    const auto wrong_metric = build_space(RootFamily::A, 2, {0, 2, 0}, 1.0);
    const auto g = GaussParam::from_sigma(1.0);
    CHECK_THROWS_AS(log_za_typeiv(real_case, g), std::invalid_argument);
    CHECK_THROWS_AS(log_Za_typeiv(real_case, g), std::invalid_argument);
    CHECK_THROWS_AS(log_Za_typeiv(wrong_metric, g), std::invalid_argument);
    CHECK_THROWS_AS(log_Za_tau_typeiv(real_case, g, rho(real_case)),
                    std::invalid_argument);
}

TEST_CASE("rank-one sinh-weight integral matches the hand computation") {
    // On the rank-one A space at sigma = 1 the integral evaluates to
    // sqrt(2 pi) e^{1/2} sinh(1/2).
    const double expected =
        0.5 * std::log(kTwoPi) + 0.5 + std::log(std::sinh(0.5));
    CHECK(log_Za_typeiv(tiv(RootFamily::A, 1), GaussParam::from_sigma(1.0)) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("sinh-weight normalizations match independently derived values") {
    struct Row {
        RootFamily family;
        int rank;
        double sigma;
        double expected;
    };
    const std::vector<Row> rows = {
        {RootFamily::A, 1, 0.5, -1.72604737736125},
        {RootFamily::A, 1, 1.0, 0.7671162072576455},
        {RootFamily::A, 2, 0.5, -4.865676137301415},
        {RootFamily::A, 2, 1.0, 2.407989703634706},
        {RootFamily::B, 2, 0.5, -7.509364190466888},
        {RootFamily::B, 2, 1.0, 1.582817971861035},
        {RootFamily::C, 2, 0.5, -4.053625486950928},
        {RootFamily::C, 2, 1.0, 7.69849793258509},
        {RootFamily::D, 2, 0.5, -3.4520947547225},
        {RootFamily::D, 2, 1.0, 1.534232414515291},
    };
    for (const auto& row : rows) {
        const double got = log_Za_typeiv(tiv(row.family, row.rank),
                                         GaussParam::from_sigma(row.sigma));
        CHECK(got == doctest::Approx(row.expected).epsilon(1e-12));
    }
}

TEST_CASE("symplectic flat-weight normalization equals the C-family one") {
    for (int r = 1; r <= 6; ++r) {
        for (double sigma : {0.5, 1.0, 2.0}) {
            CHECK(log_za_symplectic(r, sigma) ==
                  doctest::Approx(log_za_typeiv(tiv(RootFamily::C, r),
                                                GaussParam::from_sigma(sigma)))
                      .epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(log_za_symplectic(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(log_za_symplectic(2, 0.0), std::invalid_argument);
}

TEST_CASE("cone normalization closed form") {
    // rank 1: a plain one-dimensional Gaussian of scale sigma
    for (int beta : {1, 2, 4}) {
        CHECK(log_za_cone(beta, 1, 0.7) ==
              doctest::Approx(std::log(0.7) + 0.5 * std::log(kTwoPi))
                  .epsilon(1e-14));
    }
    // beta = 1, rank 2 at sigma = 1 evaluates to 2 sqrt(pi)
    CHECK(log_za_cone(1, 2, 1.0) ==
          doctest::Approx(std::log(2.0 * std::sqrt(0.5 * kTwoPi)))
              .epsilon(1e-14));
    // the beta = 2 cone reduces to the A-family flat normalization with one
    // extra Gaussian factor for the removed trace direction
    for (int r = 2; r <= 6; ++r) {
        for (double sigma : {0.5, 1.0}) {
            const double lhs = log_za_cone(2, r, sigma);
            const double rhs =
                0.5 * std::log(kTwoPi * sigma * sigma) +
                log_za_typeiv(tiv(RootFamily::A, r - 1),
                              GaussParam::from_sigma(sigma));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(log_za_cone(3, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(log_za_cone(1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(log_za_cone(1, 2, -1.0), std::invalid_argument);
}

TEST_CASE("spectral-parameter integral reduces to the sinh-weight one") {
    std::vector<SpaceDescriptor> spaces;
    for (int r = 1; r <= 8; ++r) {
        spaces.push_back(tiv(RootFamily::A, r));
        spaces.push_back(tiv(RootFamily::B, r));
        spaces.push_back(tiv(RootFamily::C, r));
        if (r >= 2) spaces.push_back(tiv(RootFamily::D, r));
    }
    for (const auto& d : spaces) {
        for (double sigma : {0.5, 1.0}) {
            const auto g = GaussParam::from_sigma(sigma);
            const auto at_rho = log_Za_tau_typeiv(d, g, rho(d));
            CHECK(at_rho.sign == +1);
            CHECK(at_rho.log_abs ==
                  doctest::Approx(log_Za_typeiv(d, g)).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectral-parameter integral grows with tau") {
    const auto d = tiv(RootFamily::A, 2);
    const auto g = GaussParam::from_sigma(0.5);
    auto tau = rho(d);
    const double base = log_Za_tau_typeiv(d, g, tau).log_abs;
    for (auto& x : tau.coeffs) x *= 2.0;
    CHECK(log_Za_tau_typeiv(d, g, tau).log_abs > base);

    DualVector bad;
    bad.coeffs = {1.0, 2.0};
    CHECK_THROWS_AS(log_Za_tau_typeiv(d, g, bad), std::invalid_argument);
}

TEST_CASE("spherical function at tau = rho is identically one") {
    for (const auto& d : {tiv(RootFamily::A, 2), tiv(RootFamily::B, 2),
                          tiv(RootFamily::C, 3), tiv(RootFamily::D, 2)}) {
        std::vector<double> a(d.ambient_dim);
        for (int k = 0; k < d.ambient_dim; ++k)
            a[k] = 1.7 - 0.63 * k;  // regular, nothing special
        if (d.family == RootFamily::A) {
            double mean = 0.0;
            for (double x : a) mean += x;
            mean /= a.size();
            for (auto& x : a) x -= mean;
        }
        CHECK(spherical_typeiv(d, rho(d), a) == 1.0);
    }
}

TEST_CASE("rank-one spherical function has the sinh-ratio form") {
    const auto d = tiv(RootFamily::A, 1);
    const double u = 2.0, x = 0.3;
    DualVector tau;
    tau.coeffs = {u, -u};
    const double got = spherical_typeiv(d, tau, {x, -x});
    const double expected = std::sinh(2.0 * u * x) / (u * std::sinh(2.0 * x));
    CHECK(got == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("spherical function is Weyl invariant and positive") {
    const auto d = tiv(RootFamily::B, 2);
    DualVector tau = rho(d);
    for (auto& v : tau.coeffs) v *= 1.8;
    const double base = spherical_typeiv(d, tau, {0.9, 0.4});
    CHECK(base > 0.0);
    CHECK(spherical_typeiv(d, tau, {0.4, 0.9}) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK(spherical_typeiv(d, tau, {-0.9, 0.4}) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK(spherical_typeiv(d, tau, {0.9, -0.4}) ==
          doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("spherical function rejects walls and oversized ranks") {
    const auto d = tiv(RootFamily::A, 1);
    DualVector on_wall;
    on_wall.coeffs = {1.0, 1.0};  // pairs to zero against the only root
    CHECK_THROWS_AS(spherical_typeiv(d, on_wall, {0.3, -0.3}),
                    std::invalid_argument);

    DualVector tau;
    tau.coeffs = {2.0, -2.0};
    CHECK_THROWS_AS(spherical_typeiv(d, tau, {1e-13, -1e-13}),
                    std::domain_error);

    const auto big = tiv(RootFamily::A, 9);
    std::vector<double> a(big.ambient_dim, 0.0);
    for (int k = 0; k < big.ambient_dim; ++k) a[k] = 4.5 - k;
    auto two_rho = rho(big);
    for (auto& v : two_rho.coeffs) v *= 2.0;
    CHECK_THROWS_AS(spherical_typeiv(big, two_rho, a), std::domain_error);
}
