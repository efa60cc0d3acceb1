#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "symgauss/equilibrium.hpp"
#include "symgauss/highrank.hpp"
#include "symgauss/numerics.hpp"

using namespace symgauss;

namespace {

EnergyKernel kernel_a(double t, double beta = 2.0) {
    return EnergyKernel{KernelVariant::A, 4.0, t, beta, 1.0};
}

EnergyKernel kernel_c(double t, double beta = 2.0) {
    return EnergyKernel{KernelVariant::C, 4.0, t, beta, 1.0};
}

EnergyKernel kernel_bc(double t, double beta, double delta) {
    return EnergyKernel{KernelVariant::BC, 4.0, t, beta, delta};
}

}  // namespace

TEST_CASE("two-particle kernel values") {
    const auto k = kernel_a(1.0);
    // W(1)/2 + W(-1)/2 - log sinh 2
    CHECK(kernel_eval(k, 1.0, -1.0) ==
          doctest::Approx(0.7116326273858318699462).epsilon(1e-14));
    CHECK(kernel_eval(k, 1.0, -1.0) == kernel_eval(k, -1.0, 1.0));
    CHECK(std::isinf(kernel_eval(k, 0.7, 0.7)));

    // C pairs also interact through the sum
    const auto kc = kernel_c(1.0);
    CHECK(kernel_eval(kc, 2.0, 1.0) ==
          doctest::Approx(kernel_eval(k, 2.0, 1.0) -
                          std::log(std::sinh(3.0)))
              .epsilon(1e-13));
    CHECK(std::isinf(kernel_eval(kc, 0.7, -0.7)));
}

TEST_CASE("BC kernel with delta = 1 reduces to C exactly") {
    const auto kc = kernel_c(1.3, 2.0);
    const auto kbc = kernel_bc(1.3, 2.0, 1.0);
    const std::vector<double> pos = {0.31, 0.82, 1.44, 2.05};
    CHECK(kernel_eval(kbc, 0.4, 1.1) == kernel_eval(kc, 0.4, 1.1));
    CHECK(total_energy({pos, kbc}) == total_energy({pos, kc}));
    CHECK(energy_gradient({pos, kbc}) == energy_gradient({pos, kc}));
}

TEST_CASE("two-particle total energy matches the hand formula") {
    const double s = 0.45;
    const ParticleConfig config{{-s, s}, kernel_a(1.0)};
    const double expected =
        4.0 * s * s - 2.0 * std::log(std::sinh(2.0 * s));
    CHECK(total_energy(config) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(scaled_energy(config) ==
          doctest::Approx(0.5 * expected).epsilon(1e-13));
}

TEST_CASE("energy is infinite on singular configurations") {
    CHECK(std::isinf(total_energy({{0.5, 0.5}, kernel_a(1.0)})));
    CHECK(std::isinf(total_energy({{-0.5, 0.5}, kernel_c(1.0)})));
    // BC with delta != 1 is singular at the origin
    CHECK(std::isinf(total_energy({{0.0, 1.0}, kernel_bc(1.0, 2.0, 2.0)})));
}

TEST_CASE("gradient agrees with central differences") {
    const std::vector<double> base = {0.21, 0.55, 0.94, 1.38, 1.90, 2.51};
    for (const auto& k :
         {kernel_a(0.7), kernel_c(1.4), kernel_bc(1.0, 2.0, 2.5)}) {
        const ParticleConfig config{base, k};
        const auto g = energy_gradient(config);
        for (std::size_t i = 0; i < base.size(); ++i) {
            const double h = 3e-6;
            auto up = config, dn = config;
            up.positions[i] += h;
            dn.positions[i] -= h;
            const double fd =
                (total_energy(up) - total_energy(dn)) / (2.0 * h);
            CHECK(g[i] == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("two-particle minimum matches the coth fixed point") {
    const auto res = minimize_energy(2, kernel_a(1.0));
    CHECK(res.converged);
    // x* solves x = coth x; the minimum energy is x*^2/2 - log sinh x*
    CHECK(res.energy ==
          doctest::Approx(0.3082470567720951715445).epsilon(1e-9));
    CHECK(res.config.positions[1] ==
          doctest::Approx(0.5998393201288669169582).epsilon(1e-6));
    CHECK(res.config.positions[0] ==
          doctest::Approx(-0.5998393201288669169582).epsilon(1e-6));
}

TEST_CASE("the A minimizer is antisymmetric") {
    const auto res = minimize_energy(5, kernel_a(1.0));
    REQUIRE(res.converged);
    const auto& a = res.config.positions;
    for (int i = 0; i < 5; ++i) {
        CHECK(a[i] == doctest::Approx(-a[4 - i]).epsilon(1e-6));
    }
}

TEST_CASE("the C minimizer is feasible and locally minimal") {
    const auto res = minimize_energy(6, kernel_c(1.0));
    REQUIRE(res.converged);
    CHECK(is_feasible(res.config));
    const double f0 = total_energy(res.config);
    Xoshiro256pp rng(5150u);
    for (int trial = 0; trial < 10; ++trial) {
        auto probe = res.config;
        for (auto& x : probe.positions) x += 1e-3 * rng.next_normal();
        if (!is_feasible(probe)) continue;
        CHECK(total_energy(probe) > f0);
    }
}

TEST_CASE("beta enters through an exact rescaling of the minimum") {
    for (int rank : {2, 8}) {
        const double e4 = minimize_energy(rank, kernel_a(1.0, 4.0)).energy;
        const double e2 = minimize_energy(rank, kernel_a(2.0, 2.0)).energy;
        CHECK(std::abs(e4 - 2.0 * e2) < 1e-9);

        const double e1 = minimize_energy(rank, kernel_c(1.0, 1.0)).energy;
        const double eh = minimize_energy(rank, kernel_c(0.5, 2.0)).energy;
        CHECK(std::abs(e1 - 0.5 * eh) < 1e-9);
    }
}

TEST_CASE("scaled energies increase with rank toward the limit curve") {
    const double t = 1.0;
    const auto study = convergence_study({4, 8, 16, 32}, kernel_a(t));
    const double limit = E2_equilibrium(E2Kind::Cone, t);
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& res : study) {
        REQUIRE(res.converged);
        CHECK(res.energy > prev);
        CHECK(res.energy <= limit + 1e-9);
        prev = res.energy;
    }
}

TEST_CASE("large-rank minimum agrees with an independent optimizer") {
    const auto res = minimize_energy(200, kernel_a(1.0));
    REQUIRE(res.converged);
    CHECK(res.energy == doctest::Approx(1.3279847).epsilon(2e-6));
}

TEST_CASE("feasibility predicate") {
    CHECK(is_feasible({{-1.0, 0.5}, kernel_a(1.0)}));
    CHECK_FALSE(is_feasible({{0.5, 0.5}, kernel_a(1.0)}));
    CHECK_FALSE(is_feasible({{1.0, 0.5}, kernel_a(1.0)}));
    CHECK(is_feasible({{0.5, 1.0}, kernel_c(1.0)}));
    CHECK_FALSE(is_feasible({{-0.5, 1.0}, kernel_c(1.0)}));
    CHECK_FALSE(is_feasible({{0.0, 1.0}, kernel_c(1.0)}));
    CHECK_FALSE(is_feasible({{}, kernel_a(1.0)}));
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(minimize_energy(1, kernel_a(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(minimize_energy(4, kernel_a(0.0)), std::invalid_argument);
    CHECK_THROWS_AS(minimize_energy(4, kernel_a(1.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(minimize_energy(4, kernel_bc(1.0, 2.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_energy({{1.0}, kernel_a(1.0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(total_energy({{}, kernel_a(1.0)}), std::invalid_argument);
}

TEST_CASE("iteration cap reports non-convergence") {
    MinimizeOptions opts;
    opts.max_iter = 2;
    const auto res = minimize_energy(16, kernel_a(1.0), opts);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 2);
}
