#include "symgauss/highrank.hpp"

#include <cmath>
#include <stdexcept>

#include "symgauss/closedform.hpp"
#include "symgauss/rootsys.hpp"
#include "symgauss/special.hpp"

namespace symgauss {

namespace {

void require_positive_t(double t, const char* who) {
    if (!(t > 0.0))
        throw std::invalid_argument(std::string(who) + ": t must be positive");
}

// J0(b) = int_0^b log(sinh(ts/2) / (ts/2)) ds
double J0(double b, double t) {
    return 0.25 * t * b * b - b * std::log(t * b) + b +
           int_log1mexp(0.5 * t, b);
}

// J1(b) = int_0^b s log(sinh(ts/2) / (ts/2)) ds
double J1(double b, double t) {
    return t * b * b * b / 6.0 - 0.5 * b * b * std::log(t * b) +
           0.25 * b * b + int_x_log1mexp(0.5 * t, b);
}

// limit of the A family: t/12 + int_0^1 (1 - s) log sch(ts/2) ds
double F_limit_a(double t) { return t / 12.0 + J0(1.0, t) - J1(1.0, t); }

// shared limit of B, C and D: t/3 + int_0^2 (1 - s/2) log sch(ts/2) ds
double F_limit_bcd(double t) {
    return t / 3.0 + J0(2.0, t) - 0.5 * J1(2.0, t);
}

RootFamily to_root_family(LimitFamily family) {
    switch (family) {
        case LimitFamily::A: return RootFamily::A;
        case LimitFamily::B: return RootFamily::B;
        case LimitFamily::C: return RootFamily::C;
        case LimitFamily::D: return RootFamily::D;
    }
    throw std::logic_error("to_root_family: bad enum");
}

}  // namespace

double F_limit(LimitFamily family, double t) {
    require_positive_t(t, "F_limit");
    return family == LimitFamily::A ? F_limit_a(t) : F_limit_bcd(t);
}

double F_finite_rank(LimitFamily family, int rank, double t) {
    require_positive_t(t, "F_finite_rank");
    const auto desc = typeiv_space(to_root_family(family), rank);
    const auto g = GaussParam::from_t(t, rank);
    const double r2 = static_cast<double>(rank) * rank;
    return (log_Za_typeiv(desc, g) - log_za_typeiv(desc, g)) / r2;
}

double e2_cone(double t) {
    require_positive_t(t, "e2_cone");
    return 0.75 - 0.5 * std::log(0.25 * t);
}

double e2_domain(double t) {
    require_positive_t(t, "e2_domain");
    return 1.5 - std::log(0.5 * t);
}

double E2_equilibrium(E2Kind kind, double t) {
    require_positive_t(t, "E2_equilibrium");
    return kind == E2Kind::Cone ? e2_cone(t) - F_limit(LimitFamily::A, t)
                                : e2_domain(t) - F_limit(LimitFamily::B, t);
}

double beta_scaled_limit(E2Kind kind, double beta, double t) {
    require_positive_t(t, "beta_scaled_limit");
    if (!(beta > 0.0))
        throw std::invalid_argument("beta_scaled_limit: beta must be positive");
    return -0.5 * beta * E2_equilibrium(kind, 0.5 * beta * t);
}

}  // namespace symgauss
