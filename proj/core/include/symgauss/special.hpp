#pragma once

// Numerically stable scalar special functions: log|sinh|, log(sinh x / x),
// di- and trilogarithms on the real unit interval, the closed-form integrals
// of log(1 - e^{-2tx}) and x*log(1 - e^{-2tx}), log-gamma, and a globally
// adaptive Gauss-Kronrod quadrature used as the independent oracle for the
// closed forms.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symgauss {

// log|sinh x|. Exact -inf at x = 0 (used upstream as the coincident-particle
// sentinel). For |x| >= 20 evaluated as |x| - log 2 + log1p(-e^{-2|x|}), which
// does not overflow up to |x| ~ 1e306.
double log_sinh_abs(double x);

// log(sinh x / x), extended by 0 at x = 0; even. Taylor series
// x^2/6 - x^4/180 + x^6/2835 for |x| < 1e-2.
double log_sch(double x);

// Dilogarithm Li_2(x) = sum x^k/k^2 for x in [-1, 1]; absolute error <= 1e-14.
// Throws std::domain_error outside [-1, 1].
double dilog(double x);

// Trilogarithm Li_3(x) = sum x^k/k^3 for x in [-1, 1]; absolute error ~1e-14.
double trilog(double x);

// int_0^a log(1 - e^{-2 t x}) dx = (Li_2(e^{-2ta}) - pi^2/6)/(2t), t, a > 0.
double int_log1mexp(double t, double a);

// int_0^a x log(1 - e^{-2 t x}) dx
//   = (Li_3(e^{-2ta}) - zeta(3))/(4t^2) + (a/(2t)) Li_2(e^{-2ta}), t, a > 0.
double int_x_log1mexp(double t, double a);

// log Gamma(x) for x > 0 (relative error <= 1e-13 on [0.5, 1e4]).
double log_gamma(double x);

struct Interval {
    double lo;
    double hi;
};

// Thrown by adaptive_quad when the error target cannot be met within the cell
// budget; carries the best available estimate.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// Globally adaptive Gauss(7)/Kronrod(15) bisection: returns an estimate of
// int_iv f with absolute error <= tol. Integrable endpoint singularities are
// fine (all nodes are interior). Optional `breakpoints` pre-split the interval
// (e.g. at kinks of |.|-type integrands). Throws QuadratureError on failure.
double adaptive_quad(const std::function<double(double)>& f, Interval iv,
                     double tol, const std::vector<double>& breakpoints = {});

}  // namespace symgauss
