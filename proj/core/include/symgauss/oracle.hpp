#pragma once

// Independent verification engines for the radial integrals: chunked,
// schedule-invariant Monte Carlo importance sampling with the Gaussian factor
// as proposal, low-rank tensor quadrature built on the adaptive Gauss-Kronrod
// driver, and the sigma^2-coefficient extractor for the small-width expansion.

#include <cstdint>
#include <vector>

#include "symgauss/closedform.hpp"
#include "symgauss/rootsys.hpp"

namespace symgauss {

// Choice of radial weight: the hyperbolic product prod |sinh lambda(a)|^m or
// its flat polynomial degeneration prod |lambda(a)|^m.
enum class RadialWeight { SinhProduct, FlatProduct };

// Result of a Monte Carlo run. log_value estimates the log of the radial
// integral; std_err_rel is the relative standard error of the linear-scale
// mean; ess is the Kish effective sample size of the weights. n_samples is
// the number of draws actually averaged; rejected counts draws discarded
// because the spherical-function factor could not be resolved next to a
// chamber wall (weighted runs only -- plain runs never reject).
struct OracleEstimate {
    double log_value = 0.0;
    double std_err_rel = 0.0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
    double ess = 0.0;
    long long rejected = 0;
};

// Monte Carlo estimate of the radial integral for `desc`: proposal
// a ~ N(0, (sigma^2/metric_c) I) per coordinate (A family: iid on the
// ambient coordinates, projected to the trace-zero hyperplane), weight given
// by `weight`, and the Gaussian normalization restored analytically as
// (2 pi sigma^2)^{rank/2}. Deterministic for fixed (seed, n): sampling is
// chunked, each chunk owns a substream, and chunk moments are merged in
// index order regardless of thread count. Requires rank <= 8 and n >= 10^4.
OracleEstimate mc_radial(const SpaceDescriptor& desc, GaussParam g,
                         long long n, std::uint64_t seed,
                         RadialWeight weight = RadialWeight::SinhProduct);

// Deterministic tensor quadrature of the same integral for rank <= 2, with
// absolute error <= tol in the log value. The Gaussian tail is truncated at
// 12 sigma per coordinate plus the drift induced by the hyperbolic weight;
// the truncated mass is below 1e-30 relative.
double quad_radial(const SpaceDescriptor& desc, GaussParam g, double tol,
                   RadialWeight weight = RadialWeight::SinhProduct);

// Monte Carlo estimate of the spectral-parameter integral: the sinh-weight
// integrand multiplied by the spherical function with parameter tau. Requires
// a complex-case descriptor of rank <= 4 and tau off the chamber walls.
// Draws whose spherical factor cannot be resolved (points inside the
// cancellation guard of a wall) are counted in `rejected` and excluded from
// the average; the excluded region carries negligible mass.
OracleEstimate mc_radial_weighted(const SpaceDescriptor& desc, GaussParam g,
                                  const DualVector& tau, long long n,
                                  std::uint64_t seed);

// Deterministic tensor quadrature of the flat-weight cone integral
//   int_{R^r} e^{-||a||^2 / 2 sigma^2} prod_{i<j} |a_i - a_j|^beta da,
// ||a||^2 = 4 sum a_i^2, for rank <= 2 and beta in {1, 2, 4}; absolute error
// <= tol in the log value. Independent cross-check of log_za_cone.
double quad_cone(int beta, int rank, GaussParam g, double tol);

// How sigma2_coefficient evaluates the normalization ratio.
enum class SlopeMethod { Closedform, Quadrature };

// Grid used by the acceptance harness and the CLI when none is given.
std::vector<double> default_sigma_grid();

// Through-origin least-squares slope of (Z_a/z_a - 1) against sigma^2 over
// the grid; the small-width expansion drives the slope to (rho, rho). Grid
// values must lie in (0, 0.2] with at least 4 points. Closedform requires a
// complex-case descriptor; Quadrature requires rank <= 2.
double sigma2_coefficient(const SpaceDescriptor& desc,
                          const std::vector<double>& sigma_grid,
                          SlopeMethod method);

}  // namespace symgauss
