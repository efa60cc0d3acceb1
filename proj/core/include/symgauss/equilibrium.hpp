#pragma once

#include <cstdint>
#include <vector>

namespace symgauss {

// Interaction patterns of the finite log-gas:
//   A  -- pairs interact through the difference only (ordered line),
//   C  -- difference and sum (positive half-line),
//   BC -- like C plus a single-coordinate term weighted by delta - 1.
enum class KernelVariant { A, C, BC };

struct EnergyKernel {
    KernelVariant variant = KernelVariant::A;
    double c = 4.0;      // metric constant; confinement W(x) = (c / 2t) x^2
    double t = 1.0;      // time parameter
    double beta = 2.0;   // pair coupling
    double delta = 1.0;  // BC only; delta = 1 reduces BC to C exactly
};

// Two-particle kernel k(x, y): half the confinement of each particle plus the
// pair interaction. Returns +infinity on a singular configuration.
double kernel_eval(const EnergyKernel& kernel, double x, double y);

struct ParticleConfig {
    std::vector<double> positions;
    EnergyKernel kernel;
};

// K_r = (r - 1) sum_i W(a_i) - beta sum_{i<j} L(a_i, a_j); +infinity when any
// interaction term is singular.
double total_energy(const ParticleConfig& config);

// E_r = K_r / (r (r - 1)); requires at least two particles
double scaled_energy(const ParticleConfig& config);

// gradient of K_r with respect to the positions
std::vector<double> energy_gradient(const ParticleConfig& config);

// Checks the open feasibility chamber: strictly ascending positions, and
// strictly positive ones for the C and BC variants.
bool is_feasible(const ParticleConfig& config);

struct MinimizeOptions {
    int max_iter = 20000;
    // infinity-norm target for the gradient; a negative value selects the
    // default 1e-8 * rank
    double grad_tol = -1.0;
    std::uint64_t seed = 12345;  // controls the jitter of the starting point
};

struct MinimizationResult {
    double energy = 0.0;  // E_r at the final configuration
    ParticleConfig config;
    double grad_inf_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Minimizes K_r over the feasibility chamber of the kernel. The energy is
// strictly convex there, so the minimum is unique.
MinimizationResult minimize_energy(int rank, const EnergyKernel& kernel,
                                   const MinimizeOptions& opts = {});

// One minimization per rank, shared kernel and options.
std::vector<MinimizationResult> convergence_study(
    const std::vector<int>& ranks, const EnergyKernel& kernel,
    const MinimizeOptions& opts = {});

}  // namespace symgauss
