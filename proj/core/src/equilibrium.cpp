#include "symgauss/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "symgauss/numerics.hpp"
#include "symgauss/special.hpp"

namespace symgauss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_valid(const EnergyKernel& k, const char* who) {
    if (!(k.c > 0.0) || !(k.t > 0.0) || !(k.beta > 0.0))
        throw std::invalid_argument(std::string(who) +
                                    ": c, t and beta must be positive");
    if (k.variant == KernelVariant::BC && !(k.delta > 0.0))
        throw std::invalid_argument(std::string(who) +
                                    ": delta must be positive");
}

double confine(const EnergyKernel& k, double x) {
    return 0.5 * k.c / k.t * x * x;
}

double confine_prime(const EnergyKernel& k, double x) {
    return k.c / k.t * x;
}

// log sinh |u|; -inf at u = 0 marks a singular pair
double ell(double u) { return log_sinh_abs(u); }

// coth(u) without overflow, odd in u
double coth(double u) {
    const double au = std::abs(u);
    const double c = 1.0 + 2.0 / std::expm1(2.0 * au);
    return u < 0.0 ? -c : c;
}

// single-particle part, including the BC single-root correction
double one_body(const EnergyKernel& k, double x) {
    double w = confine(k, x);
    if (k.variant == KernelVariant::BC && k.delta != 1.0)
        w -= k.beta * (k.delta - 1.0) * ell(x);
    return w;
}

double one_body_prime(const EnergyKernel& k, double x) {
    double w = confine_prime(k, x);
    if (k.variant == KernelVariant::BC && k.delta != 1.0)
        w -= k.beta * (k.delta - 1.0) * coth(x);
    return w;
}

// pair interaction L(x, y)
double pair_term(const EnergyKernel& k, double x, double y) {
    double L = ell(x - y);
    if (k.variant != KernelVariant::A) L += ell(x + y);
    return L;
}

}  // namespace

double kernel_eval(const EnergyKernel& kernel, double x, double y) {
    require_valid(kernel, "kernel_eval");
    const double L = pair_term(kernel, x, y);
    if (L == -kInf) return kInf;
    return 0.5 * one_body(kernel, x) + 0.5 * one_body(kernel, y) -
           0.5 * kernel.beta * L;
}

double total_energy(const ParticleConfig& config) {
    require_valid(config.kernel, "total_energy");
    const auto& a = config.positions;
    const auto& k = config.kernel;
    const int r = static_cast<int>(a.size());
    if (r < 1) throw std::invalid_argument("total_energy: empty configuration");

    double one = 0.0;
    for (double x : a) {
        const double w = one_body(k, x);
        if (w == kInf || std::isnan(w)) return kInf;
        one += w;
    }
    double pair_sum = 0.0;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const double L = pair_term(k, a[i], a[j]);
            if (L == -kInf) return kInf;
            pair_sum += L;
        }
    }
    return (r - 1) * one - k.beta * pair_sum;
}

double scaled_energy(const ParticleConfig& config) {
    const int r = static_cast<int>(config.positions.size());
    if (r < 2)
        throw std::invalid_argument("scaled_energy: needs at least two particles");
    return total_energy(config) / (static_cast<double>(r) * (r - 1));
}

std::vector<double> energy_gradient(const ParticleConfig& config) {
    require_valid(config.kernel, "energy_gradient");
    const auto& a = config.positions;
    const auto& k = config.kernel;
    const int r = static_cast<int>(a.size());
    if (r < 1)
        throw std::invalid_argument("energy_gradient: empty configuration");

    std::vector<double> g(r, 0.0);
    for (int i = 0; i < r; ++i) g[i] = (r - 1) * one_body_prime(k, a[i]);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const double cm = coth(a[i] - a[j]);
            g[i] -= k.beta * cm;
            g[j] += k.beta * cm;
            if (k.variant != KernelVariant::A) {
                const double cp = coth(a[i] + a[j]);
                g[i] -= k.beta * cp;
                g[j] -= k.beta * cp;
            }
        }
    }
    return g;
}

bool is_feasible(const ParticleConfig& config) {
    const auto& a = config.positions;
    if (a.empty()) return false;
    if (config.kernel.variant != KernelVariant::A && !(a.front() > 0.0))
        return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!(a[i] > a[i - 1])) return false;
    return true;
}

namespace {

std::vector<double> starting_point(int rank, const EnergyKernel& kernel,
                                   std::uint64_t seed) {
    const double scale = std::sqrt(kernel.t / kernel.c);
    Xoshiro256pp rng(seed);
    std::vector<double> a(rank);
    if (kernel.variant == KernelVariant::A) {
        for (int i = 0; i < rank; ++i) {
            const double p = (i + 0.5) / rank;
            a[i] = scale * inverse_normal_cdf(p);
        }
    } else {
        // positive half-line: quantiles of |N(0, 1)|
        for (int i = 0; i < rank; ++i) {
            const double p = 0.5 + 0.5 * (i + 0.5) / rank;
            a[i] = scale * inverse_normal_cdf(p);
        }
    }
    // tiny order-preserving jitter so distinct seeds explore distinct paths
    const double gap = scale / (4.0 * rank);
    for (int i = 0; i < rank; ++i)
        a[i] += 1e-3 * gap * (2.0 * rng.next_uniform() - 1.0);
    std::sort(a.begin(), a.end());
    return a;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// 1 / sinh^2(u), underflow-safe for large |u|
double csch2(double u) {
    const double au = std::abs(u);
    if (au > 19.0) {
        const double e = std::exp(-au);
        return 4.0 * e * e;  // relative error ~ e^{-2|u|}, below 1e-16 here
    }
    const double s = std::sinh(au);
    return 1.0 / (s * s);
}

// dense Hessian of K_r; symmetric positive definite on the open chamber
std::vector<double> energy_hessian(const ParticleConfig& config) {
    const auto& a = config.positions;
    const auto& k = config.kernel;
    const int r = static_cast<int>(a.size());
    std::vector<double> h(static_cast<std::size_t>(r) * r, 0.0);
    const double w2 = k.c / k.t;  // W'' is constant
    for (int i = 0; i < r; ++i) {
        double diag = (r - 1) * w2;
        if (k.variant == KernelVariant::BC && k.delta != 1.0)
            diag += (r - 1) * k.beta * (k.delta - 1.0) * csch2(a[i]);
        h[static_cast<std::size_t>(i) * r + i] = diag;
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const double cm = k.beta * csch2(a[i] - a[j]);
            double off = -cm;
            h[static_cast<std::size_t>(i) * r + i] += cm;
            h[static_cast<std::size_t>(j) * r + j] += cm;
            if (k.variant != KernelVariant::A) {
                const double cp = k.beta * csch2(a[i] + a[j]);
                off += cp;
                h[static_cast<std::size_t>(i) * r + i] += cp;
                h[static_cast<std::size_t>(j) * r + j] += cp;
            }
            h[static_cast<std::size_t>(i) * r + j] = off;
            h[static_cast<std::size_t>(j) * r + i] = off;
        }
    }
    return h;
}

// in-place LL^T factorization + solve; false when not positive definite
bool cholesky_solve(std::vector<double>& h, std::vector<double>& x, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = h[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                sum -= h[static_cast<std::size_t>(i) * n + k] *
                       h[static_cast<std::size_t>(j) * n + k];
            if (i == j) {
                if (!(sum > 0.0)) return false;
                h[static_cast<std::size_t>(i) * n + i] = std::sqrt(sum);
            } else {
                h[static_cast<std::size_t>(i) * n + j] =
                    sum / h[static_cast<std::size_t>(j) * n + j];
            }
        }
    }
    for (int i = 0; i < n; ++i) {  // L z = x
        double sum = x[i];
        for (int k = 0; k < i; ++k)
            sum -= h[static_cast<std::size_t>(i) * n + k] * x[k];
        x[i] = sum / h[static_cast<std::size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {  // L^T x = z
        double sum = x[i];
        for (int k = i + 1; k < n; ++k)
            sum -= h[static_cast<std::size_t>(k) * n + i] * x[k];
        x[i] = sum / h[static_cast<std::size_t>(i) * n + i];
    }
    return true;
}

}  // namespace

MinimizationResult minimize_energy(int rank, const EnergyKernel& kernel,
                                   const MinimizeOptions& opts) {
    require_valid(kernel, "minimize_energy");
    if (rank < 2)
        throw std::invalid_argument("minimize_energy: rank must be >= 2");

    const double tol =
        opts.grad_tol > 0.0 ? opts.grad_tol : 1e-8 * static_cast<double>(rank);

    ParticleConfig cur{starting_point(rank, kernel, opts.seed), kernel};
    double f = total_energy(cur);
    std::vector<double> g = energy_gradient(cur);

    MinimizationResult result;
    result.config = cur;

    int iter = 0;
    bool gave_up = false;
    for (; iter < opts.max_iter; ++iter) {
        if (inf_norm(g) <= tol) break;

        // damped Newton direction; the energy is strictly convex on the
        // chamber, so the Hessian factorizes unless we sit on its boundary
        std::vector<double> p(g.size());
        for (int i = 0; i < rank; ++i) p[i] = -g[i];
        auto hess = energy_hessian(cur);
        bool newton = cholesky_solve(hess, p, rank);
        double gp = 0.0;
        for (int i = 0; i < rank; ++i) gp += g[i] * p[i];
        if (!newton || !(gp < 0.0)) {
            gp = 0.0;
            for (int i = 0; i < rank; ++i) {
                p[i] = -g[i];
                gp -= g[i] * g[i];
            }
        }

        // backtracking line search with feasibility rejection; the noise
        // allowance keeps full Newton steps acceptable when the decrease of
        // f sinks below double-precision resolution near the minimum
        constexpr double kArmijo = 1e-4;
        const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                             std::max(1.0, std::abs(f));
        double step = 1.0;
        ParticleConfig trial{std::vector<double>(rank), kernel};
        double f_new = kInf;
        bool accepted = false;
        while (step > 1e-20) {
            for (int i = 0; i < rank; ++i)
                trial.positions[i] = cur.positions[i] + step * p[i];
            if (is_feasible(trial)) {
                f_new = total_energy(trial);
                if (f_new <= f + kArmijo * step * gp + noise) {
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted) {
            gave_up = true;
            break;
        }
        cur = std::move(trial);
        f = f_new;
        g = energy_gradient(cur);
    }

    result.config = cur;
    result.energy = f / (static_cast<double>(rank) * (rank - 1));
    result.grad_inf_norm = inf_norm(g);
    result.iterations = iter;
    result.converged = !gave_up && result.grad_inf_norm <= tol;
    return result;
}

std::vector<MinimizationResult> convergence_study(
    const std::vector<int>& ranks, const EnergyKernel& kernel,
    const MinimizeOptions& opts) {
    std::vector<MinimizationResult> out;
    out.reserve(ranks.size());
    for (int r : ranks) out.push_back(minimize_energy(r, kernel, opts));
    return out;
}

}  // namespace symgauss
