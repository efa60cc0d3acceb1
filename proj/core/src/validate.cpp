#include "symgauss/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

#include "symgauss/closedform.hpp"
#include "symgauss/equilibrium.hpp"
#include "symgauss/highrank.hpp"
#include "symgauss/numerics.hpp"
#include "symgauss/oracle.hpp"
#include "symgauss/rootsys.hpp"
#include "symgauss/special.hpp"

namespace symgauss {
namespace {

#if defined(__GNUC__)
__attribute__((format(printf, 1, 2)))
#endif
std::string strprintf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, ap);
    va_end(ap);
    return std::string(buf);
}

void add_sub(CriterionResult& out, bool ok, std::string name,
             std::string detail) {
    out.subs.push_back({std::move(name), ok, std::move(detail)});
}

// |Z_a/Z_b - 1| for two quantities given in the log domain.
double rel_dev(double log_a, double log_b) {
    return std::fabs(std::expm1(log_a - log_b));
}

double quad_or_best(const std::function<double(double)>& f, Interval iv,
                    double tol) {
    try {
        return adaptive_quad(f, iv, tol);
    } catch (const QuadratureError& e) {
        return e.best_estimate;
    }
}

// ---------------------------------------------------------------------------
// 1. dilog-identity
// ---------------------------------------------------------------------------

void run_dilog(const CriterionOptions&, CriterionResult& out) {
    const double kGate = 1e-9;
    const double ts[] = {0.25, 0.5, 1.0, 2.0};
    const double as[] = {0.25, 0.5, 1.0, 3.0};
    for (double t : ts) {
        double worst = 0.0;
        for (double a : as) {
            const double closed = int_log1mexp(t, a);
            const auto f = [t](double x) {
                return std::log1p(-std::exp(-2.0 * t * x));
            };
            const double quad = quad_or_best(f, {0.0, a}, 1e-11);
            worst = std::max(worst, std::fabs(closed - quad));
        }
        add_sub(out, worst <= kGate,
                strprintf("t=%g, a in {0.25, 0.5, 1, 3}", t),
                strprintf("max |closed - quadrature| = %.3e (gate <= %.0e)",
                          worst, kGate));
    }
}

// ---------------------------------------------------------------------------
// 2. typeiv-closedform-vs-oracle
// ---------------------------------------------------------------------------

void run_typeiv_oracle(const CriterionOptions& opts, CriterionResult& out) {
    const double kSeWidth = 3.0;    // Monte Carlo deviation window, in std errors
    const double kRelSeGate = 0.01; // required relative standard error
    const double kQuadGate = 1e-6;  // relative gate for the quadrature check
    const struct {
        RootFamily fam;
        int rank;
    } cases[] = {{RootFamily::A, 1},
                 {RootFamily::A, 2},
                 {RootFamily::B, 2},
                 {RootFamily::C, 2},
                 {RootFamily::D, 2}};
    for (const auto& c : cases) {
        const SpaceDescriptor desc = typeiv_space(c.fam, c.rank);
        for (double sigma : {0.5, 1.0}) {
            const GaussParam g = GaussParam::from_sigma(sigma);
            const double closed = log_Za_typeiv(desc, g);
            const OracleEstimate est =
                mc_radial(desc, g, opts.samples, opts.seed);
            const double dev = rel_dev(est.log_value, closed);
            const double quad = quad_radial(desc, g, 1e-8);
            const double qdev = rel_dev(quad, closed);
            const bool in_window = dev <= kSeWidth * est.std_err_rel;
            const bool se_ok = est.std_err_rel < kRelSeGate;
            const bool quad_ok = qdev <= kQuadGate;
            add_sub(out, in_window && se_ok && quad_ok,
                    strprintf("%s r=%d sigma=%g", family_name(c.fam).c_str(),
                              c.rank, sigma),
                    strprintf("mc dev %.2f se (gate <= %.0f); rel se %.4g%% "
                              "(gate < %g%%); quad dev %.2e (gate <= %.0e)",
                              est.std_err_rel > 0.0 ? dev / est.std_err_rel
                                                    : 0.0,
                              kSeWidth, 100.0 * est.std_err_rel,
                              100.0 * kRelSeGate, qdev, kQuadGate));
        }
    }
}

// ---------------------------------------------------------------------------
// 3. tau-closedform
// ---------------------------------------------------------------------------

void run_tau(const CriterionOptions& opts, CriterionResult& out) {
    const double kSeWidth = 3.0;
    const double kCollapseGate = 1e-12;
    const double kSigma = 0.5;
    double worst_collapse = 0.0;
    for (int rank : {1, 2}) {
        const SpaceDescriptor desc = typeiv_space(RootFamily::A, rank);
        const GaussParam g = GaussParam::from_sigma(kSigma);
        const DualVector base = rho(desc);

        const LogValue at_rho = log_Za_tau_typeiv(desc, g, base);
        const double collapse =
            at_rho.sign == 1
                ? std::fabs(at_rho.log_abs - log_Za_typeiv(desc, g))
                : kPosInf;
        worst_collapse = std::max(worst_collapse, collapse);

        for (double factor : {1.0, 2.0}) {
            DualVector tau = base;
            for (double& v : tau.coeffs) v *= factor;
            const double closed = log_Za_tau_typeiv(desc, g, tau).log_abs;
            const OracleEstimate est =
                mc_radial_weighted(desc, g, tau, opts.samples, opts.seed);
            const double dev = rel_dev(est.log_value, closed);
            add_sub(out, dev <= kSeWidth * est.std_err_rel,
                    strprintf("A r=%d sigma=%g tau=%g*rho", rank, kSigma,
                              factor),
                    strprintf("mc dev %.2f se (gate <= %.0f); rel se %.4g%%",
                              est.std_err_rel > 0.0 ? dev / est.std_err_rel
                                                    : 0.0,
                              kSeWidth, 100.0 * est.std_err_rel));
        }
    }
    add_sub(out, worst_collapse <= kCollapseGate,
            "tau=rho collapses onto the unshifted closed form",
            strprintf("max |log difference| = %.2e (gate <= %.0e)",
                      worst_collapse, kCollapseGate));
}

// ---------------------------------------------------------------------------
// 4. highrank-convergence
// ---------------------------------------------------------------------------

void run_highrank(const CriterionOptions&, CriterionResult& out) {
    const double kRatioGate = 1.5;
    const int ranks[] = {50, 100, 200, 400};
    const char* names = "ABCD";
    for (LimitFamily fam : {LimitFamily::A, LimitFamily::B, LimitFamily::C,
                            LimitFamily::D}) {
        for (double t : {0.5, 1.0, 2.0}) {
            const double limit = F_limit(fam, t);
            double lo = kPosInf;
            double hi = 0.0;
            for (int r : ranks) {
                const double gap =
                    r * std::fabs(F_finite_rank(fam, r, t) - limit);
                lo = std::min(lo, gap);
                hi = std::max(hi, gap);
            }
            const double ratio = hi / lo;
            add_sub(out, ratio < kRatioGate,
                    strprintf("%c t=%g", names[static_cast<int>(fam)], t),
                    strprintf("r*gap spread over r in {50,...,400}: ratio %.4f "
                              "(gate < %g)",
                              ratio, kRatioGate));
        }
    }
}

// ---------------------------------------------------------------------------
// 5. macdonald-consistency
// ---------------------------------------------------------------------------

void run_macdonald(const CriterionOptions&, CriterionResult& out) {
    const double kIdGate = 1e-10;
    const double kConeGate = 1e-5;
    for (RootFamily fam :
         {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D}) {
        const int lo = fam == RootFamily::D ? 2 : 1;
        double worst = 0.0;
        for (int r = lo; r <= 8; ++r) {
            const SpaceDescriptor desc = typeiv_space(fam, r);
            const std::vector<long long> two_rho = rho_twice(desc);
            double lhs = log_weyl_order(desc);
            double rhs = 0.0;
            for (const Root& root : positive_roots(desc)) {
                lhs += std::log(root_dot_rho(desc, root, two_rho) / 2.0);
                rhs += std::log(root_norm2(desc, root) / 2.0);
            }
            for (int d : degrees(desc)) rhs += log_gamma(1.0 + d);
            worst = std::max(worst, std::fabs(std::expm1(lhs - rhs)));
        }
        add_sub(out, worst <= kIdGate,
                strprintf("%s ranks %d-8: order times half-sum polynomial vs "
                          "gamma product",
                          family_name(fam).c_str(), lo),
                strprintf("max rel dev %.2e (gate <= %.0e)", worst, kIdGate));
    }
    for (int beta : {1, 2}) {
        const GaussParam g = GaussParam::from_sigma(1.0);
        const double quad = quad_cone(beta, 2, g, 1e-7);
        const double closed = log_za_cone(beta, 2, 1.0);
        const double dev = rel_dev(quad, closed);
        add_sub(out, dev <= kConeGate,
                strprintf("cone rank 2, pair multiplicity %d: quadrature vs "
                          "gamma product",
                          beta),
                strprintf("rel dev %.2e (gate <= %.0e)", dev, kConeGate));
    }
}

// ---------------------------------------------------------------------------
// 6. sigma2-coefficient
// ---------------------------------------------------------------------------

void run_sigma2(const CriterionOptions&, CriterionResult& out) {
    const double kGate = 0.01;
    const struct {
        RootFamily fam;
        int rank;
    } cases[] = {{RootFamily::A, 1}, {RootFamily::A, 2}, {RootFamily::B, 2}};
    for (const auto& c : cases) {
        const SpaceDescriptor desc = typeiv_space(c.fam, c.rank);
        const double slope = sigma2_coefficient(desc, default_sigma_grid(),
                                                SlopeMethod::Closedform);
        const DualVector half_sum = rho(desc);
        const double target = dual_inner(desc, half_sum, half_sum);
        const double rel = std::fabs(slope / target - 1.0);
        add_sub(out, rel <= kGate,
                strprintf("%s r=%d", family_name(c.fam).c_str(), c.rank),
                strprintf("slope %.6f vs (rho,rho) %.6f: rel dev %.3g%% "
                          "(gate <= %g%%)",
                          slope, target, 100.0 * rel, 100.0 * kGate));
    }
}

// ---------------------------------------------------------------------------
// 7. equilibrium-limit
// ---------------------------------------------------------------------------

void run_equilibrium(const CriterionOptions&, CriterionResult& out) {
    const double kGapGate = 0.02;
    const double kRank2Gate = 1e-6;
    const double kScaleGate = 1e-9;
    const int kRank = 200;

    const struct {
        KernelVariant kv;
        E2Kind kind;
        const char* name;
    } variants[] = {{KernelVariant::A, E2Kind::Cone, "A"},
                    {KernelVariant::C, E2Kind::Domain, "C"}};
    for (const auto& v : variants) {
        for (double t : {0.5, 1.0, 2.0}) {
            const EnergyKernel kernel{v.kv, 4.0, t, 2.0, 1.0};
            const MinimizationResult res = minimize_energy(kRank, kernel);
            const double target = E2_equilibrium(v.kind, t);
            const double gap = std::fabs(res.energy - target) /
                               std::fabs(target);
            add_sub(out, res.converged && gap <= kGapGate,
                    strprintf("%s kernel, r=%d, t=%g", v.name, kRank, t),
                    strprintf("E_r %.6f vs limit %.6f: gap %.4f%% "
                              "(gate <= %g%%)%s",
                              res.energy, target, 100.0 * gap,
                              100.0 * kGapGate,
                              res.converged ? "" : "; minimizer not converged"));
        }
    }

    // Rank 2 against an independent one-dimensional oracle: by symmetry the
    // two particles sit at -s and s, the stationarity condition for u = 2s is
    // u = coth(u), and the scaled energy there is u^2/2 - log sinh(u).
    {
        double lo = 1.0, hi = 1.5;  // u - coth(u) changes sign on [1, 1.5]
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (mid - 1.0 / std::tanh(mid) < 0.0 ? lo : hi) = mid;
        }
        const double u = 0.5 * (lo + hi);
        const double target = 0.5 * u * u - std::log(std::sinh(u));
        const EnergyKernel kernel{KernelVariant::A, 4.0, 1.0, 2.0, 1.0};
        const MinimizationResult res = minimize_energy(2, kernel);
        const double err = std::fabs(res.energy - target);
        add_sub(out, res.converged && err <= kRank2Gate,
                "A kernel, r=2, t=1 vs fixed-point oracle",
                strprintf("|E_2 - oracle| = %.2e (gate <= %.0e)", err,
                          kRank2Gate));
    }

    // Coupling rescaling: E_r at coupling beta and time t equals
    // (beta/2) E_r at coupling 2 and time beta*t/2, exactly.
    const auto energy_at = [](int r, double beta, double t) {
        const EnergyKernel kernel{KernelVariant::A, 4.0, t, beta, 1.0};
        return minimize_energy(r, kernel).energy;
    };
    for (int r : {2, 50}) {
        const double up =
            std::fabs(energy_at(r, 4.0, 1.0) - 2.0 * energy_at(r, 2.0, 2.0));
        const double down =
            std::fabs(energy_at(r, 1.0, 1.0) - 0.5 * energy_at(r, 2.0, 0.5));
        add_sub(out, up <= kScaleGate,
                strprintf("coupling rescaling r=%d, beta=4", r),
                strprintf("|E_r(4,1) - 2 E_r(2,2)| = %.2e (gate <= %.0e)", up,
                          kScaleGate));
        add_sub(out, down <= kScaleGate,
                strprintf("coupling rescaling r=%d, beta=1", r),
                strprintf("|E_r(1,1) - E_r(2,1/2)/2| = %.2e (gate <= %.0e)",
                          down, kScaleGate));
    }
}

// ---------------------------------------------------------------------------
// 8. gradient-check
// ---------------------------------------------------------------------------

void run_gradient(const CriterionOptions& opts, CriterionResult& out) {
    const double kGate = 1e-5;
    const double kStep = 1e-5;
    const int kRank = 8;
    const int kSeeds = 20;
    const struct {
        EnergyKernel kernel;
        const char* name;
    } kernels[] = {
        {{KernelVariant::A, 4.0, 1.0, 2.0, 1.0}, "A kernel"},
        {{KernelVariant::C, 4.0, 0.8, 2.0, 1.0}, "C kernel"},
        {{KernelVariant::BC, 4.0, 1.2, 2.0, 2.0}, "BC kernel (delta=2)"},
    };
    for (const auto& kc : kernels) {
        double worst = 0.0;
        for (int s = 0; s < kSeeds; ++s) {
            Xoshiro256pp rng(substream_seed(opts.seed, s));
            ParticleConfig cfg;
            cfg.kernel = kc.kernel;
            cfg.positions.resize(kRank);
            for (int i = 0; i < kRank; ++i) {
                cfg.positions[i] = 0.25 + 0.3 * i + 0.1 * rng.next_uniform();
            }
            if (kc.kernel.variant == KernelVariant::A) {
                double mean = 0.0;
                for (double x : cfg.positions) mean += x;
                mean /= kRank;
                for (double& x : cfg.positions) x -= mean;
            }
            const std::vector<double> grad = energy_gradient(cfg);
            for (int i = 0; i < kRank; ++i) {
                ParticleConfig probe = cfg;
                probe.positions[i] = cfg.positions[i] + kStep;
                const double up = total_energy(probe);
                probe.positions[i] = cfg.positions[i] - kStep;
                const double down = total_energy(probe);
                const double central = (up - down) / (2.0 * kStep);
                worst = std::max(worst, std::fabs(grad[i] - central));
            }
        }
        add_sub(out, worst <= kGate,
                strprintf("%s, r=%d, %d seeds", kc.name, kRank, kSeeds),
                strprintf("max |analytic - central difference| = %.2e "
                          "(gate <= %.0e)",
                          worst, kGate));
    }
}

// ---------------------------------------------------------------------------
// 9. degree-order
// ---------------------------------------------------------------------------

void run_degree_order(const CriterionOptions&, CriterionResult& out) {
    for (RootFamily fam :
         {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D}) {
        const int lo = fam == RootFamily::D ? 2 : 1;
        bool all_equal = true;
        long long largest = 0;
        std::string mismatch;
        for (int r = lo; r <= 6; ++r) {
            const SpaceDescriptor desc = typeiv_space(fam, r);
            const long long from_degrees = weyl_order(desc);
            const long long counted =
                static_cast<long long>(enumerate_weyl(desc, 6).size());
            largest = std::max(largest, counted);
            if (from_degrees != counted) {
                all_equal = false;
                mismatch = strprintf("; rank %d: degree product %lld vs "
                                     "enumerated %lld",
                                     r, from_degrees, counted);
            }
        }
        add_sub(out, all_equal,
                strprintf("%s ranks %d-6", family_name(fam).c_str(), lo),
                strprintf("degree product equals enumerated order "
                          "(largest group %lld)%s",
                          largest, mismatch.c_str()));
    }
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

using RunFn = void (*)(const CriterionOptions&, CriterionResult&);

struct CriterionSpec {
    int id;
    const char* key;
    const char* title;
    RunFn run;
    double budget_seconds;  // 0 = no runtime budget
};

const CriterionSpec kSpecs[] = {
    {1, "dilog-identity",
     "dilogarithm closed form vs adaptive quadrature", run_dilog, 1.0},
    {2, "typeiv-closedform-vs-oracle",
     "complex-case partition functions vs Monte Carlo and quadrature",
     run_typeiv_oracle, 60.0},
    {3, "tau-closedform",
     "shifted-center closed form vs weighted Monte Carlo", run_tau, 0.0},
    {4, "highrank-convergence",
     "finite-rank free energies approach their limits at rate 1/r",
     run_highrank, 10.0},
    {5, "macdonald-consistency",
     "Macdonald-Mehta product identity and the cone integral", run_macdonald,
     0.0},
    {6, "sigma2-coefficient",
     "small-variance slope recovers the half-sum norm", run_sigma2, 30.0},
    {7, "equilibrium-limit",
     "equilibrium energies approach the two-point variational limit",
     run_equilibrium, 300.0},
    {8, "gradient-check",
     "analytic energy gradient vs central differences", run_gradient, 0.0},
    {9, "degree-order",
     "degree product equals the enumerated group order", run_degree_order,
     0.0},
};

}  // namespace

const std::vector<std::string>& criterion_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> v;
        for (const CriterionSpec& s : kSpecs) v.push_back(s.key);
        return v;
    }();
    return keys;
}

std::vector<CriterionResult> run_acceptance(const CriterionOptions& opts) {
    if (opts.samples < 10000) {
        throw std::invalid_argument(
            "acceptance run needs a Monte Carlo budget of at least 10000");
    }
    std::set<std::string> wanted(opts.only.begin(), opts.only.end());
    for (const std::string& key : wanted) {
        if (std::none_of(std::begin(kSpecs), std::end(kSpecs),
                         [&](const CriterionSpec& s) { return key == s.key; })) {
            std::string msg = "unknown criterion '" + key + "'; known keys:";
            for (const CriterionSpec& s : kSpecs) {
                msg += " ";
                msg += s.key;
            }
            throw std::invalid_argument(msg);
        }
    }

    std::vector<CriterionResult> results;
    for (const CriterionSpec& spec : kSpecs) {
        if (!wanted.empty() && wanted.count(spec.key) == 0) continue;
        CriterionResult res;
        res.id = spec.id;
        res.key = spec.key;
        res.title = spec.title;
        const auto start = std::chrono::steady_clock::now();
        try {
            spec.run(opts, res);
        } catch (const std::exception& e) {
            add_sub(res, false, "unexpected error", e.what());
        }
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (spec.budget_seconds > 0.0) {
            const bool within = res.seconds < spec.budget_seconds;
            add_sub(res, within, "runtime",
                    within ? strprintf("within budget %.0f s",
                                       spec.budget_seconds)
                           : strprintf("%.1f s exceeds budget %.0f s",
                                       res.seconds, spec.budget_seconds));
        }
        res.passed = !res.subs.empty() &&
                     std::all_of(res.subs.begin(), res.subs.end(),
                                 [](const SubResult& s) { return s.passed; });
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_report(const std::vector<CriterionResult>& results,
                          bool with_timing) {
    std::string text;
    int passed = 0;
    for (const CriterionResult& res : results) {
        text += strprintf("[%s] %d. %s -- %s",
                          res.passed ? "PASS" : "FAIL", res.id,
                          res.key.c_str(), res.title.c_str());
        if (with_timing) text += strprintf("  (%.1f s)", res.seconds);
        text += "\n";
        for (const SubResult& sub : res.subs) {
            text += strprintf("    [%s] %s: %s\n",
                              sub.passed ? "pass" : "FAIL", sub.name.c_str(),
                              sub.detail.c_str());
        }
        if (res.passed) ++passed;
    }
    text += strprintf("%d/%d criteria passed\n", passed,
                      static_cast<int>(results.size()));
    return text;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

}  // namespace symgauss
