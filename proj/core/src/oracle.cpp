#include "symgauss/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "symgauss/numerics.hpp"
#include "symgauss/special.hpp"

namespace symgauss {

namespace {

constexpr long long kChunk = 65536;
constexpr double kTwoPi = 6.283185307179586476925287;

// ---------------------------------------------------------------------------
// Monte Carlo machinery
// ---------------------------------------------------------------------------

struct ChunkResult {
    ShiftedMoments moments;
    long long rejected = 0;
};

// log weight of one draw over the raw iid coordinates. A-family roots are
// coordinate differences, so evaluating them on the unprojected draw equals
// evaluating on its trace-zero projection.
double log_weight(const std::vector<Root>& roots, const double* x,
                  bool sinh_w) {
    double lw = 0.0;
    for (const auto& root : roots) {
        const double lam = root.eval(x);
        lw += root.multiplicity *
              (sinh_w ? log_sinh_abs(lam) : std::log(std::abs(lam)));
    }
    return lw;
}

OracleEstimate finalize(const SpaceDescriptor& desc, GaussParam g,
                        std::uint64_t seed,
                        const std::vector<ChunkResult>& parts) {
    ShiftedMoments total;
    long long rejected = 0;
    for (const auto& part : parts) {  // fixed merge order: chunk index
        total.merge(part.moments);
        rejected += part.rejected;
    }
    OracleEstimate out;
    out.log_value =
        0.5 * desc.rank * std::log(kTwoPi * g.sigma2()) + total.mean_log();
    out.std_err_rel = total.rel_std_err();
    out.n_samples = total.n;
    out.seed = seed;
    out.ess = total.ess();
    out.rejected = rejected;
    return out;
}

// ---------------------------------------------------------------------------
// Tensor quadrature machinery (rank <= 2)
// ---------------------------------------------------------------------------

// One weight factor |f(y)|^mult with f(y) = q1*y1 + q2*y2 (q2 unused in 1-D).
struct LinTerm {
    double q1 = 0.0;
    double q2 = 0.0;
    double mult = 0.0;
    bool odd = false;  // odd multiplicity: |.|-type kink along f(y) = 0
};

std::vector<double> uniform_breaks(double h) {
    std::vector<double> b;
    b.reserve(15);
    for (int k = 1; k < 16; ++k) b.push_back(-h + 2.0 * h * k / 16.0);
    return b;
}

double term_log_weight(const LinTerm& t, double lam, bool sinh_w) {
    return t.mult * (sinh_w ? log_sinh_abs(lam) : std::log(std::abs(lam)));
}

// log of int over [-h1,h1] (x [-h2,h2]) of
//   exp(-gauss_k |y|^2) * prod_t |f_t(y)|-weights,
// plus log_pref, with absolute log-scale error <= log_tol. Two-stage: a
// first-pass pilot fixes the magnitude, then absolute tolerances are derived
// from it for the final pass.
double tensor_quad_log(int dim, double gauss_k,
                       const std::vector<LinTerm>& terms, bool sinh_w,
                       double h1, double h2, double log_pref, double log_tol) {
    if (dim == 1) {
        const auto f = [&](double y) {
            double lw = -gauss_k * y * y;
            for (const auto& t : terms)
                lw += term_log_weight(t, t.q1 * y, sinh_w);
            return std::exp(lw);
        };
        std::vector<double> breaks = uniform_breaks(h1);
        for (const auto& t : terms)
            if (t.odd) breaks.push_back(0.0);
        const double pilot = adaptive_quad(f, {-h1, h1}, kPosInf, breaks);
        if (!(pilot > 0.0) || !std::isfinite(pilot))
            throw std::runtime_error(
                "tensor quadrature: pilot pass failed (integrand not positive)");
        const double result = adaptive_quad(f, {-h1, h1},
                                            0.8 * log_tol * pilot, breaks);
        return log_pref + std::log(result);
    }

    const auto raw = [&](double y1, double y2) {
        double lw = -gauss_k * (y1 * y1 + y2 * y2);
        for (const auto& t : terms)
            lw += term_log_weight(t, t.q1 * y1 + t.q2 * y2, sinh_w);
        return std::exp(lw);
    };
    const auto inner_breaks_for = [&](double y1) {
        std::vector<double> b = uniform_breaks(h2);
        for (const auto& t : terms) {
            if (!t.odd || std::abs(t.q2) <= 1e-12) continue;
            const double y2 = -t.q1 * y1 / t.q2;
            if (std::abs(y2) < h2) b.push_back(y2);
        }
        return b;
    };
    const auto inner = [&](double y1, double tol_in) {
        try {
            return adaptive_quad([&](double y2) { return raw(y1, y2); },
                                 {-h2, h2}, tol_in, inner_breaks_for(y1));
        } catch (const QuadratureError& e) {
            return e.best_estimate;  // rare: locally above tol_in, still usable
        }
    };
    std::vector<double> outer_breaks = uniform_breaks(h1);
    for (const auto& t : terms)
        if (t.odd && std::abs(t.q2) <= 1e-12) outer_breaks.push_back(0.0);

    const double pilot =
        adaptive_quad([&](double y1) { return inner(y1, kPosInf); },
                      {-h1, h1}, kPosInf, outer_breaks);
    if (!(pilot > 0.0) || !std::isfinite(pilot))
        throw std::runtime_error(
            "tensor quadrature: pilot pass failed (integrand not positive)");

    const double tol_lin = 0.8 * log_tol * pilot;
    const double tol_in = 0.125 * tol_lin / (2.0 * h1);
    const double result =
        adaptive_quad([&](double y1) { return inner(y1, tol_in); },
                      {-h1, h1}, 0.5 * tol_lin, outer_breaks);
    return log_pref + std::log(result);
}

// Orthonormal basis of the quadrature coordinates expressed over the ambient
// coordinates: identity for the reduced families, the trace-zero hyperplane
// basis for A.
std::vector<std::vector<double>> quad_basis(const SpaceDescriptor& desc) {
    const int r = desc.rank;
    std::vector<std::vector<double>> basis;
    if (desc.family != RootFamily::A) {
        for (int i = 0; i < r; ++i) {
            std::vector<double> b(static_cast<std::size_t>(r), 0.0);
            b[static_cast<std::size_t>(i)] = 1.0;
            basis.push_back(std::move(b));
        }
        return basis;
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (r == 1) {
        basis.push_back({inv_sqrt2, -inv_sqrt2});
        return basis;
    }
    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    basis.push_back({inv_sqrt2, -inv_sqrt2, 0.0});
    basis.push_back({inv_sqrt6, inv_sqrt6, -2.0 * inv_sqrt6});
    return basis;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

OracleEstimate mc_radial(const SpaceDescriptor& desc, GaussParam g,
                         long long n, std::uint64_t seed, RadialWeight weight) {
    if (desc.rank > 8)
        throw std::invalid_argument("mc_radial: rank cap for sampling is 8");
    if (n < 10000)
        throw std::invalid_argument("mc_radial: need at least 1e4 samples");
    const auto roots = positive_roots(desc);
    const bool sinh_w = (weight == RadialWeight::SinhProduct);
    const int dim = desc.ambient_dim;
    const double sd = g.sigma / std::sqrt(desc.metric_c);

    const long long n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkResult> parts(static_cast<std::size_t>(n_chunks));
    parallel_for(n_chunks, [&](long long ci) {
        Xoshiro256pp rng(substream_seed(seed, static_cast<std::uint64_t>(ci)));
        const long long count = std::min<long long>(kChunk, n - ci * kChunk);
        std::vector<double> x(static_cast<std::size_t>(dim));
        ShiftedMoments local;
        for (long long s = 0; s < count; ++s) {
            for (auto& xi : x) xi = sd * rng.next_normal();
            local.add(log_weight(roots, x.data(), sinh_w));
        }
        parts[static_cast<std::size_t>(ci)].moments = local;
    });
    return finalize(desc, g, seed, parts);
}

OracleEstimate mc_radial_weighted(const SpaceDescriptor& desc, GaussParam g,
                                  const DualVector& tau, long long n,
                                  std::uint64_t seed) {
    if (!desc.is_type_iv())
        throw std::invalid_argument(
            "mc_radial_weighted: complex-case descriptors only");
    if (desc.rank > 4)
        throw std::invalid_argument(
            "mc_radial_weighted: rank cap for spherical sampling is 4");
    if (n < 10000)
        throw std::invalid_argument(
            "mc_radial_weighted: need at least 1e4 samples");

    const int dim = desc.ambient_dim;

    // Surface wall-tau errors (std::invalid_argument) before entering the
    // worker threads, where an escaping exception would be fatal. The probe
    // points are generic; if one still lands inside the cancellation guard of
    // a wall, shift and retry.
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<double> probe(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k)
            probe[static_cast<std::size_t>(k)] =
                0.317 + (0.193 + 0.071 * attempt) * k;
        try {
            spherical_typeiv(desc, tau, probe);
            break;
        } catch (const std::domain_error&) {
            if (attempt == 2) throw;
        }
    }

    const auto roots = positive_roots(desc);
    const double sd = g.sigma / std::sqrt(desc.metric_c);
    const bool is_a = (desc.family == RootFamily::A);

    const long long n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkResult> parts(static_cast<std::size_t>(n_chunks));
    parallel_for(n_chunks, [&](long long ci) {
        Xoshiro256pp rng(substream_seed(seed, static_cast<std::uint64_t>(ci)));
        const long long count = std::min<long long>(kChunk, n - ci * kChunk);
        std::vector<double> x(static_cast<std::size_t>(dim));
        std::vector<double> a(static_cast<std::size_t>(dim));
        ShiftedMoments local;
        long long rejected = 0;
        for (long long s = 0; s < count; ++s) {
            for (auto& xi : x) xi = sd * rng.next_normal();
            a = x;
            if (is_a) {
                double mean = 0.0;
                for (double xi : x) mean += xi;
                mean /= dim;
                for (auto& ai : a) ai -= mean;
            }
            double sph;
            try {
                sph = spherical_typeiv(desc, tau, a);
            } catch (const std::domain_error&) {
                ++rejected;  // draw fell inside the wall cancellation guard
                continue;
            }
            if (!(sph > 0.0) || !std::isfinite(sph)) {
                ++rejected;
                continue;
            }
            local.add(log_weight(roots, x.data(), true) + std::log(sph));
        }
        parts[static_cast<std::size_t>(ci)] = ChunkResult{local, rejected};
    });
    return finalize(desc, g, seed, parts);
}

double quad_radial(const SpaceDescriptor& desc, GaussParam g, double tol,
                   RadialWeight weight) {
    if (desc.rank > 2)
        throw std::invalid_argument(
            "quad_radial: tensor quadrature caps at rank 2");
    if (!(tol > 0.0))
        throw std::invalid_argument("quad_radial: tol must be positive");
    const int r = desc.rank;
    const double c = desc.metric_c;
    const bool sinh_w = (weight == RadialWeight::SinhProduct);

    const auto basis = quad_basis(desc);
    std::vector<LinTerm> terms;
    for (const auto& root : positive_roots(desc)) {
        const auto coeffs = root.coeffs(desc.ambient_dim);
        LinTerm t;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            t.q1 += coeffs[k] * basis[0][k];
            if (r == 2) t.q2 += coeffs[k] * basis[1][k];
        }
        t.mult = root.multiplicity;
        t.odd = (root.multiplicity % 2 != 0);
        terms.push_back(t);
    }

    // Half-widths: 12 sigma of Gaussian mass plus the peak drift that the
    // hyperbolic weight's exponential growth induces along each axis.
    double l1 = 0.0, l2 = 0.0;
    if (sinh_w) {
        for (const auto& t : terms) {
            l1 += t.mult * std::abs(t.q1);
            l2 += t.mult * std::abs(t.q2);
        }
    }
    const double h1 = 12.0 * g.sigma + g.sigma2() * l1 / c;
    const double h2 = 12.0 * g.sigma + g.sigma2() * l2 / c;

    return tensor_quad_log(r, c / (2.0 * g.sigma2()), terms, sinh_w, h1, h2,
                           0.5 * r * std::log(c), tol);
}

double quad_cone(int beta, int rank, GaussParam g, double tol) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("quad_cone: beta must be one of {1, 2, 4}");
    if (rank < 1 || rank > 2)
        throw std::invalid_argument(
            "quad_cone: tensor quadrature caps at rank 2");
    if (!(tol > 0.0))
        throw std::invalid_argument("quad_cone: tol must be positive");
    const double c = 4.0;  // cone metric: ||a||^2 = 4 sum a_i^2
    std::vector<LinTerm> terms;
    if (rank == 2)
        terms.push_back(LinTerm{1.0, -1.0, static_cast<double>(beta),
                                beta % 2 != 0});
    const double h = 12.0 * g.sigma;
    return tensor_quad_log(rank, c / (2.0 * g.sigma2()), terms,
                           /*sinh_w=*/false, h, h, 0.5 * rank * std::log(c),
                           tol);
}

std::vector<double> default_sigma_grid() {
    return {0.0125, 0.025, 0.0375, 0.05};
}

double sigma2_coefficient(const SpaceDescriptor& desc,
                          const std::vector<double>& sigma_grid,
                          SlopeMethod method) {
    if (sigma_grid.size() < 4)
        throw std::invalid_argument(
            "sigma2_coefficient: need at least 4 grid points");
    for (double s : sigma_grid)
        if (!(s > 0.0 && s <= 0.2))
            throw std::invalid_argument(
                "sigma2_coefficient: sigma values must lie in (0, 0.2]");
    if (method == SlopeMethod::Closedform && !desc.is_type_iv())
        throw std::invalid_argument(
            "sigma2_coefficient: closedform method needs a complex-case "
            "descriptor");
    if (method == SlopeMethod::Quadrature && desc.rank > 2)
        throw std::invalid_argument(
            "sigma2_coefficient: quadrature method caps at rank 2");

    double sxx = 0.0, sxy = 0.0;
    for (double s : sigma_grid) {
        const GaussParam g = GaussParam::from_sigma(s);
        double dlog;
        if (method == SlopeMethod::Closedform) {
            dlog = log_Za_typeiv(desc, g) - log_za_typeiv(desc, g);
        } else {
            dlog = quad_radial(desc, g, 1e-9, RadialWeight::SinhProduct) -
                   quad_radial(desc, g, 1e-9, RadialWeight::FlatProduct);
        }
        const double x = s * s;
        sxx += x * x;
        sxy += x * std::expm1(dlog);
    }
    return sxy / sxx;
}

}  // namespace symgauss
