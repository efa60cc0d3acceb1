#include "symgauss/closedform.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "symgauss/special.hpp"

namespace symgauss {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr int kWeylRankCap = 8;

void require_type_iv(const SpaceDescriptor& desc, const char* who) {
    if (!desc.is_type_iv())
        throw std::invalid_argument(
            std::string(who) +
            ": requires a complex-case descriptor (pair/single/double "
            "multiplicities all 2, metric_c = 4)");
}

// (lambda, tau) under the ambient metric; roots never need the trace
// projection because pair roots are already mean-free.
double root_dot_dual(const SpaceDescriptor& desc, const Root& root,
                     const DualVector& tau) {
    double dot = 0.0;
    switch (root.shape) {
        case RootShape::PairMinus:
            dot = tau.coeffs[root.i] - tau.coeffs[root.j];
            break;
        case RootShape::PairPlus:
            dot = tau.coeffs[root.i] + tau.coeffs[root.j];
            break;
        case RootShape::Single: dot = tau.coeffs[root.i]; break;
        case RootShape::Double: dot = 2.0 * tau.coeffs[root.i]; break;
    }
    return dot / desc.metric_c;
}

// sum over positive roots of log((lambda, rho) / 2)
double log_omega_rho_half(const SpaceDescriptor& desc) {
    const auto two_rho = rho_twice(desc);
    double sum = 0.0;
    for (const auto& root : positive_roots(desc))
        sum += std::log(0.5 * root_dot_rho(desc, root, two_rho));
    return sum;
}

const std::vector<WeylElement>& cached_weyl(const SpaceDescriptor& desc) {
    using Key = std::pair<int, int>;
    static std::map<Key, std::unique_ptr<const std::vector<WeylElement>>>
        cache;
    static std::shared_mutex mutex;

    const Key key{static_cast<int>(desc.family), desc.rank};
    {
        std::shared_lock lock(mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto elems = std::make_unique<const std::vector<WeylElement>>(
        enumerate_weyl(desc, kWeylRankCap));
    std::unique_lock lock(mutex);
    const auto [it, inserted] = cache.try_emplace(key, std::move(elems));
    return *it->second;
}

}  // namespace

GaussParam GaussParam::from_sigma(double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("GaussParam: sigma must be positive");
    return GaussParam{sigma};
}

GaussParam GaussParam::from_t(double t, int rank) {
    if (!(t > 0.0))
        throw std::invalid_argument("GaussParam: t must be positive");
    if (rank < 1)
        throw std::invalid_argument("GaussParam: rank must be >= 1");
    return GaussParam{std::sqrt(t / rank)};
}

double log_za_typeiv(const SpaceDescriptor& desc, GaussParam g) {
    require_type_iv(desc, "log_za_typeiv");
    return log_weyl_order(desc) +
           desc.dimension() * std::log(g.sigma) +
           0.5 * desc.rank * std::log(kTwoPi) + log_omega_rho_half(desc);
}

double log_Za_typeiv(const SpaceDescriptor& desc, GaussParam g) {
    require_type_iv(desc, "log_Za_typeiv");
    const double s2 = g.sigma2();
    const auto roots = positive_roots(desc);
    const auto two_rho = rho_twice(desc);
    const auto p = rho(desc);
    double sum = 0.0;
    for (const auto& root : roots)
        sum += log_sinh_abs(s2 * root_dot_rho(desc, root, two_rho));
    return log_weyl_order(desc) -
           static_cast<double>(roots.size()) * std::log(2.0) +
           0.5 * desc.rank * std::log(kTwoPi * s2) +
           s2 * dual_inner(desc, p, p) + sum;
}

LogValue log_Za_tau_typeiv(const SpaceDescriptor& desc, GaussParam g,
                           const DualVector& tau) {
    require_type_iv(desc, "log_Za_tau_typeiv");
    if (static_cast<int>(tau.coeffs.size()) != desc.ambient_dim)
        throw std::invalid_argument("log_Za_tau_typeiv: tau dimension mismatch");
    const double s2 = g.sigma2();
    const auto p = rho(desc);
    double sum_sch = 0.0;
    for (const auto& root : positive_roots(desc))
        sum_sch += log_sch(s2 * root_dot_dual(desc, root, tau));
    const double log_value =
        log_weyl_order(desc) +
        desc.dimension() * std::log(g.sigma) +
        0.5 * desc.rank * std::log(kTwoPi) + log_omega_rho_half(desc) +
        0.5 * s2 * (dual_inner(desc, tau, tau) + dual_inner(desc, p, p)) +
        sum_sch;
    return LogValue{log_value, +1};
}

double spherical_typeiv(const SpaceDescriptor& desc, const DualVector& tau,
                        const std::vector<double>& a) {
    require_type_iv(desc, "spherical_typeiv");
    if (static_cast<int>(tau.coeffs.size()) != desc.ambient_dim)
        throw std::invalid_argument("spherical_typeiv: tau dimension mismatch");
    if (static_cast<int>(a.size()) != desc.ambient_dim)
        throw std::invalid_argument(
            "spherical_typeiv: point dimension mismatch");

    const auto p = rho(desc);
    if (tau.coeffs == p.coeffs) return 1.0;

    // log |pi(rho)/pi(tau)| with sign; a vanishing factor makes the
    // alternating-sum formula unusable for this tau
    double log_ratio = 0.0;
    int sign_ratio = +1;
    for (const auto& root : positive_roots(desc)) {
        const double dt = root_dot_dual(desc, root, tau);
        if (dt == 0.0)
            throw std::invalid_argument(
                "spherical_typeiv: tau lies on a wall (pi(tau) = 0)");
        const double dr = root_dot_dual(desc, root, p);
        log_ratio += std::log(std::abs(dr)) - std::log(std::abs(dt));
        if (dt < 0.0) sign_ratio = -sign_ratio;
    }

    const auto& weyl = cached_weyl(desc);
    const int n = desc.ambient_dim;
    std::vector<double> wa(n);
    std::vector<double> num_logs, den_logs;
    std::vector<int> num_signs, den_signs;
    num_logs.reserve(weyl.size());
    den_logs.reserve(weyl.size());
    num_signs.reserve(weyl.size());
    den_signs.reserve(weyl.size());
    for (const auto& w : weyl) {
        w.apply(a.data(), wa.data());
        double et = 0.0, er = 0.0;
        for (int k = 0; k < n; ++k) {
            et += tau.coeffs[k] * wa[k];
            er += p.coeffs[k] * wa[k];
        }
        num_logs.push_back(et);
        num_signs.push_back(w.det);
        den_logs.push_back(er);
        den_signs.push_back(w.det);
    }

    LogValue num, den;
    try {
        num = signed_log_sum_exp(num_logs, num_signs);
        den = signed_log_sum_exp(den_logs, den_signs);
    } catch (const std::domain_error&) {
        throw std::domain_error(
            "spherical_typeiv: point too close to a chamber wall for the "
            "alternating sum to be resolved");
    }
    if (num.is_zero() || den.is_zero())
        throw std::domain_error(
            "spherical_typeiv: alternating sum vanished (point on a wall)");

    const double log_abs = log_ratio + num.log_abs - den.log_abs;
    const int sign = sign_ratio * num.sign * den.sign;
    return sign * std::exp(log_abs);
}

double log_za_cone(int beta, int rank, double sigma) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("log_za_cone: beta must be 1, 2, or 4");
    if (rank < 1)
        throw std::invalid_argument("log_za_cone: rank must be >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("log_za_cone: sigma must be positive");
    const double r = rank;
    const double d = r + 0.5 * beta * r * (r - 1.0);
    double gammas = 0.0;
    for (int j = 1; j <= rank; ++j)
        gammas += log_gamma(1.0 + 0.5 * beta * j) -
                  log_gamma(1.0 + 0.5 * beta);
    return d * std::log(0.5 * sigma) + 0.5 * r * std::log(4.0 * kTwoPi) +
           gammas;
}

double log_za_symplectic(int rank, double sigma) {
    if (rank < 1)
        throw std::invalid_argument("log_za_symplectic: rank must be >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("log_za_symplectic: sigma must be positive");
    const double r = rank;
    const double s2 = sigma * sigma;
    double gammas = 0.0;
    for (int j = 1; j <= rank; ++j) gammas += log_gamma(1.0 + 2.0 * j);
    return r * r * std::log(0.25 * s2) + 0.5 * r * std::log(4.0 * kTwoPi * s2) +
           gammas;
}

}  // namespace symgauss
