#include "symgauss/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace symgauss {

double LogValue::value() const {
    if (is_zero()) return 0.0;
    return sign * std::exp(log_abs);
}

LogValue log_value_of(double x) {
    if (x == 0.0) return LogValue{kNegInf, +1};
    return LogValue{std::log(std::abs(x)), x > 0 ? +1 : -1};
}

LogValue signed_log_sum_exp(const std::vector<double>& log_abs,
                            const std::vector<int>& signs,
                            double cancel_guard) {
    if (log_abs.size() != signs.size())
        throw std::invalid_argument("signed_log_sum_exp: size mismatch");
    double m = kNegInf;
    for (double la : log_abs) m = std::max(m, la);
    if (m == kNegInf) return LogValue{kNegInf, +1};
    double acc = 0.0;
    for (std::size_t i = 0; i < log_abs.size(); ++i)
        acc += signs[i] * std::exp(log_abs[i] - m);
    if (std::abs(acc) < cancel_guard * 1.0) {
        // |largest shifted term| is exactly 1, so acc is the relative residue
        throw std::domain_error(
            "signed_log_sum_exp: catastrophic cancellation (relative residue " +
            std::to_string(std::abs(acc)) + "); perturb the input");
    }
    return LogValue{m + std::log(std::abs(acc)), acc > 0 ? +1 : -1};
}

void ShiftedMoments::add(double log_abs_w, int sign) {
    ++n;
    if (log_abs_w == kNegInf) return;  // exact zero weight contributes nothing
    if (shift == kNegInf) {
        shift = log_abs_w;
        s1 = sign;
        s2 = 1.0;
        return;
    }
    if (log_abs_w <= shift) {
        const double e = std::exp(log_abs_w - shift);
        s1 += sign * e;
        s2 += e * e;
    } else {
        const double f = std::exp(shift - log_abs_w);
        s1 = s1 * f + sign;
        s2 = s2 * f * f + 1.0;
        shift = log_abs_w;
    }
}

void ShiftedMoments::merge(const ShiftedMoments& other) {
    n += other.n;
    if (other.shift == kNegInf) return;
    if (shift == kNegInf) {
        shift = other.shift;
        s1 = other.s1;
        s2 = other.s2;
        return;
    }
    if (other.shift <= shift) {
        const double f = std::exp(other.shift - shift);
        s1 += other.s1 * f;
        s2 += other.s2 * f * f;
    } else {
        const double f = std::exp(shift - other.shift);
        s1 = s1 * f + other.s1;
        s2 = s2 * f * f + other.s2;
        shift = other.shift;
    }
}

double ShiftedMoments::mean_log() const {
    if (n <= 0 || shift == kNegInf || s1 <= 0.0)
        throw std::domain_error("ShiftedMoments: mean is not positive");
    return shift + std::log(s1 / static_cast<double>(n));
}

double ShiftedMoments::rel_std_err() const {
    if (n <= 1 || s1 <= 0.0) return kPosInf;
    const double nn = static_cast<double>(n);
    double var_scaled = (s2 - s1 * s1 / nn) / (nn - 1.0);  // units exp(2*shift)
    var_scaled = std::max(var_scaled, 0.0);
    return std::sqrt(var_scaled * nn) / s1;  // sd/(mean*sqrt(n)) with shifts cancelled
}

double ShiftedMoments::ess() const {
    if (s2 <= 0.0) return 0.0;
    return s1 * s1 / s2;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

static inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next() {
    const std::uint64_t result = rotl64(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl64(s_[3], 45);
    return result;
}

double Xoshiro256pp::next_uniform() {
    // 53 random bits, offset by half an ulp: strictly inside (0,1)
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double Xoshiro256pp::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t s = seed ^ (0xA0761D6478BD642FULL + chunk * 0xE7037ED1A0B428DBULL);
    return splitmix64(s);
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("inverse_normal_cdf: p must be in (0,1)");
    // Acklam's rational approximation, |error| < 1.2e-9.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double q, r, x;
    if (p < plow) {
        q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= phigh) {
        q = p - 0.5;
        r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        q = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    return x;
}

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("SYMGAUSS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v < 1024) hw = std::min<long>(hw, v);
    }
    return hw;
}

void parallel_for(long long n, const std::function<void(long long)>& fn) {
    if (n <= 0) return;
    const int workers = static_cast<int>(std::min<long long>(worker_count(), n));
    if (workers <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace symgauss
