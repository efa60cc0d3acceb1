#pragma once

// Low-level numeric plumbing shared across the library: log-domain scalars,
// stable signed log-sum-exp, shifted moment accumulators for importance
// sampling, and a small deterministic PRNG stack (splitmix64 / xoshiro256++ /
// Box-Muller) so that sampled results are bit-identical across platforms and
// thread counts.

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace symgauss {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// A real number stored as sign * exp(log_abs). Exact zero is represented by
// log_abs == -inf (sign is then conventionally +1).
struct LogValue {
    double log_abs = kNegInf;
    int sign = +1;

    double value() const;
    bool is_zero() const { return log_abs == kNegInf; }
};

LogValue log_value_of(double x);

// Signed log-sum-exp with max-shift. Throws std::domain_error if the result
// cancels below `cancel_guard` times the largest term (relative), signalling
// that the sum is numerically meaningless.
LogValue signed_log_sum_exp(const std::vector<double>& log_abs,
                            const std::vector<int>& signs,
                            double cancel_guard = 1e-8);

// Streaming accumulator for sum(w) and sum(w^2) where weights arrive as
// (log|w|, sign). Values are kept relative to a running shift so that huge
// dynamic ranges do not overflow. Merging is associative up to roundoff and
// is always performed in a fixed order by the callers.
struct ShiftedMoments {
    double shift = kNegInf;  // all sums are in units of exp(shift)
    double s1 = 0.0;         // sum of sign * exp(log|w| - shift)
    double s2 = 0.0;         // sum of exp(2*(log|w| - shift))
    long long n = 0;

    void add(double log_abs_w, int sign = +1);
    void merge(const ShiftedMoments& other);

    // log of the mean weight; throws std::domain_error if the mean is not
    // positive (the estimators here target positive integrals).
    double mean_log() const;
    // relative standard error of the linear-scale mean estimate
    double rel_std_err() const;
    // effective sample size s1^2/s2 (Kish)
    double ess() const;
};

// --- deterministic PRNG ---------------------------------------------------

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256++ seeded via splitmix64 expansion of a single 64-bit seed.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed);
    std::uint64_t next();
    // uniform double strictly inside (0, 1)
    double next_uniform();
    // standard normal via Box-Muller (caches the second variate)
    double next_normal();

  private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Substream seed for chunked sampling: mixes (seed, chunk) so that chunk
// streams are statistically independent and schedule-invariant.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk);

// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9
// absolute; used only for particle initialization, not for sampling).
double inverse_normal_cdf(double p);

// Worker count for internal parallel loops: min(hardware, SYMGAUSS_THREADS).
int worker_count();

// Runs fn(i) for i in [0, n) on worker_count() threads with static chunking.
// fn must be safe to call concurrently for distinct i.
void parallel_for(long long n, const std::function<void(long long)>& fn);

}  // namespace symgauss
