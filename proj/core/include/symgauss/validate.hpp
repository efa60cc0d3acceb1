#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symgauss {

// Options for an acceptance run. `samples` is the Monte Carlo budget used by
// the stochastic criteria; `only` restricts the run to the named criteria
// (empty means all of them, in id order).
struct CriterionOptions {
    std::uint64_t seed = 12345;
    long long samples = 1000000;
    std::vector<std::string> only;
};

// One checked sub-condition of a criterion. `detail` always states the
// measured value next to the pinned gate it was held against.
struct SubResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string key;    // stable machine name, e.g. "dilog-identity"
    std::string title;  // one-line human description
    bool passed = false;
    double seconds = 0.0;  // wall time of this criterion
    std::vector<SubResult> subs;
};

// The criterion keys, in id order.
const std::vector<std::string>& criterion_keys();

// Runs the acceptance suite and returns one result per executed criterion.
// Throws std::invalid_argument for an unknown key in opts.only or for a
// sample budget below the Monte Carlo minimum.
std::vector<CriterionResult> run_acceptance(const CriterionOptions& opts = {});

// Renders results as a plain-text report, one header line per criterion and
// one indented line per sub-condition. With `with_timing` the header also
// carries the measured wall time; it is off by default so that the report
// bytes depend only on the seed and the sample budget.
std::string format_report(const std::vector<CriterionResult>& results,
                          bool with_timing = false);

// True when every listed criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace symgauss
