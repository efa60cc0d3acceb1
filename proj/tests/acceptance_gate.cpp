// Acceptance gate: runs every validation criterion with the default seed and
// sample budget, prints one line per criterion plus the measured values behind
// each sub-condition, and exits with the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "symgauss/validate.hpp"

int main(int argc, char** argv) {
    symgauss::CriterionOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--samples" && i + 1 < argc) {
            opts.samples = std::strtoll(argv[++i], nullptr, 10);
        } else if (arg == "--only" && i + 1 < argc) {
            opts.only.push_back(argv[++i]);
        } else {
            std::fprintf(stderr,
                         "usage: %s [--seed N] [--samples N] [--only KEY]...\n",
                         argv[0]);
            return 64;
        }
    }

    const auto results = symgauss::run_acceptance(opts);
    std::fputs(symgauss::format_report(results, /*with_timing=*/true).c_str(),
               stdout);

    int failed = 0;
    for (const auto& res : results) {
        if (!res.passed) ++failed;
    }
    return failed;
}
