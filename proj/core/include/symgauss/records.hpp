#pragma once

// Sweep-output record types and their CSV/JSON codecs. Doubles are emitted
// with 17 significant digits so that parse(emit(x)) == x bit-for-bit and
// downstream diffing of artifacts is exact.

#include <string>
#include <vector>

namespace symgauss {

// One (family, rank, sigma) evaluation of the two normalization integrals.
struct ClosedformRecord {
    std::string family;
    int rank = 0;
    double sigma = 0.0;
    double log_Za = 0.0;
    double log_za = 0.0;

    double ratio_log() const { return log_Za - log_za; }
};

// One t evaluation of the high-rank limit, with optional finite-rank columns
// (ranks and F_r are parallel arrays).
struct LimitRecord {
    std::string family;
    double t = 0.0;
    double F = 0.0;
    std::vector<int> ranks;
    std::vector<double> F_r;
    double e2 = 0.0;
    double E2 = 0.0;
};

// One rank point of an equilibrium minimization sweep. target/gap_percent are
// meaningful only when has_target; exploratory marks kernels without a
// closed-form limit (the delta > 1 case).
struct EquilibriumRecord {
    std::string kernel;
    int rank = 0;
    double beta = 0.0;
    double t = 0.0;
    double delta = 1.0;
    double energy = 0.0;
    double grad_norm = 0.0;
    bool has_target = false;
    double target = 0.0;
    double gap_percent = 0.0;
    bool exploratory = false;
};

// Full-precision decimal rendering of a double ("%.17g").
std::string format_g17(double x);

std::string to_csv(const std::vector<ClosedformRecord>& rows);
std::string to_csv(const std::vector<LimitRecord>& rows);
std::string to_csv(const std::vector<EquilibriumRecord>& rows);

std::string to_json(const std::vector<ClosedformRecord>& rows);
std::string to_json(const std::vector<LimitRecord>& rows);
std::string to_json(const std::vector<EquilibriumRecord>& rows);

std::vector<ClosedformRecord> closedform_from_csv(const std::string& text);
std::vector<LimitRecord> limit_from_csv(const std::string& text);
std::vector<EquilibriumRecord> equilibrium_from_csv(const std::string& text);

std::vector<ClosedformRecord> closedform_from_json(const std::string& text);
std::vector<LimitRecord> limit_from_json(const std::string& text);
std::vector<EquilibriumRecord> equilibrium_from_json(const std::string& text);

}  // namespace symgauss
