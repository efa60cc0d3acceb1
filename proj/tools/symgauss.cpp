// symgauss: command-line front end for the symmetric-space Gaussian library.
//
// Subcommands: catalog, closedform, limit, equilibrium, validate. Output goes
// to stdout or --output as a table, CSV, or JSON. All randomness flows from
// --seed (fixed default, never wall clock), so every run is reproducible.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "symgauss/closedform.hpp"
#include "symgauss/equilibrium.hpp"
#include "symgauss/highrank.hpp"
#include "symgauss/records.hpp"
#include "symgauss/rootsys.hpp"
#include "symgauss/validate.hpp"

namespace {

using namespace symgauss;

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

struct OutputOpts {
    std::string format = "table";
    std::string path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path,
                    "write to this file instead of stdout");
}

void emit(const OutputOpts& opts, const std::string& text) {
    if (opts.path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream file(opts.path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + opts.path +
                                 "'");
    }
    file << text;
}

std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

bool looks_numeric(const std::string& cell) {
    if (cell.empty()) return false;
    char* end = nullptr;
    std::strtod(cell.c_str(), &end);
    return end == cell.c_str() + cell.size();
}

// Fixed-width table: columns whose body cells are all numeric (or blank) are
// right-aligned, everything else left-aligned.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    const size_t cols = header.size();
    std::vector<size_t> width(cols);
    std::vector<bool> numeric(cols, true);
    for (size_t c = 0; c < cols; ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (size_t c = 0; c < cols; ++c) {
            width[c] = std::max(width[c], row[c].size());
            if (!row[c].empty() && !looks_numeric(row[c])) numeric[c] = false;
        }
    }
    std::string out;
    const auto append_row = [&](const std::vector<std::string>& row,
                                bool align_numeric) {
        for (size_t c = 0; c < cols; ++c) {
            if (c > 0) out += "  ";
            const size_t pad = width[c] - row[c].size();
            if (align_numeric && numeric[c]) out += std::string(pad, ' ');
            out += row[c];
            if (c + 1 < cols && !(align_numeric && numeric[c]))
                out += std::string(pad, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    append_row(header, false);
    for (const auto& row : rows) append_row(row, true);
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// ---------------------------------------------------------------------------
// argument helpers
// ---------------------------------------------------------------------------

RootFamily parse_family(const std::string& s) {
    if (s == "A") return RootFamily::A;
    if (s == "B") return RootFamily::B;
    if (s == "C") return RootFamily::C;
    if (s == "D") return RootFamily::D;
    throw std::invalid_argument("unknown family '" + s +
                                "' (expected A, B, C, or D)");
}

LimitFamily parse_limit_family(const std::string& s) {
    if (s == "A") return LimitFamily::A;
    if (s == "B") return LimitFamily::B;
    if (s == "C") return LimitFamily::C;
    if (s == "D") return LimitFamily::D;
    throw std::invalid_argument("unknown family '" + s +
                                "' (expected A, B, C, or D)");
}

template <typename T>
void require_increasing(const std::vector<T>& grid, const char* flag) {
    for (size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string(flag) +
                                        ": grid must be strictly increasing");
        }
    }
}

// Accepts a full criterion key or any unambiguous prefix (e.g. "dilog").
std::string resolve_criterion_key(const std::string& token) {
    const auto& keys = criterion_keys();
    std::vector<std::string> matches;
    for (const std::string& key : keys) {
        if (key == token) return key;
        if (key.rfind(token, 0) == 0) matches.push_back(key);
    }
    if (matches.size() == 1) return matches.front();
    std::string msg = matches.empty()
                          ? "unknown criterion '" + token + "'"
                          : "ambiguous criterion '" + token + "'";
    msg += "; known keys:";
    for (const std::string& key : keys) msg += " " + key;
    throw std::invalid_argument(msg);
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

int cmd_catalog(bool complex_only, const OutputOpts& out) {
    std::vector<CatalogRow> rows;
    for (const CatalogRow& row : catalog()) {
        if (complex_only &&
            row.remark.find("complex") == std::string::npos) {
            continue;
        }
        rows.push_back(row);
    }
    if (out.format == "json") {
        if (!complex_only) {
            emit(out, catalog_json());
            return 0;
        }
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const CatalogRow& r : rows) {
            doc.push_back({{"label", r.label},
                           {"family", r.family},
                           {"rank_formula", r.rank_formula},
                           {"dim_formula", r.dim_formula},
                           {"alpha", r.alpha},
                           {"beta", r.beta},
                           {"gamma", r.gamma},
                           {"remark", r.remark}});
        }
        emit(out, doc.dump(2) + "\n");
        return 0;
    }
    if (out.format == "csv") {
        std::string text =
            "label,family,rank_formula,dim_formula,alpha,beta,gamma,remark\n";
        for (const CatalogRow& r : rows) {
            text += csv_quote(r.label) + ',' + csv_quote(r.family) + ',' +
                    csv_quote(r.rank_formula) + ',' + csv_quote(r.dim_formula) +
                    ',' + csv_quote(r.alpha) + ',' + csv_quote(r.beta) + ',' +
                    csv_quote(r.gamma) + ',' + csv_quote(r.remark) + '\n';
        }
        emit(out, text);
        return 0;
    }
    std::vector<std::vector<std::string>> body;
    for (const CatalogRow& r : rows) {
        body.push_back({r.label, r.family, r.rank_formula, r.dim_formula,
                        r.alpha, r.beta, r.gamma, r.remark});
    }
    emit(out, render_table({"label", "family", "rank", "dimension", "alpha",
                            "beta", "gamma", "remark"},
                           body));
    return 0;
}

// ---------------------------------------------------------------------------
// closedform
// ---------------------------------------------------------------------------

int cmd_closedform(const std::string& family, const std::vector<int>& ranks,
                   const std::vector<double>& sigmas, const OutputOpts& out) {
    const RootFamily fam = parse_family(family);
    require_increasing(ranks, "--ranks");
    require_increasing(sigmas, "--sigma");
    std::vector<ClosedformRecord> rows;
    for (int rank : ranks) {
        const SpaceDescriptor desc = typeiv_space(fam, rank);
        for (double sigma : sigmas) {
            const GaussParam g = GaussParam::from_sigma(sigma);
            rows.push_back({family_name(fam), rank, sigma,
                            log_Za_typeiv(desc, g), log_za_typeiv(desc, g)});
        }
    }
    if (out.format == "csv") {
        emit(out, to_csv(rows));
    } else if (out.format == "json") {
        emit(out, to_json(rows));
    } else {
        std::vector<std::vector<std::string>> body;
        for (const ClosedformRecord& r : rows) {
            body.push_back({r.family, std::to_string(r.rank), fmt_num(r.sigma),
                            fmt_num(r.log_Za), fmt_num(r.log_za),
                            fmt_num(r.ratio_log())});
        }
        emit(out, render_table(
                      {"family", "rank", "sigma", "log_Za", "log_za", "ratio"},
                      body));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------------

int cmd_limit(const std::string& family, const std::vector<double>& ts,
              const std::vector<int>& ranks, const OutputOpts& out) {
    const LimitFamily fam = parse_limit_family(family);
    const E2Kind kind =
        fam == LimitFamily::A ? E2Kind::Cone : E2Kind::Domain;
    require_increasing(ts, "--t");
    require_increasing(ranks, "--ranks");
    std::vector<LimitRecord> rows;
    for (double t : ts) {
        LimitRecord rec;
        rec.family = family;
        rec.t = t;
        rec.F = F_limit(fam, t);
        rec.ranks = ranks;
        for (int rank : ranks) rec.F_r.push_back(F_finite_rank(fam, rank, t));
        rec.e2 = kind == E2Kind::Cone ? e2_cone(t) : e2_domain(t);
        rec.E2 = E2_equilibrium(kind, t);
        rows.push_back(std::move(rec));
    }
    if (out.format == "csv") {
        emit(out, to_csv(rows));
    } else if (out.format == "json") {
        emit(out, to_json(rows));
    } else {
        std::vector<std::string> header = {"family", "t", "F", "e2", "E2"};
        for (int rank : ranks) header.push_back("F_r" + std::to_string(rank));
        std::vector<std::vector<std::string>> body;
        for (const LimitRecord& r : rows) {
            std::vector<std::string> row = {r.family, fmt_num(r.t),
                                            fmt_num(r.F), fmt_num(r.e2),
                                            fmt_num(r.E2)};
            for (double f : r.F_r) row.push_back(fmt_num(f));
            body.push_back(std::move(row));
        }
        emit(out, render_table(header, body));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// equilibrium
// ---------------------------------------------------------------------------

int cmd_equilibrium(const std::string& kernel, const std::vector<int>& ranks,
                    double beta, const std::vector<double>& ts, double delta,
                    std::uint64_t seed, const OutputOpts& out) {
    KernelVariant variant;
    if (kernel == "A") {
        variant = KernelVariant::A;
    } else if (kernel == "C") {
        variant = KernelVariant::C;
    } else if (kernel == "BC") {
        variant = KernelVariant::BC;
    } else {
        throw std::invalid_argument("unknown kernel '" + kernel +
                                    "' (expected A, C, or BC)");
    }
    if (variant != KernelVariant::BC && delta != 1.0) {
        throw std::invalid_argument("--delta applies to the BC kernel only");
    }
    if (!(delta >= 1.0)) {
        throw std::invalid_argument("--delta must be >= 1");
    }
    require_increasing(ranks, "--ranks");
    require_increasing(ts, "--t");

    // A limit exists for the A and C kernels; BC reduces to C exactly when
    // delta = 1 and is exploratory otherwise.
    const bool has_target = variant != KernelVariant::BC || delta == 1.0;
    const E2Kind kind =
        variant == KernelVariant::A ? E2Kind::Cone : E2Kind::Domain;

    std::vector<EquilibriumRecord> rows;
    for (int rank : ranks) {
        for (double t : ts) {
            MinimizeOptions mopts;
            mopts.seed = seed;
            const EnergyKernel ek{variant, 4.0, t, beta, delta};
            const MinimizationResult res = minimize_energy(rank, ek, mopts);
            if (!res.converged) {
                std::fprintf(stderr,
                             "warning: minimizer did not converge for %s "
                             "r=%d t=%g (|grad| = %g)\n",
                             kernel.c_str(), rank, t, res.grad_inf_norm);
            }
            EquilibriumRecord rec;
            rec.kernel = kernel;
            rec.rank = rank;
            rec.beta = beta;
            rec.t = t;
            rec.delta = delta;
            rec.energy = res.energy;
            rec.grad_norm = res.grad_inf_norm;
            rec.has_target = has_target;
            rec.exploratory = !has_target;
            if (has_target) {
                rec.target = -beta_scaled_limit(kind, beta, t);
                rec.gap_percent =
                    100.0 * std::fabs(rec.energy - rec.target) /
                    std::fabs(rec.target);
            }
            rows.push_back(std::move(rec));
        }
    }
    if (out.format == "csv") {
        emit(out, to_csv(rows));
    } else if (out.format == "json") {
        emit(out, to_json(rows));
    } else {
        std::vector<std::vector<std::string>> body;
        for (const EquilibriumRecord& r : rows) {
            body.push_back({r.kernel, std::to_string(r.rank), fmt_num(r.beta),
                            fmt_num(r.t), fmt_num(r.delta), fmt_num(r.energy),
                            fmt_num(r.grad_norm),
                            r.has_target ? fmt_num(r.target) : "",
                            r.has_target ? fmt_num(r.gap_percent) : "",
                            r.exploratory ? "yes" : "no"});
        }
        emit(out, render_table({"kernel", "rank", "beta", "t", "delta",
                                "energy", "grad_norm", "target", "gap_%",
                                "exploratory"},
                               body));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(const std::vector<std::string>& only, std::uint64_t seed,
                 double samples, const std::string& path) {
    CriterionOptions opts;
    opts.seed = seed;
    if (!(samples >= 1.0) || samples > 9e18) {
        throw std::invalid_argument("--samples out of range");
    }
    opts.samples = static_cast<long long>(std::llround(samples));
    for (const std::string& token : only) {
        opts.only.push_back(resolve_criterion_key(token));
    }
    const auto results = run_acceptance(opts);
    OutputOpts out;
    out.path = path;
    emit(out, format_report(results));
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gaussian normalization constants, high-rank limits, and equilibrium "
        "energies on classical symmetric spaces.\n"
        "Families A, B, C, D select the complex-case spaces; for family A, "
        "rank r means SL(r+1), acting on the trace-zero hyperplane.\n"
        "Set SYMGAUSS_THREADS to cap the Monte Carlo worker count."};
    app.require_subcommand(1);

    // catalog
    bool complex_only = false;
    OutputOpts catalog_out;
    CLI::App* cat = app.add_subcommand(
        "catalog", "List the eleven classical families of symmetric spaces");
    cat->add_flag("--complex", complex_only,
                  "only the four complex-case rows");
    add_output_opts(cat, catalog_out);

    // closedform
    std::string cf_family;
    std::vector<int> cf_ranks;
    std::vector<double> cf_sigmas;
    OutputOpts cf_out;
    CLI::App* cf = app.add_subcommand(
        "closedform",
        "Closed-form log Z_a and log z_a for a complex-case family");
    cf->add_option("--family", cf_family, "root-system family: A, B, C, or D")
        ->required();
    cf->add_option("--ranks", cf_ranks, "rank grid, e.g. 1,2,3")
        ->required()
        ->delimiter(',');
    cf->add_option("--sigma", cf_sigmas, "sigma grid, e.g. 0.5,1")
        ->required()
        ->delimiter(',');
    add_output_opts(cf, cf_out);

    // limit
    std::string lim_family;
    std::vector<double> lim_ts;
    std::vector<int> lim_ranks;
    OutputOpts lim_out;
    CLI::App* lim = app.add_subcommand(
        "limit",
        "High-rank free-energy limit F(t) with optional finite-rank columns");
    lim->add_option("--family", lim_family,
                    "root-system family: A, B, C, or D")
        ->required();
    lim->add_option("--t", lim_ts, "time grid, e.g. 0.5,1,2")
        ->required()
        ->delimiter(',');
    lim->add_option("--ranks", lim_ranks,
                    "optional ranks for finite-rank F_r columns")
        ->delimiter(',');
    add_output_opts(lim, lim_out);

    // equilibrium
    std::string eq_kernel;
    std::vector<int> eq_ranks;
    std::vector<double> eq_ts = {1.0};
    double eq_beta = 2.0;
    double eq_delta = 1.0;
    std::uint64_t eq_seed = 12345;
    OutputOpts eq_out;
    CLI::App* eq = app.add_subcommand(
        "equilibrium",
        "Minimize the discrete energy and compare with the closed-form limit");
    eq->add_option("--kernel", eq_kernel, "interaction kernel: A, C, or BC")
        ->required();
    eq->add_option("--ranks", eq_ranks, "rank grid, e.g. 50,100,200")
        ->required()
        ->delimiter(',');
    eq->add_option("--beta", eq_beta, "pair coupling")
        ->capture_default_str();
    eq->add_option("--t", eq_ts, "time grid")->delimiter(',')
        ->capture_default_str();
    eq->add_option("--delta", eq_delta,
                   "single-root weight for the BC kernel (>= 1)")
        ->capture_default_str();
    eq->add_option("--seed", eq_seed, "starting-point jitter seed")
        ->capture_default_str();
    add_output_opts(eq, eq_out);

    // validate
    std::vector<std::string> val_only;
    std::uint64_t val_seed = 12345;
    double val_samples = 1e6;
    std::string val_output;
    CLI::App* val = app.add_subcommand(
        "validate", "Run the acceptance criteria and report pass/fail");
    val->add_option("--only", val_only,
                    "run only this criterion (repeatable; prefixes allowed)");
    val->add_option("--seed", val_seed, "Monte Carlo seed")
        ->capture_default_str();
    val->add_option("--samples", val_samples,
                    "Monte Carlo sample budget, e.g. 1e6")
        ->capture_default_str();
    val->add_option("--output", val_output,
                    "write the report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cat->parsed()) return cmd_catalog(complex_only, catalog_out);
        if (cf->parsed())
            return cmd_closedform(cf_family, cf_ranks, cf_sigmas, cf_out);
        if (lim->parsed())
            return cmd_limit(lim_family, lim_ts, lim_ranks, lim_out);
        if (eq->parsed())
            return cmd_equilibrium(eq_kernel, eq_ranks, eq_beta, eq_ts,
                                   eq_delta, eq_seed, eq_out);
        if (val->parsed())
            return cmd_validate(val_only, val_seed, val_samples, val_output);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
