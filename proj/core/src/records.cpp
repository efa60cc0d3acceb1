#include "symgauss/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symgauss {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& kind) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split(line, ','));
    }
    if (rows.empty())
        throw std::invalid_argument(kind + ": empty CSV document");
    return rows;
}

double parse_double(const std::string& cell, const std::string& kind) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0')
        throw std::invalid_argument(kind + ": bad numeric cell '" + cell + "'");
    return v;
}

int parse_int(const std::string& cell, const std::string& kind) {
    char* end = nullptr;
    const long v = std::strtol(cell.c_str(), &end, 10);
    if (end == cell.c_str() || *end != '\0')
        throw std::invalid_argument(kind + ": bad integer cell '" + cell + "'");
    return static_cast<int>(v);
}

void require_header(const std::vector<std::string>& got,
                    const std::vector<std::string>& want,
                    const std::string& kind) {
    if (got != want)
        throw std::invalid_argument(kind + ": unexpected CSV header");
}

}  // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// --- closedform --------------------------------------------------------------

std::string to_csv(const std::vector<ClosedformRecord>& rows) {
    std::string out = "family,rank,sigma,log_Za,log_za\n";
    for (const auto& r : rows) {
        out += r.family + ',' + std::to_string(r.rank) + ',' +
               format_g17(r.sigma) + ',' + format_g17(r.log_Za) + ',' +
               format_g17(r.log_za) + '\n';
    }
    return out;
}

std::vector<ClosedformRecord> closedform_from_csv(const std::string& text) {
    const auto rows = parse_csv(text, "closedform");
    require_header(rows[0], {"family", "rank", "sigma", "log_Za", "log_za"},
                   "closedform");
    std::vector<ClosedformRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 5)
            throw std::invalid_argument("closedform: wrong CSV arity");
        ClosedformRecord rec;
        rec.family = r[0];
        rec.rank = parse_int(r[1], "closedform");
        rec.sigma = parse_double(r[2], "closedform");
        rec.log_Za = parse_double(r[3], "closedform");
        rec.log_za = parse_double(r[4], "closedform");
        out.push_back(std::move(rec));
    }
    return out;
}

std::string to_json(const std::vector<ClosedformRecord>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["family"] = r.family;
        o["rank"] = r.rank;
        o["sigma"] = r.sigma;
        o["log_Za"] = r.log_Za;
        o["log_za"] = r.log_za;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<ClosedformRecord> closedform_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<ClosedformRecord> out;
    for (const auto& o : arr) {
        ClosedformRecord rec;
        rec.family = o.at("family").get<std::string>();
        rec.rank = o.at("rank").get<int>();
        rec.sigma = o.at("sigma").get<double>();
        rec.log_Za = o.at("log_Za").get<double>();
        rec.log_za = o.at("log_za").get<double>();
        out.push_back(std::move(rec));
    }
    return out;
}

// --- limit -------------------------------------------------------------------

namespace {

void check_limit_ranks(const std::vector<LimitRecord>& rows) {
    for (const auto& r : rows) {
        if (r.ranks.size() != r.F_r.size())
            throw std::invalid_argument("limit: ranks/F_r length mismatch");
        if (r.ranks != rows.front().ranks)
            throw std::invalid_argument(
                "limit: all rows of one emission must share the rank list");
    }
}

}  // namespace

std::string to_csv(const std::vector<LimitRecord>& rows) {
    check_limit_ranks(rows);
    std::string out = "family,t,F,e2,E2";
    if (!rows.empty())
        for (int rk : rows.front().ranks) out += ",F_r" + std::to_string(rk);
    out += '\n';
    for (const auto& r : rows) {
        out += r.family + ',' + format_g17(r.t) + ',' + format_g17(r.F) + ',' +
               format_g17(r.e2) + ',' + format_g17(r.E2);
        for (double f : r.F_r) out += ',' + format_g17(f);
        out += '\n';
    }
    return out;
}

std::vector<LimitRecord> limit_from_csv(const std::string& text) {
    const auto rows = parse_csv(text, "limit");
    const auto& head = rows[0];
    if (head.size() < 5 || head[0] != "family" || head[1] != "t" ||
        head[2] != "F" || head[3] != "e2" || head[4] != "E2")
        throw std::invalid_argument("limit: unexpected CSV header");
    std::vector<int> ranks;
    for (std::size_t k = 5; k < head.size(); ++k) {
        if (head[k].rfind("F_r", 0) != 0)
            throw std::invalid_argument("limit: unexpected CSV header");
        ranks.push_back(parse_int(head[k].substr(3), "limit"));
    }
    std::vector<LimitRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != head.size())
            throw std::invalid_argument("limit: wrong CSV arity");
        LimitRecord rec;
        rec.family = r[0];
        rec.t = parse_double(r[1], "limit");
        rec.F = parse_double(r[2], "limit");
        rec.e2 = parse_double(r[3], "limit");
        rec.E2 = parse_double(r[4], "limit");
        rec.ranks = ranks;
        for (std::size_t k = 5; k < r.size(); ++k)
            rec.F_r.push_back(parse_double(r[k], "limit"));
        out.push_back(std::move(rec));
    }
    return out;
}

std::string to_json(const std::vector<LimitRecord>& rows) {
    check_limit_ranks(rows);
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["family"] = r.family;
        o["t"] = r.t;
        o["F"] = r.F;
        o["e2"] = r.e2;
        o["E2"] = r.E2;
        ordered_json finite = ordered_json::array();
        for (std::size_t k = 0; k < r.ranks.size(); ++k) {
            ordered_json f;
            f["rank"] = r.ranks[k];
            f["F_r"] = r.F_r[k];
            finite.push_back(std::move(f));
        }
        o["finite"] = std::move(finite);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<LimitRecord> limit_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<LimitRecord> out;
    for (const auto& o : arr) {
        LimitRecord rec;
        rec.family = o.at("family").get<std::string>();
        rec.t = o.at("t").get<double>();
        rec.F = o.at("F").get<double>();
        rec.e2 = o.at("e2").get<double>();
        rec.E2 = o.at("E2").get<double>();
        for (const auto& f : o.at("finite")) {
            rec.ranks.push_back(f.at("rank").get<int>());
            rec.F_r.push_back(f.at("F_r").get<double>());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

// --- equilibrium ---------------------------------------------------------------

std::string to_csv(const std::vector<EquilibriumRecord>& rows) {
    std::string out =
        "kernel,rank,beta,t,delta,energy,grad_norm,target,gap_percent,"
        "exploratory\n";
    for (const auto& r : rows) {
        out += r.kernel + ',' + std::to_string(r.rank) + ',' +
               format_g17(r.beta) + ',' + format_g17(r.t) + ',' +
               format_g17(r.delta) + ',' + format_g17(r.energy) + ',' +
               format_g17(r.grad_norm) + ',';
        if (r.has_target)
            out += format_g17(r.target) + ',' + format_g17(r.gap_percent);
        else
            out += ",";
        out += r.exploratory ? ",1\n" : ",0\n";
    }
    return out;
}

std::vector<EquilibriumRecord> equilibrium_from_csv(const std::string& text) {
    const auto rows = parse_csv(text, "equilibrium");
    require_header(rows[0],
                   {"kernel", "rank", "beta", "t", "delta", "energy",
                    "grad_norm", "target", "gap_percent", "exploratory"},
                   "equilibrium");
    std::vector<EquilibriumRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != 10)
            throw std::invalid_argument("equilibrium: wrong CSV arity");
        EquilibriumRecord rec;
        rec.kernel = r[0];
        rec.rank = parse_int(r[1], "equilibrium");
        rec.beta = parse_double(r[2], "equilibrium");
        rec.t = parse_double(r[3], "equilibrium");
        rec.delta = parse_double(r[4], "equilibrium");
        rec.energy = parse_double(r[5], "equilibrium");
        rec.grad_norm = parse_double(r[6], "equilibrium");
        rec.has_target = !r[7].empty();
        if (rec.has_target != !r[8].empty())
            throw std::invalid_argument(
                "equilibrium: target and gap_percent must be blank together");
        if (rec.has_target) {
            rec.target = parse_double(r[7], "equilibrium");
            rec.gap_percent = parse_double(r[8], "equilibrium");
        }
        rec.exploratory = parse_int(r[9], "equilibrium") != 0;
        out.push_back(std::move(rec));
    }
    return out;
}

std::string to_json(const std::vector<EquilibriumRecord>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["kernel"] = r.kernel;
        o["rank"] = r.rank;
        o["beta"] = r.beta;
        o["t"] = r.t;
        o["delta"] = r.delta;
        o["energy"] = r.energy;
        o["grad_norm"] = r.grad_norm;
        if (r.has_target) {
            o["target"] = r.target;
            o["gap_percent"] = r.gap_percent;
        } else {
            o["target"] = nullptr;
            o["gap_percent"] = nullptr;
        }
        o["exploratory"] = r.exploratory;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<EquilibriumRecord> equilibrium_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<EquilibriumRecord> out;
    for (const auto& o : arr) {
        EquilibriumRecord rec;
        rec.kernel = o.at("kernel").get<std::string>();
        rec.rank = o.at("rank").get<int>();
        rec.beta = o.at("beta").get<double>();
        rec.t = o.at("t").get<double>();
        rec.delta = o.at("delta").get<double>();
        rec.energy = o.at("energy").get<double>();
        rec.grad_norm = o.at("grad_norm").get<double>();
        rec.has_target = !o.at("target").is_null();
        if (rec.has_target != !o.at("gap_percent").is_null())
            throw std::invalid_argument(
                "equilibrium: target and gap_percent must be null together");
        if (rec.has_target) {
            rec.target = o.at("target").get<double>();
            rec.gap_percent = o.at("gap_percent").get<double>();
        }
        rec.exploratory = o.at("exploratory").get<bool>();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace symgauss
