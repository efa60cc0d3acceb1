#include "symgauss/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace symgauss {

std::string family_name(RootFamily f) {
    switch (f) {
        case RootFamily::A: return "A";
        case RootFamily::B: return "B";
        case RootFamily::C: return "C";
        case RootFamily::D: return "D";
        case RootFamily::BC: return "BC";
    }
    throw std::logic_error("family_name: bad enum");
}

RootFamily family_from_name(const std::string& name) {
    if (name == "A") return RootFamily::A;
    if (name == "B") return RootFamily::B;
    if (name == "C") return RootFamily::C;
    if (name == "D") return RootFamily::D;
    if (name == "BC") return RootFamily::BC;
    throw std::invalid_argument("unknown root family: " + name);
}

int SpaceDescriptor::dimension() const {
    if (family == RootFamily::A)
        return rank + beta * rank * (rank + 1) / 2;
    return rank + beta * rank * (rank - 1) + alpha * rank + gamma * rank;
}

bool SpaceDescriptor::is_type_iv() const {
    if (metric_c != 4.0) return false;
    switch (family) {
        case RootFamily::A: return beta == 2;
        case RootFamily::B: return alpha == 2 && beta == 2;
        case RootFamily::C: return beta == 2 && gamma == 2;
        case RootFamily::D: return beta == 2;
        case RootFamily::BC: return false;  // non-reduced, never complex
    }
    return false;
}

std::vector<int> Root::coeffs(int ambient_dim) const {
    std::vector<int> v(ambient_dim, 0);
    switch (shape) {
        case RootShape::PairMinus: v[i] = 1; v[j] = -1; break;
        case RootShape::PairPlus:  v[i] = 1; v[j] = 1;  break;
        case RootShape::Single:    v[i] = 1;            break;
        case RootShape::Double:    v[i] = 2;            break;
    }
    return v;
}

double Root::eval(const double* a) const {
    switch (shape) {
        case RootShape::PairMinus: return a[i] - a[j];
        case RootShape::PairPlus:  return a[i] + a[j];
        case RootShape::Single:    return a[i];
        case RootShape::Double:    return 2.0 * a[i];
    }
    return 0.0;
}

long long Root::dot_int(const std::vector<long long>& v) const {
    switch (shape) {
        case RootShape::PairMinus: return v[i] - v[j];
        case RootShape::PairPlus:  return v[i] + v[j];
        case RootShape::Single:    return v[i];
        case RootShape::Double:    return 2 * v[i];
    }
    return 0;
}

SpaceDescriptor build_space(RootFamily family, int rank, Multiplicities m,
                            double metric_c) {
    if (rank < 1) throw std::invalid_argument("build_space: rank must be >= 1");
    if (!(metric_c > 0.0))
        throw std::invalid_argument("build_space: metric_c must be positive");
    const auto bad = [&](const char* msg) {
        throw std::invalid_argument(std::string("build_space: ") + msg);
    };
    switch (family) {
        case RootFamily::A:
            if (m.alpha != 0 || m.gamma != 0) bad("A has pair roots only");
            if (m.beta < 1) bad("A needs beta >= 1");
            break;
        case RootFamily::B:
            if (m.gamma != 0) bad("B has no double roots");
            if (m.alpha < 1) bad("B needs alpha >= 1");
            if (m.beta < 1) bad("B needs beta >= 1");
            break;
        case RootFamily::C:
            if (m.alpha != 0) bad("C has no single roots");
            if (m.beta < 1) bad("C needs beta >= 1");
            if (m.gamma < 1) bad("C needs gamma >= 1");
            break;
        case RootFamily::D:
            if (m.alpha != 0 || m.gamma != 0) bad("D has pair roots only");
            if (m.beta < 1) bad("D needs beta >= 1");
            if (rank < 2) bad("D needs rank >= 2");
            break;
        case RootFamily::BC:
            if (m.alpha < 1 || m.beta < 1 || m.gamma < 1)
                bad("BC needs alpha, beta, gamma >= 1");
            break;
    }
    SpaceDescriptor d;
    d.family = family;
    d.rank = rank;
    d.alpha = m.alpha;
    d.beta = m.beta;
    d.gamma = m.gamma;
    d.metric_c = metric_c;
    d.ambient_dim = (family == RootFamily::A) ? rank + 1 : rank;
    d.label = family_name(family) + "_" + std::to_string(rank) + "(alpha=" +
              std::to_string(m.alpha) + ",beta=" + std::to_string(m.beta) +
              ",gamma=" + std::to_string(m.gamma) + ")";
    return d;
}

SpaceDescriptor typeiv_space(RootFamily family, int rank) {
    SpaceDescriptor d;
    const auto n = std::to_string(rank);
    switch (family) {
        case RootFamily::A: {
            d = build_space(RootFamily::A, rank, {0, 2, 0});
            const auto m = std::to_string(rank + 1);
            d.label = "SL(" + m + ",C)/SU(" + m + ")";
            return d;
        }
        case RootFamily::B:
            d = build_space(RootFamily::B, rank, {2, 2, 0});
            d.label = "SO(" + std::to_string(2 * rank + 1) + ",C)/SO(" +
                      std::to_string(2 * rank + 1) + ")";
            return d;
        case RootFamily::C:
            d = build_space(RootFamily::C, rank, {0, 2, 2});
            d.label = "Sp(" + n + ",C)/Sp(" + n + ")";
            return d;
        case RootFamily::D:
            d = build_space(RootFamily::D, rank, {0, 2, 0});
            d.label = "SO(" + std::to_string(2 * rank) + ",C)/SO(" +
                      std::to_string(2 * rank) + ")";
            return d;
        case RootFamily::BC:
            throw std::invalid_argument("typeiv_space: BC has no complex case");
    }
    throw std::logic_error("typeiv_space: bad enum");
}

std::vector<Root> positive_roots(const SpaceDescriptor& desc) {
    std::vector<Root> roots;
    if (desc.family == RootFamily::A) {
        const int n = desc.ambient_dim;
        roots.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                roots.push_back(Root{RootShape::PairMinus, i, j, desc.beta});
        return roots;
    }
    const int r = desc.rank;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            roots.push_back(Root{RootShape::PairMinus, i, j, desc.beta});
            roots.push_back(Root{RootShape::PairPlus, i, j, desc.beta});
        }
    if (desc.alpha > 0)
        for (int i = 0; i < r; ++i)
            roots.push_back(Root{RootShape::Single, i, -1, desc.alpha});
    if (desc.gamma > 0)
        for (int i = 0; i < r; ++i)
            roots.push_back(Root{RootShape::Double, i, -1, desc.gamma});
    return roots;
}

std::vector<long long> rho_twice(const SpaceDescriptor& desc) {
    std::vector<long long> v(desc.ambient_dim, 0);
    if (desc.family == RootFamily::A) {
        const int r = desc.rank;
        for (int k = 0; k <= r; ++k)
            v[k] = static_cast<long long>(desc.beta) * (r - 2 * k);
        return v;
    }
    const int r = desc.rank;
    for (int k = 0; k < r; ++k)
        v[k] = 2LL * desc.beta * (r - 1 - k) + desc.alpha + 2LL * desc.gamma;
    return v;
}

DualVector rho(const SpaceDescriptor& desc) {
    const auto two = rho_twice(desc);
    DualVector d;
    d.coeffs.resize(two.size());
    for (std::size_t k = 0; k < two.size(); ++k)
        d.coeffs[k] = 0.5 * static_cast<double>(two[k]);
    return d;
}

double dual_inner(const SpaceDescriptor& desc, const DualVector& u,
                  const DualVector& v) {
    if (static_cast<int>(u.coeffs.size()) != desc.ambient_dim ||
        static_cast<int>(v.coeffs.size()) != desc.ambient_dim)
        throw std::invalid_argument("dual_inner: dimension mismatch");
    double mu = 0.0, mv = 0.0;
    if (desc.family == RootFamily::A) {
        mu = std::accumulate(u.coeffs.begin(), u.coeffs.end(), 0.0) /
             desc.ambient_dim;
        mv = std::accumulate(v.coeffs.begin(), v.coeffs.end(), 0.0) /
             desc.ambient_dim;
    }
    double dot = 0.0;
    for (int k = 0; k < desc.ambient_dim; ++k)
        dot += (u.coeffs[k] - mu) * (v.coeffs[k] - mv);
    return dot / desc.metric_c;
}

double root_dot_rho(const SpaceDescriptor& desc, const Root& root,
                    const std::vector<long long>& two_rho) {
    return static_cast<double>(root.dot_int(two_rho)) / (2.0 * desc.metric_c);
}

double root_norm2(const SpaceDescriptor& desc, const Root& root) {
    switch (root.shape) {
        case RootShape::PairMinus:
        case RootShape::PairPlus: return 2.0 / desc.metric_c;
        case RootShape::Single:   return 1.0 / desc.metric_c;
        case RootShape::Double:   return 4.0 / desc.metric_c;
    }
    return 0.0;
}

std::vector<int> degrees(const SpaceDescriptor& desc) {
    std::vector<int> d;
    const int r = desc.rank;
    switch (desc.family) {
        case RootFamily::A:
            for (int j = 2; j <= r + 1; ++j) d.push_back(j);
            return d;
        case RootFamily::B:
        case RootFamily::C:
            for (int j = 1; j <= r; ++j) d.push_back(2 * j);
            return d;
        case RootFamily::D:
            for (int j = 1; j < r; ++j) d.push_back(2 * j);
            d.push_back(r);
            return d;
        case RootFamily::BC:
            throw std::domain_error(
                "degrees: undefined for the non-reduced BC family");
    }
    throw std::logic_error("degrees: bad enum");
}

long long weyl_order(const SpaceDescriptor& desc) {
    long long w = 1;
    for (int dj : degrees(desc)) {
        if (w > std::numeric_limits<long long>::max() / dj)
            throw std::overflow_error(
                "weyl_order: order exceeds 64 bits; use log_weyl_order");
        w *= dj;
    }
    return w;
}

double log_weyl_order(const SpaceDescriptor& desc) {
    double sum = 0.0;
    for (int dj : degrees(desc)) sum += std::log(static_cast<double>(dj));
    return sum;
}

void WeylElement::apply(const double* in, double* out) const {
    for (std::size_t k = 0; k < perm.size(); ++k)
        out[k] = signs[k] * in[perm[k]];
}

namespace {

int permutation_parity(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return (inversions % 2 == 0) ? +1 : -1;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const SpaceDescriptor& desc,
                                        int rank_cap) {
    if (desc.rank > rank_cap)
        throw std::domain_error("enumerate_weyl: rank above enumeration cap");
    const int n = desc.ambient_dim;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElement> out;

    const bool with_signs = desc.family != RootFamily::A;
    const bool even_signs_only = desc.family == RootFamily::D;

    do {
        const int ppar = permutation_parity(perm);
        if (!with_signs) {
            out.push_back(WeylElement{perm, std::vector<int>(n, +1), ppar});
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int nminus = 0;
            std::vector<int> signs(n, +1);
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) {
                    signs[k] = -1;
                    ++nminus;
                }
            if (even_signs_only && (nminus % 2 != 0)) continue;
            const int det = (nminus % 2 == 0) ? ppar : -ppar;
            out.push_back(WeylElement{perm, std::move(signs), det});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

const std::vector<CatalogRow>& catalog() {
    static const std::vector<CatalogRow> rows = {
        {"SL(r,R)/SO(r)", "A", "r-1", "(r-1)(r+2)/2", "0", "1", "0", ""},
        {"SL(r,C)/SU(r)", "A", "r-1", "(r-1)(r+1)", "0", "2", "0",
         "complex case"},
        {"SL(r,H)/Sp(r)", "A", "r-1", "(r-1)(2r+1)", "0", "4", "0", ""},
        {"SO_o(p,q)/SO(p)xSO(q)", "B or D", "p", "pq", "q-p", "1", "0",
         "p <= q"},
        {"SO(2r+1,C)/SO(2r+1)", "B", "r", "r(2r+1)", "2", "2", "0",
         "complex case"},
        {"SO(2r,C)/SO(2r)", "D", "r", "r(2r-1)", "0", "2", "0",
         "complex case"},
        {"Sp(r,R)/U(r)", "C", "r", "r(r+1)", "0", "1", "1", ""},
        {"Sp(r,C)/Sp(r)", "C", "r", "r(2r+1)", "0", "2", "2", "complex case"},
        {"SU(p,q)/S(U(p)xU(q))", "BC or C", "p", "2pq", "2(q-p)", "2", "1",
         "p <= q"},
        {"Sp(p,q)/Sp(p)xSp(q)", "BC or C", "p", "4pq", "4(q-p)", "4", "3",
         "p <= q"},
        {"SO*(2n)/U(n)", "BC or C", "floor(n/2)", "n(n-1)", "4 or 0", "4", "1",
         "alpha = 4 if n is odd"},
    };
    return rows;
}

std::string catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : catalog()) {
        arr.push_back({{"label", row.label},
                       {"family", row.family},
                       {"rank_formula", row.rank_formula},
                       {"dim_formula", row.dim_formula},
                       {"alpha", row.alpha},
                       {"beta", row.beta},
                       {"gamma", row.gamma},
                       {"remark", row.remark}});
    }
    return arr.dump(2);
}

std::vector<CatalogRow> catalog_from_json(const std::string& text) {
    const auto arr = nlohmann::json::parse(text);
    std::vector<CatalogRow> rows;
    for (const auto& item : arr) {
        rows.push_back(CatalogRow{
            item.at("label").get<std::string>(),
            item.at("family").get<std::string>(),
            item.at("rank_formula").get<std::string>(),
            item.at("dim_formula").get<std::string>(),
            item.at("alpha").get<std::string>(),
            item.at("beta").get<std::string>(),
            item.at("gamma").get<std::string>(),
            item.at("remark").get<std::string>()});
    }
    return rows;
}

SpaceDescriptor instantiate_row(const std::string& label, int p, int q) {
    const auto need = [&](bool cond, const char* msg) {
        if (!cond) throw std::invalid_argument("instantiate_row: " + std::string(msg));
    };
    SpaceDescriptor d;
    if (label == "SL(r,R)/SO(r)" || label == "SL(r,C)/SU(r)" ||
        label == "SL(r,H)/Sp(r)") {
        need(p >= 2, "SL rows need matrix size >= 2");
        const int beta = (label == "SL(r,R)/SO(r)")   ? 1
                         : (label == "SL(r,C)/SU(r)") ? 2
                                                      : 4;
        d = build_space(RootFamily::A, p - 1, {0, beta, 0});
        d.label = label;
        return d;
    }
    if (label == "SO_o(p,q)/SO(p)xSO(q)") {
        need(p >= 1 && q >= p, "needs 1 <= p <= q");
        if (q == p) {
            need(p >= 2, "p = q = 1 has an empty root system");
            d = build_space(RootFamily::D, p, {0, 1, 0});
        } else {
            d = build_space(RootFamily::B, p, {q - p, 1, 0});
        }
        d.label = label;
        return d;
    }
    if (label == "SO(2r+1,C)/SO(2r+1)") return typeiv_space(RootFamily::B, p);
    if (label == "SO(2r,C)/SO(2r)") return typeiv_space(RootFamily::D, p);
    if (label == "Sp(r,R)/U(r)") {
        d = build_space(RootFamily::C, p, {0, 1, 1});
        d.label = label;
        return d;
    }
    if (label == "Sp(r,C)/Sp(r)") return typeiv_space(RootFamily::C, p);
    if (label == "SU(p,q)/S(U(p)xU(q))" || label == "Sp(p,q)/Sp(p)xSp(q)") {
        need(p >= 1 && q >= p, "needs 1 <= p <= q");
        const bool su = label == "SU(p,q)/S(U(p)xU(q))";
        const int beta = su ? 2 : 4;
        const int gamma = su ? 1 : 3;
        const int alpha = (su ? 2 : 4) * (q - p);
        d = (q == p) ? build_space(RootFamily::C, p, {0, beta, gamma})
                     : build_space(RootFamily::BC, p, {alpha, beta, gamma});
        d.label = label;
        return d;
    }
    if (label == "SO*(2n)/U(n)") {
        const int n = p;
        need(n >= 2, "needs n >= 2");
        const int r = n / 2;
        if (n % 2 == 0) {
            need(r >= 1, "rank must be >= 1");
            d = build_space(RootFamily::C, r, {0, 4, 1});
        } else {
            d = build_space(RootFamily::BC, r, {4, 4, 1});
        }
        d.label = label;
        return d;
    }
    throw std::invalid_argument("instantiate_row: unknown label " + label);
}

}  // namespace symgauss
